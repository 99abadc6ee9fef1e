//! Word-level procedures behind the short-witness results.
//!
//! Two words with the same first letter, the same last letter, and the same
//! set of adjacent letter pairs evaluate identically in every combinatorial
//! Rees matrix semigroup: a product there is determined by whether some
//! adjacent pair multiplies to zero, the first factor's column, and the
//! last factor's row. [`shorten_word`] exploits this to cut any word over
//! `k` letters down to length at most `k(k²+1)` while preserving its value
//! under every such interpretation.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Endpoints and adjacent-pair set of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEdgeSet {
    pub first: usize,
    pub last: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

/// Scans a nonempty word into its edge set.
pub fn edge_set(word: &[usize]) -> Result<WordEdgeSet> {
    let (&first, _) = word
        .split_first()
        .ok_or_else(|| Error::input("empty word"))?;
    let last = *word.last().unwrap();
    let edges = word.windows(2).map(|w| (w[0], w[1])).collect();
    Ok(WordEdgeSet { first, last, edges })
}

/// Sufficient condition for two words to evaluate identically in every
/// combinatorial Rees matrix semigroup: equal endpoints and equal
/// adjacent-pair sets.
pub fn words_equivalent_rees(f: &[usize], g: &[usize]) -> bool {
    match (edge_set(f), edge_set(g)) {
        (Ok(ef), Ok(eg)) => ef == eg,
        _ => f.is_empty() && g.is_empty(),
    }
}

/// Maximum length guaranteed by [`shorten_word`] for an alphabet of `k`
/// letters.
pub fn shortening_bound(k: usize) -> usize {
    k * (k * k + 1)
}

/// Shortens a word while keeping [`words_equivalent_rees`] with the input.
///
/// One reduction pass runs per letter, in ascending letter order, always on
/// the current word: the word is split at the occurrences of the letter into
/// blocks `v₁ … v_{m+1}`, and an interior block `v_r` is kept only when the
/// adjacent pairs of `x·v_r` are not already present in the prefix
/// `v₁ ⋯ v_{r−1}`. Each kept block contributes at least one new pair, so
/// every letter ends up occurring at most `k²+1` times.
pub fn shorten_word(word: &[usize]) -> Vec<usize> {
    if word.is_empty() {
        return Vec::new();
    }
    let k = word.iter().max().unwrap() + 1;
    let mut cur: Vec<usize> = word.to_vec();
    for letter in 0..k {
        cur = reduce_letter(&cur, letter);
    }
    cur
}

fn reduce_letter(word: &[usize], letter: usize) -> Vec<usize> {
    let occurrences: Vec<usize> = (0..word.len()).filter(|&p| word[p] == letter).collect();
    let m = occurrences.len();
    if m <= 1 {
        return word.to_vec();
    }
    // blocks: v₁ = word[..=j₁], v_r = word[j_{r−1}+1..=j_r], v_{m+1} = tail
    let block = |r: usize| -> &[usize] {
        if r == 0 {
            &word[..=occurrences[0]]
        } else if r < m {
            &word[occurrences[r - 1] + 1..=occurrences[r]]
        } else {
            &word[occurrences[m - 1] + 1..]
        }
    };
    let pairs_of = |w: &[usize], into: &mut BTreeSet<(usize, usize)>| {
        for p in w.windows(2) {
            into.insert((p[0], p[1]));
        }
    };
    // prefix_pairs tracks E(v₁ ⋯ v_{r−1}) over the original blocks
    let mut prefix_pairs = BTreeSet::new();
    pairs_of(block(0), &mut prefix_pairs);
    let mut out: Vec<usize> = block(0).to_vec();
    for r in 1..m {
        let v = block(r);
        let mut candidate = BTreeSet::new();
        let with_letter: Vec<usize> = std::iter::once(letter).chain(v.iter().copied()).collect();
        pairs_of(&with_letter, &mut candidate);
        if !candidate.is_subset(&prefix_pairs) {
            out.extend_from_slice(v);
        }
        prefix_pairs.extend(candidate);
    }
    out.extend_from_slice(block(m));
    out
}
