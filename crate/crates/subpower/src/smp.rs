//! Subpower membership instances and their solvers.
//!
//! [`solve_closure`] runs a breadth-first closure over the subalgebra of
//! `S^n` generated by the instance's tuples, producing the shortest witness
//! (lexicographically least generator-index word among the shortest) when
//! the target is reachable. [`solve_one_block`] is the quadratic-time
//! decision procedure for Rees matrix ambients whose sandwich matrix has
//! one block; it must agree with the closure solver everywhere.

use crate::error::{Error, Result};
use crate::rees::{ReesElement, ReesStructure};
use crate::semigroup::{tuple_multiply, FiniteSemigroup, PowerTuple};
use crate::words::shorten_word;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Default state budget for the closure solver; covers the largest closures
/// exercised by the test suites (about 10⁷ states) with headroom.
pub const DEFAULT_STATE_BUDGET: usize = 20_000_000;

/// An SMP instance: does `target` lie in the subsemigroup of
/// `ambient^n` generated by `generators`?
#[derive(Debug, Clone)]
pub struct SmpInstance {
    ambient: FiniteSemigroup,
    generators: Vec<PowerTuple>,
    target: PowerTuple,
}

/// A word over generator indices whose left-to-right product is claimed to
/// equal the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub word: Vec<usize>,
}

/// Outcome of a closure run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveReport {
    pub member: bool,
    pub witness: Option<Witness>,
    /// Number of distinct tuples discovered. Equals `|⟨A⟩|` when the search
    /// ran to completion; smaller when the target was found early.
    pub closure_size: usize,
}

impl SmpInstance {
    pub fn new(
        ambient: FiniteSemigroup,
        generators: Vec<PowerTuple>,
        target: PowerTuple,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::input("generator set must be nonempty"));
        }
        let n = target.n();
        for (k, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::input(format!(
                    "generator {k} has length {}, target has length {n}",
                    g.n()
                )));
            }
            for &c in g.coords() {
                if c >= ambient.size() {
                    return Err(Error::input(format!("generator coordinate {c} out of range")));
                }
            }
        }
        for &c in target.coords() {
            if c >= ambient.size() {
                return Err(Error::input(format!("target coordinate {c} out of range")));
            }
        }
        Ok(SmpInstance {
            ambient,
            generators,
            target,
        })
    }

    /// Convenience constructor from raw coordinate vectors.
    pub fn from_coords(
        ambient: FiniteSemigroup,
        generators: &[Vec<usize>],
        target: Vec<usize>,
    ) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| PowerTuple::new(g.clone(), &ambient))
            .collect::<Result<Vec<_>>>()?;
        let tgt = PowerTuple::new(target, &ambient)?;
        Self::new(ambient, gens, tgt)
    }

    pub fn ambient(&self) -> &FiniteSemigroup {
        &self.ambient
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    pub fn generators(&self) -> &[PowerTuple] {
        &self.generators
    }

    pub fn target(&self) -> &PowerTuple {
        &self.target
    }
}

/// Evaluates a witness word; true iff the product equals the target.
pub fn check_witness(inst: &SmpInstance, witness: &Witness) -> Result<bool> {
    let (&first, rest) = witness
        .word
        .split_first()
        .ok_or_else(|| Error::input("witness word must be nonempty"))?;
    let get = |i: usize| -> Result<&PowerTuple> {
        inst.generators
            .get(i)
            .ok_or_else(|| Error::input(format!("witness index {i} out of range")))
    };
    let mut acc = get(first)?.clone();
    for &i in rest {
        acc = tuple_multiply(&inst.ambient, &acc, get(i)?)?;
    }
    Ok(&acc == inst.target())
}

/// Breadth-first closure of the generated subalgebra.
///
/// States are explored in discovery order with generators tried in index
/// order, so the first path to any tuple is its shortest witness, ties
/// broken by lexicographically least word. Exceeding `budget` distinct
/// states aborts with [`Error::BudgetExceeded`]; a found target short-cuts
/// the search and is never affected by the budget cutoff.
pub fn solve_closure(inst: &SmpInstance, budget: usize) -> Result<SolveReport> {
    let size = inst.ambient.size();
    let n = inst.n();
    let bits = bits_for(size);
    if n * bits <= 64 {
        solve_packed(inst, budget, bits)
    } else {
        solve_wide(inst, budget)
    }
}

fn bits_for(size: usize) -> usize {
    debug_assert!(size >= 1);
    (usize::BITS - (size - 1).max(1).leading_zeros()) as usize
}

const ROOT: u32 = u32::MAX;

/// Discovered states with parent pointers for witness reconstruction.
/// States keep their discovery order, which doubles as the BFS queue.
struct Frontier<K> {
    index: HashMap<K, u32>,
    states: Vec<K>,
    parents: Vec<(u32, u32)>,
    budget: usize,
}

impl<K: Eq + std::hash::Hash + Clone> Frontier<K> {
    fn new(budget: usize) -> Self {
        Frontier {
            index: HashMap::new(),
            states: Vec::new(),
            parents: Vec::new(),
            budget,
        }
    }

    fn push(&mut self, key: K, parent: u32, gen: u32) -> Result<()> {
        use std::collections::hash_map::Entry;
        match self.index.entry(key) {
            Entry::Occupied(_) => Ok(()),
            Entry::Vacant(v) => {
                if self.states.len() >= self.budget {
                    return Err(Error::BudgetExceeded {
                        explored: self.states.len(),
                        budget: self.budget,
                    });
                }
                let id = self.states.len() as u32;
                self.states.push(v.key().clone());
                v.insert(id);
                self.parents.push((parent, gen));
                Ok(())
            }
        }
    }

    /// Word reaching state `at`, read off the parent chain.
    fn word_to(&self, mut at: usize) -> Vec<usize> {
        let mut word = Vec::new();
        loop {
            let (p, g) = self.parents[at];
            word.push(g as usize);
            if p == ROOT {
                break;
            }
            at = p as usize;
        }
        word.reverse();
        word
    }

    fn found(&self, word: Vec<usize>) -> SolveReport {
        SolveReport {
            member: true,
            witness: Some(Witness { word }),
            // the target itself was discovered but not stored; keep the
            // reported count within the budget
            closure_size: (self.states.len() + 1).min(self.budget),
        }
    }

    fn exhausted(&self) -> SolveReport {
        SolveReport {
            member: false,
            witness: None,
            closure_size: self.states.len(),
        }
    }
}

fn solve_packed(inst: &SmpInstance, budget: usize, bits: usize) -> Result<SolveReport> {
    let sg = &inst.ambient;
    let n = inst.n();
    let pack = |coords: &[usize]| -> u64 {
        coords
            .iter()
            .fold(0u64, |acc, &c| (acc << bits) | c as u64)
    };
    let mask = (1u64 << bits) - 1;
    let target = pack(inst.target.coords());
    let mut frontier: Frontier<u64> = Frontier::new(budget);

    for (gi, g) in inst.generators.iter().enumerate() {
        let key = pack(g.coords());
        if key == target {
            return Ok(frontier.found(vec![gi]));
        }
        frontier.push(key, ROOT, gi as u32)?;
    }

    let mut cur = vec![0usize; n];
    let mut head = 0usize;
    while head < frontier.states.len() {
        let key = frontier.states[head];
        for (c, slot) in cur.iter_mut().enumerate() {
            *slot = ((key >> (bits * (n - 1 - c))) & mask) as usize;
        }
        for (gi, g) in inst.generators.iter().enumerate() {
            let gc = g.coords();
            let mut succ = 0u64;
            for c in 0..n {
                succ = (succ << bits) | sg.mul(cur[c], gc[c]) as u64;
            }
            if succ == target {
                let mut word = frontier.word_to(head);
                word.push(gi);
                return Ok(frontier.found(word));
            }
            frontier.push(succ, head as u32, gi as u32)?;
        }
        head += 1;
    }
    Ok(frontier.exhausted())
}

fn solve_wide(inst: &SmpInstance, budget: usize) -> Result<SolveReport> {
    let sg = &inst.ambient;
    let n = inst.n();
    let to_key = |coords: &[usize]| -> Box<[u16]> {
        coords.iter().map(|&c| c as u16).collect()
    };
    let target = to_key(inst.target.coords());
    let mut frontier: Frontier<Box<[u16]>> = Frontier::new(budget);

    for (gi, g) in inst.generators.iter().enumerate() {
        let key = to_key(g.coords());
        if key == target {
            return Ok(frontier.found(vec![gi]));
        }
        frontier.push(key, ROOT, gi as u32)?;
    }

    let mut head = 0usize;
    while head < frontier.states.len() {
        let cur = frontier.states[head].clone();
        for (gi, g) in inst.generators.iter().enumerate() {
            let gc = g.coords();
            let succ: Box<[u16]> = (0..n)
                .map(|c| sg.mul(cur[c] as usize, gc[c]) as u16)
                .collect();
            if succ == target {
                let mut word = frontier.word_to(head);
                word.push(gi);
                return Ok(frontier.found(word));
            }
            frontier.push(succ, head as u32, gi as u32)?;
        }
        head += 1;
    }
    Ok(frontier.exhausted())
}

/// Checks that the instance's ambient semigroup is exactly the table built
/// from `rees`, with the expected identity flag.
fn verify_rees_ambient(inst: &SmpInstance, rees: &ReesStructure, want_identity: bool) -> Result<()> {
    if rees.adjoins_identity() != want_identity {
        return Err(Error::input(if want_identity {
            "this operation needs a Rees structure with an adjoined identity"
        } else {
            "this operation needs a Rees structure without an adjoined identity"
        }));
    }
    let built = rees.build()?;
    if inst.ambient.size() != built.size() || inst.ambient.rows() != built.rows() {
        return Err(Error::input(
            "instance ambient does not match the Rees matrix semigroup of the given structure",
        ));
    }
    Ok(())
}

/// Quadratic-time membership decision for one-block Rees matrix ambients,
/// with a witness. Steps: (i) answer positively if the target is a
/// generator; (ii) multiply, in input order, all generators that map every
/// nonzero target coordinate into the block `J × Δ`, giving `d`; (iii)
/// search for generators `a₁, a₂` with `a₁·d·a₂` equal to the target. When
/// no generator qualifies for `d`, only products of length ≤ 2 can reach
/// the target, and those are checked directly.
pub fn solve_one_block_witness(inst: &SmpInstance, rees: &ReesStructure) -> Result<Option<Witness>> {
    verify_rees_ambient(inst, rees, false)?;
    let (j, delta) = rees
        .one_block()
        .ok_or_else(|| Error::input("sandwich matrix does not have one block"))?;
    let in_j = |c: usize| j.binary_search(&c).is_ok();
    let in_delta = |r: usize| delta.binary_search(&r).is_ok();
    let sg = &inst.ambient;
    let zero = sg.zero().expect("Rees matrix semigroup has a zero");

    if let Some(i) = inst.generators.iter().position(|g| g == inst.target()) {
        return Ok(Some(Witness { word: vec![i] }));
    }

    // coordinates where the target is nonzero
    let nonzero: Vec<usize> = (0..inst.n())
        .filter(|&i| inst.target().get(i) != zero)
        .collect();
    let maps_into_block = |g: &PowerTuple| -> bool {
        nonzero.iter().all(|&i| match rees.element_at(g.get(i)) {
            Ok(ReesElement::Pair { i: col, lambda }) => in_j(col) && in_delta(lambda),
            _ => false,
        })
    };

    let qualifying: Vec<usize> = (0..inst.generators.len())
        .filter(|&k| maps_into_block(&inst.generators[k]))
        .collect();

    if qualifying.is_empty() {
        for (i1, g1) in inst.generators.iter().enumerate() {
            for (i2, g2) in inst.generators.iter().enumerate() {
                if &tuple_multiply(sg, g1, g2)? == inst.target() {
                    return Ok(Some(Witness { word: vec![i1, i2] }));
                }
            }
        }
        return Ok(None);
    }

    let mut d = inst.generators[qualifying[0]].clone();
    for &k in &qualifying[1..] {
        d = tuple_multiply(sg, &d, &inst.generators[k])?;
    }
    for (i1, g1) in inst.generators.iter().enumerate() {
        let g1d = tuple_multiply(sg, g1, &d)?;
        for (i2, g2) in inst.generators.iter().enumerate() {
            if &tuple_multiply(sg, &g1d, g2)? == inst.target() {
                let mut word = Vec::with_capacity(qualifying.len() + 2);
                word.push(i1);
                word.extend_from_slice(&qualifying);
                word.push(i2);
                return Ok(Some(Witness { word }));
            }
        }
    }
    Ok(None)
}

/// Membership decision via [`solve_one_block_witness`].
pub fn solve_one_block(inst: &SmpInstance, rees: &ReesStructure) -> Result<bool> {
    Ok(solve_one_block_witness(inst, rees)?.is_some())
}

/// For a combinatorial Rees matrix ambient (no identity), produces a
/// membership witness of length at most `k(k²+1)` for `k` generators, by
/// shortening a closure witness. Returns `None` for non-members.
pub fn np_certificate(
    inst: &SmpInstance,
    rees: &ReesStructure,
    budget: usize,
) -> Result<Option<Witness>> {
    verify_rees_ambient(inst, rees, false)?;
    let report = solve_closure(inst, budget)?;
    let Some(witness) = report.witness else {
        return Ok(None);
    };
    let word = shorten_word(&witness.word);
    Ok(Some(Witness { word }))
}

/// Compresses a valid witness over a one-block `S_P¹` ambient to length at
/// most `2n`, keeping it valid.
///
/// For every coordinate where the target is 0 the compressed word keeps a
/// pair of factor positions that multiply to 0 there with only identity
/// factors between them (or the single position of a 0 factor); for every
/// coordinate where the target is a pair it keeps the first and last
/// non-identity positions. Words of length < 2 and all-identity targets are
/// returned unchanged.
pub fn compress_one_block_witness(
    inst: &SmpInstance,
    rees: &ReesStructure,
    witness: &Witness,
) -> Result<Witness> {
    verify_rees_ambient(inst, rees, true)?;
    rees.one_block()
        .ok_or_else(|| Error::input("sandwich matrix does not have one block"))?;
    if !check_witness(inst, witness)? {
        return Err(Error::input("witness does not evaluate to the target"));
    }
    let sg = &inst.ambient;
    let one = sg.identity().expect("identity was adjoined");
    let zero = sg.zero().expect("Rees matrix semigroup has a zero");

    let all_identity = inst.target().coords().iter().all(|&c| c == one);
    if witness.word.len() < 2 || all_identity {
        return Ok(witness.clone());
    }

    let factors: Vec<&PowerTuple> = witness
        .word
        .iter()
        .map(|&i| &inst.generators[i])
        .collect();
    let mut keep = std::collections::BTreeSet::new();
    for i in 0..inst.n() {
        let b = inst.target().get(i);
        if b == one {
            continue;
        }
        let support: Vec<usize> = (0..factors.len())
            .filter(|&p| factors[p].get(i) != one)
            .collect();
        debug_assert!(!support.is_empty());
        if b == zero {
            if support.len() == 1 {
                keep.insert(support[0]);
                continue;
            }
            // some adjacent pair of non-identity factors multiplies to 0
            let pair = support
                .windows(2)
                .find(|w| sg.mul(factors[w[0]].get(i), factors[w[1]].get(i)) == zero)
                .expect("zero coordinate without a zero-producing adjacent pair");
            keep.insert(pair[0]);
            keep.insert(pair[1]);
        } else {
            keep.insert(*support.first().unwrap());
            keep.insert(*support.last().unwrap());
        }
    }
    let word: Vec<usize> = keep.into_iter().map(|p| witness.word[p]).collect();
    Ok(Witness { word })
}
