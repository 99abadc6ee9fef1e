//! Shortening words while preserving their value in every combinatorial
//! Rees matrix semigroup: equal endpoints plus equal adjacent-pair sets
//! suffice, and every word over k letters reduces to length ≤ k(k²+1).
//!
//! ```bash
//! cargo run --example word_shortening
//! ```

use subpower::{
    catalog, edge_set, shorten_word, shortening_bound, words_equivalent_rees, FiniteSemigroup,
};

fn eval_word(sg: &FiniteSemigroup, word: &[usize], assignment: &[usize]) -> usize {
    word.iter()
        .map(|&l| assignment[l])
        .reduce(|a, b| sg.mul(a, b))
        .unwrap()
}

fn main() -> subpower::Result<()> {
    let word = vec![0, 1, 0, 1, 0];
    let short = shorten_word(&word);
    println!("{word:?}  ->  {short:?}");
    let e = edge_set(&word)?;
    println!(
        "edge set: first {}, last {}, pairs {:?}",
        e.first, e.last, e.edges
    );
    assert!(words_equivalent_rees(&word, &short));

    // a longer word over three letters
    let word = vec![2, 0, 1, 2, 0, 1, 0, 2, 1, 0, 0, 2, 1, 1, 0, 2, 0, 1, 2, 0];
    let short = shorten_word(&word);
    println!(
        "length {} -> {} (bound for k = 3: {})",
        word.len(),
        short.len(),
        shortening_bound(3)
    );
    assert!(words_equivalent_rees(&word, &short));

    // the preserved value, checked semantically in B2 and A2 under a few
    // concrete letter assignments
    for name in ["brandt_b2", "a2"] {
        let sg = catalog::entry(name)?.semigroup;
        for assignment in [[0, 1, 2], [1, 2, 3], [3, 1, 0], [4, 2, 2]] {
            let full = eval_word(&sg, &word, &assignment);
            let reduced = eval_word(&sg, &short, &assignment);
            assert_eq!(full, reduced);
        }
        println!("evaluations agree in {name}");
    }
    Ok(())
}
