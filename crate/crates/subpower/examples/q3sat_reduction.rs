//! From quantified 3SAT to subpower membership over the Brandt monoid:
//! the game value of ∀x₁∃y₁ … Φ equals membership of the constructed
//! target, and a winning strategy unrolls into an explicit witness.
//!
//! ```bash
//! cargo run --example q3sat_reduction
//! ```

use subpower::reduce::{pair_lift, q3sat_to_smp, q3sat_witness_word, Q3SatFormula, Q3satLayout};
use subpower::{catalog, check_witness, solve_closure, Witness};

fn main() -> subpower::Result<()> {
    let entry = catalog::entry("brandt_b2_1")?;
    let sg = &entry.semigroup;
    let triple = entry.pspace_triple.expect("distinguished triple");
    let (s, t, n) = triple;
    println!(
        "triple in B2^1: s = {}, t = {}, n = {}",
        sg.name(s),
        sg.name(t),
        sg.name(n)
    );

    // ∀x₁∃y₁ (x₁ ∨ y₁ ∨ y₁) ∧ (¬x₁ ∨ ¬y₁ ∨ ¬y₁): true with y₁ = ¬x₁
    let formula = Q3SatFormula::new(1, vec![[1, 2, 2], [-1, -2, -2]])?;
    println!("game value: {}", formula.eval());

    let inst = q3sat_to_smp(sg, triple, &formula, false)?;
    let layout = Q3satLayout {
        n: formula.pair_count(),
        m: formula.clause_count(),
    };
    println!(
        "instance: {} generators of length {}",
        layout.generator_count(),
        layout.power()
    );
    let report = solve_closure(&inst, 1_000_000)?;
    println!(
        "member: {} (closure explored {} tuples)",
        report.member, report.closure_size
    );
    assert_eq!(report.member, formula.eval());

    // the winning strategy gives an explicit witness sweeping all
    // universal assignments in order
    let strategy = formula.find_strategy().expect("formula is true");
    let w = Witness {
        word: q3sat_witness_word(&formula, &strategy),
    };
    println!("strategy witness ({} letters): {:?}", w.word.len(), w.word);
    assert!(check_witness(&inst, &w)?);

    // a false formula maps to a non-member
    let falsity = Q3SatFormula::new(1, vec![[1, 1, 1]])?;
    let inst2 = q3sat_to_smp(sg, triple, &falsity, false)?;
    assert!(!solve_closure(&inst2, 1_000_000)?.member);
    println!("∀x₁ x₁: game value false, member false");

    // triples that only satisfy the weaker conditions run over the square
    let (square, lifted) = pair_lift(sg, triple)?;
    println!(
        "pair lift: {} elements, s' = {}",
        square.size(),
        square.name(lifted.0)
    );
    let inst3 = q3sat_to_smp(sg, triple, &formula, true)?;
    let w3 = Witness {
        word: q3sat_witness_word(&formula, &strategy),
    };
    assert!(check_witness(&inst3, &w3)?);
    println!("lifted instance accepts the same strategy witness");
    Ok(())
}
