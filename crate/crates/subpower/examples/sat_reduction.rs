//! From Boolean satisfiability to subpower membership: clauses become an
//! SMP instance over the Brandt semigroup, satisfiable formulas become
//! members, and satisfying assignments become witnesses.
//!
//! ```bash
//! cargo run --example sat_reduction
//! ```

use subpower::classify::find_nphard_triple;
use subpower::reduce::{sat_to_smp, sat_witness_word, CnfFormula};
use subpower::{catalog, check_witness, solve_closure, Witness};

fn main() -> subpower::Result<()> {
    let b2 = catalog::entry("brandt_b2")?.semigroup;
    let (r, s, t) = find_nphard_triple(&b2).expect("B2 has a hardness triple");
    println!(
        "hardness triple in B2: r = {}, s = {}, t = {}",
        b2.name(r),
        b2.name(s),
        b2.name(t)
    );

    // (x1 ∨ ¬x2) ∧ (x2 ∨ x3) ∧ (¬x1 ∨ ¬x3)
    let cnf = CnfFormula::new(3, vec![vec![1, -2], vec![2, 3], vec![-1, -3]])?;
    let inst = sat_to_smp(&b2, (r, s, t), &cnf)?;
    println!(
        "instance: {} generators of length {} over B2^{}",
        inst.generators().len(),
        inst.n(),
        inst.n()
    );

    let report = solve_closure(&inst, 1_000_000)?;
    let assignment = cnf.brute_force_sat();
    println!("brute-force satisfiable: {}", assignment.is_some());
    println!("SMP member:              {}", report.member);
    assert_eq!(assignment.is_some(), report.member);

    if let Some(z) = assignment {
        let w = Witness {
            word: sat_witness_word(cnf.var_count(), &z),
        };
        assert!(check_witness(&inst, &w)?);
        println!(
            "assignment {:?} gives the witness {:?}",
            z.iter().map(|&b| b as u8).collect::<Vec<_>>(),
            w.word
        );
    }

    // an unsatisfiable formula maps to a non-member
    let unsat = CnfFormula::new(1, vec![vec![1], vec![-1]])?;
    let inst2 = sat_to_smp(&b2, (r, s, t), &unsat)?;
    let report2 = solve_closure(&inst2, 1_000_000)?;
    println!(
        "contradiction is satisfiable: false, member: {}",
        report2.member
    );
    assert!(!report2.member);
    Ok(())
}
