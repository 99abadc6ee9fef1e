//! Membership in a subpower of the Brandt semigroup, decided by the
//! breadth-first closure solver with a reconstructed witness.
//!
//! ```bash
//! cargo run --example solve_membership
//! ```

use subpower::{catalog, check_witness, solve_closure, SmpInstance};

fn main() -> subpower::Result<()> {
    let b2 = catalog::entry("brandt_b2")?.semigroup;
    // element indices: [1,1]=0, [1,2]=1, [2,1]=2, [2,2]=3, 0=4
    let names: Vec<&str> = (0..b2.size()).map(|e| b2.name(e)).collect();
    println!("B2 elements: {}", names.join(", "));

    // generators of a subsemigroup of B2³; the target equals g0·g1·g0,
    // but the solver returns the shortest product reaching it
    let generators = vec![vec![1, 2, 0], vec![2, 1, 1], vec![0, 3, 4]];
    let target = vec![1, 2, 4];
    let inst = SmpInstance::from_coords(b2.clone(), &generators, target)?;

    let report = solve_closure(&inst, 100_000)?;
    println!("member: {}", report.member);
    println!("closure explored: {} tuples", report.closure_size);
    if let Some(w) = &report.witness {
        let word: Vec<String> = w.word.iter().map(|i| format!("g{i}")).collect();
        println!("witness: {}", word.join(" · "));
        assert!(check_witness(&inst, w)?);
        println!("witness re-checked by direct multiplication");
    }

    // a target outside the closure
    let inst2 = SmpInstance::from_coords(b2, &generators, vec![3, 3, 3])?;
    let report2 = solve_closure(&inst2, 100_000)?;
    println!(
        "second target member: {} (closure size {})",
        report2.member, report2.closure_size
    );
    Ok(())
}
