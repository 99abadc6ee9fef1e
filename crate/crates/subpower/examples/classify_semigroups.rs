//! The complexity landscape: exact verdicts for Rees matrix semigroups
//! (with and without adjoined identity) and one-sided bounds for general
//! multiplication tables.
//!
//! ```bash
//! cargo run --example classify_semigroups
//! ```

use subpower::classify::{classify_general, classify_rees, classify_rees_identity};
use subpower::{catalog, FiniteSemigroup, ReesStructure};

fn main() -> subpower::Result<()> {
    println!("Rees matrix semigroups (dichotomy):");
    for (label, matrix) in [
        ("B2  = rees(1 0; 0 1)", vec![vec![1, 0], vec![0, 1]]),
        ("A2  = rees(1 1; 1 0)", vec![vec![1, 1], vec![1, 0]]),
        ("all-1 2x2", vec![vec![1, 1], vec![1, 1]]),
        ("all-0 2x2", vec![vec![0, 0], vec![0, 0]]),
    ] {
        let verdict = classify_rees(&ReesStructure::new(matrix, false)?)?;
        println!("  {label:<22} {}", verdict.class.as_str());
    }

    println!("with adjoined identity (trichotomy):");
    for (label, matrix) in [
        ("all-1 2x2 + 1", vec![vec![1, 1], vec![1, 1]]),
        ("one-block-with-0 + 1", vec![vec![1, 0], vec![0, 0]]),
        ("B2 + 1", vec![vec![1, 0], vec![0, 1]]),
        ("A2 + 1", vec![vec![1, 1], vec![1, 0]]),
    ] {
        let verdict = classify_rees_identity(&ReesStructure::new(matrix, true)?)?;
        println!(
            "  {label:<22} {}  [{}]",
            verdict.class.as_str(),
            verdict.theorem
        );
    }

    println!("general tables (bounds with evidence):");
    for name in [
        "full_transformation:3",
        "symmetric_inverse:2",
        "matrix_semigroup:2",
        "brandt_b2",
        "rees_z2",
    ] {
        let sg = catalog::entry(name)?.semigroup;
        let verdict = classify_general(&sg);
        println!("  {name:<22} {}", verdict.class.as_str());
    }

    // the two-element group: no hardness witnesses apply
    let z2 = FiniteSemigroup::new(&[vec![0, 1], vec![1, 0]])?;
    let verdict = classify_general(&z2);
    println!("  {:<22} {}", "cyclic group Z2", verdict.class.as_str());
    println!("\nverdict JSON for B2:");
    let v = classify_rees(&ReesStructure::new(vec![vec![1, 0], vec![0, 1]], false)?)?;
    println!("{}", serde_json::to_string_pretty(&v.to_json()).unwrap());
    Ok(())
}
