//! The quadratic-time membership decision for Rees matrix semigroups whose
//! sandwich matrix has one block, cross-checked against the closure solver.
//!
//! ```bash
//! cargo run --example one_block_algorithm
//! ```

use subpower::{solve_closure, solve_one_block_witness, ReesStructure, SmpInstance};

fn main() -> subpower::Result<()> {
    // 1-entries form the rectangle {1} × {1}
    let rees = ReesStructure::new(vec![vec![1, 0], vec![0, 0]], false)?;
    let (block_cols, block_rows) = rees.one_block().expect("one block");
    println!(
        "block: J = {:?}, Δ = {:?} (1-based: columns {:?}, rows {:?})",
        block_cols,
        block_rows,
        block_cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
        block_rows.iter().map(|r| r + 1).collect::<Vec<_>>()
    );
    let sg = rees.build()?;

    // a = ([1,1],[1,2]) generates {a, a²} with a² = ([1,1],0)
    let generators = vec![vec![0, 1]];
    for target in [vec![0, 4], vec![1, 4], vec![0, 1]] {
        let inst = SmpInstance::from_coords(sg.clone(), &generators, target.clone())?;
        let fast = solve_one_block_witness(&inst, &rees)?;
        let slow = solve_closure(&inst, 10_000)?;
        assert_eq!(fast.is_some(), slow.member, "solvers must agree");
        let shown: Vec<&str> = target.iter().map(|&c| sg.name(c)).collect();
        match fast {
            Some(w) => println!(
                "target ({}) is a member, witness {:?}",
                shown.join(", "),
                w.word
            ),
            None => println!("target ({}) is not a member", shown.join(", ")),
        }
    }
    Ok(())
}
