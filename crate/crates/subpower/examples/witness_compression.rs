//! Compressing membership witnesses over a one-block Rees matrix semigroup
//! with adjoined identity: any valid witness shrinks to length ≤ 2n.
//!
//! ```bash
//! cargo run --example witness_compression
//! ```

use subpower::{
    check_witness, compress_one_block_witness, solve_closure, ReesStructure, SmpInstance, Witness,
};

fn main() -> subpower::Result<()> {
    // one-block matrix (1 1; 1 1) with adjoined identity
    let rees = ReesStructure::new(vec![vec![1, 1], vec![1, 1]], true)?;
    let sg = rees.build()?;
    println!(
        "ambient: {} elements, identity {}, zero {}",
        sg.size(),
        sg.name(sg.identity().unwrap()),
        sg.name(sg.zero().unwrap())
    );

    // four generators of a subsemigroup of S^3
    let generators = vec![
        vec![0, 5, 5], // ([1,1], 1, 1)
        vec![5, 1, 5], // (1, [1,2], 1)
        vec![5, 5, 3], // (1, 1, [2,2])
        vec![2, 2, 5], // ([2,1], [2,1], 1)
    ];
    // an intentionally wasteful witness
    let padded = Witness {
        word: vec![0, 1, 1, 2, 1, 3, 2, 0, 2],
    };
    let sg2 = sg.clone();
    let target: Vec<usize> = {
        let inst0 = SmpInstance::from_coords(sg2, &generators, vec![0, 0, 0])?;
        let mut acc = inst0.generators()[padded.word[0]].clone();
        for &i in &padded.word[1..] {
            acc = subpower::tuple_multiply(inst0.ambient(), &acc, &inst0.generators()[i])?;
        }
        acc.coords().to_vec()
    };
    let inst = SmpInstance::from_coords(sg, &generators, target.clone())?;
    let shown: Vec<&str> = target.iter().map(|&c| inst.ambient().name(c)).collect();
    println!("target: ({})", shown.join(", "));
    assert!(check_witness(&inst, &padded)?);

    let compressed = compress_one_block_witness(&inst, &rees, &padded)?;
    println!(
        "witness {:?} ({} letters) -> {:?} ({} letters, bound 2n = {})",
        padded.word,
        padded.word.len(),
        compressed.word,
        compressed.word.len(),
        2 * inst.n()
    );
    assert!(check_witness(&inst, &compressed)?);
    assert!(compressed.word.len() <= 2 * inst.n());

    // the closure solver's shortest witness, for comparison
    let report = solve_closure(&inst, 100_000)?;
    println!(
        "closure shortest witness: {:?}",
        report.witness.map(|w| w.word)
    );
    Ok(())
}
