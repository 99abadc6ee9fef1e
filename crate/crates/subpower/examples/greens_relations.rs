//! Green's relations for a few semigroups: class counts, J-class sizes,
//! and the group test `s² J s`.
//!
//! ```bash
//! cargo run --example greens_relations
//! ```

use subpower::{catalog, FiniteSemigroup};

fn summary(label: &str, sg: &FiniteSemigroup) {
    let g = sg.greens();
    let mut sizes = g.j_class_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    println!(
        "{label}: {} elements, J-classes {:?}, R {}, L {}, H {}",
        sg.size(),
        sizes,
        g.r_class_count(),
        g.l_class_count(),
        g.h_class_count()
    );
    let groups: Vec<&str> = (0..sg.size())
        .filter(|&x| sg.generates_group(&g, x))
        .map(|x| sg.name(x))
        .collect();
    println!("  group-generating elements: {}", groups.join(", "));
}

fn main() -> subpower::Result<()> {
    summary("B2", &catalog::entry("brandt_b2")?.semigroup);
    summary("A2", &catalog::entry("a2")?.semigroup);
    summary("T3", &catalog::entry("full_transformation:3")?.semigroup);
    summary("I2", &catalog::entry("symmetric_inverse:2")?.semigroup);

    // a left-zero semigroup: xy = x, so R-classes are singletons while all
    // elements share one L-class
    let left_zero = FiniteSemigroup::new(&[vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]])?;
    summary("left-zero(3)", &left_zero);
    Ok(())
}
