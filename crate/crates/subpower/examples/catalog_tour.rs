//! Tour of the built-in semigroup catalog.
//!
//! ```bash
//! cargo run --example catalog_tour
//! ```

use subpower::catalog;

fn main() -> subpower::Result<()> {
    for name in catalog::standard_names() {
        let entry = catalog::entry(name)?;
        let sg = &entry.semigroup;
        print!("{name:<24} {:>4} elements", sg.size());
        if let Some(id) = sg.identity() {
            print!("  identity {}", sg.name(id));
        }
        if let Some(z) = sg.zero() {
            print!("  zero {}", sg.name(z));
        }
        if let Some((s, t, n)) = entry.pspace_triple {
            print!(
                "  triple (s, t, n) = ({}, {}, {})",
                sg.name(s),
                sg.name(t),
                sg.name(n)
            );
        }
        println!();
    }

    // every catalog table is associative, including the ones above the
    // automatic checking threshold
    for name in catalog::standard_names() {
        catalog::entry(name)?.semigroup.verify_associativity()?;
    }
    println!("\nassociativity verified for the whole catalog");
    Ok(())
}
