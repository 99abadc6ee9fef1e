//! A toolkit for the subpower membership problem (SMP) over finite
//! semigroups: given tuples `a₁, …, a_k, b ∈ S^n`, does `b` lie in the
//! subsemigroup of `S^n` generated by the `aᵢ`?
//!
//! The crate provides
//!
//! - dense multiplication-table semigroups with Green's relations
//!   ([`semigroup`], [`greens`]),
//! - combinatorial Rees matrix semigroups and a catalog of named examples
//!   ([`rees`], [`catalog`]),
//! - a breadth-first closure solver with witness reconstruction, the
//!   quadratic-time decision procedure for one-block sandwich matrices,
//!   and short-witness machinery ([`smp`], [`words`]),
//! - SAT and Q3SAT reductions into SMP instances with brute-force source
//!   evaluators ([`reduce`]),
//! - a complexity classifier with re-verifiable evidence ([`classify`]),
//! - JSON formats and the command-line frontend ([`formats`], [`cli`]).
//!
//! Start with the `examples/` directory: each file is a runnable tour of
//! one capability.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod formats;
pub mod greens;
pub mod reduce;
pub mod rees;
pub mod semigroup;
pub mod smp;
pub mod words;

pub use catalog::CatalogEntry;
pub use classify::{ComplexityClass, ComplexityVerdict, Evidence, HardnessIdempotents};
pub use error::{Error, Result};
pub use greens::GreensStructure;
pub use rees::{BlockViolation, ReesElement, ReesStructure};
pub use semigroup::{tuple_multiply, AssocCheck, FiniteSemigroup, PowerTuple};
pub use smp::{
    check_witness, compress_one_block_witness, np_certificate, solve_closure, solve_one_block,
    solve_one_block_witness, SmpInstance, SolveReport, Witness, DEFAULT_STATE_BUDGET,
};
pub use words::{edge_set, shorten_word, shortening_bound, words_equivalent_rees, WordEdgeSet};
