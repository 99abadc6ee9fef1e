//! Complexity classification of the subpower membership problem for a
//! given semigroup, with machine-checkable evidence.
//!
//! Rees matrix inputs get exact verdicts from the dichotomy (no identity:
//! polynomial for one-block matrices, NP-complete otherwise) and the
//! trichotomy (adjoined identity: polynomial for the all-1 matrix,
//! NP-complete for one-block matrices with a 0, PSPACE-complete
//! otherwise). General multiplication tables get one-sided bounds: a
//! PSPACE-completeness triple, an NP-hardness triple, a mixed J-class, or
//! nothing beyond the universal PSPACE upper bound. Every verdict carries
//! the witnessing elements so its defining equations can be re-verified by
//! direct multiplication.

use crate::error::{Error, Result};
use crate::greens::GreensStructure;
use crate::rees::{BlockViolation, ReesElement, ReesStructure};
use crate::semigroup::FiniteSemigroup;
use serde_json::{json, Value};

/// Where an SMP lands in the complexity landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexityClass {
    Ptime,
    NpComplete,
    PspaceComplete,
    /// NP-hard with only the universal PSPACE upper bound known.
    NpHardInPspace,
    /// No lower bound found; membership in PSPACE always holds.
    InPspaceUnknown,
}

impl ComplexityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ComplexityClass::Ptime => "PTIME",
            ComplexityClass::NpComplete => "NP_COMPLETE",
            ComplexityClass::PspaceComplete => "PSPACE_COMPLETE",
            ComplexityClass::NpHardInPspace => "NP_HARD_IN_PSPACE",
            ComplexityClass::InPspaceUnknown => "IN_PSPACE_UNKNOWN",
        }
    }
}

/// An element index together with its display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementRef {
    pub index: usize,
    pub name: String,
}

impl ElementRef {
    fn new(sg: &FiniteSemigroup, index: usize) -> Self {
        ElementRef {
            index,
            name: sg.name(index).to_string(),
        }
    }
}

/// The witnessing data behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The block `(J, Δ)` of a one-block sandwich matrix (1-based in JSON).
    OneBlock { cols: Vec<usize>, rows: Vec<usize> },
    /// The ambient is an idempotent semigroup satisfying `xyxzx = xyzx`.
    RegularBand,
    /// Elements with `rs = st = s` and `s` generating no group, plus the
    /// sandwich-matrix pattern they came from when applicable.
    NpHardTriple {
        r: ElementRef,
        s: ElementRef,
        t: ElementRef,
        pattern: Option<BlockViolation>,
    },
    /// Elements with `sts = s`, `s` generating no group, `sn = s`, `tn = t`.
    PspaceTriple {
        s: ElementRef,
        t: ElementRef,
        n: ElementRef,
        pattern: Option<BlockViolation>,
    },
    /// An element whose H-class is not a group inside a J-class that
    /// contains an idempotent; for monoids this upgrades to
    /// PSPACE-completeness.
    MixedJClass {
        s: ElementRef,
        identity: Option<ElementRef>,
    },
    /// Nothing beyond the universal PSPACE upper bound.
    UpperBoundOnly,
}

/// A complexity verdict plus the rule that produced it and its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityVerdict {
    pub class: ComplexityClass,
    /// Stable label of the deciding criterion.
    pub theorem: String,
    pub evidence: Evidence,
}

impl ComplexityVerdict {
    fn new(class: ComplexityClass, theorem: &str, evidence: Evidence) -> Self {
        ComplexityVerdict {
            class,
            theorem: theorem.to_string(),
            evidence,
        }
    }

    pub fn to_json(&self) -> Value {
        let elem = |e: &ElementRef| Value::String(e.name.clone());
        let evidence = match &self.evidence {
            Evidence::OneBlock { cols, rows } => json!({
                "block_cols": cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
                "block_rows": rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
            }),
            Evidence::RegularBand => json!({ "regular_band": true }),
            Evidence::NpHardTriple { r, s, t, pattern } => {
                let mut v = json!({ "r": elem(r), "s": elem(s), "t": elem(t) });
                if let Some(p) = pattern {
                    v["pattern"] = pattern_json(p);
                }
                v
            }
            Evidence::PspaceTriple { s, t, n, pattern } => {
                let mut v = json!({ "s": elem(s), "t": elem(t), "n": elem(n) });
                if let Some(p) = pattern {
                    v["pattern"] = pattern_json(p);
                }
                v
            }
            Evidence::MixedJClass { s, identity } => match identity {
                Some(id) => json!({ "s": elem(s), "identity": elem(id) }),
                None => json!({ "s": elem(s) }),
            },
            Evidence::UpperBoundOnly => json!({}),
        };
        json!({
            "class": self.class.as_str(),
            "theorem": self.theorem,
            "evidence": evidence,
        })
    }
}

fn pattern_json(p: &BlockViolation) -> Value {
    json!({
        "one_rows": [p.row_a + 1, p.row_b + 1],
        "one_cols": [p.col_a + 1, p.col_b + 1],
    })
}

/// Idempotents framing an NP-hardness triple: `e·s = s·f = s`, and `g` is
/// the idempotent power of `s·e`, forming a two-element semilattice with
/// `e` above `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardnessIdempotents {
    pub e: usize,
    pub f: usize,
    pub g: usize,
}

/// First `(r, s, t)` in lexicographic index order with `rs = st = s` and
/// `s` generating no group.
pub fn find_nphard_triple(sg: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
    let greens = sg.greens();
    find_nphard_triple_with(sg, &greens)
}

fn find_nphard_triple_with(
    sg: &FiniteSemigroup,
    greens: &GreensStructure,
) -> Option<(usize, usize, usize)> {
    let non_group: Vec<usize> = (0..sg.size())
        .filter(|&s| !sg.generates_group(greens, s))
        .collect();
    for r in 0..sg.size() {
        for &s in &non_group {
            if sg.mul(r, s) != s {
                continue;
            }
            for t in 0..sg.size() {
                if sg.mul(s, t) == s {
                    return Some((r, s, t));
                }
            }
        }
    }
    None
}

/// Builds the idempotent frame for a valid NP-hardness triple. When `s` is
/// regular with `s·u·s = s`, `e` and `f` are the idempotent powers of `su`
/// and `us`; otherwise those of `r` and `t`.
pub fn hardness_idempotents(
    sg: &FiniteSemigroup,
    r: usize,
    s: usize,
    t: usize,
) -> Result<HardnessIdempotents> {
    let greens = sg.greens();
    if sg.mul(r, s) != s || sg.mul(s, t) != s {
        return Err(Error::input("triple does not satisfy rs = st = s"));
    }
    if sg.generates_group(&greens, s) {
        return Err(Error::input("s generates a group"));
    }
    let (e, f) = match sg.is_regular(s) {
        Some(u) => (
            sg.idempotent_power(sg.mul(s, u)),
            sg.idempotent_power(sg.mul(u, s)),
        ),
        None => (sg.idempotent_power(r), sg.idempotent_power(t)),
    };
    let g = sg.idempotent_power(sg.mul(s, e));
    debug_assert_eq!(sg.mul(e, s), s);
    debug_assert_eq!(sg.mul(s, f), s);
    Ok(HardnessIdempotents { e, f, g })
}

/// First `(s, t, n)` in lexicographic index order with `sts = s`, `s`
/// generating no group, `sn = s`, and `tn = t`.
pub fn find_pspace_triple(sg: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
    let greens = sg.greens();
    find_pspace_triple_with(sg, &greens)
}

fn find_pspace_triple_with(
    sg: &FiniteSemigroup,
    greens: &GreensStructure,
) -> Option<(usize, usize, usize)> {
    for s in 0..sg.size() {
        if sg.generates_group(greens, s) {
            continue;
        }
        for t in 0..sg.size() {
            if sg.mul(sg.mul(s, t), s) != s {
                continue;
            }
            for n in 0..sg.size() {
                if sg.mul(s, n) == s && sg.mul(t, n) == t {
                    return Some((s, t, n));
                }
            }
        }
    }
    None
}

/// An element whose H-class contains no idempotent while its J-class does,
/// i.e. a J-class mixing group and non-group H-classes.
pub fn mixed_jclass(sg: &FiniteSemigroup) -> Option<usize> {
    let greens = sg.greens();
    mixed_jclass_with(sg, &greens)
}

fn mixed_jclass_with(sg: &FiniteSemigroup, greens: &GreensStructure) -> Option<usize> {
    let mut h_has_idem = vec![false; greens.h_class_count()];
    let mut j_has_idem = vec![false; greens.j_class_count()];
    for e in 0..sg.size() {
        if sg.is_idempotent(e) {
            h_has_idem[greens.h_class(e)] = true;
            j_has_idem[greens.j_class(e)] = true;
        }
    }
    (0..sg.size()).find(|&s| !h_has_idem[greens.h_class(s)] && j_has_idem[greens.j_class(s)])
}

/// True iff every element is idempotent and `xyxzx = xyzx` holds for all
/// triples.
pub fn is_regular_band(sg: &FiniteSemigroup) -> bool {
    let n = sg.size();
    if !(0..n).all(|x| sg.is_idempotent(x)) {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            let xy = sg.mul(x, y);
            let xyx = sg.mul(xy, x);
            for z in 0..n {
                if sg.mul(sg.mul(xyx, z), x) != sg.mul(sg.mul(xy, z), x) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact verdict for a Rees matrix semigroup without adjoined identity:
/// polynomial-time for one-block matrices, NP-complete otherwise.
pub fn classify_rees(rees: &ReesStructure) -> Result<ComplexityVerdict> {
    if rees.adjoins_identity() {
        return Err(Error::input(
            "classify_rees expects a structure without adjoined identity",
        ));
    }
    if let Some((j, delta)) = rees.one_block() {
        return Ok(ComplexityVerdict::new(
            ComplexityClass::Ptime,
            "one_block_polynomial_algorithm",
            Evidence::OneBlock {
                cols: j,
                rows: delta,
            },
        ));
    }
    // P(λ,i) = P(μ,j) = 1, P(μ,i) = 0 yields r=[i,λ], s=[i,μ], t=[j,μ]
    // with rs = st = s and s² = 0
    let v = rees.block_violation().expect("no block, so a violation exists");
    let sg = rees.build()?;
    let idx = |i, lambda| rees.element_index(ReesElement::Pair { i, lambda }).unwrap();
    let (r, s, t) = (
        idx(v.col_a, v.row_a),
        idx(v.col_a, v.row_b),
        idx(v.col_b, v.row_b),
    );
    debug_assert_eq!(sg.mul(r, s), s);
    debug_assert_eq!(sg.mul(s, t), s);
    Ok(ComplexityVerdict::new(
        ComplexityClass::NpComplete,
        "block_violation_np_completeness",
        Evidence::NpHardTriple {
            r: ElementRef::new(&sg, r),
            s: ElementRef::new(&sg, s),
            t: ElementRef::new(&sg, t),
            pattern: Some(v),
        },
    ))
}

/// Exact verdict for a Rees matrix semigroup with adjoined identity:
/// polynomial-time when all matrix entries are 1, NP-complete for other
/// one-block matrices, PSPACE-complete otherwise.
pub fn classify_rees_identity(rees: &ReesStructure) -> Result<ComplexityVerdict> {
    if !rees.adjoins_identity() {
        return Err(Error::input(
            "classify_rees_identity expects a structure with adjoined identity",
        ));
    }
    if !rees.has_zero_divisors() {
        // all entries 1: the monoid is a regular band
        debug_assert!(is_regular_band(&rees.build()?));
        return Ok(ComplexityVerdict::new(
            ComplexityClass::Ptime,
            "regular_band_polynomial",
            Evidence::RegularBand,
        ));
    }
    if rees.one_block().is_some() {
        // a 0 entry P(λ,i) makes s = [i,λ] square to zero; with the
        // identity as r and t this is an NP-hardness triple
        let (lambda, i) = first_zero_entry(rees).expect("a zero entry exists");
        let sg = rees.build()?;
        let s = rees.element_index(ReesElement::Pair { i, lambda })?;
        let one = rees.element_index(ReesElement::One)?;
        return Ok(ComplexityVerdict::new(
            ComplexityClass::NpComplete,
            "one_block_zero_np_completeness",
            Evidence::NpHardTriple {
                r: ElementRef::new(&sg, one),
                s: ElementRef::new(&sg, s),
                t: ElementRef::new(&sg, one),
                pattern: None,
            },
        ));
    }
    // P(λ,i) = P(μ,j) = 1 and P(λ,j) = 0 yields s = [j,λ], t = [i,μ] with
    // sts = s, s² = 0, and the adjoined identity as n
    let v = rees
        .block_violation_transposed()
        .expect("no block, so a violation exists");
    let sg = rees.build()?;
    let s = rees.element_index(ReesElement::Pair {
        i: v.col_b,
        lambda: v.row_a,
    })?;
    let t = rees.element_index(ReesElement::Pair {
        i: v.col_a,
        lambda: v.row_b,
    })?;
    let one = rees.element_index(ReesElement::One)?;
    debug_assert_eq!(sg.mul(sg.mul(s, t), s), s);
    Ok(ComplexityVerdict::new(
        ComplexityClass::PspaceComplete,
        "no_block_pspace_completeness",
        Evidence::PspaceTriple {
            s: ElementRef::new(&sg, s),
            t: ElementRef::new(&sg, t),
            n: ElementRef::new(&sg, one),
            pattern: Some(v),
        },
    ))
}

fn first_zero_entry(rees: &ReesStructure) -> Option<(usize, usize)> {
    for lambda in 0..rees.rows() {
        for i in 0..rees.cols() {
            if !rees.entry(lambda, i) {
                return Some((lambda, i));
            }
        }
    }
    None
}

/// Bounds for an arbitrary multiplication table. Returns PSPACE-complete
/// when a completeness triple exists (or the semigroup is a monoid with a
/// mixed J-class), NP-hard otherwise when a hardness witness exists, and
/// the bare PSPACE upper bound when nothing applies. Never claims PTIME or
/// exact NP-completeness: no matching general upper bounds are available.
pub fn classify_general(sg: &FiniteSemigroup) -> ComplexityVerdict {
    let greens = sg.greens();
    if let Some((s, t, n)) = find_pspace_triple_with(sg, &greens) {
        return ComplexityVerdict::new(
            ComplexityClass::PspaceComplete,
            "pspace_triple",
            Evidence::PspaceTriple {
                s: ElementRef::new(sg, s),
                t: ElementRef::new(sg, t),
                n: ElementRef::new(sg, n),
                pattern: None,
            },
        );
    }
    if let Some(id) = sg.identity() {
        if let Some(s) = mixed_jclass_with(sg, &greens) {
            return ComplexityVerdict::new(
                ComplexityClass::PspaceComplete,
                "monoid_mixed_j_class",
                Evidence::MixedJClass {
                    s: ElementRef::new(sg, s),
                    identity: Some(ElementRef::new(sg, id)),
                },
            );
        }
    }
    if let Some((r, s, t)) = find_nphard_triple_with(sg, &greens) {
        return ComplexityVerdict::new(
            ComplexityClass::NpHardInPspace,
            "np_hard_triple",
            Evidence::NpHardTriple {
                r: ElementRef::new(sg, r),
                s: ElementRef::new(sg, s),
                t: ElementRef::new(sg, t),
                pattern: None,
            },
        );
    }
    if let Some(s) = mixed_jclass_with(sg, &greens) {
        return ComplexityVerdict::new(
            ComplexityClass::NpHardInPspace,
            "mixed_j_class",
            Evidence::MixedJClass {
                s: ElementRef::new(sg, s),
                identity: None,
            },
        );
    }
    ComplexityVerdict::new(
        ComplexityClass::InPspaceUnknown,
        "pspace_upper_bound",
        Evidence::UpperBoundOnly,
    )
}
