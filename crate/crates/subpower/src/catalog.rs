//! Catalog of named semigroups with their distinguished elements.
//!
//! Names accepted here (and by the CLI) are strings with optional
//! parameters after a colon:
//!
//! - `brandt_b2`, `a2` — the 5-element Rees matrix semigroups for the
//!   identity matrix and for `(1 1; 1 0)`
//! - `brandt_b2_1`, `a2_1` — the same with an adjoined identity
//! - `full_transformation:N` — all maps on `N` points, `N ≤ 4`
//! - `symmetric_inverse:N` — all partial injections on `N` points, `N ≤ 3`
//! - `matrix_semigroup:Q` — all 2×2 matrices over ℤ_Q, `Q ∈ {2, 3}`
//! - `rees:ROWS` / `rees_1:ROWS` — a Rees matrix semigroup from a 0-1
//!   matrix written as rows of digits separated by `;`, e.g. `rees:10;01`
//! - `rees_z2` — the 9-element Rees matrix semigroup over the two-element
//!   group with sandwich matrix `(1 1; 1 c)`; no complexity classification
//!   is attached to it

use crate::error::{Error, Result};
use crate::rees::ReesStructure;
use crate::semigroup::{AssocCheck, FiniteSemigroup};

/// A catalog semigroup plus whatever distinguished data comes with it.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub semigroup: FiniteSemigroup,
    /// The sandwich matrix when the entry is a Rees matrix semigroup over
    /// the trivial group; lets solvers and classifiers dispatch on it.
    pub rees: Option<ReesStructure>,
    /// Distinguished `(s, t, n)` with `sts = s`, `s` non-group, `sn = s`,
    /// `tn = t`, where such elements are known for the entry.
    pub pspace_triple: Option<(usize, usize, usize)>,
}

/// All parameter-instantiated catalog names, used by the structural suites.
pub fn standard_names() -> Vec<&'static str> {
    vec![
        "brandt_b2",
        "a2",
        "brandt_b2_1",
        "a2_1",
        "full_transformation:2",
        "full_transformation:3",
        "full_transformation:4",
        "symmetric_inverse:1",
        "symmetric_inverse:2",
        "symmetric_inverse:3",
        "matrix_semigroup:2",
        "matrix_semigroup:3",
        "rees_z2",
    ]
}

/// Looks up a catalog name, e.g. `"brandt_b2"` or `"full_transformation:3"`.
pub fn entry(spec: &str) -> Result<CatalogEntry> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let no_param = || -> Result<()> {
        match param {
            Some(_) => Err(Error::input(format!("catalog name {name} takes no parameter"))),
            None => Ok(()),
        }
    };
    match name {
        "brandt_b2" => {
            no_param()?;
            rees_entry(spec, vec![vec![1, 0], vec![0, 1]], false)
        }
        "a2" => {
            no_param()?;
            rees_entry(spec, vec![vec![1, 1], vec![1, 0]], false)
        }
        "brandt_b2_1" => {
            no_param()?;
            rees_entry(spec, vec![vec![1, 0], vec![0, 1]], true)
        }
        "a2_1" => {
            no_param()?;
            rees_entry(spec, vec![vec![1, 1], vec![1, 0]], true)
        }
        "full_transformation" => full_transformation(parse_param(spec, param, 1, 4)?),
        "symmetric_inverse" => symmetric_inverse(parse_param(spec, param, 1, 3)?),
        "matrix_semigroup" => matrix_semigroup(parse_param(spec, param, 2, 3)?),
        "rees" | "rees_1" => {
            let rows = parse_matrix_param(param.ok_or_else(|| {
                Error::input("rees takes a matrix parameter, e.g. rees:10;01")
            })?)?;
            rees_entry(spec, rows, name == "rees_1")
        }
        "rees_z2" => {
            no_param()?;
            rees_over_z2(spec)
        }
        _ => Err(Error::input(format!("unknown catalog name: {spec}"))),
    }
}

fn parse_param(spec: &str, param: Option<&str>, lo: usize, hi: usize) -> Result<usize> {
    let p = param.ok_or_else(|| Error::input(format!("{spec} requires a numeric parameter")))?;
    let v: usize = p
        .parse()
        .map_err(|_| Error::input(format!("bad parameter in {spec}")))?;
    if v < lo || v > hi {
        return Err(Error::input(format!(
            "parameter {v} out of supported range {lo}..={hi} in {spec}"
        )));
    }
    Ok(v)
}

fn parse_matrix_param(p: &str) -> Result<Vec<Vec<u8>>> {
    p.split(';')
        .map(|row| {
            row.chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::input(format!("bad matrix character {c:?}"))),
                })
                .collect()
        })
        .collect()
}

fn rees_entry(name: &str, matrix: Vec<Vec<u8>>, adjoin: bool) -> Result<CatalogEntry> {
    let rees = ReesStructure::new(matrix, adjoin)?;
    let semigroup = rees.build()?;
    let pspace_triple = if adjoin {
        // for B₂¹: s = [1,2], t = [2,1]; for A₂¹: s = [2,2], t = [1,1];
        // found generically by the scan so rees_1:... entries also carry one
        crate::classify::find_pspace_triple(&semigroup)
    } else {
        None
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        semigroup,
        rees: Some(rees),
        pspace_triple,
    })
}

/// The full transformation semigroup on `[n]`, composed left to right:
/// the product `f·g` maps `x` to `g(f(x))`. Elements are image tables in
/// lexicographic order.
#[allow(clippy::needless_range_loop)] // indices are the elements
fn full_transformation(n: usize) -> Result<CatalogEntry> {
    let size = n.pow(n as u32);
    let image = |f: usize, x: usize| -> usize {
        // x-th digit (0-based, most significant first) of f in base n
        f / n.pow((n - 1 - x) as u32) % n
    };
    let mut rows = vec![vec![0usize; size]; size];
    for f in 0..size {
        for g in 0..size {
            let mut h = 0usize;
            for x in 0..n {
                h = h * n + image(g, image(f, x));
            }
            rows[f][g] = h;
        }
    }
    let names: Vec<String> = (0..size)
        .map(|f| {
            let imgs: Vec<String> = (0..n).map(|x| (image(f, x) + 1).to_string()).collect();
            format!("[{}]", imgs.join(","))
        })
        .collect();
    let semigroup = FiniteSemigroup::from_rows(&rows, Some(names), AssocCheck::Auto)?;
    let pspace_triple = (n >= 3).then(|| {
        let encode = |tbl: &[usize]| tbl.iter().fold(0usize, |acc, &v| acc * n + v);
        // s: 1 ↦ 2, everything else ↦ 3; t: 2 ↦ 1, everything else ↦ 3
        let s: Vec<usize> = (0..n).map(|x| if x == 0 { 1 } else { 2 }).collect();
        let t: Vec<usize> = (0..n).map(|x| if x == 1 { 0 } else { 2 }).collect();
        let id: Vec<usize> = (0..n).collect();
        (encode(&s), encode(&t), encode(&id))
    });
    Ok(CatalogEntry {
        name: format!("full_transformation:{n}"),
        semigroup,
        rees: None,
        pspace_triple,
    })
}

/// The symmetric inverse semigroup on `[n]`: all partial injections,
/// composed left to right. Tables use 0 for "undefined" and are ordered
/// lexicographically.
fn symmetric_inverse(n: usize) -> Result<CatalogEntry> {
    let base = n + 1;
    let mut tables: Vec<Vec<usize>> = Vec::new();
    for code in 0..base.pow(n as u32) {
        let tbl: Vec<usize> = (0..n)
            .map(|x| code / base.pow((n - 1 - x) as u32) % base)
            .collect();
        let defined: Vec<usize> = tbl.iter().copied().filter(|&v| v > 0).collect();
        let mut uniq = defined.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() == defined.len() {
            tables.push(tbl);
        }
    }
    let index_of = |tbl: &[usize]| tables.binary_search_by(|t| t.as_slice().cmp(tbl)).unwrap();
    let size = tables.len();
    let mut rows = vec![vec![0usize; size]; size];
    for (fi, f) in tables.iter().enumerate() {
        for (gi, g) in tables.iter().enumerate() {
            let h: Vec<usize> = (0..n)
                .map(|x| if f[x] == 0 { 0 } else { g[f[x] - 1] })
                .collect();
            rows[fi][gi] = index_of(&h);
        }
    }
    let names: Vec<String> = tables
        .iter()
        .map(|t| {
            let imgs: Vec<String> = t
                .iter()
                .map(|&v| if v == 0 { "-".to_string() } else { v.to_string() })
                .collect();
            format!("[{}]", imgs.join(","))
        })
        .collect();
    let semigroup = FiniteSemigroup::from_rows(&rows, Some(names), AssocCheck::Auto)?;
    let pspace_triple = (n >= 2).then(|| {
        let mut s = vec![0usize; n];
        s[0] = 2; // 1 ↦ 2
        let mut t = vec![0usize; n];
        t[1] = 1; // 2 ↦ 1
        let id: Vec<usize> = (1..=n).collect();
        (index_of(&s), index_of(&t), index_of(&id))
    });
    Ok(CatalogEntry {
        name: format!("symmetric_inverse:{n}"),
        semigroup,
        rees: None,
        pspace_triple,
    })
}

/// All 2×2 matrices over ℤ_q under matrix multiplication, entries listed
/// row-major and ordered lexicographically.
#[allow(clippy::needless_range_loop)] // indices are the elements
fn matrix_semigroup(q: usize) -> Result<CatalogEntry> {
    let size = q.pow(4);
    let dec = |m: usize| -> [usize; 4] {
        [m / q.pow(3) % q, m / q.pow(2) % q, m / q % q, m % q]
    };
    let enc = |a: [usize; 4]| a[0] * q.pow(3) + a[1] * q.pow(2) + a[2] * q + a[3];
    let mut rows = vec![vec![0usize; size]; size];
    for m1 in 0..size {
        let a = dec(m1);
        for m2 in 0..size {
            let b = dec(m2);
            rows[m1][m2] = enc([
                (a[0] * b[0] + a[1] * b[2]) % q,
                (a[0] * b[1] + a[1] * b[3]) % q,
                (a[2] * b[0] + a[3] * b[2]) % q,
                (a[2] * b[1] + a[3] * b[3]) % q,
            ]);
        }
    }
    let names: Vec<String> = (0..size)
        .map(|m| {
            let a = dec(m);
            format!("[[{},{}],[{},{}]]", a[0], a[1], a[2], a[3])
        })
        .collect();
    let semigroup = FiniteSemigroup::from_rows(&rows, Some(names), AssocCheck::Auto)?;
    // elementary matrices E12, E21 and the identity
    let pspace_triple = Some((enc([0, 1, 0, 0]), enc([0, 0, 1, 0]), enc([1, 0, 0, 1])));
    Ok(CatalogEntry {
        name: format!("matrix_semigroup:{q}"),
        semigroup,
        rees: None,
        pspace_triple,
    })
}

/// The 9-element Rees matrix semigroup over the two-element group {1, c}
/// with sandwich matrix `(1 1; 1 c)`: elements `[i,g,λ]` plus a zero, with
/// `[i,g,λ]·[j,h,μ] = [i, g·p(λ,j)·h, μ]`.
fn rees_over_z2(name: &str) -> Result<CatalogEntry> {
    // group ℤ₂ = {0 ↦ 1, 1 ↦ c}; sandwich entries p(λ,j) as group elements
    let p = [[0usize, 0], [0, 1]];
    let pairs = 8usize; // (i, λ, g) lexicographic
    let zero = pairs;
    let size = pairs + 1;
    let idx = |i: usize, lambda: usize, g: usize| (i * 2 + lambda) * 2 + g;
    let mut rows = vec![vec![zero; size]; size];
    for i in 0..2 {
        for la in 0..2 {
            for g in 0..2 {
                for j in 0..2 {
                    for mu in 0..2 {
                        for h in 0..2 {
                            let prod = (g + p[la][j] + h) % 2;
                            rows[idx(i, la, g)][idx(j, mu, h)] = idx(i, mu, prod);
                        }
                    }
                }
            }
        }
    }
    let mut names = Vec::with_capacity(size);
    for i in 0..2 {
        for la in 0..2 {
            for g in 0..2 {
                names.push(format!(
                    "[{},{},{}]",
                    i + 1,
                    if g == 0 { "1" } else { "c" },
                    la + 1
                ));
            }
        }
    }
    names.push("0".to_string());
    let semigroup = FiniteSemigroup::from_rows(&rows, Some(names), AssocCheck::Force)?;
    Ok(CatalogEntry {
        name: name.to_string(),
        semigroup,
        rees: None,
        pspace_triple: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brandt_monoid_entry() {
        let e = entry("brandt_b2_1").unwrap();
        assert_eq!(e.semigroup.size(), 6);
        let (s, t, n) = e.pspace_triple.unwrap();
        assert_eq!(e.semigroup.name(s), "[1,2]");
        assert_eq!(e.semigroup.name(t), "[2,1]");
        assert_eq!(e.semigroup.name(n), "1");
    }

    #[test]
    fn a2_monoid_entry() {
        let e = entry("a2_1").unwrap();
        let (s, t, _) = e.pspace_triple.unwrap();
        assert_eq!(e.semigroup.name(s), "[2,2]");
        assert_eq!(e.semigroup.name(t), "[1,1]");
    }

    #[test]
    fn transformation_semigroup_sizes() {
        assert_eq!(entry("full_transformation:3").unwrap().semigroup.size(), 27);
        assert_eq!(entry("full_transformation:4").unwrap().semigroup.size(), 256);
        assert!(entry("full_transformation:5").is_err());
        let t3 = entry("full_transformation:3").unwrap();
        let (s, t, n) = t3.pspace_triple.unwrap();
        assert_eq!(t3.semigroup.name(s), "[2,3,3]");
        assert_eq!(t3.semigroup.name(t), "[3,1,3]");
        assert_eq!(t3.semigroup.name(n), "[1,2,3]");
        // the canonical triple satisfies its defining equations
        let sg = &t3.semigroup;
        assert_eq!(sg.mul(sg.mul(s, t), s), s);
        assert_eq!(sg.mul(s, n), s);
        assert_eq!(sg.mul(t, n), t);
    }

    #[test]
    fn symmetric_inverse_counts_partial_injections() {
        assert_eq!(entry("symmetric_inverse:1").unwrap().semigroup.size(), 2);
        assert_eq!(entry("symmetric_inverse:2").unwrap().semigroup.size(), 7);
        assert_eq!(entry("symmetric_inverse:3").unwrap().semigroup.size(), 34);
        let i2 = entry("symmetric_inverse:2").unwrap();
        let (s, t, n) = i2.pspace_triple.unwrap();
        assert_eq!(i2.semigroup.name(s), "[2,-]");
        assert_eq!(i2.semigroup.name(t), "[-,1]");
        assert_eq!(i2.semigroup.name(n), "[1,2]");
    }

    #[test]
    fn matrix_semigroup_entries() {
        let m2 = entry("matrix_semigroup:2").unwrap();
        assert_eq!(m2.semigroup.size(), 16);
        let (s, t, n) = m2.pspace_triple.unwrap();
        assert_eq!(m2.semigroup.name(s), "[[0,1],[0,0]]");
        assert_eq!(m2.semigroup.name(t), "[[0,0],[1,0]]");
        assert_eq!(m2.semigroup.name(n), "[[1,0],[0,1]]");
        let sg = &m2.semigroup;
        assert_eq!(sg.mul(sg.mul(s, t), s), s);
        assert_eq!(entry("matrix_semigroup:3").unwrap().semigroup.size(), 81);
        assert!(entry("matrix_semigroup:4").is_err());
    }

    #[test]
    fn rees_matrix_parameters() {
        let e = entry("rees:10;01").unwrap();
        assert_eq!(e.semigroup.size(), 5);
        assert!(e.rees.is_some());
        let e1 = entry("rees_1:11;11").unwrap();
        assert_eq!(e1.semigroup.size(), 6);
        assert!(e1.rees.as_ref().unwrap().adjoins_identity());
        assert!(entry("rees:12").is_err());
        assert!(entry("bogus").is_err());
    }

    #[test]
    fn nine_element_group_example() {
        let e = entry("rees_z2").unwrap();
        assert_eq!(e.semigroup.size(), 9);
        assert!(e.pspace_triple.is_none());
        // [1,1,2]·[2,1,1] uses p(2,2) = c
        let sg = &e.semigroup;
        let x = sg.names().iter().position(|n| n == "[1,1,2]").unwrap();
        let y = sg.names().iter().position(|n| n == "[2,1,1]").unwrap();
        assert_eq!(sg.name(sg.mul(x, y)), "[1,c,1]");
    }
}
