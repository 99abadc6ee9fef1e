//! Finite semigroups as dense multiplication tables.
//!
//! Elements are integer indices `0..size`; names are display metadata only.
//! The table is stored row-major with the row index being the left factor,
//! so `table[a * size + b]` is the product `a · b`.

use crate::error::{Error, Result};

/// How much associativity checking a constructor performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCheck {
    /// Check exhaustively when `size <= 64`, skip above. The cubic check on
    /// a 256-element table is feasible but not free; callers opt in.
    Auto,
    /// Always run the O(size³) check.
    Force,
    /// Trust the caller.
    Skip,
}

/// A finite semigroup given by its full multiplication table.
///
/// Immutable after construction; all operations are pure and safe to call
/// from several threads at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
    names: Vec<String>,
    identity: Option<usize>,
    zero: Option<usize>,
}

/// Largest supported element count. Keeps closure-state packing sound.
pub const MAX_ELEMENTS: usize = 1 << 16;

impl FiniteSemigroup {
    /// Builds a semigroup from table rows, detecting identity and zero.
    /// Associativity is verified for sizes up to 64 (`AssocCheck::Auto`).
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_rows(rows, None, AssocCheck::Auto)
    }

    /// Builds a semigroup from table rows with explicit names and
    /// associativity-checking mode.
    pub fn from_rows(
        rows: &[Vec<usize>],
        names: Option<Vec<String>>,
        check: AssocCheck,
    ) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::input("semigroup must have at least one element"));
        }
        if size > MAX_ELEMENTS {
            return Err(Error::input(format!(
                "semigroup too large: {size} elements (max {MAX_ELEMENTS})"
            )));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::input(format!(
                    "table row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &e in row {
                if e >= size {
                    return Err(Error::input(format!(
                        "table entry {e} in row {i} out of range 0..{size}"
                    )));
                }
                table.push(e);
            }
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != size {
                    return Err(Error::input(format!(
                        "{} names given for {size} elements",
                        ns.len()
                    )));
                }
                ns
            }
            None => (0..size).map(|i| format!("s{i}")).collect(),
        };
        let mut sg = FiniteSemigroup {
            size,
            table,
            names,
            identity: None,
            zero: None,
        };
        sg.identity = sg.detect_identity();
        sg.zero = sg.detect_zero();
        match check {
            AssocCheck::Auto if size <= 64 => sg.verify_associativity()?,
            AssocCheck::Force => sg.verify_associativity()?,
            _ => {}
        }
        Ok(sg)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Product of two elements. Indices must be in range.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Checked product; rejects out-of-range indices.
    pub fn multiply(&self, a: usize, b: usize) -> Result<usize> {
        if a >= self.size || b >= self.size {
            return Err(Error::input(format!(
                "element index out of range: {a}, {b} (size {})",
                self.size
            )));
        }
        Ok(self.mul(a, b))
    }

    /// Left-to-right product of a nonempty element sequence.
    pub fn product(&self, elems: &[usize]) -> Result<usize> {
        let (&first, rest) = elems
            .split_first()
            .ok_or_else(|| Error::input("empty product"))?;
        let mut acc = first;
        if acc >= self.size {
            return Err(Error::input(format!("element index {acc} out of range")));
        }
        for &e in rest {
            acc = self.multiply(acc, e)?;
        }
        Ok(acc)
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    fn detect_identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    fn detect_zero(&self) -> Option<usize> {
        (0..self.size).find(|&z| (0..self.size).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// Exhaustive O(size³) associativity check.
    pub fn verify_associativity(&self) -> Result<()> {
        for a in 0..self.size {
            for b in 0..self.size {
                let ab = self.mul(a, b);
                for c in 0..self.size {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::input(format!(
                            "table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The cyclic subsemigroup `{x, x², …}` in order of first appearance,
    /// up to the first repetition.
    pub fn cyclic_subsemigroup(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        let mut cur = x;
        while !seen[cur] {
            seen[cur] = true;
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out
    }

    /// The unique idempotent of the cyclic subsemigroup generated by `x`.
    pub fn idempotent_power(&self, x: usize) -> usize {
        for p in self.cyclic_subsemigroup(x) {
            if self.is_idempotent(p) {
                return p;
            }
        }
        // every finite cyclic subsemigroup contains an idempotent
        unreachable!("cyclic subsemigroup without idempotent")
    }

    /// Returns some `u` with `s·u·s = s` if one exists (first in index order).
    pub fn is_regular(&self, s: usize) -> Option<usize> {
        (0..self.size).find(|&u| self.mul(self.mul(s, u), s) == s)
    }

    /// Adjoins a fresh two-sided identity as the last element, regardless of
    /// whether the semigroup already has one.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.size;
        let size = n + 1;
        let mut table = vec![0usize; size * size];
        for a in 0..n {
            for b in 0..n {
                table[a * size + b] = self.mul(a, b);
            }
        }
        for x in 0..size {
            table[x * size + n] = x;
            table[n * size + x] = x;
        }
        let mut names = self.names.clone();
        names.push("1".to_string());
        // a zero of S stays a zero of S¹; the old identity loses its status
        FiniteSemigroup {
            size,
            table,
            names,
            identity: Some(n),
            zero: self.zero,
        }
    }

    /// Direct product with componentwise multiplication. The pair `(a, b)`
    /// gets index `a * other.size + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> Result<FiniteSemigroup> {
        let size = self
            .size
            .checked_mul(other.size)
            .filter(|&s| s <= MAX_ELEMENTS)
            .ok_or_else(|| Error::input("direct product too large"))?;
        let mut table = vec![0usize; size * size];
        for a1 in 0..self.size {
            for b1 in 0..other.size {
                let p = a1 * other.size + b1;
                for a2 in 0..self.size {
                    let a = self.mul(a1, a2);
                    for b2 in 0..other.size {
                        let q = a2 * other.size + b2;
                        table[p * size + q] = a * other.size + other.mul(b1, b2);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(size);
        for a in 0..self.size {
            for b in 0..other.size {
                names.push(format!("({},{})", self.names[a], other.names[b]));
            }
        }
        let identity = match (self.identity, other.identity) {
            (Some(e1), Some(e2)) => Some(e1 * other.size + e2),
            _ => None,
        };
        let zero = match (self.zero, other.zero) {
            (Some(z1), Some(z2)) => Some(z1 * other.size + z2),
            _ => None,
        };
        Ok(FiniteSemigroup {
            size,
            table,
            names,
            identity,
            zero,
        })
    }

    /// Index of `(a, b)` in `self.direct_product(other)`.
    pub fn pair_index(&self, other: &FiniteSemigroup, a: usize, b: usize) -> usize {
        debug_assert!(a < self.size && b < other.size);
        a * other.size + b
    }

    /// Table rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| self.table[a * self.size..(a + 1) * self.size].to_vec())
            .collect()
    }
}

/// An element of a direct power `S^n`, multiplied coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerTuple {
    coords: Vec<usize>,
}

impl PowerTuple {
    pub fn new(coords: Vec<usize>, ambient: &FiniteSemigroup) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::input("power tuple must have at least one coordinate"));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= ambient.size()) {
            return Err(Error::input(format!(
                "tuple coordinate {c} out of range 0..{}",
                ambient.size()
            )));
        }
        Ok(PowerTuple { coords })
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> usize {
        self.coords[i]
    }
}

/// Coordinatewise product of two tuples of equal length.
pub fn tuple_multiply(
    ambient: &FiniteSemigroup,
    a: &PowerTuple,
    b: &PowerTuple,
) -> Result<PowerTuple> {
    if a.n() != b.n() {
        return Err(Error::input(format!(
            "tuple length mismatch: {} vs {}",
            a.n(),
            b.n()
        )));
    }
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(&x, &y)| ambient.multiply(x, y))
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerTuple { coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn b2() -> FiniteSemigroup {
        catalog::entry("brandt_b2").unwrap().semigroup
    }

    // B₂ element indices with the row-major pair order: [1,1]=0, [1,2]=1,
    // [2,1]=2, [2,2]=3, 0=4.
    const P11: usize = 0;
    const P12: usize = 1;
    const P21: usize = 2;
    const P22: usize = 3;
    const Z: usize = 4;

    #[test]
    fn multiply_in_b2() {
        let s = b2();
        assert_eq!(s.multiply(P12, P21).unwrap(), P11);
        assert_eq!(s.multiply(P12, P12).unwrap(), Z);
        for x in 0..s.size() {
            assert_eq!(s.mul(Z, x), Z);
            assert_eq!(s.mul(x, Z), Z);
        }
        assert!(s.multiply(5, 0).is_err());
    }

    #[test]
    fn tuple_multiply_coordinatewise() {
        let s = b2();
        let a = PowerTuple::new(vec![P12, P21], &s).unwrap();
        let b = PowerTuple::new(vec![P21, P12], &s).unwrap();
        let ab = tuple_multiply(&s, &a, &b).unwrap();
        assert_eq!(ab.coords(), &[P11, P22]);

        let e = PowerTuple::new(vec![P11, P11], &s).unwrap();
        let ee = tuple_multiply(&s, &e, &e).unwrap();
        assert_eq!(ee, e);

        let c = PowerTuple::new(vec![P11, P11, P11], &s).unwrap();
        assert!(tuple_multiply(&s, &a, &c).is_err());
    }

    #[test]
    fn idempotent_power_in_b2() {
        let s = b2();
        assert_eq!(s.idempotent_power(P11), P11);
        assert_eq!(s.idempotent_power(P12), Z);
        assert_eq!(s.cyclic_subsemigroup(P12), vec![P12, Z]);
        assert_eq!(s.cyclic_subsemigroup(P11), vec![P11]);
    }

    #[test]
    fn cyclic_subsemigroup_of_z2() {
        // two-element group {1, c} with c² = 1
        let z2 = FiniteSemigroup::from_rows(
            &[vec![0, 1], vec![1, 0]],
            Some(vec!["1".into(), "c".into()]),
            AssocCheck::Force,
        )
        .unwrap();
        assert_eq!(z2.cyclic_subsemigroup(1), vec![1, 0]);
        assert_eq!(z2.identity(), Some(0));
    }

    #[test]
    fn regularity_in_b2_and_null() {
        let s = b2();
        assert_eq!(s.is_regular(P11), Some(P11));
        assert_eq!(s.is_regular(P12), Some(P21));
        // null semigroup: all products are 0
        let null = FiniteSemigroup::new(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(null.is_regular(1), None);
        assert_eq!(null.is_regular(0), Some(0));
    }

    #[test]
    fn adjoin_identity_always_adds_fresh_element() {
        let s = b2();
        let s1 = s.adjoin_identity();
        assert_eq!(s1.size(), 6);
        let e = s1.identity().unwrap();
        assert_eq!(e, 5);
        for x in 0..s1.size() {
            assert_eq!(s1.mul(e, x), x);
            assert_eq!(s1.mul(x, e), x);
        }
        // adjoining twice: the outer element is the identity of the result
        let s2 = s1.adjoin_identity();
        assert_eq!(s2.size(), 7);
        assert_eq!(s2.identity(), Some(6));
        // zero survives identity adjunction
        assert_eq!(s1.zero(), Some(Z));
    }

    #[test]
    fn direct_product_projections_recover_factors() {
        let s = b2();
        assert_eq!(s.direct_product(&s).unwrap().size(), 25);
        let t = s.adjoin_identity();
        let p = s.direct_product(&t).unwrap();
        assert_eq!(p.size(), 30);
        for a1 in 0..s.size() {
            for b1 in 0..t.size() {
                for a2 in 0..s.size() {
                    for b2 in 0..t.size() {
                        let prod = p.mul(s.pair_index(&t, a1, b1), s.pair_index(&t, a2, b2));
                        assert_eq!(prod / t.size(), s.mul(a1, a2));
                        assert_eq!(prod % t.size(), t.mul(b1, b2));
                    }
                }
            }
        }
        // both factors monoids => pair of identities is the identity
        let m = t.direct_product(&t).unwrap();
        assert_eq!(m.identity(), Some(t.pair_index(&t, 5, 5)));
        assert_eq!(m.size(), 36);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteSemigroup::new(&[]).is_err());
        assert!(FiniteSemigroup::new(&[vec![0, 1], vec![0]]).is_err());
        assert!(FiniteSemigroup::new(&[vec![2]]).is_err());
        // non-associative: x·x = y, y·y = x, x·y = x, y·x = y
        let bad = FiniteSemigroup::new(&[vec![1, 0], vec![1, 0]]);
        assert!(bad.is_err());
    }
}
