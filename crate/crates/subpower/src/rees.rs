//! Combinatorial Rees matrix semigroups over a 0-1 sandwich matrix.
//!
//! For a matrix `P ∈ {0,1}^{Λ×I}` the semigroup `S_P` consists of the pairs
//! `I × Λ` plus a zero, with `[i,λ]·[j,μ] = [i,μ]` when `P(λ,j) = 1` and `0`
//! otherwise. Rows of `P` are indexed by Λ, columns by I; both are 0-based
//! internally and 1-based in display names.

use crate::error::{Error, Result};
use crate::semigroup::{AssocCheck, FiniteSemigroup};

/// A 0-1 sandwich matrix plus the identity-adjunction flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesStructure {
    rows: usize,
    cols: usize,
    matrix: Vec<bool>,
    adjoin_identity: bool,
}

/// An element of `S_P` (or `S_P¹`) in structural form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReesElement {
    /// `[i,λ]` with 0-based column `i ∈ I` and row `lambda ∈ Λ`.
    Pair { i: usize, lambda: usize },
    Zero,
    /// Only valid when the identity is adjoined.
    One,
}

/// A concrete witness that the 1-entries of `P` do not form a rectangle:
/// `P(row_a, col_a) = P(row_b, col_b) = 1` while `P(row_a, col_b) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockViolation {
    pub row_a: usize,
    pub col_a: usize,
    pub row_b: usize,
    pub col_b: usize,
}

impl ReesStructure {
    pub fn new(matrix: Vec<Vec<u8>>, adjoin_identity: bool) -> Result<Self> {
        let rows = matrix.len();
        if rows == 0 {
            return Err(Error::input("sandwich matrix must have at least one row"));
        }
        let cols = matrix[0].len();
        if cols == 0 {
            return Err(Error::input("sandwich matrix must have at least one column"));
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for row in &matrix {
            if row.len() != cols {
                return Err(Error::input("sandwich matrix rows have unequal lengths"));
            }
            for &e in row {
                match e {
                    0 => flat.push(false),
                    1 => flat.push(true),
                    _ => return Err(Error::input(format!("matrix entry {e} is not 0 or 1"))),
                }
            }
        }
        Ok(ReesStructure {
            rows,
            cols,
            matrix: flat,
            adjoin_identity,
        })
    }

    /// Number of rows, |Λ|.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, |I|.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn adjoins_identity(&self) -> bool {
        self.adjoin_identity
    }

    /// Entry `P(λ, i)`.
    pub fn entry(&self, lambda: usize, i: usize) -> bool {
        self.matrix[lambda * self.cols + i]
    }

    pub fn matrix_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|l| (0..self.cols).map(|i| self.entry(l, i) as u8).collect())
            .collect()
    }

    /// Element count of the generated semigroup.
    pub fn element_count(&self) -> usize {
        self.rows * self.cols + 1 + self.adjoin_identity as usize
    }

    /// Returns `(J, Δ)` — the columns and rows containing a 1 — when the
    /// 1-entries are exactly the rectangle `Δ × J`; absent otherwise.
    pub fn one_block(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let j: Vec<usize> = (0..self.cols)
            .filter(|&i| (0..self.rows).any(|l| self.entry(l, i)))
            .collect();
        let delta: Vec<usize> = (0..self.rows)
            .filter(|&l| (0..self.cols).any(|i| self.entry(l, i)))
            .collect();
        for &l in &delta {
            for &i in &j {
                if !self.entry(l, i) {
                    return None;
                }
            }
        }
        Some((j, delta))
    }

    /// First pattern (in row-major scan of the 0-entry) with
    /// `P(row_a, col_a) = P(row_b, col_b) = 1` and `P(row_b, col_a) = 0`.
    /// Present exactly when the matrix does not have one block.
    pub fn block_violation(&self) -> Option<BlockViolation> {
        // a 0 at (μ, i) where row μ and column i both contain a 1
        for mu in 0..self.rows {
            for i in 0..self.cols {
                if self.entry(mu, i) {
                    continue;
                }
                let Some(lambda) = (0..self.rows).find(|&l| self.entry(l, i)) else {
                    continue;
                };
                if let Some(jcol) = (0..self.cols).find(|&jc| self.entry(mu, jc)) {
                    return Some(BlockViolation {
                        row_a: lambda,
                        col_a: i,
                        row_b: mu,
                        col_b: jcol,
                    });
                }
            }
        }
        None
    }

    /// Like [`block_violation`](Self::block_violation) but with the 0 in the
    /// first row of the pattern: `P(row_a, col_a) = P(row_b, col_b) = 1` and
    /// `P(row_a, col_b) = 0`.
    pub fn block_violation_transposed(&self) -> Option<BlockViolation> {
        let t = ReesStructure {
            rows: self.cols,
            cols: self.rows,
            matrix: {
                let mut m = vec![false; self.matrix.len()];
                for l in 0..self.rows {
                    for i in 0..self.cols {
                        m[i * self.rows + l] = self.entry(l, i);
                    }
                }
                m
            },
            adjoin_identity: self.adjoin_identity,
        };
        let v = t.block_violation()?;
        Some(BlockViolation {
            row_a: v.col_a,
            col_a: v.row_a,
            row_b: v.col_b,
            col_b: v.row_b,
        })
    }

    /// True iff every row and every column contains a 1, which is exactly
    /// when `S_P` is a finite combinatorial 0-simple semigroup.
    pub fn is_zero_simple_matrix(&self) -> bool {
        (0..self.rows).all(|l| (0..self.cols).any(|i| self.entry(l, i)))
            && (0..self.cols).all(|i| (0..self.rows).any(|l| self.entry(l, i)))
    }

    /// True iff some entry of `P` is 0. For 0-simple matrices this is
    /// equivalent to the existence of zero divisors in `S_P`, and to the
    /// matrix not having one block.
    pub fn has_zero_divisors(&self) -> bool {
        self.matrix.iter().any(|&e| !e)
    }

    /// Index of a structural element in the generated table: pairs come in
    /// row-major `(i, λ)` order, then 0, then (when flagged) 1.
    pub fn element_index(&self, e: ReesElement) -> Result<usize> {
        match e {
            ReesElement::Pair { i, lambda } => {
                if i >= self.cols || lambda >= self.rows {
                    return Err(Error::input(format!(
                        "pair [{},{}] out of range for a {}x{} matrix",
                        i + 1,
                        lambda + 1,
                        self.rows,
                        self.cols
                    )));
                }
                Ok(i * self.rows + lambda)
            }
            ReesElement::Zero => Ok(self.rows * self.cols),
            ReesElement::One => {
                if self.adjoin_identity {
                    Ok(self.rows * self.cols + 1)
                } else {
                    Err(Error::input("no identity adjoined"))
                }
            }
        }
    }

    /// Structural form of a table index.
    pub fn element_at(&self, idx: usize) -> Result<ReesElement> {
        let pairs = self.rows * self.cols;
        if idx < pairs {
            Ok(ReesElement::Pair {
                i: idx / self.rows,
                lambda: idx % self.rows,
            })
        } else if idx == pairs {
            Ok(ReesElement::Zero)
        } else if idx == pairs + 1 && self.adjoin_identity {
            Ok(ReesElement::One)
        } else {
            Err(Error::input(format!("element index {idx} out of range")))
        }
    }

    /// Product of a nonempty factor list in O(length) time, using the
    /// adjacent-pair structure of products in `S_P`: after dropping
    /// identity factors, the product is 0 exactly when some adjacent pair
    /// multiplies to 0, and otherwise keeps the first factor's column and
    /// the last factor's row.
    pub fn product(&self, factors: &[ReesElement]) -> Result<ReesElement> {
        if factors.is_empty() {
            return Err(Error::input("empty factor list"));
        }
        for &f in factors {
            // validate indices (and the use of One without an identity)
            self.element_index(f)?;
        }
        let core: Vec<ReesElement> = factors
            .iter()
            .copied()
            .filter(|f| !matches!(f, ReesElement::One))
            .collect();
        if core.is_empty() {
            return Ok(ReesElement::One);
        }
        for w in core.windows(2) {
            match (w[0], w[1]) {
                (ReesElement::Zero, _) | (_, ReesElement::Zero) => return Ok(ReesElement::Zero),
                (ReesElement::Pair { lambda, .. }, ReesElement::Pair { i, .. }) => {
                    if !self.entry(lambda, i) {
                        return Ok(ReesElement::Zero);
                    }
                }
                _ => unreachable!(),
            }
        }
        match (core[0], core[core.len() - 1]) {
            (ReesElement::Pair { i, .. }, ReesElement::Pair { lambda, .. }) => {
                Ok(ReesElement::Pair { i, lambda })
            }
            (ReesElement::Zero, _) | (_, ReesElement::Zero) => Ok(ReesElement::Zero),
            _ => unreachable!(),
        }
    }

    /// Builds the full multiplication table. Element naming follows the
    /// display convention `[i,λ]` with 1-based indices, then `"0"`, then
    /// `"1"` when the identity is adjoined.
    #[allow(clippy::needless_range_loop)] // indices are the elements
    pub fn build(&self) -> Result<FiniteSemigroup> {
        let pairs = self.rows * self.cols;
        let zero = pairs;
        let size = pairs + 1;
        let mut rows_out = vec![vec![zero; size]; size];
        for a in 0..pairs {
            let (ia, la) = (a / self.rows, a % self.rows);
            for b in 0..pairs {
                let (ib, lb) = (b / self.rows, b % self.rows);
                rows_out[a][b] = if self.entry(la, ib) {
                    ia * self.rows + lb
                } else {
                    zero
                };
            }
        }
        let mut names: Vec<String> = (0..pairs)
            .map(|a| format!("[{},{}]", a / self.rows + 1, a % self.rows + 1))
            .collect();
        names.push("0".to_string());
        let sg = FiniteSemigroup::from_rows(&rows_out, Some(names), AssocCheck::Auto)?;
        Ok(if self.adjoin_identity {
            sg.adjoin_identity()
        } else {
            sg
        })
    }
}
