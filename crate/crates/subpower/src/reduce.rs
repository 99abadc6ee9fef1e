//! Hardness reductions realized as concrete SMP instances, plus brute-force
//! evaluators for the source problems so the equivalences are testable
//! end to end.
//!
//! The SAT reduction turns clauses `C₁, …, C_m` over variables `x₁, …, x_k`
//! into `2k` generators of `S^{k+m}` built from an NP-hardness triple. The
//! Q3SAT reduction turns an alternating `∀x₁∃y₁ … ∀x_n∃y_n` formula into
//! `1 + 5n + 3m` generators of `S^{3n+m+1}` built from a
//! PSPACE-completeness triple; when the triple only satisfies the weaker
//! conditions, the construction runs over the direct square with the
//! paired elements from [`pair_lift`].

use crate::classify::hardness_idempotents;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::smp::SmpInstance;

/// A CNF formula over variables `1..=var_count`; literals are signed
/// variable numbers and every variable must occur somewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if var_count == 0 {
            return Err(Error::input("formula needs at least one variable"));
        }
        let mut seen = vec![false; var_count + 1];
        let mut normalized = Vec::with_capacity(clauses.len());
        for clause in clauses {
            let mut c = clause;
            c.sort_unstable();
            c.dedup();
            for &lit in &c {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > var_count {
                    return Err(Error::input(format!("literal {lit} out of range")));
                }
                seen[var] = true;
            }
            normalized.push(c);
        }
        if let Some(missing) = (1..=var_count).find(|&v| !seen[v]) {
            return Err(Error::input(format!(
                "variable x{missing} occurs in no clause; drop it or renumber"
            )));
        }
        Ok(CnfFormula {
            var_count,
            clauses: normalized,
        })
    }

    /// Parses the DIMACS cnf format: a `p cnf VARS CLAUSES` header followed
    /// by 0-terminated clauses; `c` lines are comments.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(Error::input(format!("bad DIMACS header: {line}")));
                }
                let vars = parts[2]
                    .parse()
                    .map_err(|_| Error::input("bad variable count in DIMACS header"))?;
                let cls = parts[3]
                    .parse()
                    .map_err(|_| Error::input("bad clause count in DIMACS header"))?;
                header = Some((vars, cls));
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::input(format!("bad DIMACS token {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        let (vars, _) = header.ok_or_else(|| Error::input("missing DIMACS header"))?;
        CnfFormula::new(vars, clauses)
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Evaluates under a full assignment (`assignment[v-1]` is `x_v`).
    pub fn eval(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.var_count, "assignment must cover all variables");
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let v = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    /// First satisfying assignment in lexicographic order (false < true),
    /// by brute force.
    pub fn brute_force_sat(&self) -> Option<Vec<bool>> {
        let k = self.var_count;
        assert!(k <= 24, "brute force capped at 24 variables");
        (0..1u32 << k)
            .map(|bits| (0..k).map(|j| bits >> j & 1 == 1).collect::<Vec<bool>>())
            .find(|a| self.eval(a))
    }
}

/// A quantified formula `∀x₁∃y₁ … ∀x_n∃y_n (⋁C₁) ∧ … ∧ (⋁C_m)` with
/// exactly three literals per clause (repetition allowed). Literals with
/// absolute value in `1..=n` refer to the universal `x` variables, those in
/// `n+1..=2n` to the existential `y` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q3SatFormula {
    pair_count: usize,
    clauses: Vec<[i32; 3]>,
}

impl Q3SatFormula {
    pub fn new(pair_count: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        if pair_count == 0 {
            return Err(Error::input("formula needs at least one quantifier pair"));
        }
        for clause in &clauses {
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > 2 * pair_count {
                    return Err(Error::input(format!("literal {lit} out of range")));
                }
            }
        }
        Ok(Q3SatFormula {
            pair_count,
            clauses,
        })
    }

    /// Parses the line format `q3sat N M` followed by `M` lines of three
    /// signed integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('c'));
        let header = lines.next().ok_or_else(|| Error::input("empty q3sat input"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "q3sat" {
            return Err(Error::input(format!("bad q3sat header: {header}")));
        }
        let n: usize = parts[1]
            .parse()
            .map_err(|_| Error::input("bad pair count in q3sat header"))?;
        let m: usize = parts[2]
            .parse()
            .map_err(|_| Error::input("bad clause count in q3sat header"))?;
        let mut clauses = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::input("q3sat input ends before all clauses were read"))?;
            let lits: Vec<i32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::input(format!("bad literal {t:?}"))))
                .collect::<Result<_>>()?;
            if lits.len() != 3 {
                return Err(Error::input(format!(
                    "clause {line:?} must have exactly three literals"
                )));
            }
            clauses.push([lits[0], lits[1], lits[2]]);
        }
        Q3SatFormula::new(n, clauses)
    }

    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Re-embeds the formula with `pairs >= pair_count` quantifier pairs;
    /// the added variables occur in no clause. Existential literals are
    /// renumbered to the new offset.
    pub fn pad_pairs(&self, pairs: usize) -> Result<Q3SatFormula> {
        if pairs < self.pair_count {
            return Err(Error::input("cannot shrink the quantifier prefix"));
        }
        let old_n = self.pair_count as i32;
        let shift = (pairs - self.pair_count) as i32;
        let clauses = self
            .clauses
            .iter()
            .map(|c| {
                c.map(|lit| {
                    if lit.abs() > old_n {
                        lit + lit.signum() * shift
                    } else {
                        lit
                    }
                })
            })
            .collect();
        Q3SatFormula::new(pairs, clauses)
    }

    fn literal_holds(&self, lit: i32, xs: &[bool], ys: &[bool]) -> bool {
        let var = lit.unsigned_abs() as usize;
        let value = if var <= self.pair_count {
            xs[var - 1]
        } else {
            ys[var - self.pair_count - 1]
        };
        if lit > 0 {
            value
        } else {
            !value
        }
    }

    fn matrix_holds(&self, xs: &[bool], ys: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| self.literal_holds(lit, xs, ys)))
    }

    /// Game-tree evaluation of the alternating quantifier prefix;
    /// exponential in the pair count, intended for small instances.
    pub fn eval(&self) -> bool {
        let n = self.pair_count;
        assert!(n <= 16, "game-tree evaluation capped at 16 pairs");
        let mut xs = vec![false; n];
        let mut ys = vec![false; n];
        self.eval_from(0, &mut xs, &mut ys)
    }

    fn eval_from(&self, depth: usize, xs: &mut Vec<bool>, ys: &mut Vec<bool>) -> bool {
        if depth == self.pair_count {
            return self.matrix_holds(xs, ys);
        }
        for x in [false, true] {
            xs[depth] = x;
            let mut ok = false;
            for y in [false, true] {
                ys[depth] = y;
                if self.eval_from(depth + 1, xs, ys) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    /// Searches for winning Skolem functions: for each `i`, a choice of
    /// `y_i` depending on `x_1..x_i` making every clause true under every
    /// universal assignment. Returns one strategy table per pair; table `i`
    /// is indexed by the prefix `x_1..x_{i+1}` packed with `x_{q+1}` at bit
    /// `q`.
    pub fn find_strategy(&self) -> Option<Vec<Vec<bool>>> {
        let n = self.pair_count;
        assert!(n <= 3, "strategy search capped at 3 pairs");
        let table_bits: Vec<usize> = (1..=n).map(|i| 1usize << i).collect();
        let total: usize = table_bits.iter().sum();
        'outer: for code in 0..1u64 << total {
            let mut tables: Vec<Vec<bool>> = Vec::with_capacity(n);
            let mut off = 0;
            for &tb in &table_bits {
                tables.push((0..tb).map(|b| code >> (off + b) & 1 == 1).collect());
                off += tb;
            }
            for xbits in 0..1usize << n {
                let xs: Vec<bool> = (0..n).map(|i| xbits >> i & 1 == 1).collect();
                let ys: Vec<bool> = (0..n)
                    .map(|i| {
                        let prefix = xbits & ((1 << (i + 1)) - 1);
                        tables[i][prefix]
                    })
                    .collect();
                if !self.matrix_holds(&xs, &ys) {
                    continue 'outer;
                }
            }
            return Some(tables);
        }
        None
    }
}

/// Checks the conditions under which the SAT reduction applies:
/// `rs = st = s` and `s` generates no group.
pub fn nphard_triple_conditions(sg: &FiniteSemigroup, r: usize, s: usize, t: usize) -> bool {
    let greens = sg.greens();
    r < sg.size()
        && s < sg.size()
        && t < sg.size()
        && sg.mul(r, s) == s
        && sg.mul(s, t) == s
        && !sg.generates_group(&greens, s)
}

/// Builds the SMP instance whose membership answer equals satisfiability
/// of `formula`. Generators come in the order
/// `a₁⁰, …, a_k⁰, a₁¹, …, a_k¹`, each of length `k+m`.
pub fn sat_to_smp(
    sg: &FiniteSemigroup,
    triple: (usize, usize, usize),
    formula: &CnfFormula,
) -> Result<SmpInstance> {
    let (r, s, t) = triple;
    if !nphard_triple_conditions(sg, r, s, t) {
        return Err(Error::input(
            "triple must satisfy rs = st = s with s generating no group",
        ));
    }
    let frame = hardness_idempotents(sg, r, s, t)?;
    let (e, f, g) = (frame.e, frame.f, frame.g);
    let k = formula.var_count();
    let m = formula.clauses().len();

    let mut generators = Vec::with_capacity(2 * k);
    for z in 0..2u8 {
        for j in 1..=k {
            let mut coords = Vec::with_capacity(k + m);
            for i in 1..=k {
                coords.push(match i.cmp(&j) {
                    std::cmp::Ordering::Less => f,
                    std::cmp::Ordering::Equal => s,
                    std::cmp::Ordering::Greater => e,
                });
            }
            let watched: i32 = if z == 0 { -(j as i32) } else { j as i32 };
            for clause in formula.clauses() {
                coords.push(if clause.contains(&watched) { g } else { e });
            }
            generators.push(coords);
        }
    }
    let mut target = vec![s; k];
    target.extend(std::iter::repeat_n(g, m));
    SmpInstance::from_coords(sg.clone(), &generators, target)
}

/// Generator index of `a_j^z` in [`sat_to_smp`]'s ordering (`j` is 1-based).
pub fn sat_generator_index(k: usize, j: usize, z: bool) -> usize {
    (z as usize) * k + (j - 1)
}

/// The witness word `a₁^{z₁} ⋯ a_k^{z_k}` for a satisfying assignment.
pub fn sat_witness_word(k: usize, assignment: &[bool]) -> Vec<usize> {
    (1..=k)
        .map(|j| sat_generator_index(k, j, assignment[j - 1]))
        .collect()
}

/// Checks the conditions for the PSPACE-completeness construction on the
/// semigroup itself: `sts = s`, `s` non-group, `sn = s`, `tn = t`.
pub fn pspace_triple_conditions(sg: &FiniteSemigroup, s: usize, t: usize, n: usize) -> bool {
    let greens = sg.greens();
    s < sg.size()
        && t < sg.size()
        && n < sg.size()
        && sg.mul(sg.mul(s, t), s) == s
        && !sg.generates_group(&greens, s)
        && sg.mul(s, n) == s
        && sg.mul(t, n) == t
}

/// The strengthened conditions under which the Q3SAT construction runs
/// directly: `sts = s`, `tst = t`, `s²` and `t²` strictly J-below `s`,
/// `sn = s`, `tn = t`.
pub fn q3sat_direct_conditions(sg: &FiniteSemigroup, s: usize, t: usize, n: usize) -> bool {
    if s >= sg.size() || t >= sg.size() || n >= sg.size() {
        return false;
    }
    let greens = sg.greens();
    let st = sg.mul(s, t);
    let ts = sg.mul(t, s);
    sg.mul(st, s) == s
        && sg.mul(ts, t) == t
        && greens.j_lt(sg.mul(s, s), s)
        && greens.j_lt(sg.mul(t, t), s)
        && sg.mul(s, n) == s
        && sg.mul(t, n) == t
}

/// Lifts a triple satisfying [`pspace_triple_conditions`] to the direct
/// square, where `s' = (s, tst)`, `t' = (tst, s)`, `n' = (n, n)` satisfy
/// the strengthened conditions of [`q3sat_direct_conditions`]. All five are
/// re-verified on the square.
pub fn pair_lift(
    sg: &FiniteSemigroup,
    triple: (usize, usize, usize),
) -> Result<(FiniteSemigroup, (usize, usize, usize))> {
    let (s, t, n) = triple;
    if !pspace_triple_conditions(sg, s, t, n) {
        return Err(Error::input(
            "triple must satisfy sts = s, s non-group, sn = s, tn = t",
        ));
    }
    let square = sg.direct_product(sg)?;
    let tst = sg.mul(sg.mul(t, s), t);
    let s2 = sg.pair_index(sg, s, tst);
    let t2 = sg.pair_index(sg, tst, s);
    let n2 = sg.pair_index(sg, n, n);
    if !q3sat_direct_conditions(&square, s2, t2, n2) {
        return Err(Error::input(
            "lifted triple fails the strengthened conditions on the square",
        ));
    }
    Ok((square, (s2, t2, n2)))
}

/// Generator-index layout of the Q3SAT instance: `a`, then `b_j`, then the
/// `c_j^+`, `c_j^-`, `c_j^0` blocks, then `d_{jk}` grouped by clause, then
/// `e_j`. All of `j` are 1-based.
#[derive(Debug, Clone, Copy)]
pub struct Q3satLayout {
    pub n: usize,
    pub m: usize,
}

impl Q3satLayout {
    pub fn a(&self) -> usize {
        0
    }
    pub fn b(&self, j: usize) -> usize {
        j // 1..=n
    }
    pub fn c_plus(&self, j: usize) -> usize {
        self.n + j
    }
    pub fn c_minus(&self, j: usize) -> usize {
        2 * self.n + j
    }
    pub fn c_zero(&self, j: usize) -> usize {
        3 * self.n + j
    }
    pub fn d(&self, j: usize, k: usize) -> usize {
        4 * self.n + 1 + (j - 1) * 3 + (k - 1)
    }
    pub fn e(&self, j: usize) -> usize {
        4 * self.n + 3 * self.m + j
    }
    pub fn generator_count(&self) -> usize {
        1 + 5 * self.n + 3 * self.m
    }
    pub fn power(&self) -> usize {
        3 * self.n + self.m + 1
    }
}

/// Builds the SMP instance whose membership answer equals the truth of the
/// quantified formula. With `lift` the construction runs over the direct
/// square via [`pair_lift`]; otherwise the triple must satisfy
/// [`q3sat_direct_conditions`] on `sg` itself.
pub fn q3sat_to_smp(
    sg: &FiniteSemigroup,
    triple: (usize, usize, usize),
    formula: &Q3SatFormula,
    lift: bool,
) -> Result<SmpInstance> {
    let (ambient, (s, t, nn)) = if lift {
        pair_lift(sg, triple)?
    } else {
        let (s, t, nn) = triple;
        if !q3sat_direct_conditions(sg, s, t, nn) {
            return Err(Error::input(
                "triple fails the strengthened conditions; run with the pair lift",
            ));
        }
        (sg.clone(), triple)
    };
    let n = formula.pair_count();
    let m = formula.clause_count();
    let layout = Q3satLayout { n, m };
    let len = layout.power();
    let st = ambient.mul(s, t);
    let ts = ambient.mul(t, s);

    // positions are 1-based in the comments below; vectors are 0-based
    let mut generators: Vec<Vec<usize>> = Vec::with_capacity(layout.generator_count());

    // a: every coordinate s
    generators.push(vec![s; len]);

    // b_j flips x_j to true and resets x_{j+1}.. and the control block
    for j in 1..=n {
        let mut v = vec![nn; len];
        for (i, slot) in v.iter_mut().enumerate().take(n) {
            let i = i + 1;
            *slot = match i.cmp(&j) {
                std::cmp::Ordering::Less => nn,
                std::cmp::Ordering::Equal => t,
                std::cmp::Ordering::Greater => s,
            };
        }
        // positions n+1..2n stay nn
        for l in 1..=n + m {
            v[2 * n + l - 1] = if l < j { st } else { s };
        }
        v[len - 1] = ts;
        generators.push(v);
    }

    // c_j^+ / c_j^- set y_j; c_j^0 leaves it alone; all advance control j
    let make_c = |j: usize, y_slot: Option<usize>| -> Vec<usize> {
        let mut v = vec![nn; len];
        if let Some(val) = y_slot {
            v[n + j - 1] = val;
        }
        v[2 * n + j - 1] = t;
        v[len - 1] = ts;
        v
    };
    for j in 1..=n {
        generators.push(make_c(j, Some(t)));
    }
    for j in 1..=n {
        generators.push(make_c(j, Some(s)));
    }
    for j in 1..=n {
        generators.push(make_c(j, None));
    }

    // d_{jk} evaluates the k-th literal of clause j; the variable positions
    // in the tuple coincide with the literal numbering
    for (j, clause) in formula.clauses().iter().enumerate() {
        let j = j + 1;
        for &lit in clause {
            let mut v = vec![nn; len];
            let var = lit.unsigned_abs() as usize;
            v[var - 1] = if lit > 0 { st } else { ts };
            for l in 1..=n {
                v[2 * n + l - 1] = st;
            }
            v[3 * n + j - 1] = t;
            v[len - 1] = ts;
            generators.push(v);
        }
    }

    // e_j finalizes y_j
    for j in 1..=n {
        let mut v = vec![nn; len];
        for l in 1..=n {
            v[l - 1] = st;
        }
        v[n + j - 1] = t;
        for l in 1..=m {
            v[3 * n + l - 1] = st;
        }
        v[len - 1] = ts;
        generators.push(v);
    }

    debug_assert_eq!(generators.len(), layout.generator_count());

    let mut target = vec![st; len];
    target[len - 1] = s;
    SmpInstance::from_coords(ambient, &generators, target)
}

/// The explicit membership witness read off a winning strategy: sweep all
/// universal assignments in lexicographic order (x₁ most significant),
/// applying `a` or the matching `b_j`, then the `c` updates for the
/// existential variables whose control positions were reset, then one `d`
/// per clause, and close with the `e_j` fixups.
pub fn q3sat_witness_word(formula: &Q3SatFormula, strategy: &[Vec<bool>]) -> Vec<usize> {
    let n = formula.pair_count();
    let m = formula.clause_count();
    let layout = Q3satLayout { n, m };
    // strategy tables index prefixes with x_{q+1} at bit q
    let y_for = |xs: &[bool], i: usize| -> bool {
        let prefix = xs[..=i]
            .iter()
            .enumerate()
            .fold(0usize, |acc, (q, &b)| acc | (b as usize) << q);
        strategy[i][prefix]
    };
    let mut word = Vec::new();
    let mut ys = vec![false; n];

    for step in 0..1usize << n {
        // x_n is the least significant coordinate of the sweep
        let xs: Vec<bool> = (0..n).map(|i| step >> (n - 1 - i) & 1 == 1).collect();
        let from_j = if step == 0 {
            word.push(layout.a());
            1
        } else {
            // the universal variable that flipped from 0 to 1 in this step
            let j = n - step.trailing_zeros() as usize;
            word.push(layout.b(j));
            j
        };
        for i in from_j..=n {
            let want = y_for(&xs, i - 1);
            // after `a` every coordinate starts at the 0 state
            let current = if step == 0 { false } else { ys[i - 1] };
            word.push(if want == current {
                layout.c_zero(i)
            } else if want {
                layout.c_plus(i)
            } else {
                layout.c_minus(i)
            });
            ys[i - 1] = want;
        }
        for (j, clause) in formula.clauses().iter().enumerate() {
            let k = clause
                .iter()
                .position(|&lit| formula.literal_holds(lit, &xs, &ys))
                .expect("strategy satisfies every clause");
            word.push(layout.d(j + 1, k + 1));
        }
    }
    for i in 1..=n {
        if !ys[i - 1] {
            word.push(layout.e(i));
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::smp::{check_witness, solve_closure, Witness};

    #[test]
    fn cnf_eval_examples() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        assert!(f.eval(&[true]));
        assert!(!f.eval(&[false]));

        let contradiction = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!contradiction.eval(&[true]));
        assert!(!contradiction.eval(&[false]));
        assert_eq!(contradiction.brute_force_sat(), None);

        let f2 = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
        assert!(f2.eval(&[true, false]));
        assert!(!f2.eval(&[false, true]));
        assert_eq!(f2.brute_force_sat(), Some(vec![false, false]));

        assert!(CnfFormula::new(2, vec![vec![1]]).is_err()); // x2 missing
        assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
    }

    #[test]
    fn dimacs_parsing() {
        let f = CnfFormula::from_dimacs("c comment\np cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert_eq!(f.var_count(), 2);
        assert_eq!(f.clauses().len(), 2);
        assert!(CnfFormula::from_dimacs("1 0").is_err());
    }

    #[test]
    fn q3sat_eval_examples() {
        // ∃y₁ always satisfiable
        let f = Q3SatFormula::new(1, vec![[2, 2, 2]]).unwrap();
        assert!(f.eval());
        // ∀x₁ x₁ fails at x₁ = 0
        let f = Q3SatFormula::new(1, vec![[1, 1, 1]]).unwrap();
        assert!(!f.eval());
        // y₁ := ¬x₁ satisfies both clauses
        let f = Q3SatFormula::new(1, vec![[1, 2, 2], [-1, -2, -2]]).unwrap();
        assert!(f.eval());
        let strategy = f.find_strategy().unwrap();
        assert!(strategy[0][0b0]);
        assert!(!strategy[0][0b1]);
    }

    #[test]
    fn q3sat_parse_and_pad() {
        let f = Q3SatFormula::parse("q3sat 1 2\n1 2 2\n-1 -2 -2\n").unwrap();
        assert_eq!(f.pair_count(), 1);
        assert_eq!(f.clause_count(), 2);
        let padded = f.pad_pairs(3).unwrap();
        assert_eq!(padded.pair_count(), 3);
        // y₁ was literal ±2, now ±4
        assert_eq!(padded.clauses()[0], [1, 4, 4]);
        assert_eq!(padded.eval(), f.eval());
        assert!(f.pad_pairs(0).is_err());
        assert!(Q3SatFormula::parse("q3sat 1 1\n1 2\n").is_err());
    }

    #[test]
    fn sat_reduction_matches_hand_computation() {
        let b2 = catalog::entry("brandt_b2").unwrap().semigroup;
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let inst = sat_to_smp(&b2, (0, 1, 3), &f).unwrap();
        assert_eq!(inst.generators().len(), 2);
        assert_eq!(inst.n(), 2);
        // a₁⁰ = ([1,2],[1,1]), a₁¹ = ([1,2],0), b = ([1,2],0)
        assert_eq!(inst.generators()[0].coords(), &[1, 0]);
        assert_eq!(inst.generators()[1].coords(), &[1, 4]);
        assert_eq!(inst.target().coords(), &[1, 4]);
        let rep = solve_closure(&inst, 10_000).unwrap();
        assert!(rep.member);
        assert_eq!(rep.witness.unwrap().word, vec![sat_generator_index(1, 1, true)]);
    }

    #[test]
    fn unsatisfiable_formula_is_non_member() {
        let b2 = catalog::entry("brandt_b2").unwrap().semigroup;
        let f = CnfFormula::new(1, vec![vec![-1], vec![1]]).unwrap();
        let inst = sat_to_smp(&b2, (0, 1, 3), &f).unwrap();
        let rep = solve_closure(&inst, 10_000).unwrap();
        assert!(!rep.member);
    }

    #[test]
    fn satisfying_assignments_give_witnesses() {
        let b2 = catalog::entry("brandt_b2").unwrap().semigroup;
        let f = CnfFormula::new(2, vec![vec![1, -2], vec![2]]).unwrap();
        let assignment = f.brute_force_sat().unwrap();
        let inst = sat_to_smp(&b2, (0, 1, 3), &f).unwrap();
        let w = Witness {
            word: sat_witness_word(2, &assignment),
        };
        assert!(check_witness(&inst, &w).unwrap());

        // an invalid triple is rejected
        assert!(sat_to_smp(&b2, (0, 0, 0), &f).is_err());
    }

    #[test]
    fn pair_lift_on_brandt_monoid() {
        let e = catalog::entry("brandt_b2_1").unwrap();
        let sg = e.semigroup;
        let triple = e.pspace_triple.unwrap();
        let (square, (s2, t2, n2)) = pair_lift(&sg, triple).unwrap();
        assert_eq!(square.size(), 36);
        // s' = ([1,2], tst) with tst = [2,1]
        assert_eq!(square.name(s2), "([1,2],[2,1])");
        assert_eq!(square.name(t2), "([2,1],[1,2])");
        assert_eq!(square.name(n2), "(1,1)");
        assert!(q3sat_direct_conditions(&square, s2, t2, n2));
        // t's't' = t'
        let tst = square.mul(square.mul(t2, s2), t2);
        assert_eq!(tst, t2);
        let greens = square.greens();
        assert!(greens.j_lt(square.mul(s2, s2), s2));
    }

    #[test]
    fn q3sat_generators_match_hand_computation() {
        let e = catalog::entry("brandt_b2_1").unwrap();
        let triple = e.pspace_triple.unwrap();
        let f = Q3SatFormula::new(1, vec![[2, 2, 2]]).unwrap();
        let inst = q3sat_to_smp(&e.semigroup, triple, &f, false).unwrap();
        let layout = Q3satLayout { n: 1, m: 1 };
        assert_eq!(inst.generators().len(), layout.generator_count());
        assert_eq!(inst.n(), 5);
        // with s = [1,2] (1), t = [2,1] (2), st = [1,1] (0), ts = [2,2] (3),
        // identity 1 (5):
        // c₁⁰ = (1, 1, [2,1], 1, [2,2])
        let c0 = &inst.generators()[layout.c_zero(1)];
        assert_eq!(c0.coords(), &[5, 5, 2, 5, 3]);
        // a = (s,s,s,s,s), f = (st,st,st,st,s)
        assert_eq!(inst.generators()[layout.a()].coords(), &[1, 1, 1, 1, 1]);
        assert_eq!(inst.target().coords(), &[0, 0, 0, 0, 1]);

        // membership matches the game value
        let rep = solve_closure(&inst, 100_000).unwrap();
        assert!(rep.member);
        let strategy = f.find_strategy().unwrap();
        let w = Witness {
            word: q3sat_witness_word(&f, &strategy),
        };
        assert!(check_witness(&inst, &w).unwrap());
    }

    #[test]
    fn q3sat_false_formula_is_non_member() {
        let e = catalog::entry("brandt_b2_1").unwrap();
        let triple = e.pspace_triple.unwrap();
        let f = Q3SatFormula::new(1, vec![[1, 1, 1]]).unwrap();
        assert!(!f.eval());
        let inst = q3sat_to_smp(&e.semigroup, triple, &f, false).unwrap();
        let rep = solve_closure(&inst, 100_000).unwrap();
        assert!(!rep.member);
    }

    #[test]
    fn q3sat_reduction_over_the_lifted_square() {
        let e = catalog::entry("brandt_b2_1").unwrap();
        let triple = e.pspace_triple.unwrap();
        let f = Q3SatFormula::new(1, vec![[2, 2, 2]]).unwrap();
        let inst = q3sat_to_smp(&e.semigroup, triple, &f, true).unwrap();
        assert_eq!(inst.ambient().size(), 36);
        // the explicit witness certifies membership without a full closure
        let strategy = f.find_strategy().unwrap();
        let w = Witness {
            word: q3sat_witness_word(&f, &strategy),
        };
        assert!(check_witness(&inst, &w).unwrap());
    }

    #[test]
    fn q3sat_witness_sweeps_two_pairs() {
        let e = catalog::entry("brandt_b2_1").unwrap();
        let triple = e.pspace_triple.unwrap();
        // y₂ must track ¬x₂ regardless of x₁
        let f = Q3SatFormula::new(2, vec![[2, 4, 4], [-2, -4, -4]]).unwrap();
        assert!(f.eval());
        let inst = q3sat_to_smp(&e.semigroup, triple, &f, false).unwrap();
        let strategy = f.find_strategy().unwrap();
        let w = Witness {
            word: q3sat_witness_word(&f, &strategy),
        };
        assert!(check_witness(&inst, &w).unwrap());
    }
}
