//! Symmetric-function layer: orbit monomials `f_omega`, their expansion in
//! elementary symmetric functions (the beta transition matrix), and the exact
//! linear solve recovering Chern numbers from `s`-numbers.
//!
//! Exponent vectors `omega` and Chern monomial exponents `xi` are the same
//! combinatorial object ([`OmegaIndex`]); a partition of `n` corresponds to
//! the omega with `i_l` = multiplicity of the part `l`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactalg::{BigInt, BigRat, Monomial, MultiPoly, OmegaIndex, Var};

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn from_omega(omega: &OmegaIndex) -> Self {
        let mut parts = Vec::new();
        for (idx, &mult) in omega.exps().iter().enumerate().rev() {
            for _ in 0..mult {
                parts.push(idx as u32 + 1);
            }
        }
        Partition { parts }
    }

    pub fn to_omega(&self) -> OmegaIndex {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut exps = vec![0u32; max];
        for &p in &self.parts {
            exps[p as usize - 1] += 1;
        }
        OmegaIndex::new(exps)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = max.min(remaining);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmError {
    TooFewVariables,
    BadOmega,
    /// Input s-numbers are not consistent with any integral Chern-number
    /// vector.
    NonIntegralSolution,
    /// The beta matrix failed to invert (indicates an internal bug).
    SingularMatrix,
    /// Incomplete input: a degree-n exponent vector is missing.
    MissingEntry(OmegaIndex),
}

impl fmt::Display for SymmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmError::TooFewVariables => write!(f, "too few variables for the orbit monomial"),
            SymmError::BadOmega => write!(f, "omega has the wrong graded degree"),
            SymmError::NonIntegralSolution => write!(f, "solved Chern numbers are not integral"),
            SymmError::SingularMatrix => write!(f, "beta matrix is singular"),
            SymmError::MissingEntry(w) => write!(f, "missing entry for omega = {w}"),
        }
    }
}

/// Enumerates the distinct permutations of `exps` in place, invoking `visit`
/// once per distinct arrangement.
fn for_each_distinct_permutation(exps: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
    exps.sort_unstable();
    loop {
        visit(exps);
        // next_permutation
        if exps.len() < 2 {
            return;
        }
        let mut i = exps.len() - 1;
        while i > 0 && exps[i - 1] >= exps[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = exps.len() - 1;
        while exps[j] <= exps[i - 1] {
            j -= 1;
        }
        exps.swap(i - 1, j);
        exps[i..].reverse();
    }
}

/// The monomial symmetric polynomial attached to `omega`: the sum over the
/// `S_vars`-orbit of `u_1 ... u_{i_1} u_{i_1+1}^2 ...`, each distinct
/// monomial once, in the variables `x_1 ... x_vars`.
pub fn orbit_monomial(omega: &OmegaIndex, vars: usize) -> Result<MultiPoly, SymmError> {
    let lambda = Partition::from_omega(omega);
    if lambda.parts().len() > vars {
        return Err(SymmError::TooFewVariables);
    }
    let mut exps = vec![0u32; vars];
    exps[..lambda.parts().len()].copy_from_slice(lambda.parts());
    let mut terms = BTreeMap::new();
    for_each_distinct_permutation(&mut exps, &mut |arr| {
        let m = Monomial::from_factors(
            arr.iter()
                .enumerate()
                .map(|(i, &e)| (Var::X(i as u32 + 1), e))
                .collect(),
        );
        terms.insert(m, BigRat::one());
    });
    Ok(terms
        .into_iter()
        .fold(MultiPoly::zero(), |acc, (m, c)| &acc + &MultiPoly::term(m, c)))
}

/// Evaluates `f_omega(t_1, ..., t_n)`: the orbit monomial at numeric weights,
/// identically the coefficient of `a^omega` in `prod_i f(t_i)`.
pub fn f_omega(omega: &OmegaIndex, t_values: &[BigRat]) -> BigRat {
    let n = t_values.len();
    let lambda = Partition::from_omega(omega);
    if lambda.parts().len() > n {
        // more parts than variables: the orbit is empty
        return BigRat::zero();
    }
    let mut exps = vec![0u32; n];
    exps[..lambda.parts().len()].copy_from_slice(lambda.parts());
    let mut acc = BigRat::zero();
    for_each_distinct_permutation(&mut exps, &mut |arr| {
        let mut prod = BigRat::one();
        for (t, &e) in t_values.iter().zip(arr.iter()) {
            for _ in 0..e {
                prod *= t;
            }
        }
        acc += prod;
    });
    acc
}

/// The transition matrix from Chern monomials `c_1^{l_1}...c_n^{l_n}` to the
/// characteristic numbers `s_omega`: row `omega`, column `xi`, with
/// `s_omega = sum_xi beta[omega][xi] c^xi`.
#[derive(Clone, Debug)]
pub struct BetaMatrix {
    n: u32,
    /// Row/column index order: partitions of n in reverse-lex order.
    order: Vec<OmegaIndex>,
    /// entries[row][col]
    entries: Vec<Vec<BigInt>>,
}

impl BetaMatrix {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn index_order(&self) -> &[OmegaIndex] {
        &self.order
    }

    pub fn entry(&self, omega: &OmegaIndex, xi: &OmegaIndex) -> BigInt {
        let r = self.order.iter().position(|w| w == omega);
        let c = self.order.iter().position(|w| w == xi);
        match (r, c) {
            (Some(r), Some(c)) => self.entries[r][c].clone(),
            _ => BigInt::zero(),
        }
    }

    /// The full expansion of one row as a map `xi -> beta`.
    pub fn row(&self, omega: &OmegaIndex) -> BTreeMap<OmegaIndex, BigInt> {
        let r = self
            .order
            .iter()
            .position(|w| w == omega)
            .expect("omega not of degree n");
        self.order
            .iter()
            .cloned()
            .zip(self.entries[r].iter().cloned())
            .filter(|(_, b)| !b.is_zero())
            .collect()
    }
}

/// Elementary symmetric polynomial `e_i` in `n` variables.
fn elementary(i: u32, n: usize) -> MultiPoly {
    let omega = Partition::new(vec![1; i as usize]).to_omega();
    orbit_monomial(&omega, n).expect("i <= n")
}

/// Binomial coefficient.
fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of 0/1 matrices with the given row sums and column sums: the
/// coefficient of `m_nu` in `e_mu` (one row per part of `mu`, one column per
/// part of `nu`). Columns of equal remaining capacity are interchangeable,
/// so the memo key is the capacity histogram.
fn count_01_matrices(rows: &[u32], cols: &[u32]) -> BigInt {
    type Hist = Vec<(u32, u32)>; // (capacity, how many columns)
    fn go(
        rows: &[u32],
        hist: &Hist,
        memo: &mut BTreeMap<(usize, Hist), BigInt>,
        depth: usize,
    ) -> BigInt {
        if depth == rows.len() {
            return if hist.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = memo.get(&(depth, hist.clone())) {
            return v.clone();
        }
        // distribute this row's 1s over the capacity groups
        fn split(
            rows: &[u32],
            hist: &Hist,
            memo: &mut BTreeMap<(usize, Hist), BigInt>,
            depth: usize,
            group: usize,
            left: u32,
            picked: &mut Vec<u32>,
        ) -> BigInt {
            if group == hist.len() {
                if left != 0 {
                    return BigInt::zero();
                }
                let mut ways = BigInt::one();
                let mut next: BTreeMap<u32, u32> = BTreeMap::new();
                for (g, &(cap, cnt)) in hist.iter().enumerate() {
                    let k = picked[g];
                    ways *= binomial(cnt, k);
                    if cnt - k > 0 {
                        *next.entry(cap).or_insert(0) += cnt - k;
                    }
                    if k > 0 && cap > 1 {
                        *next.entry(cap - 1).or_insert(0) += k;
                    }
                }
                let next: Hist = next.into_iter().collect();
                return ways * go(rows, &next, memo, depth + 1);
            }
            let mut acc = BigInt::zero();
            let max = hist[group].1.min(left);
            for k in 0..=max {
                picked.push(k);
                acc += split(rows, hist, memo, depth, group + 1, left - k, picked);
                picked.pop();
            }
            acc
        }
        let v = split(rows, hist, memo, depth, 0, rows[depth], &mut Vec::new());
        memo.insert((depth, hist.clone()), v.clone());
        v
    }
    let mut hist: BTreeMap<u32, u32> = BTreeMap::new();
    for &c in cols {
        *hist.entry(c).or_insert(0) += 1;
    }
    let hist: Hist = hist.into_iter().collect();
    let mut memo = BTreeMap::new();
    go(rows, &hist, &mut memo, 0)
}

/// Exact inverse of an integer matrix whose inverse is again integral.
fn invert_unimodular(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let p = m.len();
    let mut aug: Vec<Vec<BigRat>> = (0..p)
        .map(|r| {
            let mut row: Vec<BigRat> = m[r]
                .iter()
                .map(|v| BigRat::from_integer(v.clone()))
                .collect();
            for c in 0..p {
                row.push(if c == r { BigRat::one() } else { BigRat::zero() });
            }
            row
        })
        .collect();
    for col in 0..p {
        let pivot = (col..p)
            .find(|&r| !aug[r][col].is_zero())
            .expect("transition matrix is invertible");
        aug.swap(col, pivot);
        let inv = aug[col][col].clone();
        for r in 0..p {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &inv;
            for c in col..2 * p {
                let sub = &aug[col][c] * &factor;
                aug[r][c] -= sub;
            }
        }
    }
    (0..p)
        .map(|r| {
            let d = aug[r][r].clone();
            (p..2 * p)
                .map(|c| {
                    let v = &aug[r][c] / &d;
                    assert!(v.is_integer(), "inverse transition matrix not integral");
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Transition matrix from Chern monomials to the `s_omega` basis. Built by
/// inverting the classical e-to-m expansion, whose coefficients count 0/1
/// matrices with prescribed row and column sums.
pub fn beta_matrix(n: u32) -> BetaMatrix {
    let order: Vec<OmegaIndex> = partitions_of(n).iter().map(Partition::to_omega).collect();
    let parts: Vec<Vec<u32>> = order
        .iter()
        .map(|w| Partition::from_omega(w).parts().to_vec())
        .collect();
    let e_to_m: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|mu| parts.iter().map(|nu| count_01_matrices(mu, nu)).collect())
        .collect();
    let entries = invert_unimodular(&e_to_m);
    BetaMatrix { n, order, entries }
}

/// Expands each orbit monomial of degree `n` in products of elementary
/// symmetric polynomials by leading-term elimination. Independent
/// construction of the same matrix as [`beta_matrix`], kept as a
/// cross-check; cost grows quickly with `n`.
pub fn beta_matrix_by_elimination(n: u32) -> BetaMatrix {
    let order: Vec<OmegaIndex> = partitions_of(n).iter().map(Partition::to_omega).collect();
    let nv = n as usize;
    let e: Vec<MultiPoly> = (0..=n).map(|i| elementary(i, nv)).collect();

    let mut entries = Vec::with_capacity(order.len());
    for omega in &order {
        let mut p = orbit_monomial(omega, nv).expect("n variables suffice for degree n");
        let mut row_map: BTreeMap<OmegaIndex, BigInt> = BTreeMap::new();
        while let Some((m, c)) = p.leading_term() {
            // homogeneous of degree n, so graded-lex leading term is the lex
            // leading term; its exponent vector is weakly decreasing
            let mut alpha = vec![0u32; nv];
            for &(v, ex) in m.factors() {
                let Var::X(i) = v else { unreachable!("orbit monomials use x-variables") };
                alpha[i as usize - 1] = ex;
            }
            let c = c.clone();
            debug_assert!(c.is_integer());
            // e_1^{k_1} ... e_n^{k_n} with k_i = alpha_i - alpha_{i+1} has the
            // same lex-leading monomial
            let mut ks = vec![0u32; nv];
            let mut prod = MultiPoly::one();
            for i in 0..nv {
                let next = if i + 1 < nv { alpha[i + 1] } else { 0 };
                debug_assert!(alpha[i] >= next, "leading exponent not weakly decreasing");
                ks[i] = alpha[i] - next;
                for _ in 0..ks[i] {
                    prod = &prod * &e[i + 1];
                }
            }
            p = &p - &prod.scale(&c);
            let xi = OmegaIndex::new(ks);
            debug_assert_eq!(xi.graded_degree(), n);
            *row_map.entry(xi).or_insert_with(BigInt::zero) += c.to_integer();
        }
        let row: Vec<BigInt> = order
            .iter()
            .map(|xi| row_map.get(xi).cloned().unwrap_or_else(BigInt::zero))
            .collect();
        entries.push(row);
    }
    BetaMatrix { n, order, entries }
}

/// Solves `B c = s` exactly over the rationals and asserts the Chern-number
/// vector integral.
pub fn s_to_chern(
    s: &BTreeMap<OmegaIndex, BigInt>,
    n: u32,
) -> Result<BTreeMap<OmegaIndex, BigInt>, SymmError> {
    s_to_chern_with(&beta_matrix(n), s)
}

/// Like [`s_to_chern`] but reuses a prebuilt matrix.
pub fn s_to_chern_with(
    b: &BetaMatrix,
    s: &BTreeMap<OmegaIndex, BigInt>,
) -> Result<BTreeMap<OmegaIndex, BigInt>, SymmError> {
    let p = b.order.len();
    let mut aug: Vec<Vec<BigRat>> = (0..p)
        .map(|r| {
            let mut row: Vec<BigRat> = b.entries[r]
                .iter()
                .map(|v| BigRat::from_integer(v.clone()))
                .collect();
            let sv = s
                .get(&b.order[r])
                .cloned()
                .ok_or_else(|| SymmError::MissingEntry(b.order[r].clone()))?;
            row.push(BigRat::from_integer(sv));
            Ok(row)
        })
        .collect::<Result<_, SymmError>>()?;

    // exact Gaussian elimination with partial (first-nonzero) pivoting
    for col in 0..p {
        let pivot = (col..p)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(SymmError::SingularMatrix)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].clone();
        for r in 0..p {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &inv;
            for c in col..=p {
                let sub = &aug[col][c] * &factor;
                aug[r][c] -= sub;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (r, xi) in b.order.iter().enumerate() {
        let val = &aug[r][p] / &aug[r][r];
        if !val.is_integer() {
            return Err(SymmError::NonIntegralSolution);
        }
        out.insert(xi.clone(), val.to_integer());
    }
    Ok(out)
}

/// Forward basis change `s = B c`; exact inverse of [`s_to_chern`].
pub fn chern_to_s(
    c: &BTreeMap<OmegaIndex, BigInt>,
    n: u32,
) -> Result<BTreeMap<OmegaIndex, BigInt>, SymmError> {
    chern_to_s_with(&beta_matrix(n), c)
}

/// Like [`chern_to_s`] but reuses a prebuilt matrix.
pub fn chern_to_s_with(
    b: &BetaMatrix,
    c: &BTreeMap<OmegaIndex, BigInt>,
) -> Result<BTreeMap<OmegaIndex, BigInt>, SymmError> {
    let mut out = BTreeMap::new();
    for (r, omega) in b.order.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (col, xi) in b.order.iter().enumerate() {
            let cv = c.get(xi).ok_or_else(|| SymmError::MissingEntry(xi.clone()))?;
            acc += &b.entries[r][col] * cv;
        }
        out.insert(omega.clone(), acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn omega(v: &[u32]) -> OmegaIndex {
        OmegaIndex::new(v.to_vec())
    }

    #[test]
    fn beta_constructions_agree() {
        for n in 1..=5u32 {
            let fast = beta_matrix(n);
            let slow = beta_matrix_by_elimination(n);
            assert_eq!(fast.order, slow.order);
            assert_eq!(fast.entries, slow.entries, "n={n}");
        }
    }

    #[test]
    fn matrix_counts() {
        // e_1^2 = m_2 + 2 m_11
        assert_eq!(count_01_matrices(&[1, 1], &[2]), BigInt::from(1));
        assert_eq!(count_01_matrices(&[1, 1], &[1, 1]), BigInt::from(2));
        // e_2 = m_11
        assert_eq!(count_01_matrices(&[2], &[2]), BigInt::from(0));
        assert_eq!(count_01_matrices(&[2], &[1, 1]), BigInt::from(1));
    }

    #[test]
    fn partition_roundtrip_and_order() {
        let ps = partitions_of(4);
        let parts: Vec<Vec<u32>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        for p in &ps {
            assert_eq!(&Partition::from_omega(&p.to_omega()), p);
        }
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn orbit_monomial_examples() {
        // omega = (n,0,...,0) is the elementary symmetric e_n = x1...xn
        let en = orbit_monomial(&omega(&[3]), 3).unwrap();
        assert_eq!(en.num_terms(), 1);
        // omega = (0,...,0,1) is the power sum
        let pw = orbit_monomial(&omega(&[0, 0, 1]), 3).unwrap();
        assert_eq!(pw.num_terms(), 3);
        // omega = (0,1) in 2 vars: x1^2 + x2^2
        let p = orbit_monomial(&omega(&[0, 1]), 2).unwrap();
        let x = |i| MultiPoly::var(Var::X(i));
        assert_eq!(p, &(&x(1) * &x(1)) + &(&x(2) * &x(2)));
    }

    #[test]
    fn f_omega_examples() {
        // e_n at any t is the product
        let t: Vec<BigRat> = [2, 3, 5].iter().map(|&v| rat(v)).collect();
        assert_eq!(f_omega(&omega(&[3]), &t), rat(30));
        // power sum at (1,2): 1 + 4 = 5
        let t2: Vec<BigRat> = [1, 2].iter().map(|&v| rat(v)).collect();
        assert_eq!(f_omega(&omega(&[0, 1]), &t2), rat(5));
    }

    #[test]
    fn beta_rows_small() {
        // n=2: m_{(2)} = x1^2 + x2^2 = e1^2 - 2 e2
        let b = beta_matrix(2);
        let row = b.row(&omega(&[0, 1]));
        assert_eq!(row.get(&omega(&[2])), Some(&BigInt::from(1)));
        assert_eq!(row.get(&omega(&[0, 1])), Some(&BigInt::from(-2)));
        assert_eq!(row.len(), 2);
    }

    #[test]
    fn beta_rows_n4_match_printed_relations() {
        let b = beta_matrix(4);
        // s_(2,1,0,0) = c1 c3 - 4 c4
        let row = b.row(&omega(&[2, 1]));
        assert_eq!(
            row,
            BTreeMap::from([
                (omega(&[1, 0, 1]), BigInt::from(1)),
                (omega(&[0, 0, 0, 1]), BigInt::from(-4)),
            ])
        );
        // s_(0,2,0,0) = c2^2 - 2 c1 c3 + 2 c4
        let row = b.row(&omega(&[0, 2]));
        assert_eq!(
            row,
            BTreeMap::from([
                (omega(&[0, 2]), BigInt::from(1)),
                (omega(&[1, 0, 1]), BigInt::from(-2)),
                (omega(&[0, 0, 0, 1]), BigInt::from(2)),
            ])
        );
        // s_(0,0,0,1) = c1^4 - 4 c1^2 c2 + 2 c2^2 + 4 c1 c3 - 4 c4
        let row = b.row(&omega(&[0, 0, 0, 1]));
        assert_eq!(
            row,
            BTreeMap::from([
                (omega(&[4]), BigInt::from(1)),
                (omega(&[2, 1]), BigInt::from(-4)),
                (omega(&[0, 2]), BigInt::from(2)),
                (omega(&[1, 0, 1]), BigInt::from(4)),
                (omega(&[0, 0, 0, 1]), BigInt::from(-4)),
            ])
        );
    }

    #[test]
    fn top_row_is_unit_vector() {
        // s_(n,0,...,0) = c_n
        for n in 1..=6u32 {
            let b = beta_matrix(n);
            let mut top = vec![0u32; n as usize];
            top[0] = n;
            let row = b.row(&OmegaIndex::new(top));
            let mut cn = vec![0u32; n as usize];
            cn[n as usize - 1] = 1;
            assert_eq!(row, BTreeMap::from([(OmegaIndex::new(cn), BigInt::from(1))]));
        }
    }

    #[test]
    fn flag3_chern_numbers() {
        let s = BTreeMap::from([
            (omega(&[3]), BigInt::from(6)),
            (omega(&[1, 1]), BigInt::from(6)),
            (omega(&[0, 0, 1]), BigInt::from(-6)),
        ]);
        let c = s_to_chern(&s, 3).unwrap();
        assert_eq!(c.get(&omega(&[0, 0, 1])), Some(&BigInt::from(6))); // c3
        assert_eq!(c.get(&omega(&[1, 1])), Some(&BigInt::from(24))); // c1c2
        assert_eq!(c.get(&omega(&[3])), Some(&BigInt::from(48))); // c1^3
        // round-trip
        assert_eq!(chern_to_s(&c, 3).unwrap(), s);
    }
}
