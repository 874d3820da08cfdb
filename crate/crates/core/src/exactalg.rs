//! Exact sparse multivariate polynomials and truncated power series.
//!
//! Two variable alphabets live in one unified namespace: the cobordism
//! generators `a_1, a_2, ...` and the torus coordinates `x_1, ..., x_k`.
//! Coefficients are arbitrary-precision rationals; no floating point
//! anywhere. Monomials are ordered graded-lexicographically with the
//! `x`-alphabet more significant than the `a`-alphabet, which fixes a
//! canonical printing order and a monomial order for exact division.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub type BigInt = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type BigRat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// One symbol of the unified variable alphabet. Indices are 1-based.
///
/// The derived order (`X` before `A`, ascending index) makes `x_1` the most
/// significant variable of the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    A(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::A(i) => write!(f, "a{i}"),
        }
    }
}

/// A power product, stored sparsely as `(variable, exponent)` pairs sorted by
/// variable with all exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn from_factors(mut factors: Vec<(Var, u32)>) -> Self {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_by_key(|&(v, _)| v);
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    out.push(self.factors[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.factors[i].0, self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Quotient `self / other` if `other` divides `self` variable-wise.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            let mut rem = e;
            while j < other.factors.len() && other.factors[j].0 < v {
                return None; // divisor has a variable we lack
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let d = other.factors[j].1;
                if d > e {
                    return None;
                }
                rem = e - d;
                j += 1;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    /// Relabels `x`-variables through a permutation given in one-line
    /// notation: `x_i` becomes `x_{perm[i-1]}` (entries 1-based). `a`-variables
    /// are untouched.
    pub fn permute_x(&self, perm: &[u32]) -> Monomial {
        let factors = self
            .factors
            .iter()
            .map(|&(v, e)| match v {
                Var::X(i) if (i as usize) <= perm.len() => (Var::X(perm[i as usize - 1]), e),
                other => (other, e),
            })
            .collect();
        Monomial::from_factors(factors)
    }

    pub fn has_x(&self) -> bool {
        self.factors.iter().any(|&(v, _)| matches!(v, Var::X(_)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the first variable (in
    /// alphabet order) with differing exponent decides, larger exponent
    /// winning. Leading terms are multiplicative under this order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (va, ea) = self.factors[i];
            let (vb, eb) = other.factors[j];
            match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater, // we have the more significant var
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        if i < self.factors.len() {
            Ordering::Greater
        } else if j < other.factors.len() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Error from [`exact_divide`]: the divisor does not divide the dividend in
/// the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial division left a nonzero remainder")
    }
}

/// A sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v), BigRat::one())
    }

    pub fn term(m: Monomial, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Highest term under the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies a permutation of the `x`-variables (one-line notation,
    /// 1-based) to every monomial.
    pub fn permute_x(&self, perm: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.permute_x(perm), c.clone());
        }
        out
    }

    /// Swaps `x_i` and `x_j`.
    pub fn swap_x(&self, i: u32, j: u32, nvars: u32) -> MultiPoly {
        let mut perm: Vec<u32> = (1..=nvars).collect();
        perm.swap(i as usize - 1, j as usize - 1);
        self.permute_x(&perm)
    }

    /// The coefficient of `a^omega` as a polynomial in the remaining
    /// variables.
    pub fn coefficient_of_a(&self, omega: &OmegaIndex) -> MultiPoly {
        let a_mono = omega.a_monomial();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut a_part: Vec<(Var, u32)> = Vec::new();
            let mut rest: Vec<(Var, u32)> = Vec::new();
            for &(v, e) in m.factors() {
                match v {
                    Var::A(_) => a_part.push((v, e)),
                    _ => rest.push((v, e)),
                }
            }
            if Monomial::from_factors(a_part) == a_mono {
                out.add_term(Monomial::from_factors(rest), c.clone());
            }
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        // iterate over the smaller operand
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m, c) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m.mul(m2), c * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial division: returns `q` with `q * d = p`, or
/// [`NotDivisible`] if a nonzero remainder appears. With a single divisor and
/// a multiplicative monomial order the classical reduction loop is complete:
/// if `d | p` every leading term of the running remainder is divisible by the
/// leading term of `d`.
pub fn exact_divide(p: &MultiPoly, d: &MultiPoly) -> Result<MultiPoly, NotDivisible> {
    let (lead_m, lead_c) = d.leading_term().ok_or(NotDivisible)?;
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero();
    while let Some((m, c)) = rem.leading_term() {
        let qm = m.checked_div(lead_m).ok_or(NotDivisible)?;
        let qc = c / lead_c;
        let t = MultiPoly::term(qm.clone(), qc.clone());
        rem = &rem - &d.mul_monomial(&qm, &qc);
        quot = &quot + &t;
    }
    Ok(quot)
}

/// Evaluates the linear form `<weight, x> = sum_l weight[l] * x[l]`.
pub fn eval_linear_form(weight: &[i64], x: &[BigRat]) -> BigRat {
    debug_assert_eq!(weight.len(), x.len());
    let mut acc = BigRat::zero();
    for (w, xv) in weight.iter().zip(x) {
        if *w != 0 {
            acc += xv * rat(*w);
        }
    }
    acc
}

/// A polynomial truncated series in the formal variable `t`: coefficients of
/// `t^0 ... t^N` with everything above the truncation order discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, l: usize) -> &MultiPoly {
        &self.coeffs[l]
    }

    pub fn set_coeff(&mut self, l: usize, p: MultiPoly) {
        self.coeffs[l] = p;
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order(), rhs.order());
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Series product, discarding every term of `t`-degree above the
    /// truncation order.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order(), rhs.order());
        let n = self.order();
        let mut out = TruncSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }
}

/// The universal series `f(t*scale) = 1 + sum_{i=1..N} a_i scale^i t^i` with
/// symbolic generators `a_i`, truncated at order `N`.
pub fn universal_f(order: usize, scale: &BigRat) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    let mut pw = BigRat::one();
    for i in 1..=order {
        pw *= scale;
        s.coeffs[i] = MultiPoly::term(Monomial::var(Var::A(i as u32)), pw.clone());
    }
    s
}

/// Exponent vector `omega = (i_1, ..., i_n)` with graded degree
/// `|omega| = sum l * i_l`. Trailing zeros are normalized away; the logical
/// length is supplied by context where needed (see [`OmegaIndex::padded`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaIndex {
    exps: Vec<u32>,
}

impl OmegaIndex {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        OmegaIndex { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// `|omega| = sum_l l * i_l`.
    pub fn graded_degree(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .map(|(idx, &e)| (idx as u32 + 1) * e)
            .sum()
    }

    /// Number of parts of the associated partition, `sum_l i_l`.
    pub fn num_parts(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.exps.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// The monomial `a^omega`.
    pub fn a_monomial(&self) -> Monomial {
        Monomial::from_factors(
            self.exps
                .iter()
                .enumerate()
                .map(|(idx, &e)| (Var::A(idx as u32 + 1), e))
                .collect(),
        )
    }
}

impl fmt::Display for OmegaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Error converting a polynomial into a [`CobordismClass`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassError {
    /// A coefficient is not an integer.
    NonIntegral(String),
    /// A monomial involves an `x`-variable or has graded degree != n.
    BadMonomial(String),
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassError::NonIntegral(t) => write!(f, "non-integral coefficient at {t}"),
            ClassError::BadMonomial(t) => write!(f, "monomial {t} not of the form a^omega with |omega| = n"),
        }
    }
}

/// An integral cobordism class `sum_{|omega|=n} s_omega a^omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismClass {
    n: usize,
    terms: BTreeMap<OmegaIndex, BigInt>,
}

impl CobordismClass {
    /// Packages a polynomial in the `a`-generators as a class of graded
    /// degree `n`, asserting integrality and homogeneity.
    pub fn from_poly(p: &MultiPoly, n: usize) -> Result<Self, ClassError> {
        use alloc::string::ToString;
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.has_x() {
                return Err(ClassError::BadMonomial(m.to_string()));
            }
            let mut exps = Vec::new();
            for &(v, e) in m.factors() {
                let Var::A(i) = v else { unreachable!() };
                let idx = i as usize - 1;
                if exps.len() <= idx {
                    exps.resize(idx + 1, 0);
                }
                exps[idx] = e;
            }
            let omega = OmegaIndex::new(exps);
            if omega.graded_degree() as usize != n {
                return Err(ClassError::BadMonomial(m.to_string()));
            }
            if !c.is_integer() {
                return Err(ClassError::NonIntegral(m.to_string()));
            }
            terms.insert(omega, c.to_integer());
        }
        Ok(CobordismClass { n, terms })
    }

    pub fn dimension_half(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OmegaIndex, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, omega: &OmegaIndex) -> BigInt {
        self.terms.get(omega).cloned().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for CobordismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending graded-lex on the a-monomials, matching MultiPoly
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|(oa, _), (ob, _)| ob.a_monomial().cmp(&oa.a_monomial()));
        let mut first = true;
        for (omega, c) in entries {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let m = omega.a_monomial();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(Var::X(i))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) - &x(2)) * &(&x(1) + &x(2));
        let q = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        assert_eq!(p, q);
    }

    #[test]
    fn additive_identity() {
        let p = &(&x(1) * &x(2)) + &MultiPoly::constant(rat(3));
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn truncated_square() {
        // (a1 t + a2 t^2)^2 at N=2 keeps only a1^2 t^2
        let mut s = TruncSeries::zero(2);
        s.set_coeff(1, MultiPoly::var(Var::A(1)));
        s.set_coeff(2, MultiPoly::var(Var::A(2)));
        let sq = s.mul(&s);
        assert!(sq.coeff(0).is_zero());
        assert!(sq.coeff(1).is_zero());
        let a1 = MultiPoly::var(Var::A(1));
        assert_eq!(*sq.coeff(2), &a1 * &a1);
    }

    #[test]
    fn universal_f_examples() {
        let s = universal_f(0, &rat(5));
        assert_eq!(s, TruncSeries::one(0));

        let s = universal_f(2, &rat(1));
        assert_eq!(*s.coeff(1), MultiPoly::var(Var::A(1)));
        assert_eq!(*s.coeff(2), MultiPoly::var(Var::A(2)));

        let s = universal_f(3, &rat(-2));
        assert_eq!(*s.coeff(1), MultiPoly::var(Var::A(1)).scale(&rat(-2)));
        assert_eq!(*s.coeff(2), MultiPoly::var(Var::A(2)).scale(&rat(4)));
        assert_eq!(*s.coeff(3), MultiPoly::var(Var::A(3)).scale(&rat(-8)));
    }

    #[test]
    fn exact_divide_linear() {
        let num = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        let den = &x(1) - &x(2);
        let q = exact_divide(&num, &den).unwrap();
        assert_eq!(q, &x(1) + &x(2));

        let p = &(&x(1) * &x(2)) + &x(3);
        assert_eq!(exact_divide(&p, &MultiPoly::one()).unwrap(), p);
    }

    #[test]
    fn exact_divide_detects_remainder() {
        let p = &x(1) + &MultiPoly::one();
        let d = &x(1) - &x(2);
        assert_eq!(exact_divide(&p, &d), Err(NotDivisible));
    }

    #[test]
    fn eval_linear_form_examples() {
        let x: Vec<BigRat> = [1, 2, 3, 4].iter().map(|&v| rat(v)).collect();
        assert_eq!(eval_linear_form(&[1, 0, -1, 0], &x), rat(-2));
        assert_eq!(eval_linear_form(&[0, 0, 0, 0], &x), rat(0));
        let xm: Vec<BigRat> = [1, 5].iter().map(|&v| rat(v)).collect();
        assert_eq!(eval_linear_form(&[1, -1], &xm), rat(-4));
    }

    #[test]
    fn omega_index_degree_and_normalization() {
        let w = OmegaIndex::new(vec![3, 0, 0]);
        assert_eq!(w.graded_degree(), 3);
        assert_eq!(w, OmegaIndex::new(vec![3]));
        assert_eq!(w.padded(3), vec![3, 0, 0]);
        let top = OmegaIndex::new(vec![0, 0, 1]);
        assert_eq!(top.graded_degree(), 3);
    }

    #[test]
    fn class_display_and_integrality() {
        let a = |i| MultiPoly::var(Var::A(i));
        let p = &(&a(1).pow(3).scale(&rat(6)) + &(&a(1) * &a(2)).scale(&rat(6))) - &a(3).scale(&rat(6));
        let cls = CobordismClass::from_poly(&p, 3).unwrap();
        assert_eq!(cls.to_string(), "6*a1^3 + 6*a1*a2 - 6*a3");
        assert_eq!(cls.coefficient(&OmegaIndex::new(vec![0, 0, 1])), BigInt::from(-6));

        let bad = a(1).scale(&BigRat::new(BigInt::from(1), BigInt::from(2)));
        assert!(CobordismClass::from_poly(&bad, 1).is_err());
        assert!(CobordismClass::from_poly(&a(1), 2).is_err());
    }
}
