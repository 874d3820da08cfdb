//! Exact type-A route: divided difference operators, the antisymmetrization
//! operator `L`, Schur polynomials, and the closed-form flag/Grassmann
//! cobordism formulas. This is the independent oracle against the
//! localization route in [`crate::genus`].
//!
//! The antisymmetrization sums `n!` signed permutations, so the exact routes
//! carry cost guards; the genus module remains the scalable path.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::exactalg::{
    exact_divide, BigInt, BigRat, CobordismClass, Monomial, MultiPoly, OmegaIndex, TruncSeries,
    Var,
};
use crate::symmchern::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivDiffError {
    /// Antisymmetrization did not produce a multiple of the Vandermonde
    /// determinant; unreachable for valid input.
    NotDivisible,
    /// Builtin parameter outside the cost guard.
    OutOfRange,
    TooManyParts,
}

impl fmt::Display for DivDiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivDiffError::NotDivisible => write!(f, "antisymmetrization not divisible by the Vandermonde factor"),
            DivDiffError::OutOfRange => write!(f, "parameter outside the exact-route cost guard"),
            DivDiffError::TooManyParts => write!(f, "partition has more parts than variables"),
        }
    }
}

/// `x_i - x_j` as a polynomial.
fn x_diff(i: u32, j: u32) -> MultiPoly {
    &MultiPoly::var(Var::X(i)) - &MultiPoly::var(Var::X(j))
}

/// The divided difference `(p - s_i p) / (x_i - x_{i+1})`; always exact, and
/// the result is symmetric in `x_i`, `x_{i+1}`.
pub fn divided_difference(i: u32, p: &MultiPoly, nvars: u32) -> MultiPoly {
    let swapped = p.swap_x(i, i + 1, nvars);
    let num = p - &swapped;
    exact_divide(&num, &x_diff(i, i + 1)).expect("p - s_i p is divisible by x_i - x_{i+1}")
}

/// Visits every permutation of `{1..n}` (one-line, 1-based) with its sign,
/// via Heap's algorithm.
fn for_each_signed_permutation(n: usize, visit: &mut dyn FnMut(&[u32], i32)) {
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i32;
    visit(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `sum_{sigma in S_n} sign(sigma) sigma(p)`.
pub fn antisymmetrize(p: &MultiPoly, n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for_each_signed_permutation(n, &mut |perm, sign| {
        let image = p.permute_x(perm);
        if sign > 0 {
            acc = &acc + &image;
        } else {
            acc = &acc - &image;
        }
    });
    acc
}

/// Divides by the Vandermonde product `prod_{p <= i < j <= q} (x_i - x_j)`,
/// one linear factor at a time.
fn divide_vandermonde(p: &MultiPoly, lo: u32, hi: u32) -> Result<MultiPoly, DivDiffError> {
    let mut out = p.clone();
    for i in lo..=hi {
        for j in i + 1..=hi {
            out = exact_divide(&out, &x_diff(i, j)).map_err(|_| DivDiffError::NotDivisible)?;
        }
    }
    Ok(out)
}

/// Which realization of the operator `L` to use; both agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LMethod {
    /// `(1/Delta_n) sum_sigma sign(sigma) sigma(p)`.
    Antisymmetrize,
    /// The composition `(d_1 ... d_{n-1})(d_1 ... d_{n-2}) ... d_1` of
    /// divided differences.
    ComposedDivDiff,
}

/// The linear operator `L` onto symmetric polynomials: sends `x^delta` to 1
/// and `x^{lambda+delta}` to the Schur polynomial `Sh_lambda`. Coefficients
/// in the `a`-generators ride along untouched.
pub fn l_operator(p: &MultiPoly, n: usize, method: LMethod) -> Result<MultiPoly, DivDiffError> {
    match method {
        LMethod::Antisymmetrize => {
            let anti = antisymmetrize(p, n);
            if anti.is_zero() {
                return Ok(MultiPoly::zero());
            }
            divide_vandermonde(&anti, 1, n as u32)
        }
        LMethod::ComposedDivDiff => {
            let mut out = p.clone();
            // rightmost factor first: d_1, then (d_1 d_2), ...
            for block in 1..n {
                for i in (1..=block as u32).rev() {
                    out = divided_difference(i, &out, n as u32);
                }
            }
            Ok(out)
        }
    }
}

/// The monomial `x^xi`.
pub fn x_monomial(xi: &[u32]) -> MultiPoly {
    MultiPoly::term(
        Monomial::from_factors(
            xi.iter()
                .enumerate()
                .map(|(i, &e)| (Var::X(i as u32 + 1), e))
                .collect(),
        ),
        BigRat::one(),
    )
}

/// Schur polynomial `Sh_lambda(x_1, ..., x_n)` via the bialternant
/// `L(x^{lambda+delta})`.
pub fn schur(lambda: &Partition, n: usize) -> Result<MultiPoly, DivDiffError> {
    if lambda.parts().len() > n {
        return Err(DivDiffError::TooManyParts);
    }
    let mut xi = vec![0u32; n];
    for (i, &p) in lambda.parts().iter().enumerate() {
        xi[i] = p;
    }
    for (i, e) in xi.iter_mut().enumerate() {
        *e += (n - 1 - i) as u32; // + delta
    }
    l_operator(&x_monomial(&xi), n, LMethod::Antisymmetrize)
}

/// Series factor `f(t(x_i - x_j))` truncated at `order`, optionally reduced
/// to its odd part `ftilde(t) = sum a_{2l-1} t^{2l-1}`.
fn flag_factor(i: u32, j: u32, order: usize, odd_only: bool) -> TruncSeries {
    let diff = x_diff(i, j);
    let mut s = TruncSeries::zero(order);
    if !odd_only {
        s.set_coeff(0, MultiPoly::one());
    }
    let mut pw = MultiPoly::one();
    for l in 1..=order {
        pw = &pw * &diff;
        if odd_only && l % 2 == 0 {
            continue;
        }
        s.set_coeff(l, &pw * &MultiPoly::var(Var::A(l as u32)));
    }
    s
}

fn class_from_symmetric(p: &MultiPoly, n: usize) -> CobordismClass {
    CobordismClass::from_poly(p, n).expect("exact route yields an integral class")
}

/// Exact cobordism class of the flag manifold `U(n)/T^n`: the coefficient of
/// `t^{n(n-1)/2}` in `L(prod_{i<j} f(t(x_i - x_j)))`. For `n >= 4` the (1,2)
/// and (n-1,n) factors are replaced by the odd part, which leaves the image
/// under `L` unchanged.
pub fn flag_class_exact(n: usize) -> Result<CobordismClass, DivDiffError> {
    if !(2..=5).contains(&n) {
        return Err(DivDiffError::OutOfRange);
    }
    let m = n * (n - 1) / 2;
    let mut prod = TruncSeries::one(m);
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            let odd = n >= 4 && ((i, j) == (1, 2) || (i, j) == (n as u32 - 1, n as u32));
            prod = prod.mul(&flag_factor(i, j, m, odd));
        }
    }
    let top = l_operator(prod.coeff(m), n, LMethod::Antisymmetrize)?;
    Ok(class_from_symmetric(&top, m))
}

/// Exact cobordism class of the Grassmann manifold `G_{q+l,l}`: the
/// coefficient of `t^{lq}` in
/// `(1/(q! l!)) L(Delta_q Delta_{q+1,q+l} prod f(t(x_i - x_j)))`.
pub fn grassmann_class_exact(q: usize, l: usize) -> Result<CobordismClass, DivDiffError> {
    if q == 0 || l == 0 || q * l > 8 {
        return Err(DivDiffError::OutOfRange);
    }
    let k = q + l;
    let deg = q * l;
    let mut prod = TruncSeries::one(deg);
    for i in 1..=q as u32 {
        for j in q as u32 + 1..=k as u32 {
            prod = prod.mul(&flag_factor(i, j, deg, false));
        }
    }
    let mut top = prod.coeff(deg).clone();
    for lo_hi in [(1u32, q as u32), (q as u32 + 1, k as u32)] {
        for i in lo_hi.0..=lo_hi.1 {
            for j in i + 1..=lo_hi.1 {
                top = &top * &x_diff(i, j);
            }
        }
    }
    let applied = l_operator(&top, k, LMethod::Antisymmetrize)?;
    let fact = |m: usize| (1..=m as i64).product::<i64>();
    let scaled = applied.scale(&BigRat::new(BigInt::from(1), BigInt::from(fact(q) * fact(l))));
    Ok(class_from_symmetric(&scaled, deg))
}

/// Enumerates every `omega` hit by the flag vanishing corollaries, asserts
/// `s_omega = 0` against the exact class, and returns the checked list:
/// the top number `s_m`, every `omega` with `i_k != 0` for some `k > 2n-3`,
/// and (for `n = 4q` or `4q+1`) every `omega` supported on even indices.
pub fn flag_vanishing_suite(n: usize) -> Result<Vec<(OmegaIndex, BigInt)>, DivDiffError> {
    if !(4..=5).contains(&n) {
        return Err(DivDiffError::OutOfRange);
    }
    let class = flag_class_exact(n)?;
    let m = n * (n - 1) / 2;
    let mut checked = Vec::new();
    for p in partitions_of(m as u32) {
        let omega = p.to_omega();
        let exps = omega.exps();
        let top = exps.len() == m && exps[m - 1] == 1 && omega.num_parts() == 1;
        let beyond = exps.iter().enumerate().any(|(idx, &e)| e != 0 && idx + 1 > 2 * n - 3);
        let even_support = (n % 4 == 0 || n % 4 == 1)
            && exps.iter().enumerate().all(|(idx, &e)| e == 0 || (idx + 1) % 2 == 0);
        if top || beyond || even_support {
            let s = class.coefficient(&omega);
            assert!(s == BigInt::from(0), "vanishing corollary violated at {omega}");
            checked.push((omega, s));
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(Var::X(i))
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference(1, &x(1), 2), MultiPoly::one());
        // d_1(x1^2 x2) = x1 x2
        let p = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(divided_difference(1, &p, 2), &x(1) * &x(2));
        // kernel on symmetric input
        let sym = &(&x(1) * &x(2)) + &(&x(1) + &x(2));
        assert!(divided_difference(1, &sym, 2).is_zero());
    }

    #[test]
    fn l_sends_delta_to_one() {
        for n in 2..=4usize {
            let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
            let p = x_monomial(&delta);
            assert_eq!(
                l_operator(&p, n, LMethod::Antisymmetrize).unwrap(),
                MultiPoly::one()
            );
            assert_eq!(
                l_operator(&p, n, LMethod::ComposedDivDiff).unwrap(),
                MultiPoly::one()
            );
        }
    }

    #[test]
    fn l_kills_decreasing_non_staircase() {
        // xi weakly decreasing but not lambda + delta: repeated exponents
        let p = x_monomial(&[2, 2, 0]);
        assert!(l_operator(&p, 3, LMethod::Antisymmetrize).unwrap().is_zero());
        let p = x_monomial(&[3, 1, 1]);
        assert!(l_operator(&p, 3, LMethod::ComposedDivDiff).unwrap().is_zero());
    }

    #[test]
    fn schur_small() {
        let s1 = schur(&Partition::new(vec![1]), 2).unwrap();
        assert_eq!(s1, &x(1) + &x(2));
        let empty = schur(&Partition::new(vec![]), 3).unwrap();
        assert_eq!(empty, MultiPoly::one());
        assert_eq!(
            schur(&Partition::new(vec![1, 1, 1]), 2),
            Err(DivDiffError::TooManyParts)
        );
    }

    #[test]
    fn bialternant_for_single_row() {
        // antisym(x1^2) over S_2 divided by Delta_2 = x1 + x2 = Sh_(1)
        let anti = antisymmetrize(&(&x(1) * &x(1)), 2);
        let q = exact_divide(&anti, &(&x(1) - &x(2))).unwrap();
        assert_eq!(q, &x(1) + &x(2));
    }

    #[test]
    fn flag_classes() {
        assert_eq!(flag_class_exact(2).unwrap().to_string(), "2*a1");
        assert_eq!(
            flag_class_exact(3).unwrap().to_string(),
            "6*a1^3 + 6*a1*a2 - 6*a3"
        );
        assert_eq!(flag_class_exact(6), Err(DivDiffError::OutOfRange));
    }

    #[test]
    fn grassmann_22_class() {
        let c = grassmann_class_exact(2, 2).unwrap();
        assert_eq!(
            c.to_string(),
            "6*a1^4 + 24*a1^2*a2 + 4*a1*a3 + 14*a2^2 - 20*a4"
        );
    }

    #[test]
    fn grassmann_11_is_cp1() {
        assert_eq!(grassmann_class_exact(1, 1).unwrap().to_string(), "2*a1");
    }

    #[test]
    fn flag4_s_1_5() {
        let c = flag_class_exact(4).unwrap();
        let omega = OmegaIndex::new(vec![1, 0, 0, 0, 1]);
        assert_eq!(c.coefficient(&omega), BigInt::from(80));
    }

    #[test]
    fn flag4_vanishing() {
        let checked = flag_vanishing_suite(4).unwrap();
        assert!(!checked.is_empty());
        // s_m (top) must be among the checked entries
        let top = OmegaIndex::new(vec![0, 0, 0, 0, 0, 1]);
        assert!(checked.iter().any(|(w, _)| *w == top));
    }
}
