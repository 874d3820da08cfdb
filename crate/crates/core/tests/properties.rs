//! Randomized algebraic property checks for the polynomial layer and the
//! antisymmetrization operator.

use proptest::prelude::*;

use cobord::divdiff::{antisymmetrize, divided_difference, l_operator, LMethod};
use cobord::exactalg::{
    exact_divide, rat, BigRat, Monomial, MultiPoly, TruncSeries, Var,
};

/// Random sparse polynomial in x1..=xk and a1..=a2 with small integer
/// coefficients and exponents.
fn poly(k: u32, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (
        prop::collection::vec(0..=max_exp, k as usize),
        0..=max_exp,
        -9i64..=9,
    );
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut p = MultiPoly::zero();
        for (xexps, aexp, c) in terms {
            let mut factors: Vec<(Var, u32)> = xexps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, &e)| (Var::X(i as u32 + 1), e))
                .collect();
            if aexp > 0 {
                factors.push((Var::A(1), aexp));
            }
            p = &p + &MultiPoly::term(Monomial::from_factors(factors), rat(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 3, 4), b in poly(3, 3, 4), c in poly(3, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), MultiPoly::zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert_eq!(&a * &MultiPoly::zero(), MultiPoly::zero());
    }

    #[test]
    fn division_inverts_multiplication(p in poly(3, 3, 4), d in poly(3, 2, 3)) {
        prop_assume!(!d.is_zero());
        let prod = &p * &d;
        prop_assert_eq!(exact_divide(&prod, &d).unwrap(), p);
    }

    #[test]
    fn truncated_mul_matches_full_product(
        a in prop::collection::vec(poly(2, 2, 3), 5),
        b in prop::collection::vec(poly(2, 2, 3), 5),
    ) {
        // oracle: encode t as the variable x9, multiply fully, read back
        let order = 4usize;
        let t = MultiPoly::var(Var::X(9));
        let encode = |cs: &[MultiPoly]| {
            let mut acc = MultiPoly::zero();
            let mut pw = MultiPoly::one();
            for c in cs {
                acc = &acc + &(c * &pw);
                pw = &pw * &t;
            }
            acc
        };
        let full = &encode(&a) * &encode(&b);
        let sa = TruncSeries::from_coeffs(a);
        let sb = TruncSeries::from_coeffs(b);
        let prod = sa.mul(&sb);
        for l in 0..=order {
            // coefficient of x9^l in the full product
            let mut want = MultiPoly::zero();
            for (m, c) in full.terms() {
                let mut deg9 = 0;
                let mut rest: Vec<(Var, u32)> = Vec::new();
                for &(v, e) in m.factors() {
                    if v == Var::X(9) {
                        deg9 = e;
                    } else {
                        rest.push((v, e));
                    }
                }
                if deg9 as usize == l {
                    want = &want + &MultiPoly::term(Monomial::from_factors(rest), c.clone());
                }
            }
            prop_assert_eq!(prod.coeff(l), &want);
        }
    }

    #[test]
    fn l_methods_agree_and_l_is_linear(p in poly(3, 4, 4), q in poly(3, 4, 4)) {
        let n = 3;
        let la = l_operator(&p, n, LMethod::Antisymmetrize).unwrap();
        let lc = l_operator(&p, n, LMethod::ComposedDivDiff).unwrap();
        prop_assert_eq!(&la, &lc);
        let sum = l_operator(&(&p + &q), n, LMethod::Antisymmetrize).unwrap();
        let parts = &la + &l_operator(&q, n, LMethod::Antisymmetrize).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn l_kills_transposition_symmetrized(p in poly(3, 4, 4), i in 1u32..3) {
        // L(p + s_i p) = 0 because L changes sign under transpositions
        let sym = &p + &p.swap_x(i, i + 1, 3);
        let img = l_operator(&sym, 3, LMethod::Antisymmetrize).unwrap();
        prop_assert!(img.is_zero());
    }

    #[test]
    fn l_is_a_module_map_over_symmetric_functions(p in poly(3, 3, 3)) {
        // e1 = x1 + x2 + x3 is symmetric, so it passes through L
        let e1 = &(&MultiPoly::var(Var::X(1)) + &MultiPoly::var(Var::X(2)))
            + &MultiPoly::var(Var::X(3));
        let lhs = l_operator(&(&e1 * &p), 3, LMethod::Antisymmetrize).unwrap();
        let rhs = &e1 * &l_operator(&p, 3, LMethod::Antisymmetrize).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_squares_to_zero(p in poly(3, 4, 4), i in 1u32..3) {
        let once = divided_difference(i, &p, 3);
        let twice = divided_difference(i, &once, 3);
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn antisymmetrization_is_alternating(p in poly(3, 3, 4), i in 1u32..3) {
        let anti = antisymmetrize(&p, 3);
        prop_assert_eq!(anti.swap_x(i, i + 1, 3), -&anti);
    }

    #[test]
    fn scale_distributes(p in poly(3, 3, 4), c in -9i64..=9, d in -9i64..=9) {
        let lhs = p.scale(&(rat(c) + rat(d)));
        let rhs = &p.scale(&rat(c)) + &p.scale(&rat(d));
        prop_assert_eq!(lhs, rhs);
        let one: BigRat = rat(1);
        prop_assert_eq!(p.scale(&one), p.clone());
    }
}
