//! The localization engine: evaluates the localized genus at a
//! guaranteed-generic rational point, checks the vanishing and integrality
//! constraints, and extracts the cobordism class with all `s_omega`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactalg::{
    eval_linear_form, rat, universal_f, BigInt, BigRat, CobordismClass, MultiPoly, OmegaIndex,
    TruncSeries,
};
use crate::rootdata::{orbit_fixed_points, FixedPointDatum, SpaceSpec, SpecError};
use crate::symmchern::f_omega;

/// A rational evaluation point with `<w, x> != 0` for every weight `w` of
/// the fixed-point table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericPoint {
    coordinates: Vec<BigRat>,
    /// Base of the power construction, when the point is `(1, M, ..., M^{k-1})`.
    basis: Option<i64>,
}

impl GenericPoint {
    /// A caller-supplied point; genericity is checked against the table when
    /// the point is used.
    pub fn explicit(coordinates: Vec<BigRat>) -> Self {
        GenericPoint { coordinates, basis: None }
    }

    fn powers(m: i64, k: usize) -> Self {
        let mut coords = Vec::with_capacity(k);
        let mut pw = BigRat::one();
        let base = rat(m);
        for _ in 0..k {
            coords.push(pw.clone());
            pw *= &base;
        }
        GenericPoint { coordinates: coords, basis: Some(m) }
    }

    pub fn coordinates(&self) -> &[BigRat] {
        &self.coordinates
    }

    pub fn basis(&self) -> Option<i64> {
        self.basis
    }
}

/// Deterministic generic point `x = (1, M, M^2, ..., M^{k-1})` with
/// `M = 1 + max |weight component|`. A base-M digit argument shows
/// `<w, x> != 0` for every nonzero integer weight with components below `M`
/// in absolute value.
pub fn choose_generic_point(table: &[FixedPointDatum], k: usize) -> GenericPoint {
    let max_abs = table
        .iter()
        .flat_map(|p| p.weights.iter())
        .flat_map(|w| w.components().iter())
        .map(|c| c.unsigned_abs())
        .max()
        .unwrap_or(0);
    GenericPoint::powers(max_abs as i64 + 1, k)
}

/// Errors from the genus computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusError {
    /// Some `<w, x> = 0` at the evaluation point.
    SingularPoint,
    /// A coefficient of `t^l`, `l < n`, is nonzero: the input table cannot
    /// come from a tangentially stable complex torus manifold.
    VanishingViolation { level: usize },
    /// The `t^n` coefficient is not integral: same diagnosis.
    IntegralityViolation,
    /// `|omega| != n` in a single-number query.
    BadOmega,
    Spec(SpecError),
}

impl fmt::Display for GenusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusError::SingularPoint => write!(f, "evaluation point annihilates a weight"),
            GenusError::VanishingViolation { level } => {
                write!(f, "coefficient of t^{level} does not vanish")
            }
            GenusError::IntegralityViolation => write!(f, "top coefficient is not integral"),
            GenusError::BadOmega => write!(f, "omega does not have graded degree n"),
            GenusError::Spec(e) => write!(f, "{e}"),
        }
    }
}

impl From<SpecError> for GenusError {
    fn from(e: SpecError) -> Self {
        GenusError::Spec(e)
    }
}

/// Full report of one genus run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub cobordism_class: CobordismClass,
    /// Exactly the term map of the class: `s_omega` is the coefficient of
    /// `a^omega`.
    pub s_numbers: BTreeMap<OmegaIndex, BigInt>,
    pub lower_coefficients_vanished: bool,
    pub integrality_passed: bool,
    pub point_used: GenericPoint,
    /// `Some(true)` when the optional second-point recomputation agreed.
    pub second_point_agreed: Option<bool>,
}

fn weights_at_point(
    point: &FixedPointDatum,
    x: &[BigRat],
) -> Result<Vec<BigRat>, GenusError> {
    let mut ts = Vec::with_capacity(point.weights.len());
    for w in &point.weights {
        let t = eval_linear_form(w.components(), x);
        if t.is_zero() {
            return Err(GenusError::SingularPoint);
        }
        ts.push(t);
    }
    Ok(ts)
}

/// The localized series `sum_p sign(p) prod_j f(t <w_j(p), x>) / <w_j(p), x>`
/// truncated at order `t^n`, coefficients in `Q[a_1, ..., a_n]`.
pub fn localized_series(
    table: &[FixedPointDatum],
    x: &GenericPoint,
    n: usize,
) -> Result<TruncSeries, GenusError> {
    let mut total = TruncSeries::zero(n);
    for p in table {
        let ts = weights_at_point(p, x.coordinates())?;
        let mut prod = TruncSeries::one(n);
        let mut denom = BigRat::one();
        for t in &ts {
            prod = prod.mul(&universal_f(n, t));
            denom *= t;
        }
        let mut scale = denom.recip();
        if p.sign < 0 {
            scale = -scale;
        }
        total = total.add(&prod.scale(&scale));
    }
    Ok(total)
}

/// Options for [`cobordism_class`].
#[derive(Clone, Debug, Default)]
pub struct GenusOptions {
    /// Override the deterministic generic point.
    pub point: Option<GenericPoint>,
    /// Recompute at a second generic point and compare.
    pub check_independence: bool,
}

/// The full pipeline: table, generic point, localized series, vanishing and
/// integrality checks, class extraction.
pub fn cobordism_class(spec: &SpaceSpec, opts: &GenusOptions) -> Result<GenusReport, GenusError> {
    let table = orbit_fixed_points(spec)?;
    let n = spec.half_dimension();
    let k = spec.rank();
    let point = match &opts.point {
        Some(p) => p.clone(),
        None => choose_generic_point(&table, k),
    };
    let class = class_at_point(&table, &point, n)?;
    let second_point_agreed = if opts.check_independence {
        let m = point.basis().unwrap_or_else(|| {
            // explicit point: fall back to the deterministic construction
            choose_generic_point(&table, k).basis().unwrap_or(2)
        });
        let second = GenericPoint::powers(m + 1, k);
        let class2 = class_at_point(&table, &second, n)?;
        Some(class2 == class)
    } else {
        None
    };
    let s_numbers: BTreeMap<OmegaIndex, BigInt> =
        class.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    Ok(GenusReport {
        cobordism_class: class,
        s_numbers,
        lower_coefficients_vanished: true,
        integrality_passed: true,
        point_used: point,
        second_point_agreed,
    })
}

fn class_at_point(
    table: &[FixedPointDatum],
    point: &GenericPoint,
    n: usize,
) -> Result<CobordismClass, GenusError> {
    let series = localized_series(table, point, n)?;
    for l in 0..n {
        if !series.coeff(l).is_zero() {
            return Err(GenusError::VanishingViolation { level: l });
        }
    }
    CobordismClass::from_poly(series.coeff(n), n).map_err(|_| GenusError::IntegralityViolation)
}

/// A single `s_omega`, computed without materializing the whole class:
/// evaluates `f_omega` at the rational weights per fixed point and sums.
pub fn s_number(spec: &SpaceSpec, omega: &OmegaIndex) -> Result<BigInt, GenusError> {
    s_number_at(spec, omega, None)
}

/// Like [`s_number`] with an optional caller-supplied evaluation point.
pub fn s_number_at(
    spec: &SpaceSpec,
    omega: &OmegaIndex,
    point: Option<&GenericPoint>,
) -> Result<BigInt, GenusError> {
    let n = spec.half_dimension();
    if omega.graded_degree() as usize != n {
        return Err(GenusError::BadOmega);
    }
    let table = orbit_fixed_points(spec)?;
    let chosen;
    let point = match point {
        Some(p) => p,
        None => {
            chosen = choose_generic_point(&table, spec.rank());
            &chosen
        }
    };
    let mut acc = BigRat::zero();
    for p in &table {
        let ts = weights_at_point(p, point.coordinates())?;
        let num = f_omega(omega, &ts);
        let den: BigRat = ts.iter().fold(BigRat::one(), |a, t| a * t);
        let mut term = num / den;
        if p.sign < 0 {
            term = -term;
        }
        acc += term;
    }
    if !acc.is_integer() {
        return Err(GenusError::IntegralityViolation);
    }
    Ok(acc.to_integer())
}

/// Residuals of every lower-degree coefficient at the generic point; the
/// table satisfies the necessary rigidity constraints iff all residuals are
/// zero. Reports rather than throws.
pub fn verify_constraints(table: &[FixedPointDatum]) -> Vec<(usize, MultiPoly)> {
    if table.is_empty() {
        return Vec::new();
    }
    let n = table[0].weights.len();
    let k = table[0].weights[0].rank();
    let point = choose_generic_point(table, k);
    let series = localized_series(table, &point, n).expect("base-M point is nonsingular");
    (0..n).map(|l| (l, series.coeff(l).clone())).collect()
}
