//! Exact-arithmetic engine for complex cobordism classes of torus manifolds.
//!
//! Given the sign/weight data at the isolated fixed points of a torus action
//! (or a named unitary quotient `U(n)/(U(n_1)x...xU(n_s))` from which that
//! data is generated), the [`genus`] module evaluates the localized genus at a
//! guaranteed-generic rational point and extracts the cobordism class
//! `[M] = sum s_omega a^omega` together with all characteristic numbers
//! `s_omega`. The [`symmchern`] module converts between `s`-numbers and Chern
//! numbers; the [`divdiff`] module provides an independent exact route for
//! flag and Grassmann manifolds through divided difference operators.
//!
//! All arithmetic is exact: big rationals internally, with integrality
//! asserted at the cobordism-class boundary.

#![no_std]

extern crate alloc;

pub mod divdiff;
pub mod exactalg;
pub mod genus;
pub mod rootdata;
pub mod symmchern;

pub use exactalg::{BigInt, BigRat, CobordismClass, MultiPoly, OmegaIndex, TruncSeries, Var};
pub use rootdata::{Builtin, FixedPointDatum, SpaceSpec, Weight};
