//! Dense polynomial and truncated-series arithmetic over complex scalars.
//!
//! The exact engine uses [`GaussianRational`] coefficients; the float mode
//! (`Complex64`) exists for the numeric engine and for sampling. The two
//! modes are distinct types, so they cannot be mixed by accident.

mod bi;
pub mod chebyshev;
mod series;
mod uni;

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

pub use bi::{BiPoly, Variable};
pub use chebyshev::{chebyshev_t, chebyshev_t_plus, chebyshev_u};
pub use series::{SeriesStep, TruncatedSeriesStep, XSeries};
pub use uni::UniPoly;

/// Coefficient field of a polynomial.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self += a * b`
    fn accumulate(&mut self, a: &Self, b: &Self);
    fn div_int(&self, n: u64) -> Self;
    fn from_int(n: i64) -> Self;
    fn to_complex(&self) -> Complex64;
}

impl Coeff for GaussianRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += &(a * b);
    }
    fn div_int(&self, n: u64) -> Self {
        self * &GaussianRational::ratio(1, n as i64)
    }
    fn from_int(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
    fn to_complex(&self) -> Complex64 {
        GaussianRational::to_complex(self)
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn div_int(&self, n: u64) -> Self {
        self / n as f64
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}
