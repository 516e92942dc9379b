use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;

use super::{BiPoly, UniPoly};
use crate::scalar::{binomial, GaussianRational};

type CoeffFn = dyn Fn(usize) -> GaussianRational + Send + Sync;

/// A power series in `x` about 0, given lazily by its coefficient function.
#[derive(Clone)]
pub struct XSeries(Arc<CoeffFn>);

impl XSeries {
    pub fn from_fn(f: impl Fn(usize) -> GaussianRational + Send + Sync + 'static) -> Self {
        Self(Arc::new(f))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self::from_fn(move |k| p.coeff(k))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_| GaussianRational::zero())
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        (self.0)(k)
    }

    pub fn truncate(&self, degree: usize) -> UniPoly {
        UniPoly::new((0..=degree).map(|k| self.coeff(k)).collect())
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        let inner = self.clone();
        Self::from_fn(move |k| &inner.coeff(k) * &c)
    }

    /// The series of `s(alpha * x)`.
    pub fn dilate(&self, alpha: GaussianRational) -> Self {
        let inner = self.clone();
        Self::from_fn(move |k| &inner.coeff(k) * &alpha.pow(k as u32))
    }

    /// `Σ_m weights[m] · series[m]`
    pub fn combination(terms: Vec<(GaussianRational, XSeries)>) -> Self {
        Self::from_fn(move |k| terms.iter().map(|(w, s)| w * &s.coeff(k)).sum())
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSeries[{:?}, ...]", self.truncate(4))
    }
}

/// A step `f(y, x) = Σ_j S_j(x) y^j` whose x-dependence is a power series
/// (polynomial in `y`, analytic in `x`). Materialized on demand at a chosen
/// truncation degree.
#[derive(Clone, Debug)]
pub struct SeriesStep {
    y_coeffs: Vec<XSeries>,
}

impl SeriesStep {
    pub fn new(y_coeffs: Vec<XSeries>) -> Self {
        Self { y_coeffs }
    }

    /// `s(x) · p(y)`.
    pub fn product(s: &XSeries, p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| s.scale(c.clone())).collect())
    }

    pub fn y_coeffs(&self) -> &[XSeries] {
        &self.y_coeffs
    }

    pub fn deg_y(&self) -> usize {
        self.y_coeffs.len().saturating_sub(1)
    }

    pub fn truncate(&self, degree: usize) -> TruncatedSeriesStep {
        TruncatedSeriesStep {
            poly_in_y: BiPoly::from_rows(self.y_coeffs.iter().map(|s| s.truncate(degree)).collect()),
            truncation_degree: degree,
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.y_coeffs.iter().map(|s| s.scale(c.clone())).collect())
    }

    /// `f(y, alpha * x)`.
    pub fn dilate_x(&self, alpha: &GaussianRational) -> Self {
        Self::new(self.y_coeffs.iter().map(|s| s.dilate(alpha.clone())).collect())
    }

    /// `f(alpha * y + beta, x)`.
    pub fn compose_y_affine(&self, alpha: &GaussianRational, beta: &GaussianRational) -> Self {
        let n = self.y_coeffs.len();
        let coeffs = (0..n)
            .map(|m| {
                let terms = (m..n)
                    .map(|j| {
                        let w = GaussianRational::from_real(binomial(j as u64, m as u64).into())
                            * alpha.pow(m as u32)
                            * beta.pow((j - m) as u32);
                        (w, self.y_coeffs[j].clone())
                    })
                    .filter(|(w, _)| !w.is_zero())
                    .collect();
                XSeries::combination(terms)
            })
            .collect();
        Self::new(coeffs)
    }
}

/// A series step materialized up to `truncation_degree` in `x`. All
/// arithmetic through it truncates at that degree; coefficients at or
/// below it are exact.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeriesStep {
    pub poly_in_y: BiPoly,
    pub truncation_degree: usize,
}

impl TruncatedSeriesStep {
    pub fn substitute_y(&self, q: &UniPoly) -> UniPoly {
        self.poly_in_y.substitute_y(&q.truncate(self.truncation_degree), Some(self.truncation_degree))
    }

    pub fn eval_complex(&self, y: Complex64, x: Complex64) -> Complex64 {
        self.poly_in_y.eval_complex(y, x)
    }
}
