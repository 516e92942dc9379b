use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, SeriesStep, UniPoly};
use crate::scalar::GaussianRational;

pub type Evaluator = Arc<dyn Fn(Complex64, Complex64) -> Complex64 + Send + Sync>;

/// Degree in `x` used when a series step is evaluated in float mode.
pub(crate) const FLOAT_SERIES_DEGREE: usize = 48;

/// One `f_i(y, x)`.
#[derive(Clone)]
pub enum Step {
    Polynomial(BiPoly),
    /// Polynomial in `y`, power series in `x` about 0.
    Series(SeriesStep),
    /// Float-only; usable by the numeric engine but not symbolically.
    Callable(Evaluator),
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Polynomial(p) => write!(f, "Polynomial({p:?})"),
            Step::Series(s) => write!(f, "Series({:?})", s.truncate(4).poly_in_y),
            Step::Callable(_) => f.write_str("Callable(..)"),
        }
    }
}

/// A step prepared for repeated float evaluation.
pub(crate) enum FloatStep {
    Poly(BiPoly<Complex64>),
    Callable(Evaluator),
}

impl FloatStep {
    pub(crate) fn eval(&self, y: Complex64, x: Complex64) -> Complex64 {
        match self {
            FloatStep::Poly(p) => p.eval_complex(y, x),
            FloatStep::Callable(f) => f(y, x),
        }
    }
}

impl Step {
    pub fn callable(f: impl Fn(Complex64, Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        Step::Callable(Arc::new(f))
    }

    /// `f(y, x) = p(y)`.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        Step::Polynomial(BiPoly::from_y_poly(p))
    }

    pub fn is_symbolic(&self) -> bool {
        !matches!(self, Step::Callable(_))
    }

    /// Degree in `y`; `None` for callable steps and the zero step.
    pub fn deg_y(&self) -> Option<usize> {
        match self {
            Step::Polynomial(p) => p.deg_y(),
            Step::Series(s) => (0..s.y_coeffs().len())
                .rev()
                .find(|&j| !s.y_coeffs()[j].truncate(16).is_zero()),
            Step::Callable(_) => None,
        }
    }

    /// False only when the step is known to be constant in `y`.
    pub fn depends_on_y(&self) -> bool {
        match self {
            Step::Callable(_) => true,
            _ => self.deg_y().is_some_and(|d| d >= 1),
        }
    }

    pub(crate) fn to_float(&self) -> FloatStep {
        match self {
            Step::Polynomial(p) => FloatStep::Poly(p.to_float()),
            Step::Series(s) => FloatStep::Poly(s.truncate(FLOAT_SERIES_DEGREE).poly_in_y.to_float()),
            Step::Callable(f) => FloatStep::Callable(f.clone()),
        }
    }

    pub fn eval_float(&self, y: Complex64, x: Complex64) -> Complex64 {
        self.to_float().eval(y, x)
    }

    /// The integrand `t ↦ f(q(t), t)`; series steps are truncated at
    /// `truncation`.
    pub fn integrand(&self, q: &UniPoly, truncation: usize, index: usize) -> Result<UniPoly> {
        match self {
            Step::Polynomial(p) => Ok(p.substitute_y(q, None)),
            Step::Series(s) => Ok(s.truncate(truncation).substitute_y(q)),
            Step::Callable(_) => Err(Error::SymbolicUnsupported { index }),
        }
    }

    /// `α · f(y, α x + β)`: the step seen through the coordinate change
    /// `x ↦ α x + β`.
    pub fn coordinate(&self, alpha: &GaussianRational, beta: &GaussianRational) -> Result<Step> {
        Ok(match self {
            Step::Polynomial(p) => Step::Polynomial(p.compose_x_affine(alpha, beta).scale(alpha)),
            Step::Series(s) => {
                if !beta.is_zero() {
                    return Err(Error::Unsupported(
                        "series steps are expanded at 0 and only admit linear coordinate maps".into(),
                    ));
                }
                Step::Series(s.dilate_x(alpha).scale(alpha))
            }
            Step::Callable(f) => {
                let (a, b) = (alpha.to_complex(), beta.to_complex());
                let f = f.clone();
                Step::callable(move |y, x| a * f(y, a * x + b))
            }
        })
    }

    /// `a · f((y − b) / a, x)`.
    pub fn value_transform(&self, a: &GaussianRational, b: &GaussianRational) -> Result<Step> {
        let inv = a.inv().ok_or(Error::DegenerateScale)?;
        let shift = -(&inv * b);
        Ok(match self {
            Step::Polynomial(p) => Step::Polynomial(p.compose_y_affine(&inv, &shift).scale(a)),
            Step::Series(s) => Step::Series(s.compose_y_affine(&inv, &shift).scale(a)),
            Step::Callable(f) => {
                let (ac, bc) = (a.to_complex(), b.to_complex());
                let f = f.clone();
                Step::callable(move |y, x| ac * f((y - bc) / ac, x))
            }
        })
    }
}
