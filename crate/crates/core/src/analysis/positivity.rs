use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::scalar::GaussianRational;
use crate::system::{ApproxSystem, Step};

/// Depth in `x` used for series steps when no derivative depth is given.
pub const SERIES_POSITIVITY_DEPTH: usize = 24;

/// Where a check failed.
#[derive(Clone, Debug, PartialEq)]
pub enum Site {
    /// The initial value `a_i`.
    Value,
    /// `(D_1^k D_2^l f_i)(a_{i+1}, x0)`.
    Derivative { k: usize, l: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub index: usize,
    pub site: Site,
    /// The offending value (`a_i`, or the derivative value `k! l! c`).
    pub value: GaussianRational,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.site {
            Site::Value => write!(f, "a_{} = {}", self.index, self.value),
            Site::Derivative { k, l } => {
                write!(f, "D_1^{k} D_2^{l} f_{} at (a_{}, x0) = {}", self.index, self.index + 1, self.value)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PositivityVerdict {
    /// `up_to_truncation` is set when a series step was only checked to a
    /// finite depth.
    Positive { up_to_truncation: bool },
    Counterexample(Counterexample),
}

impl PositivityVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, PositivityVerdict::Positive { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DominationVerdict {
    Dominates { up_to_truncation: bool },
    /// `value` of the dominated system exceeds `bound` of the majorant in
    /// absolute value.
    Counterexample { at: Counterexample, bound: GaussianRational },
}

impl DominationVerdict {
    pub fn dominates(&self) -> bool {
        matches!(self, DominationVerdict::Dominates { .. })
    }
}

fn derivative_value(c: &GaussianRational, k: usize, l: usize) -> GaussianRational {
    let scale = GaussianRational::factorial(k as u32) * GaussianRational::factorial(l as u32);
    c * &GaussianRational::from_real(BigRational::from_integer(scale))
}

/// `f_i` recentered at `(a_{i+1}, x0)`: its `u^k v^l` coefficient is
/// `(D_1^k D_2^l f_i)(a_{i+1}, x0) / (k! l!)`. Series steps are cut at
/// `depth` in `x`; the flag reports whether the result is complete.
fn recentered(step: &Step, y0: &GaussianRational, x0: &GaussianRational, depth: Option<usize>) -> Result<(BiPoly, bool)> {
    match step {
        Step::Polynomial(p) => Ok((p.recenter(y0, x0), true)),
        Step::Series(s) => {
            if !x0.is_zero() {
                return Err(Error::Unsupported("series steps need the basepoint at 0".into()));
            }
            let cut = depth.unwrap_or(SERIES_POSITIVITY_DEPTH);
            Ok((s.truncate(cut).poly_in_y.recenter(y0, x0), false))
        }
        Step::Callable(_) => Err(Error::NotCheckable("callable steps have no derivatives to inspect".into())),
    }
}

fn within(depth: Option<usize>, k: usize, l: usize) -> bool {
    depth.is_none_or(|d| k + l <= d)
}

/// Checks `a_i ≥ 0` and nonnegativity of every mixed derivative of `f_i`
/// at `(a_{i+1}, x0)`, for `i < index_depth`. With `derivative_depth =
/// None` polynomial steps are checked completely.
pub fn is_positive(sys: &ApproxSystem, index_depth: usize, derivative_depth: Option<usize>) -> Result<PositivityVerdict> {
    let mut truncated = false;
    for i in 0..index_depth {
        let a = sys.value(i);
        if !a.is_nonnegative_real() {
            return Ok(PositivityVerdict::Counterexample(Counterexample { index: i, site: Site::Value, value: a }));
        }
        let (poly, complete) = recentered(&sys.step(i), &sys.value(i + 1), &sys.basepoint, derivative_depth)?;
        truncated |= !complete;
        for (k, l, c) in poly.terms() {
            if within(derivative_depth, k, l) && !c.is_nonnegative_real() {
                return Ok(PositivityVerdict::Counterexample(Counterexample {
                    index: i,
                    site: Site::Derivative { k, l },
                    value: derivative_value(c, k, l),
                }));
            }
        }
    }
    Ok(PositivityVerdict::Positive { up_to_truncation: truncated })
}

fn dominated(c: &GaussianRational, bound: &GaussianRational) -> bool {
    c.norm_sqr() <= bound.norm_sqr()
}

/// Checks `|a_i| ≤ ã_i` and `|D f_i(a_{i+1}, x0)| ≤ D f̃_i(ã_{i+1}, x0)`
/// for all mixed derivatives, `i < index_depth`.
pub fn dominates(
    tilde: &ApproxSystem,
    sys: &ApproxSystem,
    index_depth: usize,
    derivative_depth: Option<usize>,
) -> Result<DominationVerdict> {
    if let PositivityVerdict::Counterexample(c) = is_positive(tilde, index_depth, derivative_depth)? {
        return Err(Error::Precondition(format!("the dominating system is not positive: {c}")));
    }
    let mut truncated = false;
    for i in 0..index_depth {
        let (a, at) = (sys.value(i), tilde.value(i));
        if !dominated(&a, &at) {
            return Ok(DominationVerdict::Counterexample {
                at: Counterexample { index: i, site: Site::Value, value: a },
                bound: at,
            });
        }
        let (p, c1) = recentered(&sys.step(i), &sys.value(i + 1), &sys.basepoint, derivative_depth)?;
        let (pt, c2) = recentered(&tilde.step(i), &tilde.value(i + 1), &tilde.basepoint, derivative_depth)?;
        truncated |= !(c1 && c2);
        for (k, l, c) in p.terms() {
            let bound = pt.coeff(k, l);
            if within(derivative_depth, k, l) && !dominated(c, &bound) {
                return Ok(DominationVerdict::Counterexample {
                    at: Counterexample { index: i, site: Site::Derivative { k, l }, value: derivative_value(c, k, l) },
                    bound: derivative_value(&bound, k, l),
                });
            }
        }
    }
    Ok(DominationVerdict::Dominates { up_to_truncation: truncated })
}

/// `|re| + |im|`, a rational upper bound for `|z|`.
fn l1(z: &GaussianRational) -> GaussianRational {
    GaussianRational::from_real(z.l1_norm())
}

/// The positive system with `ã_i = |Re a_i| + |Im a_i|` and `f̃_i` whose
/// coefficients about `(ã_{i+1}, x0)` are the same `l1` magnitudes as
/// those of `f_i` about `(a_{i+1}, x0)`. It dominates `sys` by
/// construction. Series steps are replaced by their majorant cut at
/// [`SERIES_POSITIVITY_DEPTH`].
pub fn canonical_majorant(sys: &ApproxSystem) -> Result<ApproxSystem> {
    if !sys.step(0).is_symbolic() {
        return Err(Error::NotCheckable("callable steps have no coefficients".into()));
    }
    let values = sys.values.clone();
    let steps = sys.steps.clone();
    let x0 = sys.basepoint.clone();
    let new_values = {
        let values = values.clone();
        Arc::new(move |i| l1(&values(i)))
    };
    let new_steps = Arc::new(move |i| {
        let (centered, _) = recentered(&steps(i), &values(i + 1), &x0, Some(SERIES_POSITIVITY_DEPTH))
            .expect("symbolic step");
        let magnitudes = centered.map(l1);
        let one = GaussianRational::from_integer(1);
        Step::Polynomial(magnitudes.compose_y_affine(&one, &-l1(&values(i + 1))).compose_x_affine(&one, &-&x0))
    });
    let mut out = sys.clone();
    out.values = new_values;
    out.steps = new_steps;
    out.codomains = None;
    out.reference = None;
    out.origin = crate::system::Origin::Custom;
    Ok(out)
}

/// `k! l!` as a big integer; exposed for callers that report derivative
/// values.
pub fn derivative_scale(k: usize, l: usize) -> BigInt {
    GaussianRational::factorial(k as u32) * GaussianRational::factorial(l as u32)
}
