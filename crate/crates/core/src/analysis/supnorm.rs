use num_complex::Complex64;

use super::DiskDomain;
use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::GaussianRational;
use crate::system::Step;

/// Degree in `x` at which series steps are cut for norm estimates.
pub(crate) const SERIES_NORM_DEGREE: usize = 60;

/// How a sup norm was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupNormMethod {
    /// `Σ |c| ρ^j R^k` about the disk centers; an upper bound.
    CoefficientMajorant,
    /// Max over boundary samples; a lower estimate, diagnostic only.
    BoundaryGrid,
    /// All recentered coefficients are `≥ 0`, so the sup is the value at
    /// the far corner `(c_y + ρ, c_x + R)`.
    PositiveExact,
}

impl SupNormMethod {
    pub fn name(self) -> &'static str {
        match self {
            SupNormMethod::CoefficientMajorant => "coefficient-majorant",
            SupNormMethod::BoundaryGrid => "boundary-grid",
            SupNormMethod::PositiveExact => "positive-exact",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupNormEstimate {
    pub value: f64,
    pub method: SupNormMethod,
    /// True when `value` is a guaranteed upper bound.
    pub rigorous: bool,
}

impl SupNormEstimate {
    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }
}

/// Which method to use; `Auto` picks positive-exact when it applies and
/// the coefficient majorant otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormRequest {
    Auto,
    Use(SupNormMethod),
}

fn exact_center(z: Complex64) -> Result<GaussianRational> {
    GaussianRational::from_complex(z).ok_or_else(|| Error::Domain(format!("disk center {z} is not finite")))
}

fn rpow(r: f64, k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        r.powi(k as i32)
    }
}

fn is_nonneg(c: &GaussianRational) -> bool {
    c.is_nonnegative_real()
}

/// Sup of `|p|` over the closed disk.
pub fn sup_norm_uni(p: &UniPoly, domain: &DiskDomain, request: NormRequest) -> Result<SupNormEstimate> {
    let bi = BiPoly::from_rows(vec![p.clone()]);
    let ydummy = DiskDomain { center: Complex64::new(0.0, 0.0), radius: 1.0 };
    sup_norm_bi(&bi, &ydummy, domain, request)
}

/// Sup of `|f(y, x)|` over the closed polydisk `V × U`.
pub fn sup_norm_bi(f: &BiPoly, v: &DiskDomain, u: &DiskDomain, request: NormRequest) -> Result<SupNormEstimate> {
    if f.is_zero() {
        let method = match request {
            NormRequest::Auto => SupNormMethod::PositiveExact,
            NormRequest::Use(m) => m,
        };
        return Ok(SupNormEstimate { value: 0.0, method, rigorous: method != SupNormMethod::BoundaryGrid });
    }
    if request == NormRequest::Use(SupNormMethod::BoundaryGrid) {
        return Ok(boundary_grid(f, v, u));
    }
    let centered = f.recenter(&exact_center(v.center)?, &exact_center(u.center)?);
    let positive = centered.terms().all(|(_, _, c)| is_nonneg(c));
    let method = match request {
        NormRequest::Auto if positive => SupNormMethod::PositiveExact,
        NormRequest::Auto => SupNormMethod::CoefficientMajorant,
        NormRequest::Use(SupNormMethod::PositiveExact) if !positive => {
            return Err(Error::MethodInapplicable(
                "positive-exact needs every recentered coefficient to be a nonnegative real".into(),
            ))
        }
        NormRequest::Use(m) => m,
    };
    let value = centered
        .terms()
        .map(|(j, k, c)| c.to_complex().norm() * rpow(v.radius, j) * rpow(u.radius, k))
        .sum();
    Ok(SupNormEstimate { value, method, rigorous: true })
}

fn boundary_grid(f: &BiPoly, v: &DiskDomain, u: &DiskDomain) -> SupNormEstimate {
    let method = SupNormMethod::BoundaryGrid;
    if !v.is_bounded() || !u.is_bounded() {
        return SupNormEstimate { value: f64::INFINITY, method, rigorous: false };
    }
    let ff = f.to_float();
    let ys = if f.deg_y().unwrap_or(0) == 0 { vec![v.center] } else { v.boundary(64) };
    let xs = if f.deg_x().unwrap_or(0) == 0 { vec![u.center] } else { u.boundary(64) };
    let mut value: f64 = 0.0;
    for y in &ys {
        for x in &xs {
            value = value.max(ff.eval(y, x).norm());
        }
    }
    SupNormEstimate { value, method, rigorous: false }
}

/// A polynomial view of a symbolic step for norm estimates, and whether
/// it is exact (series steps are cut at [`SERIES_NORM_DEGREE`]).
pub(crate) fn step_polynomial(step: &Step) -> Result<(BiPoly, bool)> {
    match step {
        Step::Polynomial(p) => Ok((p.clone(), true)),
        Step::Series(s) => Ok((s.truncate(SERIES_NORM_DEGREE).poly_in_y, false)),
        Step::Callable(_) => Err(Error::NotCheckable("callable steps have no coefficients".into())),
    }
}

/// Sup norm of a step over `V × U`.
pub fn sup_norm_step(step: &Step, v: &DiskDomain, u: &DiskDomain, request: NormRequest) -> Result<SupNormEstimate> {
    let (p, exact) = step_polynomial(step)?;
    let mut est = sup_norm_bi(&p, v, u, request)?;
    est.rigorous &= exact;
    Ok(est)
}
