//! Named example systems with their target functions and closed-form
//! error bounds.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::analysis::{cosh_closed_form, exp_closed_form, log_error_bound, sinh_closed_form, DiskDomain, Parity};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::poly::{chebyshev_t_plus, chebyshev_u, BiPoly, SeriesStep, UniPoly, XSeries};
use crate::scalar::{factorial, GaussianRational};
use crate::system::{
    build_approximants, coordinate_transform, linear_transform, AffineMap, ApproxSystem, InitialValues, Order, Step,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryKind {
    Exp,
    Sinh,
    Sin,
    Cosh,
    Cos,
    DdeExp,
    Log,
    Taylor,
    Picard,
}

impl EntryKind {
    pub const ALL: [EntryKind; 9] = [
        EntryKind::Exp,
        EntryKind::Sinh,
        EntryKind::Sin,
        EntryKind::Cosh,
        EntryKind::Cos,
        EntryKind::DdeExp,
        EntryKind::Log,
        EntryKind::Taylor,
        EntryKind::Picard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EntryKind::Exp => "exp",
            EntryKind::Sinh => "sinh",
            EntryKind::Sin => "sin",
            EntryKind::Cosh => "cosh",
            EntryKind::Cos => "cos",
            EntryKind::DdeExp => "dde_exp",
            EntryKind::Log => "log",
            EntryKind::Taylor => "taylor",
            EntryKind::Picard => "picard",
        }
    }

    /// Parameter names the entry reads.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            EntryKind::DdeExp => &["alpha"],
            EntryKind::Taylor | EntryKind::Picard => &["R"],
            _ => &["p", "R"],
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            EntryKind::Exp => "g' = g(x/p)^p, g(0) = 1; target e^x",
            EntryKind::Sinh => "g' = T_p^+(g(x/p)), g(0) = 0, p even; target sinh x",
            EntryKind::Sin => "sinh system under x -> ix and y -> -iy, p even; target sin x",
            EntryKind::Cosh => "g' = sinh(x/p) U_{p-1}(g(x/p)), g(0) = 1; target cosh x",
            EntryKind::Cos => "cosh system under x -> ix; target cos x",
            EntryKind::DdeExp => "g'(x) = g(x + log(alpha)/alpha), 0 < alpha < 1; target e^(alpha x)",
            EntryKind::Log => "f_i = lambda_{p,i} y^p, a_0 = 0, a_i = 1, R < 1; target log(1/(1-x))",
            EntryKind::Taylor => "Taylor system of e^x (a_i = 1, f_i = y)",
            EntryKind::Picard => "Picard iteration for g' = g, g(0) = 1",
        }
    }

    pub fn default_params(self) -> Params {
        match self {
            EntryKind::DdeExp => Params { p: None, radius: None, alpha: Some(0.5) },
            EntryKind::Log => Params { p: Some(2), radius: Some(0.5), alpha: None },
            EntryKind::Taylor | EntryKind::Picard => Params { p: None, radius: Some(1.0), alpha: None },
            _ => Params { p: Some(2), radius: Some(1.0), alpha: None },
        }
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntryKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown catalog entry `{s}`")))
    }
}

/// Entry parameters; unset fields take the entry's defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Params {
    pub p: Option<u32>,
    pub radius: Option<f64>,
    pub alpha: Option<f64>,
}

impl Params {
    fn or(self, d: Params) -> Params {
        Params { p: self.p.or(d.p), radius: self.radius.or(d.radius), alpha: self.alpha.or(d.alpha) }
    }
}

/// How far `g^[n]` agrees with the target's power series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefixRule {
    /// Through degree `n`.
    N,
    /// Through `2n` (odd systems).
    TwoN,
    /// Through `2n + 1` (even systems).
    TwoNPlusOne,
}

impl PrefixRule {
    pub fn degree(self, n: usize) -> usize {
        match self {
            PrefixRule::N => n,
            PrefixRule::TwoN => 2 * n,
            PrefixRule::TwoNPlusOne => 2 * n + 1,
        }
    }
}

pub type Coefficients = Arc<dyn Fn(usize) -> GaussianRational + Send + Sync>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub kind: EntryKind,
    pub params: Params,
    pub system: ApproxSystem,
    /// Power series coefficients of the target about 0.
    pub taylor: Coefficients,
    pub prefix: PrefixRule,
    pub parity: Option<Parity>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry").field("kind", &self.kind).field("params", &self.params).finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// The target `g = g_0`.
    pub fn reference(&self, x: Complex64) -> Complex64 {
        self.reference_row(0, x)
    }

    pub fn reference_row(&self, i: usize, x: Complex64) -> Complex64 {
        (self.system.reference.as_ref().expect("catalog systems carry references"))(i, x)
    }

    pub fn radius(&self) -> f64 {
        self.system.radius()
    }

    /// The example's own error bound at order `n`, if it has one.
    pub fn closed_form_bound(&self, n: usize) -> Option<f64> {
        let (p, r) = (self.params.p.unwrap_or(0), self.radius());
        match self.kind {
            EntryKind::Exp => Some(exp_closed_form(p, r, n)),
            EntryKind::Sinh | EntryKind::Sin => Some(sinh_closed_form(p, r, n)),
            EntryKind::Cosh | EntryKind::Cos => Some(cosh_closed_form(p, r, n)),
            EntryKind::Log => log_error_bound(p, r, n).ok(),
            EntryKind::DdeExp | EntryKind::Taylor | EntryKind::Picard => None,
        }
    }

    pub fn prefix_degree(&self, n: usize) -> usize {
        self.prefix.degree(n)
    }
}

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

fn big_ratio(n: BigInt, d: BigInt) -> GaussianRational {
    GaussianRational::from_real(BigRational::new(n, d))
}

fn inv_factorial(k: usize) -> GaussianRational {
    factorial(k as u32).inv().expect("k! > 0")
}

/// `λ_{p,0} = 1`, `λ_{p,i} = (p^i − 1) / (p^(i+1) − p^i)`.
pub fn log_lambda(p: u32, i: usize) -> GaussianRational {
    if i == 0 {
        return GaussianRational::one();
    }
    let pi = BigInt::from(p).pow(i as u32);
    big_ratio(&pi - 1, &pi * BigInt::from(p) - &pi)
}

fn check_radius(r: f64) -> Result<f64> {
    if r.is_finite() && r > 0.0 {
        Ok(r)
    } else {
        Err(Error::Parameter(format!("R = {r} must be positive and finite")))
    }
}

fn need_p(params: &Params, min: u32, even: bool) -> Result<u32> {
    let p = params.p.ok_or_else(|| Error::Parameter("p is required".into()))?;
    if p < min {
        return Err(Error::Parameter(format!("p = {p} must be at least {min}")));
    }
    if even && p % 2 != 0 {
        return Err(Error::Parameter(format!("p = {p} must be even")));
    }
    Ok(p)
}

fn pow_f(p: u32, i: usize) -> f64 {
    (p as f64).powi(i as i32)
}

fn odd_part(c: Coefficients) -> Coefficients {
    Arc::new(move |k| if k % 2 == 1 { c(k) } else { GaussianRational::zero() })
}

fn even_part(c: Coefficients) -> Coefficients {
    Arc::new(move |k| if k % 2 == 0 { c(k) } else { GaussianRational::zero() })
}

/// Negates `c_k` when `⌊k/2⌋` is odd, turning sinh/cosh series into
/// sin/cos series.
fn alternating(c: Coefficients) -> Coefficients {
    Arc::new(move |k| {
        let v = c(k);
        if (k / 2) % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

fn exp_series() -> Coefficients {
    Arc::new(inv_factorial)
}

fn fde_at_zero(f: Step, p: u32, a: GaussianRational, radius: f64) -> Result<ApproxSystem> {
    ApproxSystem::from_fde(f, AffineMap::scaling(q(1, p as i64)), InitialValues::Constant(a), GaussianRational::zero(), radius)
}

fn exp_system(p: u32, r: f64) -> Result<ApproxSystem> {
    let f = Step::from_y_poly(&UniPoly::monomial(GaussianRational::one(), p as usize));
    Ok(fde_at_zero(f, p, GaussianRational::one(), r)?
        .with_reference(move |i, x| (x / pow_f(p, i)).exp())
        .with_codomains(move |i| DiskDomain::real(1.0, (r / pow_f(p, i + 1)).exp_m1()).ok()))
}

fn sinh_system(p: u32, r: f64) -> Result<ApproxSystem> {
    let f = Step::from_y_poly(&chebyshev_t_plus(p as usize));
    Ok(fde_at_zero(f, p, GaussianRational::zero(), r)?
        .with_reference(move |i, x| (x / pow_f(p, i)).sinh())
        .with_codomains(move |i| DiskDomain::real(0.0, (r / pow_f(p, i + 1)).sinh()).ok()))
}

fn cosh_system(p: u32, r: f64) -> Result<ApproxSystem> {
    let pf = q(1, p as i64);
    let sinh_over_p = XSeries::from_fn(move |k| {
        if k % 2 == 1 {
            &inv_factorial(k) * &pf.pow(k as u32)
        } else {
            GaussianRational::zero()
        }
    });
    let f = Step::Series(SeriesStep::product(&sinh_over_p, &chebyshev_u(p as usize - 1)));
    Ok(fde_at_zero(f, p, GaussianRational::one(), r)?
        .with_reference(move |i, x| (x / pow_f(p, i)).cosh())
        .with_codomains(move |i| DiskDomain::real(1.0, (r / pow_f(p, i + 1)).cosh() - 1.0).ok()))
}

fn rotation() -> AffineMap {
    AffineMap::scaling(GaussianRational::i())
}

fn dde_system(alpha: f64) -> Result<(ApproxSystem, GaussianRational)> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Parameter(format!("alpha = {alpha} must lie in (0, 1)")));
    }
    let a = GaussianRational::from_f64(alpha).expect("finite");
    let phi = AffineMap::with_float_shift(GaussianRational::one(), alpha.ln() / alpha)?;
    let ac = a.clone();
    let values: crate::system::ValueFn = Arc::new(move |i| ac.pow(i as u32));
    let sys = ApproxSystem::from_fde(
        Step::Polynomial(BiPoly::y()),
        phi,
        InitialValues::Sequence(values),
        GaussianRational::zero(),
        f64::INFINITY,
    )?
    .with_reference(move |i, x| alpha.powi(i as i32) * (x * alpha).exp())
    .with_codomains(move |i| DiskDomain::real(alpha.powi(i as i32 + 1), f64::INFINITY).ok());
    Ok((sys, a))
}

fn log_system(p: u32, r: f64) -> Result<ApproxSystem> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Parameter(format!("R = {r} must lie in (0, 1)")));
    }
    let lambda = move |i: usize| log_lambda(p, i).to_complex().re;
    let one = Complex64::new(1.0, 0.0);
    ApproxSystem::new(
        GaussianRational::zero(),
        |i| if i == 0 { GaussianRational::zero() } else { GaussianRational::one() },
        move |i| Step::from_y_poly(&UniPoly::monomial(log_lambda(p, i), p as usize)),
        Order::Unbounded,
        r,
    )
    .map(|s| {
        s.with_reference(move |i, x| {
            if i == 0 {
                -(one - x).ln()
            } else {
                (one - x).powf(-lambda(i))
            }
        })
        .with_codomains(move |i| DiskDomain::real(1.0, (1.0 - r).powf(-lambda(i + 1)) - 1.0).ok())
    })
}

fn exp_rows(r: f64) -> impl Fn(usize) -> Option<DiskDomain> + Send + Sync {
    move |_| DiskDomain::real(1.0, r.exp_m1()).ok()
}

/// Builds a catalog entry; unset parameters take the entry's defaults.
pub fn catalog_get(kind: EntryKind, params: Params) -> Result<CatalogEntry> {
    let params = params.or(kind.default_params());
    let entry = |system, taylor, prefix, parity| CatalogEntry { kind, params, system, taylor, prefix, parity };
    match kind {
        EntryKind::DdeExp => {
            let (sys, a) = dde_system(params.alpha.expect("default"))?;
            let taylor: Coefficients = Arc::new(move |k| &a.pow(k as u32) * &inv_factorial(k));
            return Ok(entry(sys, taylor, PrefixRule::N, None));
        }
        EntryKind::Taylor | EntryKind::Picard => {
            let r = check_radius(params.radius.expect("default"))?;
            let sys = if kind == EntryKind::Taylor {
                ApproxSystem::from_taylor(|_| GaussianRational::one(), GaussianRational::zero(), r)?
            } else {
                ApproxSystem::from_ode(Step::Polynomial(BiPoly::y()), GaussianRational::one(), GaussianRational::zero(), r)?
            };
            let sys = sys.with_reference(|_, x| x.exp()).with_codomains(exp_rows(r));
            return Ok(entry(sys, exp_series(), PrefixRule::N, None));
        }
        _ => {}
    }
    let r = check_radius(params.radius.expect("default"))?;
    Ok(match kind {
        EntryKind::Exp => entry(exp_system(need_p(&params, 1, false)?, r)?, exp_series(), PrefixRule::N, None),
        EntryKind::Sinh => {
            let sys = sinh_system(need_p(&params, 2, true)?, r)?;
            entry(sys, odd_part(exp_series()), PrefixRule::TwoN, Some(Parity::Odd))
        }
        EntryKind::Sin => {
            let sinh = sinh_system(need_p(&params, 2, true)?, r)?;
            let rotated = coordinate_transform(&sinh, &rotation(), GaussianRational::zero())?;
            let sys = linear_transform(&rotated, &-GaussianRational::i(), &GaussianRational::zero())?;
            entry(sys, alternating(odd_part(exp_series())), PrefixRule::TwoN, Some(Parity::Odd))
        }
        EntryKind::Cosh => {
            let sys = cosh_system(need_p(&params, 2, false)?, r)?;
            entry(sys, even_part(exp_series()), PrefixRule::TwoNPlusOne, Some(Parity::Even))
        }
        EntryKind::Cos => {
            let cosh = cosh_system(need_p(&params, 2, false)?, r)?;
            let sys = coordinate_transform(&cosh, &rotation(), GaussianRational::zero())?;
            entry(sys, alternating(even_part(exp_series())), PrefixRule::TwoNPlusOne, Some(Parity::Even))
        }
        EntryKind::Log => {
            let p = need_p(&params, 2, false)?;
            let taylor: Coefficients =
                Arc::new(|k| if k == 0 { GaussianRational::zero() } else { q(1, k as i64) });
            entry(log_system(p, r)?, taylor, PrefixRule::N, None)
        }
        EntryKind::DdeExp | EntryKind::Taylor | EntryKind::Picard => unreachable!(),
    })
}

/// Every entry at its default parameters.
pub fn catalog_defaults() -> Vec<CatalogEntry> {
    EntryKind::ALL.into_iter().map(|k| catalog_get(k, Params::default()).expect("defaults are valid")).collect()
}

/// `max |g(x) − g^[n](x)|` over the grid.
pub fn reference_error_grid(entry: &CatalogEntry, n: usize, grid: &[Complex64], exec: Execution) -> Result<f64> {
    let table = build_approximants(&entry.system, n)?;
    let g = table.g_top().to_float();
    Ok(exec::max_of(exec, grid, |&x| (entry.reference(x) - g.eval_complex(x)).norm()))
}

/// `points` equally spaced points from `a` to `b`; a single point is `a`.
pub fn segment_grid(a: Complex64, b: Complex64, points: usize) -> Result<Vec<Complex64>> {
    match points {
        0 => Err(Error::Parameter("a grid needs at least one point".into())),
        1 => Ok(vec![a]),
        _ => Ok((0..points)
            .map(|k| if k + 1 == points { b } else { a + (b - a) * (k as f64 / (points - 1) as f64) })
            .collect()),
    }
}

/// `points` equally spaced points on the circle `|x − c| = r`.
pub fn circle_grid(center: Complex64, radius: f64, points: usize) -> Result<Vec<Complex64>> {
    if points == 0 {
        return Err(Error::Parameter("a grid needs at least one point".into()));
    }
    Ok(DiskDomain::new(center, radius)?.boundary(points))
}
