use num_complex::Complex64;

use super::positivity::{is_positive, PositivityVerdict};
use super::supnorm::{sup_norm_step, NormRequest, SupNormEstimate};
use super::DiskDomain;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::poly::Variable;
use crate::system::{ApproxSystem, Order, Origin, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFormula {
    /// `Π ‖D_1 f_i‖ · ‖g_n − g_n(x0)‖ · d^n / n!`
    StarlikeA,
    /// `Π ‖D_1 f_i‖ · ‖f_n‖ · d^(n+1) / (n+1)!`
    StarlikeB,
    /// `‖f‖ ‖D_1 f‖^n d^(n+1) / (n+1)!` for a single shared step.
    UniformIdenticalStep,
    /// `‖φ'‖^(n(n+1)/2) ‖D_1 f‖^n ‖f‖ R^(n+1) / (n+1)!` for FDE systems.
    Fde,
    /// A per-example closed form.
    ClosedForm,
}

impl BoundFormula {
    pub fn name(self) -> &'static str {
        match self {
            BoundFormula::StarlikeA => "starlike-A",
            BoundFormula::StarlikeB => "starlike-B",
            BoundFormula::UniformIdenticalStep => "uniform",
            BoundFormula::Fde => "fde",
            BoundFormula::ClosedForm => "closed-form",
        }
    }
}

/// `coefficient · d^exponent`, the bound at distance `d = |x − x0|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundValue {
    pub coefficient: f64,
    pub exponent: usize,
}

impl BoundValue {
    pub fn at(&self, d: f64) -> f64 {
        if self.exponent == 0 {
            self.coefficient
        } else {
            self.coefficient * d.powi(self.exponent as i32)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub label: String,
    pub estimate: SupNormEstimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorBoundReport {
    pub n: usize,
    pub formula: BoundFormula,
    /// Radius `R` of the disk the bound is stated on.
    pub radius: f64,
    pub bound_a: Option<BoundValue>,
    pub bound_b: Option<BoundValue>,
    /// Per-index estimate with shrinking disks (FDE systems only).
    pub refined: Option<f64>,
    pub closed_form: Option<f64>,
    pub factors: Vec<Factor>,
}

impl ErrorBoundReport {
    fn empty(n: usize, formula: BoundFormula, radius: f64) -> Self {
        Self { n, formula, radius, bound_a: None, bound_b: None, refined: None, closed_form: None, factors: Vec::new() }
    }

    pub fn closed(n: usize, radius: f64, value: f64) -> Self {
        let mut r = Self::empty(n, BoundFormula::ClosedForm, radius);
        r.closed_form = Some(value);
        r
    }

    /// The headline value at `|x − x0| = R` for the report's formula.
    pub fn value(&self) -> Option<f64> {
        match self.formula {
            BoundFormula::StarlikeA => self.bound_a.map(|b| b.at(self.radius)),
            BoundFormula::StarlikeB | BoundFormula::UniformIdenticalStep | BoundFormula::Fde => {
                self.bound_b.map(|b| b.at(self.radius))
            }
            BoundFormula::ClosedForm => self.closed_form,
        }
    }

    /// Smallest of all values carried by the report.
    pub fn best(&self) -> Option<f64> {
        [self.bound_a.map(|b| b.at(self.radius)), self.bound_b.map(|b| b.at(self.radius)), self.refined, self.closed_form]
            .into_iter()
            .flatten()
            .reduce(f64::min)
    }

    /// True when every sup-norm factor is a guaranteed upper bound.
    pub fn rigorous(&self) -> bool {
        self.factors.iter().all(|f| f.estimate.rigorous)
    }
}

pub(crate) fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Products where an infinite factor meets a zero one are infinite.
fn product(values: impl IntoIterator<Item = f64>) -> f64 {
    let p: f64 = values.into_iter().product();
    if p.is_nan() {
        f64::INFINITY
    } else {
        p
    }
}

fn d1(step: &Step) -> Result<Step> {
    Ok(match step {
        Step::Polynomial(p) => Step::Polynomial(p.partial_derivative(Variable::First, 1)),
        Step::Series(s) => {
            let coeffs = s.y_coeffs();
            let shifted = (1..coeffs.len())
                .map(|j| coeffs[j].scale(crate::scalar::GaussianRational::from_integer(j as i64)))
                .collect();
            Step::Series(crate::poly::SeriesStep::new(shifted))
        }
        Step::Callable(_) => return Err(Error::NotCheckable("callable steps have no formal derivative".into())),
    })
}

fn codomain_or_unbounded(sys: &ApproxSystem, i: usize) -> DiskDomain {
    sys.codomain(i).unwrap_or(DiskDomain { center: sys.value(i + 1).to_complex(), radius: f64::INFINITY })
}

/// Corollary-style bound on a disk `U = B(x0, R)`. Variant A needs
/// `reference_norm = ‖g_n − g_n(x0)‖_U`; variant B is reported whenever
/// the system has a step `f_n`.
pub fn error_bound_starlike(
    sys: &ApproxSystem,
    n: usize,
    reference_norm: Option<f64>,
    execution: Execution,
) -> Result<ErrorBoundReport> {
    if sys.codomains.is_none() {
        return Err(Error::Configuration("starlike bounds need codomains V_i".into()));
    }
    let u = sys.domain;
    let with_b = match sys.order {
        Order::Finite(r) => n < r,
        Order::Unbounded => true,
    };
    if reference_norm.is_none() && !with_b {
        return Err(Error::Inapplicable("variant B needs a step f_n and no reference norm was given".into()));
    }
    let count = if with_b { n + 1 } else { n };
    let results = exec::map_range(execution, count, |i| -> Result<Factor> {
        let v = codomain_or_unbounded(sys, i);
        let step = sys.step(i);
        if i < n {
            let estimate = sup_norm_step(&d1(&step)?, &v, &u, NormRequest::Auto)?;
            Ok(Factor { label: format!("‖D_1 f_{i}‖ on V_{i} × U"), estimate })
        } else {
            let estimate = sup_norm_step(&step, &v, &u, NormRequest::Auto)?;
            Ok(Factor { label: format!("‖f_{n}‖ on V_{n} × U"), estimate })
        }
    });
    let factors = results.into_iter().collect::<Result<Vec<_>>>()?;
    let d1_product = product(factors[..n].iter().map(|f| f.estimate.value));

    let formula = if reference_norm.is_some() { BoundFormula::StarlikeA } else { BoundFormula::StarlikeB };
    let mut report = ErrorBoundReport::empty(n, formula, u.radius);
    if let Some(norm) = reference_norm {
        report.bound_a = Some(BoundValue { coefficient: product([d1_product, norm]) / factorial_f64(n), exponent: n });
    }
    if with_b {
        let fn_norm = factors[n].estimate.value;
        report.bound_b =
            Some(BoundValue { coefficient: product([d1_product, fn_norm]) / factorial_f64(n + 1), exponent: n + 1 });
    }
    report.factors = factors;
    Ok(report)
}

/// `‖f‖_Y (‖D_1 f‖_Y)^n R^(n+1) / (n+1)!` with `Y = V × U`.
pub fn uniform_bound_identical_step(
    f: &Step,
    domain: &DiskDomain,
    codomain: &DiskDomain,
    n: usize,
) -> Result<ErrorBoundReport> {
    let f_norm = sup_norm_step(f, codomain, domain, NormRequest::Auto)?;
    let d1_norm = sup_norm_step(&d1(f)?, codomain, domain, NormRequest::Auto)?;
    let coefficient = product([f_norm.value, d1_norm.value.powi(n as i32)]) / factorial_f64(n + 1);
    let mut report = ErrorBoundReport::empty(n, BoundFormula::UniformIdenticalStep, domain.radius);
    report.bound_b = Some(BoundValue { coefficient, exponent: n + 1 });
    report.factors = vec![
        Factor { label: "‖f‖ on V × U".into(), estimate: f_norm },
        Factor { label: "‖D_1 f‖ on V × U".into(), estimate: d1_norm },
    ];
    Ok(report)
}

/// Bound for an FDE system `g' = f(g ∘ φ, x)` with `φ(x0) = x0`, common
/// initial value `a ≥ 0` and a positive system. `bound_b` carries the
/// single-disk estimate on `B(a, g(x0+R) − a) × B(x0, R)`; `refined`
/// uses the per-index disks `B(a, g(x0 + |α|^(i+1) R) − a) × B(x0, |α|^i R)`.
pub fn fde_error_bound(sys: &ApproxSystem, n: usize, radius: Option<f64>) -> Result<ErrorBoundReport> {
    let Origin::Fde { f, phi, a } = &sys.origin else {
        return Err(Error::Inapplicable("system was not built from an FDE".into()));
    };
    if !phi.fixes(&sys.basepoint) {
        return Err(Error::Inapplicable("φ does not fix the basepoint".into()));
    }
    let a = a.as_ref().ok_or_else(|| Error::Inapplicable("initial values are not a common constant a".into()))?;
    if !a.is_nonnegative_real() {
        return Err(Error::Inapplicable(format!("initial value a = {a} is not a nonnegative real")));
    }
    if let PositivityVerdict::Counterexample(c) = is_positive(sys, n + 1, None)? {
        return Err(Error::Inapplicable(format!("system is not positive: {c}")));
    }
    let g = sys
        .reference
        .as_ref()
        .ok_or_else(|| Error::Inapplicable("no reference evaluator for g(x0 + R)".into()))?;
    let r = radius.unwrap_or(sys.radius());
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::Inapplicable(format!("radius {r} must be finite and positive")));
    }
    let x0 = sys.basepoint.to_complex();
    let ac = a.to_complex().re;
    let alpha = phi.scale.to_complex().norm();
    let g_at = |t: f64| g(0, x0 + Complex64::new(t, 0.0)).re;

    let disk = |t: f64| DiskDomain::new(Complex64::new(ac, 0.0), (g_at(t) - ac).max(f64::MIN_POSITIVE));
    let u = DiskDomain::new(x0, r)?;
    let v = disk(r)?;
    let f_norm = sup_norm_step(f, &v, &u, NormRequest::Auto)?;
    let d1f = d1(f)?;
    let d1_norm = sup_norm_step(&d1f, &v, &u, NormRequest::Auto)?;
    let phi_pow = alpha.powf((n * (n + 1)) as f64 / 2.0);
    let coefficient = product([phi_pow, d1_norm.value.powi(n as i32), f_norm.value]) / factorial_f64(n + 1);

    let mut refined = phi_pow * r.powi(n as i32 + 1) / factorial_f64(n + 1);
    for i in 0..=n {
        let v_i = disk(alpha.powi(i as i32 + 1) * r)?;
        let u_i = DiskDomain::new(x0, alpha.powi(i as i32) * r)?;
        let target = if i < n { &d1f } else { f };
        refined = product([refined, sup_norm_step(target, &v_i, &u_i, NormRequest::Auto)?.value]);
    }

    let mut report = ErrorBoundReport::empty(n, BoundFormula::Fde, r);
    report.bound_b = Some(BoundValue { coefficient, exponent: n + 1 });
    report.refined = Some(refined);
    report.factors = vec![
        Factor { label: "‖φ'‖".into(), estimate: SupNormEstimate { value: alpha, method: super::SupNormMethod::PositiveExact, rigorous: true } },
        Factor { label: "‖D_1 f‖ on B(a, g(x0+R) − a) × B(x0, R)".into(), estimate: d1_norm },
        Factor { label: "‖f‖ on B(a, g(x0+R) − a) × B(x0, R)".into(), estimate: f_norm },
    ];
    Ok(report)
}

/// `(p/(p−1))^n (1−R)^(−(n+p−1)) R^(n+1) / (n+1)!` for the logarithm system.
pub fn log_error_bound(p: u32, radius: f64, n: usize) -> Result<f64> {
    if p < 2 {
        return Err(Error::Parameter(format!("p = {p} must be at least 2")));
    }
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Domain(format!("R = {radius} must lie in (0, 1)")));
    }
    let p = p as f64;
    Ok((p / (p - 1.0)).powi(n as i32) * (1.0 - radius).powf(-(n as f64 + p - 1.0)) * radius.powi(n as i32 + 1)
        / factorial_f64(n + 1))
}

/// `e^R R^(n+1) / (p^(n(n−1)/2) (n+1)!)`
pub fn exp_closed_form(p: u32, radius: f64, n: usize) -> f64 {
    radius.exp() * radius.powi(n as i32 + 1) / ((p as f64).powf((n * n.saturating_sub(1)) as f64 / 2.0) * factorial_f64(n + 1))
}

/// `R^(n+1) e^R / (2 p^(n(n−1)/2) (n+1)!)`; also the sine bound.
pub fn sinh_closed_form(p: u32, radius: f64, n: usize) -> f64 {
    exp_closed_form(p, radius, n) / 2.0
}

/// `R sinh R / (p^(n(n+1)/2) (n+1)!) · ((p−1) R sinh R / sinh(R/p))^n`;
/// also the cosine bound.
pub fn cosh_closed_form(p: u32, radius: f64, n: usize) -> f64 {
    let pf = p as f64;
    let s = radius.sinh();
    radius * s / (pf.powf((n * (n + 1)) as f64 / 2.0) * factorial_f64(n + 1))
        * ((pf - 1.0) * radius * s / (radius / pf).sinh()).powi(n as i32)
}

/// `Σ_{j>n} 2 c̃_j R^j` for majorant Taylor coefficients `c̃_j ≥ 0`, summed
/// until the terms drop below `1e-18` relative (or `max_terms`).
pub fn majorant_tail_bound(coeff: impl Fn(usize) -> f64, n: usize, radius: f64, max_terms: usize) -> f64 {
    let mut total = 0.0;
    for j in n + 1..n + 1 + max_terms {
        let term = 2.0 * coeff(j) * radius.powi(j as i32);
        total += term;
        if term <= 1e-18 * total {
            break;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::scalar::GaussianRational;
    use crate::system::{AffineMap, InitialValues};

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn yp(cs: &[&str]) -> Step {
        Step::from_y_poly(&UniPoly::new(cs.iter().map(|c| q(c)).collect()))
    }

    fn exp2(r: f64) -> ApproxSystem {
        ApproxSystem::from_fde(yp(&["0", "0", "1"]), AffineMap::scaling(q("1/2")), InitialValues::Constant(q("1")), q("0"), r)
            .unwrap()
            .with_reference(|i, x| (x / 2f64.powi(i as i32)).exp())
            .with_codomains(move |i| Some(DiskDomain::real(1.0, (r / 2f64.powi(i as i32 + 1)).exp() - 1.0).unwrap()))
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn uniform_examples() {
        let u = DiskDomain::real(0.0, 1.0).unwrap();
        let v = DiskDomain::real(1.0, 1f64.exp() - 1.0).unwrap();
        let r = uniform_bound_identical_step(&yp(&["0", "1"]), &u, &v, 2).unwrap();
        assert!(close(r.value().unwrap(), 1f64.exp() / 6.0));
        let r0 = uniform_bound_identical_step(&yp(&["0", "1"]), &u, &v, 0).unwrap();
        assert!(close(r0.value().unwrap(), 1f64.exp()));
        let v2 = DiskDomain::real(0.0, 2.0).unwrap();
        let r = uniform_bound_identical_step(&yp(&["0", "0", "1"]), &u, &v2, 1).unwrap();
        assert!(close(r.value().unwrap(), 8.0));
    }

    #[test]
    fn fde_exp_matches_closed_form() {
        let sys = exp2(1.0);
        for n in 0..6 {
            let r = fde_error_bound(&sys, n, None).unwrap();
            assert!(close(r.refined.unwrap(), exp_closed_form(2, 1.0, n)), "n={n}");
            assert!(r.value().unwrap() >= r.refined.unwrap() * (1.0 - 1e-12));
        }
        let r0 = fde_error_bound(&sys, 0, None).unwrap();
        // ‖f‖ R / 1! with ‖y²‖ on B(1, e − 1) = e².
        assert!(close(r0.value().unwrap(), 1f64.exp().powi(2)));
        assert!(close(exp_closed_form(2, 1.0, 3), 1f64.exp() / 192.0));
    }

    #[test]
    fn starlike_b_for_exp() {
        let sys = exp2(1.0);
        let r = error_bound_starlike(&sys, 0, None, Execution::Sequential).unwrap();
        assert_eq!(r.formula, BoundFormula::StarlikeB);
        assert_eq!(r.bound_b.unwrap().exponent, 1);
        // ‖f_0‖ on B(1, e^{1/2} − 1): e.
        assert!(close(r.bound_b.unwrap().coefficient, 1f64.exp()));
        let a = error_bound_starlike(&sys, 2, Some(0.5), Execution::Parallel).unwrap();
        assert_eq!(a.formula, BoundFormula::StarlikeA);
        assert_eq!(a.factors.len(), 3);
        assert!(a.rigorous());
    }

    #[test]
    fn starlike_needs_codomains() {
        let sys = ApproxSystem::from_ode(yp(&["0", "1"]), q("1"), q("0"), 1.0).unwrap();
        assert!(matches!(error_bound_starlike(&sys, 1, None, Execution::Sequential), Err(Error::Configuration(_))));
    }

    #[test]
    fn log_closed_form() {
        assert!(close(log_error_bound(2, 0.5, 2).unwrap(), 2.0 / 3.0));
        assert!(close(log_error_bound(3, 0.5, 1).unwrap(), 1.5));
        assert!(close(log_error_bound(2, 0.5, 0).unwrap(), 1.0));
        assert!(matches!(log_error_bound(2, 1.0, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn sinh_and_tail() {
        assert!(close(sinh_closed_form(2, 1.0, 2), 1f64.exp() / 24.0));
        let tail = majorant_tail_bound(|j| 1.0 / factorial_f64(j), 2, 1.0, 60);
        assert!(close(tail, 2.0 * (1f64.exp() - 2.5)));
    }
}
