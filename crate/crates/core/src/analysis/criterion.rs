use num_complex::Complex64;

use super::positivity::{is_positive, PositivityVerdict};
use crate::error::{Error, Result};
use crate::system::{build_approximants, ApproxSystem};

const TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionEntry {
    pub r: f64,
    pub index: usize,
    /// `|a_{i+1} − c_i| + |g_{i+1}(x0 + r) − a_{i+1}|`, to be `≤ ρ_i`.
    pub reach: f64,
    pub codomain_radius: f64,
    /// `g_i^[n](x0 + r)` and `g_i(x0 + r)`.
    pub approximant: f64,
    pub reference: f64,
    pub disk_ok: bool,
    pub domination_ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport {
    pub n: usize,
    pub entries: Vec<CriterionEntry>,
}

impl CriterionReport {
    pub fn satisfied(&self) -> bool {
        self.entries.iter().all(|e| e.disk_ok && e.domination_ok)
    }
}

/// For a positive system, checks at each `x0 + r` that the disks
/// `B(a_{i+1}, g_{i+1}(x0 + r) − a_{i+1})` sit inside `V_i` and that
/// `g_i^[n] ≤ g_i` along the real ray.
pub fn pas_criterion_check(sys: &ApproxSystem, n: usize, r_samples: &[f64]) -> Result<CriterionReport> {
    let reference = sys.reference.clone().ok_or_else(|| Error::Configuration("no reference evaluators".into()))?;
    if sys.codomains.is_none() {
        return Err(Error::Configuration("no codomains".into()));
    }
    if let PositivityVerdict::Counterexample(c) = is_positive(sys, n + 1, None)? {
        return Err(Error::Precondition(format!("system is not positive: {c}")));
    }
    let table = build_approximants(sys, n)?;
    let x0 = sys.basepoint.to_complex();
    let mut entries = Vec::new();
    for &r in r_samples {
        let x = x0 + Complex64::new(r, 0.0);
        for i in 0..=n {
            let (reach, radius) = if i < n {
                let v = sys.codomain(i).ok_or_else(|| Error::Configuration(format!("no codomain V_{i}")))?;
                let a = sys.value(i + 1).to_complex();
                ((a - v.center).norm() + (reference(i + 1, x) - a).norm(), v.radius)
            } else {
                (0.0, f64::INFINITY)
            };
            let approximant = table.rows[i].eval_complex(x).re;
            let g = reference(i, x).re;
            entries.push(CriterionEntry {
                r,
                index: i,
                reach,
                codomain_radius: radius,
                approximant,
                reference: g,
                disk_ok: reach <= radius + TOL,
                domination_ok: approximant <= g + TOL,
            });
        }
    }
    Ok(CriterionReport { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DiskDomain;
    use crate::poly::UniPoly;
    use crate::scalar::GaussianRational;
    use crate::system::{AffineMap, InitialValues, Step};

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn exp_sys() -> ApproxSystem {
        let p = UniPoly::new(vec![q("0"), q("0"), q("1")]);
        ApproxSystem::from_fde(Step::from_y_poly(&p), AffineMap::scaling(q("1/2")), InitialValues::Constant(q("1")), q("0"), 1.0)
            .unwrap()
            .with_reference(|i, x| (x * 0.5f64.powi(i as i32)).exp())
            .with_codomains(|i| Some(DiskDomain::real(1.0, (0.5f64).powi(i as i32 + 1).exp() - 1.0).unwrap()))
    }

    #[test]
    fn exp_satisfies_criterion() {
        let sys = exp_sys();
        let report = pas_criterion_check(&sys, 4, &[0.0, 0.25, 0.5, 0.99]).unwrap();
        assert!(report.satisfied(), "{report:?}");
        assert_eq!(report.entries.len(), 4 * 5);
    }

    #[test]
    fn needs_references() {
        let mut sys = exp_sys();
        sys.reference = None;
        assert!(matches!(pas_criterion_check(&sys, 2, &[0.5]), Err(Error::Configuration(_))));
    }

    #[test]
    fn shrunk_codomain_fails() {
        let sys = exp_sys().with_codomains(|_| Some(DiskDomain::real(1.0, 0.01).unwrap()));
        assert!(!pas_criterion_check(&sys, 2, &[0.5]).unwrap().satisfied());
    }
}
