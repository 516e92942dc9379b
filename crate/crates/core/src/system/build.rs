use num_complex::Complex64;
use num_traits::Zero;

use super::{ApproxSystem, Origin, Step};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::GaussianRational;

/// The triangle `g_i^[n]`, `0 ≤ i ≤ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproximantTable {
    pub n: usize,
    pub basepoint: GaussianRational,
    pub rows: Vec<UniPoly>,
    /// Series truncation degree when any step was a series; coefficients
    /// above it are not meaningful.
    pub truncation: Option<usize>,
}

impl ApproximantTable {
    /// `g^[n] = g_0^[n]`.
    pub fn g_top(&self) -> &UniPoly {
        &self.rows[0]
    }

    pub fn row(&self, i: usize) -> &UniPoly {
        &self.rows[i]
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.g_top().eval_complex(x)
    }
}

fn check_buildable(sys: &ApproxSystem, n: usize) -> Result<Vec<Step>> {
    if let super::Order::Finite(order) = sys.order {
        if n > order {
            return Err(Error::OrderExceeded { requested: n, order });
        }
    }
    let steps: Vec<Step> = (0..n).map(|i| sys.step(i)).collect();
    for (index, s) in steps.iter().enumerate() {
        match s {
            Step::Callable(_) => return Err(Error::SymbolicUnsupported { index }),
            Step::Series(_) if !sys.basepoint.is_zero() => {
                return Err(Error::Unsupported("series steps need the basepoint at 0".into()))
            }
            _ => {}
        }
    }
    Ok(steps)
}

/// `g_n^[n] = a_n`, `g_i^[n] = a_i + ∫_{x0}^x f_i(g_{i+1}^[n](t), t) dt`.
pub fn build_approximants(sys: &ApproxSystem, n: usize) -> Result<ApproximantTable> {
    let steps = check_buildable(sys, n)?;
    let trunc = sys.truncation_for(n);
    let mut rows = vec![UniPoly::zero(); n + 1];
    rows[n] = UniPoly::constant(sys.value(n));
    for i in (0..n).rev() {
        let integrand = steps[i].integrand(&rows[i + 1], trunc, i)?;
        rows[i] = &integrand.integrate_from(&sys.basepoint) + &UniPoly::constant(sys.value(i));
    }
    let truncation = steps.iter().any(|s| matches!(s, Step::Series(_))).then_some(trunc);
    Ok(ApproximantTable { n, basepoint: sys.basepoint.clone(), rows, truncation })
}

/// `S^n(a)` with `(S h)(x) = a + ∫_{x0}^x f(h(φ(t)), t) dt`; only defined
/// when `φ` fixes the basepoint.
pub fn s_operator_iterate(sys: &ApproxSystem, n: usize) -> Result<UniPoly> {
    let (f, phi, a) = match &sys.origin {
        Origin::Fde { f, phi, a } => (f.clone(), phi.clone(), a.clone()),
        Origin::Ode { f, a } => (f.clone(), super::AffineMap::identity(), Some(a.clone())),
        _ => return Err(Error::Precondition("the S operator needs a system built from an FDE or ODE".into())),
    };
    if !phi.fixes(&sys.basepoint) {
        return Err(Error::NoFixpoint);
    }
    let a = a.ok_or_else(|| Error::Precondition("the S operator needs a common initial value".into()))?;
    if !f.is_symbolic() {
        return Err(Error::SymbolicUnsupported { index: 0 });
    }
    if matches!(f, Step::Series(_)) && !sys.basepoint.is_zero() {
        return Err(Error::Unsupported("series steps need the basepoint at 0".into()));
    }
    let trunc = sys.truncation_for(n);
    let base = UniPoly::constant(a.clone());
    let mut h = base.clone();
    for _ in 0..n {
        let inner = h.compose_affine(&phi.scale, &phi.shift);
        h = &f.integrand(&inner, trunc, 0)?.integrate_from(&sys.basepoint) + &base;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BiPoly;
    use crate::scalar::factorial;
    use crate::system::{AffineMap, InitialValues, Order};

    /// `Σ c_k (x − x0)^k`.
    fn shifted_power_sum(coeffs: &[GaussianRational], x0: &GaussianRational) -> UniPoly {
        UniPoly::new(coeffs.to_vec()).compose_affine(&GaussianRational::from_integer(1), &-x0)
    }

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn poly(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| q(c)).collect())
    }

    fn fde(f: &[&str], a: &str) -> ApproxSystem {
        let step = Step::Polynomial(BiPoly::from_y_poly(&poly(f)));
        ApproxSystem::from_fde(step, AffineMap::scaling(q("1/2")), InitialValues::Constant(q(a)), q("0"), 1.0).unwrap()
    }

    #[test]
    fn exp_table() {
        let sys = fde(&["0", "0", "1"], "1");
        assert_eq!(build_approximants(&sys, 0).unwrap().g_top(), &poly(&["1"]));
        assert_eq!(build_approximants(&sys, 1).unwrap().g_top(), &poly(&["1", "1"]));
        assert_eq!(build_approximants(&sys, 2).unwrap().g_top(), &poly(&["1", "1", "1/2", "1/12"]));
        assert_eq!(
            build_approximants(&sys, 3).unwrap().g_top(),
            &poly(&["1", "1", "1/2", "1/6", "7/192", "1/192", "1/2304", "1/64512"])
        );
    }

    #[test]
    fn sinh_table() {
        let sys = fde(&["1", "0", "2"], "0");
        let t = build_approximants(&sys, 3).unwrap();
        assert_eq!(t.g_top(), &poly(&["0", "1", "0", "1/6", "0", "1/120", "0", "1/8064"]));
        assert_eq!(s_operator_iterate(&sys, 2).unwrap(), poly(&["0", "1", "0", "1/6"]));
    }

    #[test]
    fn table_invariants() {
        let sys = fde(&["0", "0", "1"], "1");
        let t = build_approximants(&sys, 4).unwrap();
        assert_eq!(t.rows[4], UniPoly::constant(q("1")));
        for i in 0..4 {
            assert_eq!(t.rows[i].eval(&q("0")), sys.value(i));
            let Step::Polynomial(f) = sys.step(i) else { panic!() };
            assert_eq!(t.rows[i].derivative(), f.substitute_y(&t.rows[i + 1], None));
        }
    }

    #[test]
    fn taylor_systems() {
        let sys = ApproxSystem::from_taylor(|_| q("1"), q("0"), 1.0).unwrap();
        assert_eq!(build_approximants(&sys, 3).unwrap().g_top(), &poly(&["1", "1", "1/2", "1/6"]));
        let sin = ApproxSystem::from_taylor_list(
            ["0", "1", "0", "-1", "0", "1", "0"].iter().map(|s| q(s)).collect(),
            q("0"),
            1.0,
        )
        .unwrap();
        assert_eq!(build_approximants(&sin, 5).unwrap().g_top(), &poly(&["0", "1", "0", "-1/6", "0", "1/120"]));
        let c = ApproxSystem::from_taylor_list(vec![q("3/7")], q("0"), 1.0).unwrap();
        assert_eq!(build_approximants(&c, 0).unwrap().g_top(), &poly(&["3/7"]));
        assert_eq!(build_approximants(&c, 1), Err(Error::OrderExceeded { requested: 1, order: 0 }));
    }

    #[test]
    fn taylor_at_shifted_basepoint() {
        let x0 = q("1/2");
        let derivs = vec![q("2"), q("-1"), q("3"), q("5")];
        let sys = ApproxSystem::from_taylor_list(derivs.clone(), x0.clone(), 1.0).unwrap();
        let want: Vec<_> = derivs.iter().enumerate().map(|(k, d)| d * &factorial(k as u32).inv().unwrap()).collect();
        assert_eq!(build_approximants(&sys, 3).unwrap().g_top(), &shifted_power_sum(&want, &x0));
    }

    #[test]
    fn picard() {
        let sys = ApproxSystem::from_ode(Step::Polynomial(BiPoly::y()), q("1"), q("0"), 1.0).unwrap();
        assert_eq!(build_approximants(&sys, 3).unwrap().g_top(), &poly(&["1", "1", "1/2", "1/6"]));
        let zero = ApproxSystem::from_ode(Step::Polynomial(BiPoly::y()), q("0"), q("0"), 1.0).unwrap();
        for n in 0..4 {
            assert!(build_approximants(&zero, n).unwrap().g_top().is_zero());
        }
    }

    #[test]
    fn callable_step_is_reported_by_index() {
        let sys = ApproxSystem::new(
            q("0"),
            |_| q("1"),
            |i| if i == 2 { Step::callable(|y, _| y) } else { Step::Polynomial(BiPoly::y()) },
            Order::Unbounded,
            1.0,
        )
        .unwrap();
        assert!(build_approximants(&sys, 2).is_ok());
        assert_eq!(build_approximants(&sys, 4), Err(Error::SymbolicUnsupported { index: 2 }));
    }

    #[test]
    fn s_operator_needs_fixpoint() {
        let phi = AffineMap::new(q("1"), q("-1"));
        let seq: super::super::ValueFn = std::sync::Arc::new(|_| q("1"));
        let sys = ApproxSystem::from_fde(Step::Polynomial(BiPoly::y()), phi, InitialValues::Sequence(seq), q("0"), f64::INFINITY)
            .unwrap();
        assert_eq!(s_operator_iterate(&sys, 2), Err(Error::NoFixpoint));
        let exp = fde(&["0", "0", "1"], "1");
        assert_eq!(s_operator_iterate(&exp, 0).unwrap(), poly(&["1"]));
    }
}
