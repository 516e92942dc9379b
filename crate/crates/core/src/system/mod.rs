//! Approximation systems `({a_i}, {f_i})`, the approximant triangle
//! `g_i^[n]`, the ODE/FDE/Taylor constructors and the coordinate and
//! linear transformations.

mod affine;
mod audit;
mod build;
mod step;
mod transform;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::analysis::DiskDomain;
use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::scalar::GaussianRational;

pub use affine::AffineMap;
pub use audit::{properness_audit, AuditEntry, AuditReport, AuditVerdict};
pub use build::{build_approximants, s_operator_iterate, ApproximantTable};
pub(crate) use step::FloatStep;
pub use step::{Evaluator, Step};
pub use transform::{coordinate_transform, linear_transform};

pub type ValueFn = Arc<dyn Fn(usize) -> GaussianRational + Send + Sync>;
pub type StepFn = Arc<dyn Fn(usize) -> Step + Send + Sync>;
pub type CodomainFn = Arc<dyn Fn(usize) -> Option<DiskDomain> + Send + Sync>;
/// `(i, x) ↦ g_i(x)` for the functions the system approximates.
pub type RowReference = Arc<dyn Fn(usize, Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Unbounded,
}

impl Order {
    pub fn admits(self, n: usize) -> bool {
        match self {
            Order::Finite(r) => n <= r,
            Order::Unbounded => true,
        }
    }
}

/// How a system was constructed; kept so the structural identities
/// (Picard shift, FDE shift, S-operator) can be checked after transforms.
#[derive(Clone, Debug)]
pub enum Origin {
    Custom,
    Taylor,
    Ode { f: Step, a: GaussianRational },
    /// `g' = f(g ∘ φ, x)`; `a` is the common initial value when `φ(x0) = x0`.
    Fde { f: Step, phi: AffineMap, a: Option<GaussianRational> },
}

#[derive(Clone)]
pub struct ApproxSystem {
    pub basepoint: GaussianRational,
    pub values: ValueFn,
    pub steps: StepFn,
    pub order: Order,
    /// `U = B(x0, R)`.
    pub domain: DiskDomain,
    /// `V_i`; `None` entries are unbounded.
    pub codomains: Option<CodomainFn>,
    pub reference: Option<RowReference>,
    pub origin: Origin,
    /// Series truncation degree; `None` means `2n + 6` for an order-`n` build.
    pub truncation: Option<usize>,
}

impl fmt::Debug for ApproxSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ApproxSystem")
            .field("basepoint", &self.basepoint)
            .field("a_0", &self.value(0))
            .field("f_0", &self.step(0))
            .field("order", &self.order)
            .field("domain", &self.domain)
            .field("origin", &self.origin)
            .finish_non_exhaustive()
    }
}

/// Initial values for [`ApproxSystem::from_fde`].
#[derive(Clone)]
pub enum InitialValues {
    /// `a_i = a`; requires `φ(x0) = x0`.
    Constant(GaussianRational),
    Sequence(ValueFn),
    /// `a_i = g(φ^∘i(x0))` from an evaluator of `g`, rounded exactly from
    /// the float result.
    Reference(Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>),
}

impl ApproxSystem {
    /// A system from explicit sequences, with no codomains or references.
    pub fn new(
        basepoint: GaussianRational,
        values: impl Fn(usize) -> GaussianRational + Send + Sync + 'static,
        steps: impl Fn(usize) -> Step + Send + Sync + 'static,
        order: Order,
        radius: f64,
    ) -> Result<Self> {
        Ok(Self {
            domain: DiskDomain::new(basepoint.to_complex(), radius)?,
            basepoint,
            values: Arc::new(values),
            steps: Arc::new(steps),
            order,
            codomains: None,
            reference: None,
            origin: Origin::Custom,
            truncation: None,
        })
    }

    pub fn value(&self, i: usize) -> GaussianRational {
        (self.values)(i)
    }

    pub fn step(&self, i: usize) -> Step {
        (self.steps)(i)
    }

    pub fn codomain(&self, i: usize) -> Option<DiskDomain> {
        self.codomains.as_ref().and_then(|c| c(i))
    }

    pub fn truncation_for(&self, n: usize) -> usize {
        self.truncation.unwrap_or(2 * n + 6)
    }

    pub fn radius(&self) -> f64 {
        self.domain.radius
    }

    pub fn with_codomains(mut self, v: impl Fn(usize) -> Option<DiskDomain> + Send + Sync + 'static) -> Self {
        self.codomains = Some(Arc::new(v));
        self
    }

    pub fn with_reference(mut self, g: impl Fn(usize, Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        self.reference = Some(Arc::new(g));
        self
    }

    pub fn with_truncation(mut self, degree: usize) -> Self {
        self.truncation = Some(degree);
        self
    }

    pub fn with_values(mut self, values: impl Fn(usize) -> GaussianRational + Send + Sync + 'static) -> Self {
        self.values = Arc::new(values);
        if let Origin::Fde { a, .. } = &mut self.origin {
            *a = None;
        }
        if let Origin::Ode { .. } | Origin::Taylor = self.origin {
            self.origin = Origin::Custom;
        }
        self
    }

    /// `f_i(y, x) = y`, `a_i = g^(i)(x0)`: the approximants are Taylor
    /// polynomials.
    pub fn from_taylor(
        derivs: impl Fn(usize) -> GaussianRational + Send + Sync + 'static,
        x0: GaussianRational,
        radius: f64,
    ) -> Result<Self> {
        let mut sys = Self::new(x0, derivs, |_| Step::Polynomial(BiPoly::y()), Order::Unbounded, radius)?;
        sys.origin = Origin::Taylor;
        Ok(sys)
    }

    /// A finite derivative list; the order is the last index.
    pub fn from_taylor_list(derivs: Vec<GaussianRational>, x0: GaussianRational, radius: f64) -> Result<Self> {
        if derivs.is_empty() {
            return Err(Error::Parameter("need at least one derivative".into()));
        }
        let order = derivs.len() - 1;
        let derivs = Arc::new(derivs);
        let mut sys = Self::from_taylor(move |i| derivs.get(i).cloned().unwrap_or_else(GaussianRational::zero), x0, radius)?;
        sys.order = Order::Finite(order);
        Ok(sys)
    }

    /// Picard iteration for `g' = f(g, x)`, `g(x0) = a`.
    pub fn from_ode(f: Step, a: GaussianRational, x0: GaussianRational, radius: f64) -> Result<Self> {
        if !f.depends_on_y() {
            return Err(Error::ConstantStep { index: 0 });
        }
        let (fc, ac) = (f.clone(), a.clone());
        let mut sys = Self::new(x0, move |_| ac.clone(), move |_| fc.clone(), Order::Unbounded, radius)?;
        sys.origin = Origin::Ode { f, a };
        Ok(sys)
    }

    /// The system for `g'(x) = f(g(φ(x)), x)` with affine `φ`:
    /// `f_i(y, x) = (φ^∘i)'(x) · f(y, φ^∘i(x))`.
    pub fn from_fde(
        f: Step,
        phi: AffineMap,
        initial: InitialValues,
        x0: GaussianRational,
        radius: f64,
    ) -> Result<Self> {
        if !f.depends_on_y() {
            return Err(Error::ConstantStep { index: 0 });
        }
        if !phi.maps_disk_into_itself(&x0, radius) {
            return Err(Error::NotEndomorphism(format!(
                "φ(x) = ({})x + ({}) on B({x0}, {radius})",
                phi.scale, phi.shift
            )));
        }
        if phi.scale.is_zero() {
            return Err(Error::NonInvertible);
        }
        let fixpoint = phi.fixes(&x0);
        // Validate the step transform once so lazily generated steps cannot fail.
        f.coordinate(&phi.scale, &phi.shift)?;

        let (values, common): (ValueFn, Option<GaussianRational>) = match initial {
            InitialValues::Constant(a) => {
                if !fixpoint {
                    return Err(Error::Precondition(
                        "a constant initial value needs φ(x0) = x0; supply a sequence or a reference".into(),
                    ));
                }
                let ac = a.clone();
                (Arc::new(move |_| ac.clone()), Some(a))
            }
            InitialValues::Sequence(v) => (v, None),
            InitialValues::Reference(g) => {
                let (phi, x0) = (phi.clone(), x0.clone());
                let values: ValueFn = Arc::new(move |i| {
                    let z = g(phi.pow(i).apply(&x0).to_complex());
                    GaussianRational::from_complex(z).unwrap_or_else(GaussianRational::zero)
                });
                (values, None)
            }
        };

        let (fc, phic) = (f.clone(), phi.clone());
        let steps: StepFn = Arc::new(move |i| {
            let m = phic.pow(i);
            fc.coordinate(&m.scale, &m.shift).expect("validated coordinate transform")
        });
        let mut sys = Self::new(x0, |_| GaussianRational::one(), |_| Step::Polynomial(BiPoly::y()), Order::Unbounded, radius)?;
        sys.values = values;
        sys.steps = steps;
        sys.origin = Origin::Fde { f, phi, a: common };
        Ok(sys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn poly(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| q(c)).collect())
    }

    fn y_sq() -> Step {
        Step::Polynomial(BiPoly::from_y_poly(&poly(&["0", "0", "1"])))
    }

    #[test]
    fn fde_steps_for_exp() {
        let sys = ApproxSystem::from_fde(y_sq(), AffineMap::scaling(q("1/2")), InitialValues::Constant(q("1")), q("0"), 1.0)
            .unwrap();
        for i in 0..4 {
            let Step::Polynomial(p) = sys.step(i) else { panic!() };
            assert_eq!(p, BiPoly::from_y_poly(&poly(&["0", "0", "1"])).scale(&q("1/2").pow(i as u32)));
            assert_eq!(sys.value(i), q("1"));
        }
    }

    #[test]
    fn fde_steps_for_sinh() {
        let t2 = Step::Polynomial(BiPoly::from_y_poly(&poly(&["1", "0", "2"])));
        let sys = ApproxSystem::from_fde(t2, AffineMap::scaling(q("1/2")), InitialValues::Constant(q("0")), q("0"), 1.0)
            .unwrap();
        let Step::Polynomial(p) = sys.step(3) else { panic!() };
        assert_eq!(p, BiPoly::from_y_poly(&poly(&["1/8", "0", "1/4"])));
    }

    #[test]
    fn fde_without_fixpoint_uses_supplied_values() {
        let alpha = 0.5f64;
        let phi = AffineMap::with_float_shift(q("1"), alpha.ln() / alpha).unwrap();
        let seq: ValueFn = Arc::new(|i| q("1/2").pow(i as u32));
        let sys = ApproxSystem::from_fde(Step::Polynomial(BiPoly::y()), phi.clone(), InitialValues::Sequence(seq), q("0"), f64::INFINITY)
            .unwrap();
        assert_eq!(sys.value(3), q("1/8"));
        let Step::Polynomial(p) = sys.step(5) else { panic!() };
        assert_eq!(p, BiPoly::y());
        let err = ApproxSystem::from_fde(Step::Polynomial(BiPoly::y()), phi, InitialValues::Constant(q("1")), q("0"), f64::INFINITY);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn fde_reference_values() {
        let phi = AffineMap::new(q("1"), q("-1"));
        let g: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync> = Arc::new(|x| x * 2.0);
        let sys = ApproxSystem::from_fde(Step::Polynomial(BiPoly::y()), phi, InitialValues::Reference(g), q("0"), f64::INFINITY)
            .unwrap();
        assert_eq!(sys.value(3), q("-6"));
    }

    #[test]
    fn fde_rejects_expanding_map() {
        let err = ApproxSystem::from_fde(y_sq(), AffineMap::scaling(q("2")), InitialValues::Constant(q("1")), q("0"), 1.0);
        assert!(matches!(err, Err(Error::NotEndomorphism(_))));
    }

    #[test]
    fn ode_rejects_constant_step() {
        let err = ApproxSystem::from_ode(Step::Polynomial(BiPoly::x()), q("1"), q("0"), 1.0);
        assert_eq!(err.unwrap_err(), Error::ConstantStep { index: 0 });
    }
}
