use std::sync::Arc;

use num_traits::Zero;

use super::{AffineMap, ApproxSystem, Origin};
use crate::analysis::DiskDomain;
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Pulls the system back along `φ`, where `φ(new_x0) = x0`:
/// `f̄_i(y, x) = f_i(y, φ(x)) φ'(x)`, `ā_i = a_i`. The approximants become
/// `g_i^[n] ∘ φ`.
pub fn coordinate_transform(sys: &ApproxSystem, phi: &AffineMap, new_x0: GaussianRational) -> Result<ApproxSystem> {
    let inv = phi.inverse()?;
    if phi.apply(&new_x0) != sys.basepoint {
        return Err(Error::Precondition(format!(
            "φ({new_x0}) = {} but the basepoint is {}",
            phi.apply(&new_x0),
            sys.basepoint
        )));
    }
    // Fail now rather than inside the lazy step generator.
    sys.step(0).coordinate(&phi.scale, &phi.shift)?;

    let steps = sys.steps.clone();
    let (alpha, beta) = (phi.scale.clone(), phi.shift.clone());
    let new_steps = Arc::new(move |i| steps(i).coordinate(&alpha, &beta).expect("coordinate transform of step"));

    let origin = match &sys.origin {
        Origin::Ode { f, a } => Origin::Ode { f: f.coordinate(&phi.scale, &phi.shift)?, a: a.clone() },
        Origin::Fde { f, phi: psi, a } => Origin::Fde {
            f: f.coordinate(&phi.scale, &phi.shift)?,
            phi: inv.compose(psi).compose(phi),
            a: a.clone(),
        },
        Origin::Taylor | Origin::Custom => Origin::Custom,
    };

    let reference = sys.reference.clone().map(|g| {
        let phi = phi.clone();
        Arc::new(move |i, x| g(i, phi.apply_complex(x))) as super::RowReference
    });

    let radius = sys.radius() / phi.scale.to_complex().norm();
    Ok(ApproxSystem {
        domain: DiskDomain::new(new_x0.to_complex(), radius)?,
        basepoint: new_x0,
        values: sys.values.clone(),
        steps: new_steps,
        order: sys.order,
        codomains: sys.codomains.clone(),
        reference,
        origin,
        truncation: sys.truncation,
    })
}

/// `f̄_i(y, x) = a f_i(a⁻¹(y − b), x)`, `ā_i = a a_i + b`. The approximants
/// become `a g_i^[n] + b`.
pub fn linear_transform(sys: &ApproxSystem, a: &GaussianRational, b: &GaussianRational) -> Result<ApproxSystem> {
    if a.is_zero() {
        return Err(Error::DegenerateScale);
    }
    sys.step(0).value_transform(a, b)?;

    let steps = sys.steps.clone();
    let (ac, bc) = (a.clone(), b.clone());
    let new_steps = Arc::new(move |i| steps(i).value_transform(&ac, &bc).expect("value transform of step"));
    let values = sys.values.clone();
    let (ac, bc) = (a.clone(), b.clone());
    let new_values = Arc::new(move |i| &(&ac * &values(i)) + &bc);

    let map_value = |v: &GaussianRational| &(a * v) + b;
    let origin = match &sys.origin {
        Origin::Ode { f, a: a0 } => Origin::Ode { f: f.value_transform(a, b)?, a: map_value(a0) },
        Origin::Fde { f, phi, a: a0 } => {
            Origin::Fde { f: f.value_transform(a, b)?, phi: phi.clone(), a: a0.as_ref().map(map_value) }
        }
        Origin::Taylor | Origin::Custom => Origin::Custom,
    };

    let (acx, bcx) = (a.to_complex(), b.to_complex());
    let codomains = sys.codomains.clone().map(|v| {
        Arc::new(move |i| v(i).map(|d| DiskDomain { center: acx * d.center + bcx, radius: acx.norm() * d.radius }))
            as super::CodomainFn
    });
    let reference = sys
        .reference
        .clone()
        .map(|g| Arc::new(move |i, x| acx * g(i, x) + bcx) as super::RowReference);

    Ok(ApproxSystem {
        basepoint: sys.basepoint.clone(),
        values: new_values,
        steps: new_steps,
        order: sys.order,
        domain: sys.domain,
        codomains,
        reference,
        origin,
        truncation: sys.truncation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{BiPoly, UniPoly};
    use crate::system::{build_approximants, InitialValues, Step};

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn poly(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| q(c)).collect())
    }

    fn exp2() -> ApproxSystem {
        let step = Step::Polynomial(BiPoly::from_y_poly(&poly(&["0", "0", "1"])));
        ApproxSystem::from_fde(step, AffineMap::scaling(q("1/2")), InitialValues::Constant(q("1")), q("0"), 1.0).unwrap()
    }

    #[test]
    fn dilation_of_exp() {
        let t = coordinate_transform(&exp2(), &AffineMap::scaling(q("2")), q("0")).unwrap();
        assert_eq!(build_approximants(&t, 2).unwrap().g_top(), &poly(&["1", "2", "2", "2/3"]));
        assert_eq!(t.radius(), 0.5);
    }

    #[test]
    fn identity_maps_change_nothing() {
        let sys = exp2();
        let id = coordinate_transform(&sys, &AffineMap::identity(), q("0")).unwrap();
        let lin = linear_transform(&sys, &q("1"), &q("0")).unwrap();
        for n in 0..4 {
            let want = build_approximants(&sys, n).unwrap();
            assert_eq!(build_approximants(&id, n).unwrap(), want);
            assert_eq!(build_approximants(&lin, n).unwrap(), want);
        }
    }

    #[test]
    fn affine_value_map_of_exp() {
        let t = linear_transform(&exp2(), &q("2"), &q("1")).unwrap();
        assert_eq!(build_approximants(&t, 2).unwrap().g_top(), &poly(&["3", "2", "1", "1/6"]));
        assert_eq!(linear_transform(&exp2(), &q("0"), &q("1")).unwrap_err(), Error::DegenerateScale);
    }

    #[test]
    fn shifted_basepoint_commutes() {
        let sys = exp2();
        let phi = AffineMap::new(q("1"), q("-1/3"));
        let t = coordinate_transform(&sys, &phi, q("1/3")).unwrap();
        for n in 0..4 {
            let want: Vec<_> = build_approximants(&sys, n).unwrap().rows.iter().map(|r| r.compose_affine(&q("1"), &q("-1/3"))).collect();
            assert_eq!(build_approximants(&t, n).unwrap().rows, want);
        }
        assert!(matches!(coordinate_transform(&sys, &phi, q("0")), Err(Error::Precondition(_))));
        assert_eq!(coordinate_transform(&sys, &AffineMap::scaling(q("0")), q("0")).unwrap_err(), Error::NonInvertible);
    }
}
