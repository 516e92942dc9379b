//! Transforms and structural identities on randomly drawn ODE systems.

use approxsys::poly::{BiPoly, UniPoly};
use approxsys::system::{
    build_approximants, coordinate_transform, linear_transform, s_operator_iterate, AffineMap, ApproxSystem, Step,
};
use approxsys::GaussianRational;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, im)| {
        &GaussianRational::ratio(n, d) + &(&GaussianRational::i() * &GaussianRational::ratio(im, 2))
    })
}

fn nonzero() -> impl Strategy<Value = GaussianRational> {
    small().prop_filter("nonzero", |z| z != &GaussianRational::from_integer(0))
}

/// `f(y, x)` with degree 1 or 2 in `y` and at most 1 in `x`.
fn step() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(prop::collection::vec(small(), 0..3), 2..4)
        .prop_map(|rows| BiPoly::from_rows(rows.into_iter().map(UniPoly::new).collect()))
        .prop_filter("depends on y", |f| f.deg_y().is_some_and(|d| d >= 1))
}

fn ode(f: BiPoly, a: GaussianRational) -> ApproxSystem {
    ApproxSystem::from_ode(Step::Polynomial(f), a, GaussianRational::from_integer(0), 1.0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn picard_rows_are_shifted_orders(f in step(), a in small(), n in 0usize..4) {
        let sys = ode(f, a);
        let table = build_approximants(&sys, n).unwrap();
        for i in 0..=n {
            prop_assert_eq!(&table.rows[i], &build_approximants(&sys, n - i).unwrap().rows[0]);
        }
    }

    #[test]
    fn s_operator_matches_table(f in step(), a in small(), n in 0usize..4) {
        let sys = ode(f, a);
        prop_assert_eq!(s_operator_iterate(&sys, n).unwrap(), build_approximants(&sys, n).unwrap().rows.swap_remove(0));
    }

    #[test]
    fn coordinate_transform_composes(f in step(), a in small(), alpha in nonzero(), beta in small(), n in 0usize..4) {
        let sys = ode(f, a);
        // φ(x) = αx + β sends the new basepoint −β/α to 0.
        let x0 = -(beta.checked_div(&alpha).unwrap());
        let phi = AffineMap::new(alpha.clone(), beta.clone());
        let t = coordinate_transform(&sys, &phi, x0).unwrap();
        let want: Vec<UniPoly> =
            build_approximants(&sys, n).unwrap().rows.iter().map(|r| r.compose_affine(&alpha, &beta)).collect();
        prop_assert_eq!(build_approximants(&t, n).unwrap().rows, want);
    }

    #[test]
    fn linear_transform_maps_values(f in step(), a0 in small(), a in nonzero(), b in small(), n in 0usize..4) {
        let sys = ode(f, a0);
        let t = linear_transform(&sys, &a, &b).unwrap();
        let shift = UniPoly::constant(b.clone());
        let want: Vec<UniPoly> =
            build_approximants(&sys, n).unwrap().rows.iter().map(|r| &r.scale(&a) + &shift).collect();
        prop_assert_eq!(build_approximants(&t, n).unwrap().rows, want);
    }

    #[test]
    fn transforms_commute(f in step(), a0 in small(), alpha in nonzero(), a in nonzero(), b in small(), n in 0usize..3) {
        let sys = ode(f, a0);
        let phi = AffineMap::scaling(alpha);
        let zero = GaussianRational::from_integer(0);
        let lc = linear_transform(&coordinate_transform(&sys, &phi, zero.clone()).unwrap(), &a, &b).unwrap();
        let cl = coordinate_transform(&linear_transform(&sys, &a, &b).unwrap(), &phi, zero).unwrap();
        prop_assert_eq!(build_approximants(&lc, n).unwrap().rows, build_approximants(&cl, n).unwrap().rows);
    }

    #[test]
    fn approximants_pin_initial_values(f in step(), a in small(), n in 0usize..4) {
        let sys = ode(f, a.clone());
        let table = build_approximants(&sys, n).unwrap();
        for row in &table.rows {
            prop_assert_eq!(row.eval(&sys.basepoint), a.clone());
        }
    }
}
