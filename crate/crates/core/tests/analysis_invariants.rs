//! Positivity, domination and error bounds against the catalog targets.

use approxsys::analysis::{
    canonical_majorant, dominates, error_bound_starlike, exp_closed_form, is_positive, taylor_prefix_check,
    PositivityVerdict, PrefixOutcome, Site,
};
use approxsys::catalog::{catalog_get, reference_error_grid, segment_grid, EntryKind, Params};
use approxsys::exec::Execution;
use approxsys::poly::{BiPoly, UniPoly};
use approxsys::system::{build_approximants, ApproxSystem, Step};
use approxsys::GaussianRational;
use num_complex::Complex64;
use proptest::prelude::*;

fn entry(kind: EntryKind) -> approxsys::catalog::CatalogEntry {
    catalog_get(kind, Params::default()).unwrap()
}

fn grid(radius: f64) -> Vec<Complex64> {
    segment_grid(Complex64::new(0.0, 0.0), Complex64::new(0.95 * radius, 0.0), 64).unwrap()
}

#[test]
fn sin_is_rotated_sinh() {
    let (sin, sinh) = (entry(EntryKind::Sin), entry(EntryKind::Sinh));
    let i = GaussianRational::i();
    for n in 0..=4 {
        let s = build_approximants(&sin.system, n).unwrap();
        let h = build_approximants(&sinh.system, n).unwrap();
        // sin x = −i sinh(ix)
        let want = h.g_top().compose_affine(&i, &GaussianRational::from_integer(0)).scale(&-i.clone());
        assert_eq!(s.g_top(), &want, "n = {n}");
        assert!(s.g_top().coeffs().iter().all(|c| c.is_real()));
    }
}

#[test]
fn closed_forms_dominate_grid_error() {
    for kind in [EntryKind::Exp, EntryKind::Sinh, EntryKind::Cosh, EntryKind::Log] {
        let e = entry(kind);
        let g = grid(e.radius());
        for n in 0..=5 {
            let err = reference_error_grid(&e, n, &g, Execution::Parallel).unwrap();
            let bound = e.closed_form_bound(n).unwrap();
            assert!(err <= bound, "{kind} n = {n}: error {err} above bound {bound}");
        }
    }
    let exp = entry(EntryKind::Exp);
    let e2 = (std::f64::consts::E - build_approximants(&exp.system, 2).unwrap().eval(Complex64::new(1.0, 0.0)).re).abs();
    assert!((e2 - 0.13495).abs() < 1e-4);
    assert!(e2 <= exp_closed_form(2, 1.0, 2));
}

#[test]
fn starlike_bound_dominates_where_finite() {
    for kind in [EntryKind::Exp, EntryKind::Sinh, EntryKind::Taylor, EntryKind::Picard] {
        let e = entry(kind);
        let g = grid(e.radius());
        for n in 0..=4 {
            let report = error_bound_starlike(&e.system, n, None, Execution::Sequential).unwrap();
            let err = reference_error_grid(&e, n, &g, Execution::Sequential).unwrap();
            assert!(report.rigorous());
            assert!(err <= report.value().unwrap(), "{kind} n = {n}");
        }
    }
}

#[test]
fn sin_counterexample() {
    match is_positive(&entry(EntryKind::Sin).system, 4, None).unwrap() {
        PositivityVerdict::Counterexample(c) => {
            assert_eq!(c.index, 0);
            assert_eq!(c.site, Site::Derivative { k: 2, l: 0 });
            assert_eq!(c.value, GaussianRational::from_integer(-4));
        }
        v => panic!("sin certified positive: {v:?}"),
    }
}

#[test]
fn majorant_dominates_and_bounds_coefficients() {
    let sin = entry(EntryKind::Sin).system;
    let tilde = canonical_majorant(&sin).unwrap();
    assert!(dominates(&tilde, &sin, 5, None).unwrap().dominates());
    for n in 0..=4 {
        let s = build_approximants(&sin, n).unwrap();
        let t = build_approximants(&tilde, n).unwrap();
        for (j, c) in s.g_top().coeffs().iter().enumerate() {
            let bound = t.g_top().coeff(j).to_complex().re;
            assert!(c.to_complex().norm() <= bound + 1e-12, "n = {n}, j = {j}");
        }
    }
}

#[test]
fn prefixes_match_targets() {
    for kind in EntryKind::ALL {
        let e = entry(kind);
        for n in 0..=4 {
            let table = build_approximants(&e.system, n).unwrap();
            let upto = e.prefix_degree(n);
            let got = taylor_prefix_check(table.g_top(), |j| (e.taylor)(j), upto, &GaussianRational::from_integer(0));
            assert_eq!(got, PrefixOutcome::Match, "{kind} n = {n}");
        }
    }
}

fn nonneg() -> impl Strategy<Value = GaussianRational> {
    (0i64..=3, 1i64..=3).prop_map(|(n, d)| GaussianRational::ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// A positive system has nonnegative approximant coefficients.
    #[test]
    fn positive_systems_give_nonnegative_coefficients(
        rows in prop::collection::vec(prop::collection::vec(nonneg(), 0..3), 2..4),
        a in nonneg(),
        n in 0usize..5,
    ) {
        let f = BiPoly::from_rows(rows.into_iter().map(UniPoly::new).collect());
        prop_assume!(f.deg_y().is_some_and(|d| d >= 1));
        let sys = ApproxSystem::from_ode(Step::Polynomial(f), a, GaussianRational::from_integer(0), 0.5).unwrap();
        prop_assert!(is_positive(&sys, n + 1, None).unwrap().is_positive());
        let table = build_approximants(&sys, n).unwrap();
        for row in &table.rows {
            prop_assert!(row.coeffs().iter().all(|c| c.is_nonnegative_real()));
        }
    }

    /// The canonical majorant of any system dominates it.
    #[test]
    fn canonical_majorant_dominates(
        rows in prop::collection::vec(prop::collection::vec((-3i64..=3, -3i64..=3), 0..3), 2..4),
        a in (-3i64..=3, -3i64..=3),
    ) {
        let g = |(re, im): (i64, i64)| &GaussianRational::from_integer(re) + &(&GaussianRational::i() * &GaussianRational::from_integer(im));
        let f = BiPoly::from_rows(rows.into_iter().map(|r| UniPoly::new(r.into_iter().map(g).collect())).collect());
        prop_assume!(f.deg_y().is_some_and(|d| d >= 1));
        let sys = ApproxSystem::from_ode(Step::Polynomial(f), g(a), GaussianRational::from_integer(0), 0.5).unwrap();
        let tilde = canonical_majorant(&sys).unwrap();
        prop_assert!(dominates(&tilde, &sys, 4, None).unwrap().dominates());
    }
}
