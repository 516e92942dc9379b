//! Property tests for the exact scalar and polynomial layer.

use approxsys::poly::{chebyshev_t, chebyshev_t_plus, chebyshev_u, BiPoly, UniPoly};
use approxsys::GaussianRational;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn real() -> impl Strategy<Value = GaussianRational> {
    rational().prop_map(GaussianRational::from_real)
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(gaussian(), 0..6).prop_map(UniPoly::new)
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(poly(), 0..4).prop_map(BiPoly::from_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(z in gaussian()) {
        let back: GaussianRational = z.to_string().parse().unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), x in gaussian()) {
        prop_assert_eq!((&p * &q).eval(&x), &p.eval(&x) * &q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), &p.eval(&x) + &q.eval(&x));
        prop_assert_eq!(p.compose(&q, None).eval(&x), p.eval(&q.eval(&x)));
    }

    #[test]
    fn degree_of_product(p in poly(), q in poly()) {
        let want = match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        prop_assert_eq!((&p * &q).degree(), want);
    }

    #[test]
    fn integral_then_derivative(p in poly(), x0 in gaussian()) {
        let big_p = p.integrate_from(&x0);
        prop_assert_eq!(big_p.derivative(), p);
        prop_assert_eq!(big_p.eval(&x0), GaussianRational::from_integer(0));
    }

    #[test]
    fn affine_substitution(p in poly(), a in gaussian(), b in gaussian(), x in gaussian()) {
        let ax_b = &(&a * &x) + &b;
        prop_assert_eq!(p.compose_affine(&a, &b).eval(&x), p.eval(&ax_b));
        prop_assert_eq!(p.taylor_shift(&b).eval(&x), p.eval(&(&x + &b)));
    }

    #[test]
    fn truncated_products_agree(p in poly(), q in poly(), d in 0usize..8) {
        prop_assert_eq!(p.mul_truncated(&q, Some(d)), (&p * &q).truncate(d));
    }

    #[test]
    fn float_evaluation_tracks_exact(p in poly(), x in real()) {
        let exact = p.eval(&x).to_complex();
        let float = p.to_float().eval_complex(x.to_complex());
        prop_assert!((exact - float).norm() <= 1e-9 * exact.norm().max(1.0));
    }

    #[test]
    fn bivariate_substitution(f in bipoly(), q in poly(), x in gaussian()) {
        let y = q.eval(&x);
        prop_assert_eq!(f.substitute_y(&q, None).eval(&x), f.eval(&y, &x));
    }

    #[test]
    fn recentering_preserves_values(f in bipoly(), y0 in gaussian(), x0 in gaussian(), y in gaussian(), x in gaussian()) {
        let g = f.recenter(&y0, &x0);
        prop_assert_eq!(g.eval(&(&y - &y0), &(&x - &x0)), f.eval(&y, &x));
    }

    #[test]
    fn chebyshev_identities(p in 1usize..10, t in -1.0f64..1.0) {
        // T_p(cos t) = cos(pt), U_{p-1}(cos t) sin t = sin(pt)
        let (c, s) = (t.cos(), t.sin());
        let x = Complex64::new(c, 0.0);
        prop_assert!((chebyshev_t(p).to_float().eval_complex(x).re - (p as f64 * t).cos()).abs() < 1e-12);
        prop_assert!((chebyshev_u(p - 1).to_float().eval_complex(x).re * s - (p as f64 * t).sin()).abs() < 1e-12);
        let tp = chebyshev_t_plus(p);
        prop_assert!(tp.coeffs().iter().all(|c| c.is_nonnegative_real()));
    }
}
