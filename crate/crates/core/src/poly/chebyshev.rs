//! Chebyshev polynomials `T_p`, `U_p` and the sign-flattened `T_p^+`,
//! generated from their closed-form sums.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::UniPoly;
use crate::scalar::GaussianRational;

fn fact(n: usize) -> BigInt {
    GaussianRational::factorial(n as u32)
}

fn pow2(e: usize) -> BigInt {
    BigInt::from(1u8) << e
}

/// `(p/2) Σ_k s^k (p-k-1)! / (k! (p-2k)!) (2x)^(p-2k)` with `s = ±1`.
fn first_kind_sum(p: usize, alternating: bool) -> UniPoly {
    if p == 0 {
        return UniPoly::constant(GaussianRational::from_integer(1));
    }
    let mut coeffs = vec![GaussianRational::from_integer(0); p + 1];
    for k in 0..=p / 2 {
        let deg = p - 2 * k;
        let mut num = BigInt::from(p) * fact(p - k - 1) * pow2(deg);
        if alternating && k % 2 == 1 {
            num = -num;
        }
        let den = BigInt::from(2) * fact(k) * fact(deg);
        coeffs[deg] = GaussianRational::from_real(BigRational::new(num, den));
    }
    UniPoly::new(coeffs)
}

/// `T_p`, with `T_0 = 1`.
pub fn chebyshev_t(p: usize) -> UniPoly {
    first_kind_sum(p, true)
}

/// `T_p^+(x) = i^{-p} T_p(ix)`; all coefficients are nonnegative.
pub fn chebyshev_t_plus(p: usize) -> UniPoly {
    first_kind_sum(p, false)
}

/// `U_p`, with `U_0 = 1`.
pub fn chebyshev_u(p: usize) -> UniPoly {
    let mut coeffs = vec![GaussianRational::from_integer(0); p + 1];
    for k in 0..=p / 2 {
        let deg = p - 2 * k;
        let mut num = fact(p - k) * pow2(deg);
        if k % 2 == 1 {
            num = -num;
        }
        let den = fact(k) * fact(deg);
        coeffs[deg] = GaussianRational::from_real(BigRational::new(num, den));
    }
    UniPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| GaussianRational::from_integer(c)).collect())
    }

    /// Three-term recurrence `P_{p+1} = 2x P_p - P_{p-1}`, test-only oracle.
    fn recurrence(p0: UniPoly, p1: UniPoly, n: usize) -> UniPoly {
        let two_x = p(&[0, 2]);
        let (mut a, mut b) = (p0, p1);
        if n == 0 {
            return a;
        }
        for _ in 1..n {
            let c = &(&two_x * &b) - &a;
            a = b;
            b = c;
        }
        b
    }

    #[test]
    fn small_cases() {
        assert_eq!(chebyshev_t(1), p(&[0, 1]));
        assert_eq!(chebyshev_t(2), p(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3), p(&[0, -3, 0, 4]));
        assert_eq!(chebyshev_u(0), p(&[1]));
        assert_eq!(chebyshev_u(1), p(&[0, 2]));
        assert_eq!(chebyshev_u(3), p(&[0, -4, 0, 8]));
        assert_eq!(chebyshev_t_plus(1), p(&[0, 1]));
        assert_eq!(chebyshev_t_plus(2), p(&[1, 0, 2]));
        assert_eq!(chebyshev_t_plus(4), p(&[1, 0, 8, 0, 8]));
    }

    #[test]
    fn closed_sums_match_recurrence() {
        for n in 0..=16 {
            assert_eq!(chebyshev_t(n), recurrence(p(&[1]), p(&[0, 1]), n), "T_{n}");
            assert_eq!(chebyshev_u(n), recurrence(p(&[1]), p(&[0, 2]), n), "U_{n}");
        }
    }

    #[test]
    fn trig_identities() {
        for n in 0..=12 {
            let t = chebyshev_t(n).to_float();
            let u = chebyshev_u(n).to_float();
            for th in [0.1f64, 0.7, 2.3] {
                let c = num_complex::Complex64::new(th.cos(), 0.0);
                assert!((t.eval(&c).re - (n as f64 * th).cos()).abs() < 1e-12);
                let lhs = u.eval(&c).re * th.sin();
                assert!((lhs - ((n + 1) as f64 * th).sin()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn t_plus_is_rotated_t() {
        let i = GaussianRational::i();
        for n in 1..=12usize {
            let rotated = chebyshev_t(n)
                .compose_affine(&i, &GaussianRational::from_integer(0))
                .scale(&i.powi(-(n as i64)).unwrap());
            let plus = chebyshev_t_plus(n);
            assert_eq!(plus, rotated, "p = {n}");
            assert!(plus.coeffs().iter().all(GaussianRational::is_nonnegative_real));
        }
    }

    #[test]
    fn t_plus_of_sinh_is_cosh_for_even_p() {
        for n in (2..=12).step_by(2) {
            let tp = chebyshev_t_plus(n).to_float();
            for x in [0.2f64, 1.0] {
                let v = tp.eval(&num_complex::Complex64::new(x.sinh(), 0.0)).re;
                let want = (n as f64 * x).cosh();
                assert!((v - want).abs() <= 1e-12 * want.max(1.0), "p={n} x={x}");
            }
        }
    }
}
