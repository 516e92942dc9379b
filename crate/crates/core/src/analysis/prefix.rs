use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::GaussianRational;
use crate::system::ApproximantTable;

#[derive(Clone, Debug, PartialEq)]
pub enum PrefixOutcome<C> {
    Match,
    /// First degree `j` where the coefficients of `(x − x0)^j` differ.
    Mismatch { j: usize, got: C, want: C },
}

impl<C> PrefixOutcome<C> {
    pub fn is_match(&self) -> bool {
        matches!(self, PrefixOutcome::Match)
    }
}

/// Coefficients of `approx` in powers of `x − x0`.
fn centered(approx: &UniPoly, x0: &GaussianRational) -> UniPoly {
    approx.taylor_shift(x0)
}

/// Compares Taylor coefficients about `x0` through degree `upto`, exactly.
/// `reference(j)` is the `j`-th power series coefficient `g^(j)(x0) / j!`.
pub fn taylor_prefix_check(
    approx: &UniPoly,
    reference: impl Fn(usize) -> GaussianRational,
    upto: usize,
    x0: &GaussianRational,
) -> PrefixOutcome<GaussianRational> {
    let p = centered(approx, x0);
    for j in 0..=upto {
        let (got, want) = (p.coeff(j), reference(j));
        if got != want {
            return PrefixOutcome::Mismatch { j, got, want };
        }
    }
    PrefixOutcome::Match
}

/// As [`taylor_prefix_check`] for references known only in floating point.
pub fn taylor_prefix_check_approx(
    approx: &UniPoly,
    reference: impl Fn(usize) -> Complex64,
    upto: usize,
    x0: &GaussianRational,
    tol: f64,
) -> PrefixOutcome<Complex64> {
    let p = centered(approx, x0);
    for j in 0..=upto {
        let (got, want) = (p.coeff(j).to_complex(), reference(j));
        let d = (got - want).norm();
        if d.is_nan() || d > tol {
            return PrefixOutcome::Mismatch { j, got, want };
        }
    }
    PrefixOutcome::Match
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// True when every row of the table has only odd (or only even) powers.
pub fn parity_check(table: &ApproximantTable, parity: Parity) -> Result<bool> {
    if !table.basepoint.is_zero() {
        return Err(Error::Inapplicable("parity is only meaningful about x0 = 0".into()));
    }
    Ok(table.rows.iter().all(|r| match parity {
        Parity::Odd => r.is_odd(),
        Parity::Even => r.is_even(),
    }))
}
