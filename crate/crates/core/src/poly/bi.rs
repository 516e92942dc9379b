use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Coeff, UniPoly};
use crate::scalar::GaussianRational;

/// Which argument of `f(y, x)` an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// `y`, the first argument (`D_1`).
    First,
    /// `x`, the second argument (`D_2`).
    Second,
}

/// Dense bivariate polynomial `f(y, x) = Σ_j P_j(x) y^j`.
///
/// Stored as one x-polynomial per power of `y`; trailing zero rows are
/// stripped so `==` is polynomial equality.
#[derive(Clone, PartialEq)]
pub struct BiPoly<C: Coeff = GaussianRational> {
    rows: Vec<UniPoly<C>>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn from_rows(mut rows: Vec<UniPoly<C>>) -> Self {
        while rows.last().is_some_and(UniPoly::is_zero) {
            rows.pop();
        }
        Self { rows }
    }

    /// Builds from a dense `[j][k]` table of `y^j x^k` coefficients.
    pub fn from_table(table: Vec<Vec<C>>) -> Self {
        Self::from_rows(table.into_iter().map(UniPoly::new).collect())
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_rows(vec![UniPoly::constant(c)])
    }

    /// `f(y, x) = y`.
    pub fn y() -> Self {
        Self::from_rows(vec![UniPoly::zero(), UniPoly::constant(C::one())])
    }

    /// `f(y, x) = x`.
    pub fn x() -> Self {
        Self::from_rows(vec![UniPoly::x()])
    }

    /// `f(y, x) = p(y)`.
    pub fn from_y_poly(p: &UniPoly<C>) -> Self {
        Self::from_rows(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    /// `f(y, x) = p(x)`.
    pub fn from_x_poly(p: &UniPoly<C>) -> Self {
        Self::from_rows(vec![p.clone()])
    }

    pub fn rows(&self) -> &[UniPoly<C>] {
        &self.rows
    }

    /// Coefficient of `y^j x^k`.
    pub fn coeff(&self, j: usize, k: usize) -> C {
        self.rows.get(j).map_or_else(C::zero, |r| r.coeff(k))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.rows.iter().filter_map(UniPoly::degree).max()
    }

    /// Nonzero terms as `(j, k, coefficient)` of `y^j x^k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.rows.iter().enumerate().flat_map(|(j, row)| {
            row.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (j, k, c))
        })
    }

    pub fn eval(&self, y: &C, x: &C) -> C {
        self.rows.iter().rev().fold(C::zero(), |acc, row| acc.times(y).plus(&row.eval(x)))
    }

    pub fn eval_complex(&self, y: Complex64, x: Complex64) -> Complex64 {
        self.rows.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, row| acc * y + row.eval_complex(x))
    }

    pub fn to_float(&self) -> BiPoly<Complex64> {
        BiPoly::from_rows(self.rows.iter().map(UniPoly::to_float).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn map_rows(&self, f: impl Fn(&UniPoly<C>) -> UniPoly<C>) -> Self {
        Self::from_rows(self.rows.iter().map(f).collect())
    }

    pub fn truncate_x(&self, degree: usize) -> Self {
        self.map_rows(|r| r.truncate(degree))
    }

    /// `f(q(x), x)`, optionally truncated at `degree` in `x`.
    pub fn substitute_y(&self, q: &UniPoly<C>, degree: Option<usize>) -> UniPoly<C> {
        let mut acc = UniPoly::zero();
        for row in self.rows.iter().rev() {
            let row = match degree {
                Some(d) => row.truncate(d),
                None => row.clone(),
            };
            acc = &acc.mul_truncated(q, degree) + &row;
        }
        acc
    }

    /// Formal partial derivative of the given order.
    pub fn partial_derivative(&self, which: Variable, order: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..order {
            out = match which {
                Variable::First => Self::from_rows(
                    out.rows
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(j, r)| r.scale(&C::from_int(j as i64)))
                        .collect(),
                ),
                Variable::Second => out.map_rows(UniPoly::derivative),
            };
        }
        out
    }

    /// `f(y, alpha * x + beta)`.
    pub fn compose_x_affine(&self, alpha: &C, beta: &C) -> Self {
        self.map_rows(|r| r.compose_affine(alpha, beta))
    }

    /// `f(alpha * y + beta, x)`.
    pub fn compose_y_affine(&self, alpha: &C, beta: &C) -> Self {
        let lin = Self::from_rows(vec![UniPoly::constant(beta.clone()), UniPoly::constant(alpha.clone())]);
        let mut acc = Self::zero();
        for row in self.rows.iter().rev() {
            acc = &(&acc * &lin) + &Self::from_rows(vec![row.clone()]);
        }
        acc
    }

    /// `f(y0 + u, x0 + v)` as a polynomial in `(u, v)`; its coefficients
    /// are the scaled mixed derivatives at `(y0, x0)`.
    pub fn recenter(&self, y0: &C, x0: &C) -> Self {
        self.compose_y_affine(&C::one(), y0).compose_x_affine(&C::one(), x0)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly::from_rows(self.rows.iter().map(|r| r.map(&f)).collect())
    }
}

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, k, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c:?})y^{j}x^{k}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> Add for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let n = self.rows.len().max(rhs.rows.len());
        let zero = UniPoly::zero();
        BiPoly::from_rows(
            (0..n).map(|j| self.rows.get(j).unwrap_or(&zero) + rhs.rows.get(j).unwrap_or(&zero)).collect(),
        )
    }
}

impl<C: Coeff> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        self.map_rows(|r| -r)
    }
}

impl<C: Coeff> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::from_rows(rows)
    }
}
