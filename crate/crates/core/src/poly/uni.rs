use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::Coeff;
use crate::scalar::GaussianRational;

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and `==` is polynomial equality.
#[derive(Clone, PartialEq)]
pub struct UniPoly<C: Coeff = GaussianRational> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `alpha * x + beta`
    pub fn linear(alpha: C, beta: C) -> Self {
        Self::new(vec![beta, alpha])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c.to_complex())
    }

    pub fn to_float(&self) -> UniPoly<Complex64> {
        UniPoly::new(self.coeffs.iter().map(Coeff::to_complex).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(self.coeffs.iter().take(degree + 1).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&C::from_int(k as i64)))
                .collect(),
        )
    }

    /// Antiderivative `P` with `P(x0) = 0`.
    pub fn integrate_from(&self, x0: &C) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c.div_int(k as u64 + 1)));
        let mut p = Self::new(coeffs);
        if !x0.is_zero() {
            let at = p.eval(x0);
            p = &p - &Self::constant(at);
        }
        p
    }

    pub fn mul_truncated(&self, other: &Self, degree: Option<usize>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = degree.map_or(full, |d| full.min(d + 1));
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j].accumulate(a, b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        self.pow_truncated(exp, None)
    }

    pub fn pow_truncated(&self, exp: u32, degree: Option<usize>) -> Self {
        let mut acc = Self::constant(C::one());
        for _ in 0..exp {
            acc = acc.mul_truncated(self, degree);
        }
        match degree {
            Some(d) => acc.truncate(d),
            None => acc,
        }
    }

    /// `self(x + shift)` by repeated synthetic division.
    pub fn taylor_shift(&self, shift: &C) -> Self {
        if shift.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let (lo, hi) = a.split_at_mut(j + 1);
                lo[j].accumulate(shift, &hi[0]);
            }
        }
        Self::new(a)
    }

    /// `self(alpha * x + beta)`.
    pub fn compose_affine(&self, alpha: &C, beta: &C) -> Self {
        let shifted = self.taylor_shift(beta);
        let mut power = C::one();
        let mut coeffs = Vec::with_capacity(shifted.coeffs.len());
        for c in shifted.coeffs {
            coeffs.push(c.times(&power));
            power = power.times(alpha);
        }
        Self::new(coeffs)
    }

    /// `self(q(x))`, optionally truncated.
    pub fn compose(&self, q: &Self, degree: Option<usize>) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.mul_truncated(q, degree) + &Self::constant(c.clone());
        }
        acc
    }

    /// True when every nonzero coefficient sits at an odd power.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Coeff::is_zero)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Coeff::is_zero)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for UniPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c:?})")?,
                1 => write!(f, "({c:?})x")?,
                _ => write!(f, "({c:?})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect())
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        self.mul_truncated(rhs, None)
    }
}

impl<C: Coeff> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.iter().map(Coeff::negated).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for UniPoly<C> {
            type Output = UniPoly<C>;
            fn $m(self, rhs: UniPoly<C>) -> UniPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
