use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// `φ(x) = scale * x + shift`, with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap {
    pub scale: GaussianRational,
    pub shift: GaussianRational,
}

impl AffineMap {
    pub fn new(scale: GaussianRational, shift: GaussianRational) -> Self {
        Self { scale, shift }
    }

    pub fn identity() -> Self {
        Self::new(GaussianRational::one(), GaussianRational::zero())
    }

    pub fn scaling(scale: GaussianRational) -> Self {
        Self::new(scale, GaussianRational::zero())
    }

    /// Shift given as a float (e.g. `α⁻¹ log α`); stored as its exact
    /// binary value.
    pub fn with_float_shift(scale: GaussianRational, shift: f64) -> Result<Self> {
        let shift = GaussianRational::from_f64(shift)
            .ok_or_else(|| Error::Parameter(format!("shift {shift} is not finite")))?;
        Ok(Self::new(scale, shift))
    }

    pub fn apply(&self, x: &GaussianRational) -> GaussianRational {
        &(&self.scale * x) + &self.shift
    }

    pub fn apply_complex(&self, x: Complex64) -> Complex64 {
        self.scale.to_complex() * x + self.shift.to_complex()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap::new(&self.scale * &inner.scale, self.apply(&inner.shift))
    }

    /// `φ^∘i`; `pow(0)` is the identity.
    pub fn pow(&self, i: usize) -> AffineMap {
        (0..i).fold(AffineMap::identity(), |acc, _| self.compose(&acc))
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = self.scale.inv().ok_or(Error::NonInvertible)?;
        let shift = -(&inv * &self.shift);
        Ok(AffineMap::new(inv, shift))
    }

    pub fn is_identity(&self) -> bool {
        self.scale.is_one() && self.shift.is_zero()
    }

    pub fn fixes(&self, x: &GaussianRational) -> bool {
        &self.apply(x) == x
    }

    pub fn commutes_with(&self, other: &AffineMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Whether `φ` maps the closed disk `B(x0, radius)` into itself:
    /// `|α| R + |φ(x0) − x0| ≤ R`. Every affine map sends the whole plane
    /// into itself.
    pub fn maps_disk_into_itself(&self, x0: &GaussianRational, radius: f64) -> bool {
        if radius.is_infinite() {
            return true;
        }
        let drift = (&self.apply(x0) - x0).to_complex().norm();
        self.scale.to_complex().norm() * radius + drift <= radius * (1.0 + 1e-12)
    }
}
