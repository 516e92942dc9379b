use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closed-disk stand-in for an open disk `B(center, radius)`. Sup norms of
/// polynomials over the open disk equal those over its closure, so all
/// evaluation happens on the closed disk. `radius` may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskDomain {
    pub center: Complex64,
    pub radius: f64,
}

impl DiskDomain {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::Domain(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Self { center, radius })
    }

    pub fn real(center: f64, radius: f64) -> Result<Self> {
        Self::new(Complex64::new(center, 0.0), radius)
    }

    pub fn is_bounded(&self) -> bool {
        self.radius.is_finite()
    }

    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        (z - self.center).norm() <= self.radius + tol
    }

    /// `samples` equally spaced points on the boundary circle.
    pub fn boundary(&self, samples: usize) -> Vec<Complex64> {
        (0..samples)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / samples as f64;
                self.center + Complex64::from_polar(self.radius, th)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_radius() {
        assert!(DiskDomain::real(0.0, 0.0).is_err());
        assert!(DiskDomain::real(0.0, -1.0).is_err());
        assert!(DiskDomain::real(0.0, f64::INFINITY).is_ok());
    }

    #[test]
    fn boundary_points_lie_on_circle() {
        let d = DiskDomain::real(1.0, 0.5).unwrap();
        for z in d.boundary(16) {
            assert!(((z - d.center).norm() - 0.5).abs() < 1e-15);
            assert!(d.contains(z, 1e-12));
        }
    }
}
