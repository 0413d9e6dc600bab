//! The fractional rotation angle and its cached trigonometry.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Singularity guard: below this |sin φ| the cotangent exceeds ~1e9 and
/// double-precision chirp phases are meaningless.
pub const EPS_ANGLE: f64 = 1e-9;

/// A validated rotation angle φ with sin φ ≠ 0, carrying the trigonometric
/// quantities every transform evaluation needs and the complex amplitude
/// factor √(1 − j·cot φ) on its principal branch.
///
/// The real part of the radicand 1 − j·cot φ is identically 1, so the
/// principal root always has strictly positive real part and
/// `amp_root(−φ) == conj(amp_root(φ))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalAngle {
    phi: f64,
    order: f64,
    sin: f64,
    cos: f64,
    cot: f64,
    csc: f64,
    amp_root: Complex64,
}

impl FractionalAngle {
    /// Builds an angle from φ in radians. Fails with [`Error::SingularAngle`]
    /// when |sin φ| ≤ 1e−9.
    pub fn new(phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::SingularAngle {
                phi,
                sin_abs: f64::NAN,
                eps: EPS_ANGLE,
            });
        }
        let (sin, cos) = phi.sin_cos();
        if sin.abs() <= EPS_ANGLE {
            return Err(Error::SingularAngle {
                phi,
                sin_abs: sin.abs(),
                eps: EPS_ANGLE,
            });
        }
        let cot = cos / sin;
        let csc = 1.0 / sin;
        Ok(Self {
            phi,
            order: phi / FRAC_PI_2,
            sin,
            cos,
            cot,
            csc,
            amp_root: Complex64::new(1.0, -cot).sqrt(),
        })
    }

    /// Builds an angle from the fractional order a, with φ = a·π/2.
    pub fn from_order(order: f64) -> Result<Self> {
        Self::new(order * FRAC_PI_2)
    }

    /// The angle for −φ. Always valid when `self` is.
    pub fn negated(&self) -> Self {
        Self::new(-self.phi).expect("sin(-phi) = -sin(phi) != 0")
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Fractional order a = 2φ/π.
    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn sin(&self) -> f64 {
        self.sin
    }

    pub fn cos(&self) -> f64 {
        self.cos
    }

    pub fn cot(&self) -> f64 {
        self.cot
    }

    pub fn csc(&self) -> f64 {
        self.csc
    }

    /// √(1 − j·cot φ), principal branch.
    pub fn amp_root(&self) -> Complex64 {
        self.amp_root
    }
}
