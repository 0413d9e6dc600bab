//! Pointwise evaluation of the transform kernel and of the fractional
//! convolution weight.
//!
//! The kernel is `K_φ(t, u) = √(1 − j cot φ) · exp[j(t²·cot φ/2 − t·u·csc φ)]`.
//! Its phase is computed as one fused real expression before a single complex
//! exponential; large |cot φ| phases are the dominant error source and this
//! caps rounding at one trig evaluation.

use num_complex::Complex64;

use crate::angle::FractionalAngle;

/// Kernel value at `(t, u)`. The exponential has unit modulus, so
/// `|kernel(..)| == |amp_root|` up to rounding.
///
/// The diagonal-symmetry identity `K(t, u) = K(u, t)` is read with the
/// quadratic chirp bound to the time variable: swapping the two scalar slots
/// only reorders the commutative cross product `t·u`, so the identity holds
/// exactly as computed.
pub fn kernel(angle: FractionalAngle, t: f64, u: f64) -> Complex64 {
    let phase = 0.5 * t * t * angle.cot() - t * u * angle.csc();
    angle.amp_root() * Complex64::cis(phase)
}

/// Fractional convolution weight `W_cv(τ, t) = exp[j·τ·(τ − t)·cot φ]`.
///
/// Unit modulus; equals 1 exactly when τ = 0, τ = t, or cot φ = 0.
pub fn convolution_weight(angle: FractionalAngle, tau: f64, t: f64) -> Complex64 {
    Complex64::cis(tau * (tau - t) * angle.cot())
}
