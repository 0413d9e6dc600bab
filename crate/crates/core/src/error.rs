//! Error types shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The rotation angle is too close to a multiple of π; cot φ and csc φ diverge
    /// and the transform integral degenerates.
    #[error("singular rotation angle phi = {phi}: |sin phi| = {sin_abs:.3e} <= {eps:.1e}")]
    SingularAngle { phi: f64, sin_abs: f64, eps: f64 },

    /// Grid construction rejected the parameters.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },

    /// Signal construction rejected the samples.
    #[error("invalid signal: {reason}")]
    InvalidSignal { reason: String },

    /// The delta family is a distribution and has no pointwise time-domain value.
    #[error("the delta family cannot be evaluated pointwise in the time domain")]
    NotPointEvaluable,

    /// A family parameter is outside its admissible range.
    #[error("invalid parameter for {family}: {reason}")]
    InvalidFamilyParameter { family: &'static str, reason: String },

    /// The closed form of this family does not exist at this angle (the image
    /// is distributional there).
    #[error("{family} has no closed form at phi = {phi}: {constraint}")]
    FamilySingularAngle {
        family: &'static str,
        phi: f64,
        constraint: &'static str,
    },

    /// A spectrum derivative was requested but no analytic derivative exists and
    /// finite differences were disallowed.
    #[error("missing analytic derivative of order {order} (finite differences disallowed)")]
    MissingDerivative { order: u8 },

    /// A rule was evaluated without one of its parameters.
    #[error("rule {rule} requires parameter `{name}`")]
    MissingParameter { rule: &'static str, name: &'static str },

    /// The conjugation rule needs the spectrum at the negated angle.
    #[error("spectrum function carries no evaluation at the negated angle")]
    MissingNegatedAngle,

    /// Two grids that must be identical are not.
    #[error("grid mismatch: {reason}")]
    GridMismatch { reason: String },

    /// Two spectra that must share an angle do not.
    #[error("angle mismatch: phi = {0} vs phi = {1}")]
    AngleMismatch(f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
