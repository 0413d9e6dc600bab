//! Reduced-order fractional Fourier transform.
//!
//! The transform of `x(t)` at rotation angle φ (with sin φ ≠ 0) is
//!
//! ```text
//! X(u) = ∫ x(t) · √(1 − j cot φ) · exp[j(t²·cot φ/2 − t·u·csc φ)] dt
//! ```
//!
//! a chirp decomposition whose kernel omits the output chirp of the
//! conventional fractional Fourier transform. At φ = π/2 it reduces to the
//! unnormalized Fourier transform. The crate provides:
//!
//! - [`kernel`](mod@kernel): pointwise kernel and fractional convolution weight;
//! - [`transform`]: the quadrature oracle, the chirp–FFT fast path, the
//!   derived inverse, and a discretization safety check;
//! - [`catalog`]: closed forms for ten analytic signal families plus the
//!   erratum ledger for the four published forms that disagree with direct
//!   derivation;
//! - [`rules`]: the twelve operational rules (shift, modulation, derivatives,
//!   …) as right-hand-side evaluators and a residual verifier;
//! - [`fracconv`]: the weighted fractional convolution, its spectral product
//!   theorem, and the shift/modulation/time-frequency-shift variants;
//! - [`oracle`]: Gaussian-regularized quadrature for the non-integrable
//!   families.
//!
//! All types are immutable after construction and all operations are pure;
//! internal parallelism never changes summation order within an output point,
//! so results are bitwise independent of thread count.

pub mod angle;
pub mod catalog;
pub mod error;
pub mod fracconv;
pub mod grid;
pub mod kernel;
pub mod oracle;
pub mod rules;
pub mod transform;

pub use angle::{FractionalAngle, EPS_ANGLE};
pub use catalog::{
    analytic_rofrft, errata_for, eval_time, eval_time_derivative, list_errata, synthesize,
    CatalogSpectrum, CatalogValue, ErratumEntry, FormulaSource, Sign, SignalFamily, EPS_FAMILY,
};
pub use error::{Error, Result};
pub use fracconv::{
    convolution_spectrum, fractional_convolve, modulated_convolution_rhs,
    printed_shifted_convolution_rhs, printed_tf_shifted_convolution_rhs,
    shifted_convolution_rhs, tf_shifted_convolution_rhs, verify_convolution_theorem,
    ConvolutionPair, Side,
};
pub use grid::{SampledSignal, Spectrum, UniformGrid};
pub use kernel::{convolution_weight, kernel};
pub use rules::{
    rule_rhs, spectrum_derivative, verify_rule, CheckId, DerivativeMode, DerivativePolicy,
    PropertyReport, RuleId, RuleParams, SpectrumFn, VerifyConfig,
};
pub use transform::{
    bandwidth_report, inverse_rofrft, rofrft_fast, rofrft_quadrature, rofrft_quadrature_at,
    BandwidthReport,
};
