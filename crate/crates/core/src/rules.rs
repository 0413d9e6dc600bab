//! Right-hand-side evaluators for the twelve operational rules and a verifier
//! that measures LHS-vs-RHS residuals.
//!
//! The verifier keeps the two sides independent: the LHS is always a fresh
//! quadrature transform of the operated time signal, while the RHS applies
//! the rule to the base spectrum only. Reusing the rule on the LHS would make
//! the check circular.

use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

use crate::angle::FractionalAngle;
use crate::catalog::{eval_time, eval_time_derivative, CatalogSpectrum, SignalFamily};
use crate::error::{Error, Result};
use crate::fracconv::Side;
use crate::grid::{SampledSignal, UniformGrid};
use crate::transform::{rofrft_quadrature, rofrft_quadrature_at};

/// One operational rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleId {
    TimeShift,
    Modulation,
    TimeFrequencyShift,
    CosineMultiply,
    SineMultiply,
    TimeMultiply,
    TimeReversal,
    Conjugation,
    EvenPart,
    OddPart,
    Differentiation,
    MixedProduct,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        RuleId::TimeShift,
        RuleId::Modulation,
        RuleId::TimeFrequencyShift,
        RuleId::CosineMultiply,
        RuleId::SineMultiply,
        RuleId::TimeMultiply,
        RuleId::TimeReversal,
        RuleId::Conjugation,
        RuleId::EvenPart,
        RuleId::OddPart,
        RuleId::Differentiation,
        RuleId::MixedProduct,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RuleId::TimeShift => "TimeShift",
            RuleId::Modulation => "Modulation",
            RuleId::TimeFrequencyShift => "TimeFrequencyShift",
            RuleId::CosineMultiply => "CosineMultiply",
            RuleId::SineMultiply => "SineMultiply",
            RuleId::TimeMultiply => "TimeMultiply",
            RuleId::TimeReversal => "TimeReversal",
            RuleId::Conjugation => "Conjugation",
            RuleId::EvenPart => "EvenPart",
            RuleId::OddPart => "OddPart",
            RuleId::Differentiation => "Differentiation",
            RuleId::MixedProduct => "MixedProduct",
        }
    }

    /// Order of u-derivative the rule's RHS needs (0, 1, or 2).
    pub fn derivative_order(&self) -> u8 {
        match self {
            RuleId::TimeMultiply | RuleId::Differentiation => 1,
            RuleId::MixedProduct => 2,
            _ => 0,
        }
    }
}

impl std::str::FromStr for RuleId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        RuleId::ALL
            .iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identity of a verified check, covering the operational rules and the
/// convolution-theorem checks that reuse the same report shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    Rule(RuleId),
    ConvolutionTheorem,
    ShiftConvolution(Side),
    ModulationConvolution(Side),
    TfShiftConvolution(Side),
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Rule(r) => f.write_str(r.name()),
            CheckId::ConvolutionTheorem => f.write_str("ConvolutionTheorem"),
            CheckId::ShiftConvolution(side) => write!(f, "ShiftConvolution/{side}"),
            CheckId::ModulationConvolution(side) => write!(f, "ModulationConvolution/{side}"),
            CheckId::TfShiftConvolution(side) => write!(f, "TfShiftConvolution/{side}"),
        }
    }
}

/// Rule parameters; each rule reads the ones it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RuleParams {
    /// Time shift τ (seconds).
    pub tau: Option<f64>,
    /// Modulation frequency q (rad/s).
    pub q: Option<f64>,
    /// Tone frequency ℓ (rad/s).
    pub ell: Option<f64>,
}

impl RuleParams {
    fn need(value: Option<f64>, rule: RuleId, name: &'static str) -> Result<f64> {
        value.ok_or(Error::MissingParameter {
            rule: rule.name(),
            name,
        })
    }
}

/// How u-derivatives of a spectrum were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeMode {
    Analytic,
    FiniteDifference,
}

impl DerivativeMode {
    pub fn name(&self) -> &'static str {
        match self {
            DerivativeMode::Analytic => "analytic",
            DerivativeMode::FiniteDifference => "finite_difference",
        }
    }
}

/// Whether finite differences may substitute for missing analytic derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativePolicy {
    AnalyticOnly,
    AllowFiniteDifference,
}

type EvalFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A spectrum as a callable `u ↦ X(u)`, carrying its angle binding, optional
/// analytic derivatives, and optionally the same signal's spectrum at −φ
/// (needed by the conjugation rule).
#[derive(Clone)]
pub struct SpectrumFn {
    angle: FractionalAngle,
    eval: EvalFn,
    deriv1: Option<EvalFn>,
    deriv2: Option<EvalFn>,
    negated: Option<EvalFn>,
}

impl SpectrumFn {
    pub fn new(angle: FractionalAngle, eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            angle,
            eval: Arc::new(eval),
            deriv1: None,
            deriv2: None,
            negated: None,
        }
    }

    /// Closed-form spectrum of a catalog family with analytic derivatives.
    /// The −φ binding is present whenever the family's closed form also
    /// exists at −φ.
    pub fn from_catalog(family: SignalFamily, angle: FractionalAngle) -> Result<Self> {
        let spec = CatalogSpectrum::new(family, angle)?;
        let neg = CatalogSpectrum::new(family, angle.negated()).ok();
        Ok(Self {
            angle,
            eval: Arc::new(move |u| spec.eval(u)),
            deriv1: Some(Arc::new(move |u| spec.deriv1(u))),
            deriv2: Some(Arc::new(move |u| spec.deriv2(u))),
            negated: neg.map(|n| -> EvalFn { Arc::new(move |u| n.eval(u)) }),
        })
    }

    /// Spectrum backed by direct quadrature of a sampled signal; derivatives
    /// fall back to finite differences, the −φ binding is a second quadrature
    /// pass.
    pub fn from_quadrature(x: &SampledSignal, angle: FractionalAngle) -> Self {
        let fwd = x.clone();
        let bwd = x.clone();
        let neg_angle = angle.negated();
        Self {
            angle,
            eval: Arc::new(move |u| rofrft_quadrature_at(&fwd, angle, &[u])[0]),
            deriv1: None,
            deriv2: None,
            negated: Some(Arc::new(move |u| {
                rofrft_quadrature_at(&bwd, neg_angle, &[u])[0]
            })),
        }
    }

    /// Drops the analytic derivatives, forcing finite differences.
    pub fn without_derivatives(mut self) -> Self {
        self.deriv1 = None;
        self.deriv2 = None;
        self
    }

    pub fn angle(&self) -> FractionalAngle {
        self.angle
    }

    pub fn value(&self, u: f64) -> Complex64 {
        (self.eval)(u)
    }

    pub fn has_analytic_derivative(&self, order: u8) -> bool {
        match order {
            1 => self.deriv1.is_some(),
            2 => self.deriv2.is_some(),
            _ => false,
        }
    }

    /// X at the negated angle, as the conjugation rule requires.
    pub fn value_at_negated_angle(&self, u: f64) -> Result<Complex64> {
        self.negated
            .as_ref()
            .map(|f| f(u))
            .ok_or(Error::MissingNegatedAngle)
    }
}

impl fmt::Debug for SpectrumFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectrumFn")
            .field("phi", &self.angle.phi())
            .field("analytic_deriv1", &self.deriv1.is_some())
            .field("analytic_deriv2", &self.deriv2.is_some())
            .field("negated_angle", &self.negated.is_some())
            .finish()
    }
}

/// First or second u-derivative of a spectrum: analytic when available,
/// otherwise central finite differences with step `h = 1e−4·max(1, |u|)` and
/// one Richardson refinement.
pub fn spectrum_derivative(
    x: &SpectrumFn,
    u: f64,
    order: u8,
    policy: DerivativePolicy,
) -> Result<(Complex64, DerivativeMode)> {
    assert!(order == 1 || order == 2, "order must be 1 or 2");
    if order == 1 {
        if let Some(d) = &x.deriv1 {
            return Ok((d(u), DerivativeMode::Analytic));
        }
    } else if let Some(d) = &x.deriv2 {
        return Ok((d(u), DerivativeMode::Analytic));
    }
    if policy == DerivativePolicy::AnalyticOnly {
        return Err(Error::MissingDerivative { order });
    }
    let h = 1e-4 * u.abs().max(1.0);
    let value = if order == 1 {
        let d = |h: f64| (x.value(u + h) - x.value(u - h)) / (2.0 * h);
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    } else {
        let d = |h: f64| (x.value(u + h) - 2.0 * x.value(u) + x.value(u - h)) / (h * h);
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    };
    Ok((value, DerivativeMode::FiniteDifference))
}

/// Evaluates the rule's transform-domain right-hand side at `u`, given the
/// base spectrum `x` (bound to its angle).
///
/// Conventions: the shift operator is `x(t − τ)` and the modulation operator
/// is `e^{jqt}·x(t)`, matching the convolution-property operators.
pub fn rule_rhs(
    rule: RuleId,
    x: &SpectrumFn,
    params: &RuleParams,
    u: f64,
    policy: DerivativePolicy,
) -> Result<Complex64> {
    let angle = x.angle();
    let c = angle.cot();
    let s = angle.sin();
    let cos = angle.cos();
    let csc = angle.csc();
    let j = Complex64::new(0.0, 1.0);
    Ok(match rule {
        RuleId::TimeShift => {
            let tau = RuleParams::need(params.tau, rule, "tau")?;
            Complex64::cis(0.5 * tau * tau * c - u * tau * csc) * x.value(u - tau * cos)
        }
        RuleId::Modulation => {
            let q = RuleParams::need(params.q, rule, "q")?;
            x.value(u - q * s)
        }
        RuleId::TimeFrequencyShift => {
            let tau = RuleParams::need(params.tau, rule, "tau")?;
            let q = RuleParams::need(params.q, rule, "q")?;
            Complex64::cis(0.5 * tau * tau * c - u * tau * csc + q * tau)
                * x.value(u - tau * cos - q * s)
        }
        RuleId::CosineMultiply => {
            let ell = RuleParams::need(params.ell, rule, "ell")?;
            0.5 * (x.value(u - ell * s) + x.value(u + ell * s))
        }
        RuleId::SineMultiply => {
            let ell = RuleParams::need(params.ell, rule, "ell")?;
            (x.value(u - ell * s) - x.value(u + ell * s)) / (2.0 * j)
        }
        RuleId::TimeMultiply => {
            let (d1, _) = spectrum_derivative(x, u, 1, policy)?;
            j * s * d1
        }
        RuleId::TimeReversal => x.value(-u),
        RuleId::Conjugation => x.value_at_negated_angle(u)?.conj(),
        RuleId::EvenPart => 0.5 * (x.value(u) + x.value(-u)),
        RuleId::OddPart => 0.5 * (x.value(u) - x.value(-u)),
        RuleId::Differentiation => {
            let (d1, _) = spectrum_derivative(x, u, 1, policy)?;
            j * u * csc * x.value(u) + cos * d1
        }
        RuleId::MixedProduct => {
            // Expanded form of (j/2)sin2φ·[X″ + 2j·csc2φ·(u·X′ + X)]; the
            // sin2φ·csc2φ products collapse exactly and stay stable near π/2.
            let (d1, _) = spectrum_derivative(x, u, 1, policy)?;
            let (d2, _) = spectrum_derivative(x, u, 2, policy)?;
            -x.value(u) - u * d1 + j * s * cos * d2
        }
    })
}

/// Residual report of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub check: CheckId,
    pub phi: f64,
    pub u_grid: UniformGrid,
    pub max_abs_residual: f64,
    pub mean_abs_residual: f64,
    /// Max |LHS| over the grid; the normalization for relative gates.
    pub scale: f64,
    pub derivative_mode: DerivativeMode,
}

impl PropertyReport {
    /// `max_abs_residual / scale`, guarding the all-zero case.
    pub fn relative_residual(&self) -> f64 {
        if self.scale > 0.0 {
            self.max_abs_residual / self.scale
        } else {
            self.max_abs_residual
        }
    }

    pub(crate) fn from_residuals(
        check: CheckId,
        phi: f64,
        u_grid: UniformGrid,
        lhs: &[Complex64],
        rhs: &[Complex64],
        scale_from: &[Complex64],
        derivative_mode: DerivativeMode,
    ) -> Self {
        let residuals: Vec<f64> = lhs
            .iter()
            .zip(rhs)
            .map(|(a, b)| (a - b).norm())
            .collect();
        let max_abs_residual = residuals.iter().copied().fold(0.0, f64::max);
        let mean_abs_residual = residuals.iter().sum::<f64>() / residuals.len().max(1) as f64;
        let scale = scale_from.iter().map(|c| c.norm()).fold(0.0, f64::max);
        Self {
            check,
            phi,
            u_grid,
            max_abs_residual,
            mean_abs_residual,
            scale,
            derivative_mode,
        }
    }
}

/// Settings for [`verify_rule`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Half-width of the time-synthesis grid.
    pub time_extent: f64,
    /// Number of time samples.
    pub time_samples: usize,
    pub derivative_policy: DerivativePolicy,
    /// Strip analytic derivatives from the base spectrum, forcing the
    /// finite-difference path.
    pub force_finite_difference: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            time_extent: 24.0,
            time_samples: 4096,
            derivative_policy: DerivativePolicy::AllowFiniteDifference,
            force_finite_difference: false,
        }
    }
}

fn operated_sample(
    rule: RuleId,
    base: SignalFamily,
    params: &RuleParams,
    t: f64,
) -> Result<Complex64> {
    Ok(match rule {
        RuleId::TimeShift => {
            let tau = RuleParams::need(params.tau, rule, "tau")?;
            eval_time(base, t - tau)?
        }
        RuleId::Modulation => {
            let q = RuleParams::need(params.q, rule, "q")?;
            Complex64::cis(q * t) * eval_time(base, t)?
        }
        RuleId::TimeFrequencyShift => {
            let tau = RuleParams::need(params.tau, rule, "tau")?;
            let q = RuleParams::need(params.q, rule, "q")?;
            Complex64::cis(q * t) * eval_time(base, t - tau)?
        }
        RuleId::CosineMultiply => {
            let ell = RuleParams::need(params.ell, rule, "ell")?;
            eval_time(base, t)? * (ell * t).cos()
        }
        RuleId::SineMultiply => {
            let ell = RuleParams::need(params.ell, rule, "ell")?;
            eval_time(base, t)? * (ell * t).sin()
        }
        RuleId::TimeMultiply => t * eval_time(base, t)?,
        RuleId::TimeReversal => eval_time(base, -t)?,
        RuleId::Conjugation => eval_time(base, t)?.conj(),
        RuleId::EvenPart => 0.5 * (eval_time(base, t)? + eval_time(base, -t)?),
        RuleId::OddPart => 0.5 * (eval_time(base, t)? - eval_time(base, -t)?),
        RuleId::Differentiation => eval_time_derivative(base, t)?,
        RuleId::MixedProduct => t * eval_time_derivative(base, t)?,
    })
}

/// Verifies one rule on a catalog base family: synthesizes the operated
/// signal, quadrature-transforms it (LHS), applies the rule to the base
/// spectrum (RHS), and reports residuals over the u-grid.
pub fn verify_rule(
    rule: RuleId,
    base: SignalFamily,
    angle: FractionalAngle,
    params: &RuleParams,
    u_grid: UniformGrid,
    cfg: &VerifyConfig,
) -> Result<PropertyReport> {
    let n = cfg.time_samples;
    let t_grid = UniformGrid::new(-cfg.time_extent, 2.0 * cfg.time_extent / n as f64, n)?;
    let mut samples = Vec::with_capacity(n);
    for t in t_grid.points() {
        samples.push(operated_sample(rule, base, params, t)?);
    }
    let operated = SampledSignal::new(t_grid, samples)?;
    let lhs = rofrft_quadrature(&operated, angle, u_grid);

    let mut base_spec = SpectrumFn::from_catalog(base, angle)?;
    if cfg.force_finite_difference {
        base_spec = base_spec.without_derivatives();
    }
    let mode = if rule.derivative_order() > 0
        && !base_spec.has_analytic_derivative(rule.derivative_order().min(1))
    {
        DerivativeMode::FiniteDifference
    } else {
        DerivativeMode::Analytic
    };

    let mut rhs = Vec::with_capacity(u_grid.count());
    for u in u_grid.points() {
        rhs.push(rule_rhs(rule, &base_spec, params, u, cfg.derivative_policy)?);
    }

    Ok(PropertyReport::from_residuals(
        CheckId::Rule(rule),
        angle.phi(),
        u_grid,
        lhs.values(),
        &rhs,
        lhs.values(),
        mode,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn gaussian_fn(angle: FractionalAngle) -> SpectrumFn {
        SpectrumFn::from_catalog(SignalFamily::Gaussian, angle).unwrap()
    }

    fn std_u_grid() -> UniformGrid {
        UniformGrid::new(-4.0, 0.1, 81).unwrap()
    }

    #[test]
    fn finite_difference_matches_known_derivatives() {
        let angle = FractionalAngle::new(1.0).unwrap();
        let x = SpectrumFn::new(angle, |u| Complex64::new((-0.5 * u * u).exp(), 0.0));
        let (d0, mode) =
            spectrum_derivative(&x, 0.0, 1, DerivativePolicy::AllowFiniteDifference).unwrap();
        assert_eq!(mode, DerivativeMode::FiniteDifference);
        assert!(d0.norm() < 1e-10);
        let (d1, _) =
            spectrum_derivative(&x, 1.0, 1, DerivativePolicy::AllowFiniteDifference).unwrap();
        let expected = -(-0.5f64).exp();
        assert!((d1 - Complex64::new(expected, 0.0)).norm() < 1e-8);
        let (d2, _) =
            spectrum_derivative(&x, 0.0, 2, DerivativePolicy::AllowFiniteDifference).unwrap();
        assert!((d2 - Complex64::new(-1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn analytic_only_policy_rejects_missing_derivatives() {
        let angle = FractionalAngle::new(1.0).unwrap();
        let x = SpectrumFn::new(angle, |u| Complex64::new(u, 0.0));
        assert!(matches!(
            spectrum_derivative(&x, 0.0, 1, DerivativePolicy::AnalyticOnly),
            Err(Error::MissingDerivative { order: 1 })
        ));
    }

    #[test]
    fn missing_parameters_are_reported() {
        let angle = FractionalAngle::new(1.0).unwrap();
        let x = gaussian_fn(angle);
        let err = rule_rhs(
            RuleId::TimeShift,
            &x,
            &RuleParams::default(),
            0.0,
            DerivativePolicy::AllowFiniteDifference,
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingParameter { name: "tau", .. }));
    }

    #[test]
    fn time_shift_reduces_to_ft_phase_at_right_angle() {
        let angle = FractionalAngle::new(FRAC_PI_2).unwrap();
        let x = gaussian_fn(angle);
        let params = RuleParams {
            tau: Some(1.5),
            ..Default::default()
        };
        for &u in &[-2.0, 0.3, 1.0] {
            let got = rule_rhs(
                RuleId::TimeShift,
                &x,
                &params,
                u,
                DerivativePolicy::AnalyticOnly,
            )
            .unwrap();
            let expected = Complex64::cis(-u * 1.5) * x.value(u);
            assert!((got - expected).norm() <= 1e-10 * expected.norm().max(1e-12));
        }
    }

    #[test]
    fn zero_modulation_is_identity() {
        let angle = FractionalAngle::new(0.7).unwrap();
        let x = gaussian_fn(angle);
        let params = RuleParams {
            q: Some(0.0),
            ..Default::default()
        };
        for &u in &[-1.0, 0.0, 2.4] {
            let got =
                rule_rhs(RuleId::Modulation, &x, &params, u, DerivativePolicy::AnalyticOnly)
                    .unwrap();
            assert_eq!(got, x.value(u));
        }
    }

    #[test]
    fn cosine_rule_composes_shifted_spectra() {
        let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
        let x = gaussian_fn(angle);
        let params = RuleParams {
            ell: Some(2.0),
            ..Default::default()
        };
        let got = rule_rhs(
            RuleId::CosineMultiply,
            &x,
            &params,
            0.0,
            DerivativePolicy::AnalyticOnly,
        )
        .unwrap();
        // ell*sin(pi/3) = sqrt(3).
        let shift = 3f64.sqrt();
        let expected = 0.5 * (x.value(-shift) + x.value(shift));
        assert!((got - expected).norm() < 1e-13 * expected.norm());
    }

    #[test]
    fn euler_identity_ties_tone_rules_to_modulation() {
        let angle = FractionalAngle::new(1.1).unwrap();
        let x = gaussian_fn(angle);
        let j = Complex64::new(0.0, 1.0);
        let tone = RuleParams {
            ell: Some(2.0),
            ..Default::default()
        };
        let modulation = RuleParams {
            q: Some(2.0),
            ..Default::default()
        };
        let shift = 2.0 * x.angle().sin();
        for &u in &[-2.5, -0.4, 0.0, 1.7, 3.9] {
            let cosine = rule_rhs(RuleId::CosineMultiply, &x, &tone, u, DerivativePolicy::AnalyticOnly).unwrap();
            let sine = rule_rhs(RuleId::SineMultiply, &x, &tone, u, DerivativePolicy::AnalyticOnly).unwrap();
            let modu = rule_rhs(RuleId::Modulation, &x, &modulation, u, DerivativePolicy::AnalyticOnly).unwrap();
            // Cancellation noise scales with the larger of the two shifted
            // evaluations, not with the (possibly tiny) result.
            let scale = x.value(u - shift).norm().max(x.value(u + shift).norm());
            assert!((cosine + j * sine - modu).norm() <= 1e-13 * scale.max(1e-12));
        }
    }

    #[test]
    fn tf_shift_is_shift_after_modulation_with_cross_phase() {
        let angle = FractionalAngle::new(FRAC_PI_4).unwrap();
        let x = gaussian_fn(angle);
        let (tau, q) = (1.5, 2.0);
        let params = RuleParams {
            tau: Some(tau),
            q: Some(q),
            ..Default::default()
        };
        let c = angle.cot();
        let s = angle.sin();
        let cos = angle.cos();
        let csc = angle.csc();
        for &u in &[-3.0, 0.0, 1.2] {
            let tf = rule_rhs(RuleId::TimeFrequencyShift, &x, &params, u, DerivativePolicy::AnalyticOnly).unwrap();
            let composed = Complex64::cis(q * tau)
                * Complex64::cis(0.5 * tau * tau * c - u * tau * csc)
                * x.value(u - tau * cos - q * s);
            assert!((tf - composed).norm() <= 1e-12 * composed.norm().max(1e-12));
        }
    }

    #[test]
    fn verify_time_shift_on_gaussian() {
        let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
        let params = RuleParams {
            tau: Some(1.5),
            ..Default::default()
        };
        let report = verify_rule(
            RuleId::TimeShift,
            SignalFamily::Gaussian,
            angle,
            &params,
            std_u_grid(),
            &VerifyConfig::default(),
        )
        .unwrap();
        assert_eq!(report.derivative_mode, DerivativeMode::Analytic);
        assert!(
            report.max_abs_residual <= 1e-6 * report.scale,
            "rel = {:.3e}",
            report.relative_residual()
        );
    }

    #[test]
    fn verify_time_reversal_is_near_exact_for_even_base() {
        let angle = FractionalAngle::new(1.9).unwrap();
        let report = verify_rule(
            RuleId::TimeReversal,
            SignalFamily::Gaussian,
            angle,
            &RuleParams::default(),
            std_u_grid(),
            &VerifyConfig::default(),
        )
        .unwrap();
        assert!(report.max_abs_residual <= 1e-12, "{:.3e}", report.max_abs_residual);
    }

    #[test]
    fn verify_mixed_product_with_analytic_derivatives() {
        let angle = FractionalAngle::new(FRAC_PI_4).unwrap();
        let report = verify_rule(
            RuleId::MixedProduct,
            SignalFamily::Gaussian,
            angle,
            &RuleParams::default(),
            UniformGrid::new(-3.0, 0.1, 61).unwrap(),
            &VerifyConfig::default(),
        )
        .unwrap();
        assert!(
            report.relative_residual() <= 1e-5,
            "rel = {:.3e}",
            report.relative_residual()
        );
    }

    #[test]
    fn verify_symmetry_rules_on_asymmetric_base() {
        let base = SignalFamily::ShiftedScaledGaussian {
            rate: 1.0,
            tau: 1.5,
        };
        let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
        for rule in [RuleId::TimeReversal, RuleId::Conjugation, RuleId::EvenPart, RuleId::OddPart] {
            let report = verify_rule(
                rule,
                base,
                angle,
                &RuleParams::default(),
                std_u_grid(),
                &VerifyConfig::default(),
            )
            .unwrap();
            assert!(
                report.relative_residual() <= 1e-6,
                "{rule}: rel = {:.3e}",
                report.relative_residual()
            );
        }
    }

    #[test]
    fn conjugation_requires_negated_angle() {
        let angle = FractionalAngle::new(1.0).unwrap();
        let bare = SpectrumFn::new(angle, |u| Complex64::new(u, 0.0));
        assert!(matches!(
            rule_rhs(
                RuleId::Conjugation,
                &bare,
                &RuleParams::default(),
                0.0,
                DerivativePolicy::AnalyticOnly
            ),
            Err(Error::MissingNegatedAngle)
        ));
    }

    #[test]
    fn quadrature_backed_spectrum_agrees_with_catalog() {
        let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
        let grid = UniformGrid::new(-20.0, 40.0 / 2048.0, 2048).unwrap();
        let x = crate::catalog::synthesize(SignalFamily::Gaussian, grid).unwrap();
        let by_quad = SpectrumFn::from_quadrature(&x, angle);
        let by_catalog = gaussian_fn(angle);
        for &u in &[-2.0, 0.0, 1.3] {
            let a = by_quad.value(u);
            let b = by_catalog.value(u);
            assert!((a - b).norm() <= 1e-6 * b.norm());
            let an = by_quad.value_at_negated_angle(u).unwrap();
            let bn = by_catalog.value_at_negated_angle(u).unwrap();
            assert!((an - bn).norm() <= 1e-6 * bn.norm());
        }
    }
}
