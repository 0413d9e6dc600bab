//! Forward transform by direct quadrature (the oracle path), the fast
//! chirp–FFT realization, and the derived inverse transform.
//!
//! Both forward paths evaluate the same trapezoid Riemann sum
//! `Δt · Σ_n w_n · x(t_n) · K_φ(t_n, u_k)` (end weights ½), so they agree at
//! shared u-points up to rounding. The fast path reorganizes the sum as a
//! chirp pre-multiplication, one FFT, and an amplitude/twiddle
//! post-multiplication, which fixes its output grid to the DFT bins mapped by
//! `u = ω·sin φ`.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use std::f64::consts::PI;

use crate::angle::FractionalAngle;
use crate::grid::{SampledSignal, Spectrum, UniformGrid};

/// Discretization safety check for the chirped integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandwidthReport {
    /// Estimated bandwidth of `x(t)·e^{j t² cot φ / 2}` in rad/s:
    /// the 99%-energy bandwidth of `x` plus `|cot φ|·T/2` over the grid span T.
    pub chirped_bandwidth: f64,
    /// π/Δt for the signal grid.
    pub nyquist: f64,
    /// True when the chirped bandwidth exceeds the Nyquist rate.
    pub aliased: bool,
}

/// Trapezoid end weight for index `k` of `n` samples.
#[inline]
fn trapezoid_weight(k: usize, n: usize) -> f64 {
    if k == 0 || k + 1 == n {
        0.5
    } else {
        1.0
    }
}

/// Transform values at an arbitrary list of u-points by direct quadrature.
///
/// Each output point is a fixed-order sum over the samples, so results do not
/// depend on the degree of parallelism.
pub fn rofrft_quadrature_at(
    x: &SampledSignal,
    angle: FractionalAngle,
    us: &[f64],
) -> Vec<Complex64> {
    let n = x.len();
    let dt = x.grid().step();
    let cot = angle.cot();
    let csc = angle.csc();
    // Chirp, trapezoid weight, and dt folded into the samples once.
    let chirped: Vec<Complex64> = x
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let t = x.grid().point(k);
            v * Complex64::cis(0.5 * t * t * cot) * (trapezoid_weight(k, n) * dt)
        })
        .collect();
    let t_csc: Vec<f64> = x.grid().points().map(|t| t * csc).collect();
    let amp = angle.amp_root();

    us.par_iter()
        .map(|&u| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, tc) in chirped.iter().zip(&t_csc) {
                acc += c * Complex64::cis(-tc * u);
            }
            amp * acc
        })
        .collect()
}

/// Forward transform by direct quadrature on an explicit u-grid.
pub fn rofrft_quadrature(
    x: &SampledSignal,
    angle: FractionalAngle,
    u_grid: UniformGrid,
) -> Spectrum {
    let us: Vec<f64> = u_grid.points().collect();
    let values = rofrft_quadrature_at(x, angle, &us);
    Spectrum::new(angle, u_grid, values).expect("value count matches grid by construction")
}

/// Forward transform through chirp pre-multiplication, one FFT, and
/// post-multiplication.
///
/// Output bins are `u_k = ω_k·sin φ` with `ω_k = 2π·k̃/(N·Δt)` over the
/// centered index set `k̃ ∈ {−⌊N/2⌋, …, N−1−⌊N/2⌋}`; the grid is re-sorted
/// ascending when sin φ < 0. The start-time phase is handled by an explicit
/// `e^{−jω t₀}` twiddle so non-sample-aligned t₀ stays exact.
pub fn rofrft_fast(x: &SampledSignal, angle: FractionalAngle) -> Spectrum {
    let n = x.len();
    let dt = x.grid().step();
    let t0 = x.grid().start();
    let cot = angle.cot();
    let s = angle.sin();
    let amp = angle.amp_root();

    let mut buf: Vec<Complex64> = x
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let t = x.grid().point(k);
            v * Complex64::cis(0.5 * t * t * cot) * trapezoid_weight(k, n)
        })
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let half = (n / 2) as i64;
    let dw = 2.0 * PI / (n as f64 * dt);
    let mut values: Vec<Complex64> = (0..n)
        .map(|k| {
            let ktilde = k as i64 - half;
            let omega = ktilde as f64 * dw;
            let bin = ktilde.rem_euclid(n as i64) as usize;
            amp * dt * Complex64::cis(-omega * t0) * buf[bin]
        })
        .collect();

    let (start, step) = if s > 0.0 {
        ((-half) as f64 * dw * s, dw * s)
    } else {
        values.reverse();
        (((n as i64 - 1 - half) as f64) * dw * s, dw * -s)
    };
    let grid = UniformGrid::new(start, step, n).expect("fast-path grid is valid");
    Spectrum::new(angle, grid, values).expect("value count matches grid by construction")
}

/// Inverse transform by quadrature of the analytic inversion integral
///
/// `x(t) = e^{−j t² cot φ/2} · |csc φ|/(2π·√(1 − j cot φ)) · ∫ X(u) e^{j t u csc φ} du`,
///
/// obtained by factoring the forward integral as a Fourier transform of the
/// chirp-premultiplied signal and inverting that.
pub fn inverse_rofrft(spectrum: &Spectrum, t_grid: UniformGrid) -> SampledSignal {
    let angle = spectrum.angle();
    let m = spectrum.values().len();
    let du = spectrum.grid().step();
    let cot = angle.cot();
    let csc = angle.csc();
    let scale = csc.abs() / (2.0 * PI) * du;
    let inv_amp = angle.amp_root().finv();

    let weighted: Vec<Complex64> = spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(k, &v)| v * trapezoid_weight(k, m))
        .collect();
    let u_csc: Vec<f64> = spectrum.grid().points().map(|u| u * csc).collect();

    let ts: Vec<f64> = t_grid.points().collect();
    let samples: Vec<Complex64> = ts
        .par_iter()
        .map(|&t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (v, uc) in weighted.iter().zip(&u_csc) {
                acc += v * Complex64::cis(t * uc);
            }
            Complex64::cis(-0.5 * t * t * cot) * inv_amp * scale * acc
        })
        .collect();
    SampledSignal::new(t_grid, samples).expect("sample count matches grid by construction")
}

/// 99%-energy bandwidth of the sampled signal in rad/s (0 for the zero signal).
fn energy_bandwidth(x: &SampledSignal) -> f64 {
    let n = x.len();
    let mut buf = x.samples().to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let power: Vec<f64> = buf.iter().map(|c| c.norm_sqr()).collect();
    let total: f64 = power.iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    let dw = 2.0 * PI / (n as f64 * x.grid().step());
    let half = n / 2;
    // Walk outward from the zero bin, adding ±r pairs, until 99% of the
    // energy is inside.
    let mut cum = power[0];
    let target = 0.99 * total;
    let mut r = 0usize;
    while cum < target && r < half {
        r += 1;
        cum += power[r];
        let neg = n - r;
        if neg > r {
            cum += power[neg];
        }
    }
    r as f64 * dw
}

/// Estimates whether the chirped integrand of the forward transform is
/// resolvable on the signal's grid.
pub fn bandwidth_report(x: &SampledSignal, angle: FractionalAngle) -> BandwidthReport {
    let chirped_bandwidth = energy_bandwidth(x) + angle.cot().abs() * x.grid().span() / 2.0;
    let nyquist = PI / x.grid().step();
    BandwidthReport {
        chirped_bandwidth,
        nyquist,
        aliased: chirped_bandwidth > nyquist,
    }
}
