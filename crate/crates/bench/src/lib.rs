//! Shared signal builders for the benchmark targets.

use num_complex::Complex64;
use rofrft::{SampledSignal, UniformGrid};

/// Gaussian samples on a zero-centered grid of `n` points over `[-extent, extent)`.
pub fn gaussian(extent: f64, n: usize) -> SampledSignal {
    let grid = UniformGrid::new(-extent, 2.0 * extent / n as f64, n).expect("valid grid");
    SampledSignal::from_fn(grid, |t| Complex64::new((-0.5 * t * t).exp(), 0.0))
}

/// A unit-modulus chirp with moderate sweep, a harsher case for the fast path.
pub fn chirp(extent: f64, n: usize, rate: f64) -> SampledSignal {
    let grid = UniformGrid::new(-extent, 2.0 * extent / n as f64, n).expect("valid grid");
    SampledSignal::from_fn(grid, |t| {
        Complex64::cis(0.5 * rate * t * t) * (-0.005 * t * t).exp()
    })
}
