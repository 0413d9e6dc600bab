//! Uniform sampling grids, sampled time-domain signals, and spectra.

use num_complex::Complex64;

use crate::angle::FractionalAngle;
use crate::error::{Error, Result};

/// A uniform grid `point(k) = start + k·step` for `0 ≤ k < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() {
            return Err(Error::InvalidGrid {
                reason: format!("non-finite start {start} or step {step}"),
            });
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid {
                reason: format!("step must be positive, got {step}"),
            });
        }
        if count < 2 {
            return Err(Error::InvalidGrid {
                reason: format!("count must be at least 2, got {count}"),
            });
        }
        Ok(Self { start, step, count })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// k-th grid point, computed exactly as `start + k·step`.
    pub fn point(&self, k: usize) -> f64 {
        self.start + (k as f64) * self.step
    }

    /// Last grid point.
    pub fn end(&self) -> f64 {
        self.point(self.count - 1)
    }

    /// Grid span `(count − 1)·step`.
    pub fn span(&self) -> f64 {
        (self.count - 1) as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }
}

/// A uniformly sampled complex time-domain signal.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: UniformGrid,
    samples: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: UniformGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.count() {
            return Err(Error::InvalidSignal {
                reason: format!(
                    "sample count {} does not match grid count {}",
                    samples.len(),
                    grid.count()
                ),
            });
        }
        if let Some(bad) = samples.iter().find(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidSignal {
                reason: format!("non-finite sample {bad}"),
            });
        }
        Ok(Self { grid, samples })
    }

    /// Samples `f` at every grid point.
    pub fn from_fn(grid: UniformGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let samples = grid.points().map(f).collect();
        Self { grid, samples }
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Magnitude of the larger endpoint sample relative to the peak; a value
    /// near 1 means the signal is not effectively supported inside the grid
    /// and transform quadratures will truncate real mass.
    pub fn endpoint_ratio(&self) -> f64 {
        let peak = self.samples.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let first = self.samples.first().map_or(0.0, |c| c.norm());
        let last = self.samples.last().map_or(0.0, |c| c.norm());
        first.max(last) / peak
    }
}

/// Complex transform values on a u-grid, tagged with the producing angle.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    angle: FractionalAngle,
    grid: UniformGrid,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(angle: FractionalAngle, grid: UniformGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::InvalidSignal {
                reason: format!(
                    "value count {} does not match grid count {}",
                    values.len(),
                    grid.count()
                ),
            });
        }
        Ok(Self { angle, grid, values })
    }

    pub fn angle(&self) -> FractionalAngle {
        self.angle
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_points_are_reproducible() {
        let g = UniformGrid::new(-10.0, 0.01, 2001).unwrap();
        assert_eq!(g.point(0), -10.0);
        assert_eq!(g.point(2000), -10.0 + 2000.0 * 0.01);
        assert!((g.end() - 10.0).abs() < 1e-12);
        assert_eq!(g.points().count(), 2001);
    }

    #[test]
    fn symmetric_grid_covers_both_ends() {
        let g = UniformGrid::new(-20.0, 20.0 / 4095.0 * 2.0, 4096).unwrap();
        assert!((g.end() - 20.0).abs() < 1e-9);
        assert!((g.span() - 40.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_grids_are_rejected() {
        assert!(matches!(
            UniformGrid::new(0.0, 1.0, 1),
            Err(Error::InvalidGrid { .. })
        ));
        assert!(matches!(
            UniformGrid::new(0.0, 0.0, 8),
            Err(Error::InvalidGrid { .. })
        ));
        assert!(matches!(
            UniformGrid::new(0.0, -0.5, 8),
            Err(Error::InvalidGrid { .. })
        ));
    }

    #[test]
    fn signal_length_must_match_grid() {
        let g = UniformGrid::new(0.0, 1.0, 4).unwrap();
        assert!(SampledSignal::new(g, vec![Complex64::new(1.0, 0.0); 3]).is_err());
        assert!(SampledSignal::new(g, vec![Complex64::new(f64::NAN, 0.0); 4]).is_err());
        assert!(SampledSignal::new(g, vec![Complex64::new(1.0, 0.0); 4]).is_ok());
    }
}
