//! CSV signal/spectrum files and the JSON metadata sidecar.
//!
//! Signal files carry the exact header `t,re,im`, spectrum files `u,re,im`.
//! Values are written as shortest round-trip decimals, so re-parsing
//! reproduces bit-identical doubles. Output files are written to a temp file
//! in the destination directory and renamed into place.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

use rofrft::{FractionalAngle, SampledSignal, Spectrum, UniformGrid};

use crate::error::{CliError, CliResult};

#[derive(Debug, Serialize, Deserialize)]
struct SignalRow {
    t: f64,
    re: f64,
    im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct SpectrumRow {
    u: f64,
    re: f64,
    im: f64,
}

/// Grid description stored in the sidecar. `count == 1` (with `step == 0`)
/// marks a single-point evaluation, which is not a `UniformGrid`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GridMeta {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

/// JSON sidecar written next to every spectrum CSV as `<name>.meta.json`.
#[derive(Debug, Serialize, Deserialize)]
pub struct Sidecar {
    pub phi: f64,
    pub order_a: f64,
    pub generator: String,
    pub errata_applied: Vec<String>,
    pub grid: GridMeta,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags_ignored: Option<Vec<String>>,
}

fn atomic_write(path: &Path, write: impl FnOnce(&mut dyn std::io::Write) -> CliResult<()>) -> CliResult<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(dir) => tempfile::NamedTempFile::new_in(dir),
        None => tempfile::NamedTempFile::new_in("."),
    }
    .map_err(|e| CliError::Io(format!("cannot create temp file near {}: {e}", path.display())))?;
    write(tmp.as_file_mut())?;
    tmp.persist(path)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

pub fn write_signal_csv(path: &Path, signal: &SampledSignal) -> CliResult<()> {
    atomic_write(path, |file| {
        let mut writer = csv::Writer::from_writer(file);
        for (k, value) in signal.samples().iter().enumerate() {
            writer
                .serialize(SignalRow {
                    t: signal.grid().point(k),
                    re: value.re,
                    im: value.im,
                })
                .map_err(|e| CliError::Io(e.to_string()))?;
        }
        writer.flush().map_err(|e| CliError::Io(e.to_string()))?;
        Ok(())
    })
}

fn check_header(headers: &csv::StringRecord, expected: [&str; 3], path: &Path) -> CliResult<()> {
    let got: Vec<&str> = headers.iter().collect();
    if got != expected {
        return Err(CliError::Usage(format!(
            "{}: header must be exactly `{}`, got `{}`",
            path.display(),
            expected.join(","),
            got.join(",")
        )));
    }
    Ok(())
}

/// Validates strictly increasing, uniformly spaced axis values (relative
/// tolerance 1e−9) and returns the implied grid.
fn grid_from_axis(axis: &[f64], path: &Path) -> CliResult<UniformGrid> {
    if axis.len() < 2 {
        return Err(CliError::Usage(format!(
            "{}: need at least 2 rows, got {}",
            path.display(),
            axis.len()
        )));
    }
    let start = axis[0];
    let step = (axis[axis.len() - 1] - start) / (axis.len() - 1) as f64;
    if !step.is_finite() || step <= 0.0 {
        return Err(CliError::Usage(format!(
            "{}: axis must be strictly increasing",
            path.display()
        )));
    }
    for (k, &v) in axis.iter().enumerate() {
        let expected = start + k as f64 * step;
        if (v - expected).abs() > 1e-9 * v.abs().max(1.0) {
            return Err(CliError::Usage(format!(
                "{}: axis is not uniformly spaced at row {k} ({v} vs {expected})",
                path.display()
            )));
        }
    }
    UniformGrid::new(start, step, axis.len()).map_err(CliError::from)
}

pub fn read_signal_csv(path: &Path) -> CliResult<SampledSignal> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    check_header(
        reader
            .headers()
            .map_err(|e| CliError::Io(e.to_string()))?,
        ["t", "re", "im"],
        path,
    )?;
    let mut ts = Vec::new();
    let mut samples = Vec::new();
    for row in reader.deserialize::<SignalRow>() {
        let row = row.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        ts.push(row.t);
        samples.push(Complex64::new(row.re, row.im));
    }
    let grid = grid_from_axis(&ts, path)?;
    SampledSignal::new(grid, samples).map_err(CliError::from)
}

pub fn read_spectrum_csv(path: &Path, angle: FractionalAngle) -> CliResult<Spectrum> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    check_header(
        reader
            .headers()
            .map_err(|e| CliError::Io(e.to_string()))?,
        ["u", "re", "im"],
        path,
    )?;
    let mut us = Vec::new();
    let mut values = Vec::new();
    for row in reader.deserialize::<SpectrumRow>() {
        let row = row.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        us.push(row.u);
        values.push(Complex64::new(row.re, row.im));
    }
    let grid = grid_from_axis(&us, path)?;
    Spectrum::new(angle, grid, values).map_err(CliError::from)
}

/// Writes the spectrum CSV and its `<name>.meta.json` sidecar.
pub fn write_spectrum_csv(
    path: &Path,
    us: &[f64],
    values: &[Complex64],
    sidecar: &Sidecar,
) -> CliResult<()> {
    atomic_write(path, |file| {
        let mut writer = csv::Writer::from_writer(file);
        for (&u, value) in us.iter().zip(values) {
            writer
                .serialize(SpectrumRow {
                    u,
                    re: value.re,
                    im: value.im,
                })
                .map_err(|e| CliError::Io(e.to_string()))?;
        }
        writer.flush().map_err(|e| CliError::Io(e.to_string()))?;
        Ok(())
    })?;

    let meta_path = sidecar_path(path);
    let json = serde_json::to_string_pretty(sidecar)
        .map_err(|e| CliError::Io(e.to_string()))?;
    atomic_write(&meta_path, |file| {
        file.write_all(json.as_bytes())?;
        file.write_all(b"\n")?;
        Ok(())
    })
}

pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut name = path.as_os_str().to_os_string();
    name.push(".meta.json");
    std::path::PathBuf::from(name)
}
