//! Batch front end: synthesize signals, run forward/inverse transforms and
//! fractional convolutions on CSV files, and run the verification suite.

mod error;
mod families;
mod io;
mod verify;

use clap::{Parser, Subcommand};
use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::path::{Path, PathBuf};

use error::{CliError, CliResult};
use families::FamilyArgs;
use io::{GridMeta, Sidecar};
use rofrft::{
    analytic_rofrft, bandwidth_report, errata_for, fractional_convolve, inverse_rofrft,
    rofrft_fast, rofrft_quadrature_at, synthesize, ConvolutionPair, FormulaSource,
    FractionalAngle, RuleId, SampledSignal, UniformGrid,
};

#[derive(Parser)]
#[command(
    name = "rofrft",
    version,
    about = "Reduced-order fractional Fourier transform: synthesis, transforms, convolution, verification",
    after_help = "Exit codes: 0 success, 1 failed verification gates, 2 bad arguments, \
                  3 I/O failure, 4 singular angle, 5 grid mismatch."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an analytic signal family into a signal CSV (header t,re,im)
    Synthesize {
        #[command(flatten)]
        family: FamilyArgs,
        /// First sample time
        #[arg(long, allow_negative_numbers = true)]
        t0: f64,
        /// Sample spacing (seconds)
        #[arg(long)]
        dt: f64,
        /// Number of samples
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Forward transform of a signal CSV (or inverse of a spectrum CSV)
    Transform {
        /// Input CSV: a signal (t,re,im), or a spectrum (u,re,im) with --inverse
        input: PathBuf,
        /// Rotation angle φ in radians (exclusive with --order)
        #[arg(long, allow_negative_numbers = true)]
        phi: Option<f64>,
        /// Fractional order a, with φ = a·π/2 (exclusive with --phi)
        #[arg(long, allow_negative_numbers = true)]
        order: Option<f64>,
        /// Chirp–FFT path; the u-grid is fixed to the DFT bins u = ω·sin φ
        #[arg(long)]
        fast: bool,
        /// Direct-quadrature path on the explicit --u-min/--u-max/--u-n grid
        #[arg(long)]
        quadrature: bool,
        /// Invert a spectrum CSV back to the --t-min/--t-max/--t-n time grid
        #[arg(long)]
        inverse: bool,
        #[arg(long, allow_negative_numbers = true)]
        u_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        u_max: Option<f64>,
        #[arg(long)]
        u_n: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        t_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t_max: Option<f64>,
        #[arg(long)]
        t_n: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Closed-form spectrum of a family on an explicit u-grid
    Analytic {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        phi: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        order: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        u_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        u_max: Option<f64>,
        #[arg(long)]
        u_n: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Fractional convolution of two signal CSVs on identical grids
    Convolve {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        phi: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        order: Option<f64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the verification suite and emit a JSON report
    Verify {
        /// Comma-separated angles in radians (default: the five standard angles)
        #[arg(long)]
        angles: Option<String>,
        /// `all`, or a comma-separated subset of rule names (a subset skips
        /// the convolution and adjudication checks)
        #[arg(long, default_value = "all")]
        rules: String,
        /// Report destination: a path, or `-` for JSON on stdout
        #[arg(long)]
        report: Option<String>,
    },
}

fn resolve_angle(phi: Option<f64>, order: Option<f64>) -> CliResult<FractionalAngle> {
    match (phi, order) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "specify exactly one of --phi and --order, not both".into(),
        )),
        (None, None) => Err(CliError::Usage("one of --phi or --order is required".into())),
        (Some(phi), None) => FractionalAngle::new(phi).map_err(CliError::from),
        (None, Some(order)) => FractionalAngle::from_order(order).map_err(CliError::from),
    }
}

/// Explicit u-grid flags. `--u-n 1` evaluates the single point `u = u_min`
/// (requiring `u_max == u_min`), which is recorded in the sidecar with
/// `step = 0, count = 1`.
fn resolve_u_points(
    u_min: Option<f64>,
    u_max: Option<f64>,
    u_n: Option<usize>,
) -> CliResult<Vec<f64>> {
    let (min, max, n) = match (u_min, u_max, u_n) {
        (Some(a), Some(b), Some(n)) => (a, b, n),
        _ => {
            return Err(CliError::Usage(
                "--u-min, --u-max and --u-n are all required here".into(),
            ))
        }
    };
    if n == 0 {
        return Err(CliError::Usage("--u-n must be at least 1".into()));
    }
    if !min.is_finite() || !max.is_finite() {
        return Err(CliError::Usage("--u-min and --u-max must be finite".into()));
    }
    if n == 1 {
        if min != max {
            return Err(CliError::Usage(
                "--u-n 1 requires --u-min == --u-max".into(),
            ));
        }
        return Ok(vec![min]);
    }
    if max <= min {
        return Err(CliError::Usage("--u-max must exceed --u-min".into()));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n).map(|k| min + k as f64 * step).collect())
}

fn grid_meta_from_points(points: &[f64]) -> GridMeta {
    if points.len() == 1 {
        GridMeta {
            start: points[0],
            step: 0.0,
            count: 1,
        }
    } else {
        GridMeta {
            start: points[0],
            step: (points[points.len() - 1] - points[0]) / (points.len() - 1) as f64,
            count: points.len(),
        }
    }
}

fn warn_if_aliased(x: &SampledSignal, angle: FractionalAngle) {
    let report = bandwidth_report(x, angle);
    if report.aliased {
        eprintln!(
            "warning: chirped bandwidth {:.3e} rad/s exceeds the grid Nyquist rate {:.3e} rad/s; \
             the grid is too coarse for this angle",
            report.chirped_bandwidth, report.nyquist
        );
    }
    let leak = x.endpoint_ratio();
    if leak > 1e-6 {
        eprintln!(
            "warning: endpoint samples are {leak:.3e} of the peak; the signal is not \
             effectively supported inside its grid and the transform truncates"
        );
    }
}

fn cmd_synthesize(
    family: &FamilyArgs,
    t0: f64,
    dt: f64,
    n: usize,
    output: &Path,
) -> CliResult<()> {
    let family = family.parse()?;
    let grid = UniformGrid::new(t0, dt, n)?;
    let signal = synthesize(family, grid)?;
    io::write_signal_csv(output, &signal)
}

#[allow(clippy::too_many_arguments)]
fn cmd_transform(
    input: &Path,
    phi: Option<f64>,
    order: Option<f64>,
    fast: bool,
    quadrature: bool,
    inverse: bool,
    u_flags: (Option<f64>, Option<f64>, Option<usize>),
    t_flags: (Option<f64>, Option<f64>, Option<usize>),
    output: &Path,
) -> CliResult<()> {
    let angle = resolve_angle(phi, order)?;
    let (u_min, u_max, u_n) = u_flags;

    if inverse {
        if fast || quadrature {
            return Err(CliError::Usage(
                "--inverse cannot be combined with --fast or --quadrature".into(),
            ));
        }
        let (t_min, t_max, t_n) = match t_flags {
            (Some(a), Some(b), Some(n)) => (a, b, n),
            _ => {
                return Err(CliError::Usage(
                    "--inverse requires --t-min, --t-max and --t-n".into(),
                ))
            }
        };
        if t_n < 2 || !t_min.is_finite() || !t_max.is_finite() || t_max <= t_min {
            return Err(CliError::Usage(
                "--inverse needs --t-n >= 2 and --t-max > --t-min".into(),
            ));
        }
        let spectrum = io::read_spectrum_csv(input, angle)?;
        // Cross-check the requested angle against the producing sidecar when
        // one sits next to the input.
        if let Ok(text) = std::fs::read_to_string(io::sidecar_path(input)) {
            if let Ok(meta) = serde_json::from_str::<io::Sidecar>(&text) {
                if (meta.phi - angle.phi()).abs() > 1e-9 * angle.phi().abs().max(1.0) {
                    eprintln!(
                        "warning: sidecar records phi = {}, inverting with phi = {}",
                        meta.phi,
                        angle.phi()
                    );
                }
            }
        }
        let t_grid = UniformGrid::new(t_min, (t_max - t_min) / (t_n - 1) as f64, t_n)?;
        let signal = inverse_rofrft(&spectrum, t_grid);
        return io::write_signal_csv(output, &signal);
    }

    let signal = io::read_signal_csv(input)?;
    warn_if_aliased(&signal, angle);

    match (fast, quadrature) {
        (true, false) => {
            let spectrum = rofrft_fast(&signal, angle);
            let mut flags_ignored = Vec::new();
            for (flag, present) in [
                ("--u-min", u_min.is_some()),
                ("--u-max", u_max.is_some()),
                ("--u-n", u_n.is_some()),
            ] {
                if present {
                    flags_ignored.push(flag.to_string());
                }
            }
            if !flags_ignored.is_empty() {
                eprintln!(
                    "warning: {} ignored; the fast path fixes its u-grid to the DFT bins",
                    flags_ignored.join(", ")
                );
            }
            let us: Vec<f64> = spectrum.grid().points().collect();
            let sidecar = Sidecar {
                phi: angle.phi(),
                order_a: angle.order(),
                generator: "transform-fast".into(),
                errata_applied: vec![],
                grid: grid_meta_from_points(&us),
                flags_ignored: if flags_ignored.is_empty() {
                    None
                } else {
                    Some(flags_ignored)
                },
            };
            io::write_spectrum_csv(output, &us, spectrum.values(), &sidecar)
        }
        (false, true) => {
            let us = resolve_u_points(u_min, u_max, u_n)?;
            let values = rofrft_quadrature_at(&signal, angle, &us);
            let sidecar = Sidecar {
                phi: angle.phi(),
                order_a: angle.order(),
                generator: "transform-quadrature".into(),
                errata_applied: vec![],
                grid: grid_meta_from_points(&us),
                flags_ignored: None,
            };
            io::write_spectrum_csv(output, &us, &values, &sidecar)
        }
        _ => Err(CliError::Usage(
            "specify exactly one of --fast and --quadrature (or --inverse)".into(),
        )),
    }
}

fn cmd_analytic(
    family: &FamilyArgs,
    phi: Option<f64>,
    order: Option<f64>,
    u_flags: (Option<f64>, Option<f64>, Option<usize>),
    output: &Path,
) -> CliResult<()> {
    let family = family.parse()?;
    let angle = resolve_angle(phi, order)?;
    let us = resolve_u_points(u_flags.0, u_flags.1, u_flags.2)?;
    let mut values = Vec::with_capacity(us.len());
    let mut corrected = false;
    for &u in &us {
        let v = analytic_rofrft(family, angle, u)?;
        corrected |= v.formula_source == FormulaSource::DerivedCorrected;
        values.push(v.value);
    }
    let errata_applied = if corrected {
        errata_for(family).iter().map(|s| s.to_string()).collect()
    } else {
        vec![]
    };
    let sidecar = Sidecar {
        phi: angle.phi(),
        order_a: angle.order(),
        generator: format!("analytic:{}", family.name()),
        errata_applied,
        grid: grid_meta_from_points(&us),
        flags_ignored: None,
    };
    io::write_spectrum_csv(output, &us, &values, &sidecar)
}

fn cmd_convolve(
    f_path: &Path,
    g_path: &Path,
    phi: Option<f64>,
    order: Option<f64>,
    output: &Path,
) -> CliResult<()> {
    let angle = resolve_angle(phi, order)?;
    let f = io::read_signal_csv(f_path)?;
    let g = io::read_signal_csv(g_path)?;
    let (fg, gg) = (f.grid(), g.grid());
    let same = fg.count() == gg.count()
        && (fg.start() - gg.start()).abs() <= 1e-9 * fg.start().abs().max(1.0)
        && (fg.step() - gg.step()).abs() <= 1e-9 * fg.step();
    if !same {
        return Err(CliError::GridMismatch(format!(
            "{} and {} are sampled on different grids",
            f_path.display(),
            g_path.display()
        )));
    }
    // Snap g onto f's grid so the pair sees bitwise-identical grids.
    let g = SampledSignal::new(fg, g.samples().to_vec()).map_err(CliError::from)?;
    let pair = ConvolutionPair::new(&f, &g, angle)?;
    if pair.support_overflows() {
        eprintln!(
            "warning: the convolution support exceeds the grid; the result is truncated \
             by the zero-padding semantics"
        );
    }
    let out = fractional_convolve(&pair);
    io::write_signal_csv(output, &out)
}

fn cmd_verify(angles: Option<&str>, rules: &str, report: Option<&str>) -> CliResult<()> {
    let angles: Vec<f64> = match angles {
        None => vec![FRAC_PI_6, FRAC_PI_4, FRAC_PI_3, 2.0 * PI / 5.0, 3.0 * FRAC_PI_4],
        Some(list) => list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| CliError::Usage(format!("bad angle `{s}`: {e}")))
            })
            .collect::<CliResult<_>>()?,
    };
    let rule_filter: Option<Vec<RuleId>> = if rules.trim().eq_ignore_ascii_case("all") {
        None
    } else {
        Some(
            rules
                .split(',')
                .map(|s| s.trim().parse::<RuleId>().map_err(CliError::Usage))
                .collect::<CliResult<_>>()?,
        )
    };

    let rows = verify::run(&angles, rule_filter.as_deref())?;
    let json = verify::to_json(&rows)?;
    match report {
        Some("-") => {
            // JSON owns stdout; the table goes to stderr.
            eprint!("{}", verify::render_table(&rows));
            println!("{json}");
        }
        Some(path) => {
            print!("{}", verify::render_table(&rows));
            std::fs::write(path, format!("{json}\n"))
                .map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
        }
        None => print!("{}", verify::render_table(&rows)),
    }

    let failing = verify::failing(&rows);
    if failing > 0 {
        return Err(CliError::VerifyFailed(failing));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Synthesize {
            family,
            t0,
            dt,
            n,
            output,
        } => cmd_synthesize(family, *t0, *dt, *n, output),
        Command::Transform {
            input,
            phi,
            order,
            fast,
            quadrature,
            inverse,
            u_min,
            u_max,
            u_n,
            t_min,
            t_max,
            t_n,
            output,
        } => cmd_transform(
            input,
            *phi,
            *order,
            *fast,
            *quadrature,
            *inverse,
            (*u_min, *u_max, *u_n),
            (*t_min, *t_max, *t_n),
            output,
        ),
        Command::Analytic {
            family,
            phi,
            order,
            u_min,
            u_max,
            u_n,
            output,
        } => cmd_analytic(family, *phi, *order, (*u_min, *u_max, *u_n), output),
        Command::Convolve {
            f,
            g,
            phi,
            order,
            output,
        } => cmd_convolve(f, g, *phi, *order, output),
        Command::Verify {
            angles,
            rules,
            report,
        } => cmd_verify(angles.as_deref(), rules, report.as_deref()),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
