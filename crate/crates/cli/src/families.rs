//! Mapping from CLI family names and parameter flags to `SignalFamily`.

use clap::Args;
use rofrft::{Sign, SignalFamily};

use crate::error::{CliError, CliResult};

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family name: delta | constant | cexp | texp | chirp | gaussian |
    /// scaled-gaussian | shifted-gaussian | tgaussian | shifted-tgaussian
    pub family: String,

    /// Time shift τ (delta, shifted-gaussian, shifted-tgaussian)
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,

    /// Modulation frequency q in rad/s (cexp, texp)
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,

    /// Rate parameter: chirp sweep in rad/s² or Gaussian width in 1/s²
    /// (chirp, scaled-gaussian, shifted-gaussian)
    #[arg(long, allow_negative_numbers = true)]
    pub rate: Option<f64>,

    /// Use the e^{−j…} branch of cexp/texp/chirp
    #[arg(long)]
    pub negative: bool,
}

impl FamilyArgs {
    pub fn parse(&self) -> CliResult<SignalFamily> {
        let sign = if self.negative { Sign::Minus } else { Sign::Plus };
        let usage = |msg: &str| CliError::Usage(format!("family `{}`: {msg}", self.family));
        let need = |opt: Option<f64>, flag: &str| {
            opt.ok_or_else(|| usage(&format!("requires --{flag}")))
        };
        let forbid = |opt: Option<f64>, flag: &str| -> CliResult<()> {
            if opt.is_some() {
                Err(usage(&format!("does not take --{flag}")))
            } else {
                Ok(())
            }
        };
        let no_sign = || -> CliResult<()> {
            if self.negative {
                Err(usage("does not take --negative"))
            } else {
                Ok(())
            }
        };

        Ok(match self.family.as_str() {
            "delta" => {
                forbid(self.q, "q")?;
                forbid(self.rate, "rate")?;
                no_sign()?;
                SignalFamily::Delta { tau: need(self.tau, "tau")? }
            }
            "constant" => {
                forbid(self.tau, "tau")?;
                forbid(self.q, "q")?;
                forbid(self.rate, "rate")?;
                no_sign()?;
                SignalFamily::Constant
            }
            "cexp" => {
                forbid(self.tau, "tau")?;
                forbid(self.rate, "rate")?;
                SignalFamily::ComplexExp { q: need(self.q, "q")?, sign }
            }
            "texp" => {
                forbid(self.tau, "tau")?;
                forbid(self.rate, "rate")?;
                SignalFamily::TTimesExp { q: need(self.q, "q")?, sign }
            }
            "chirp" => {
                forbid(self.tau, "tau")?;
                forbid(self.q, "q")?;
                SignalFamily::LinearChirp { rate: need(self.rate, "rate")?, sign }
            }
            "gaussian" => {
                forbid(self.tau, "tau")?;
                forbid(self.q, "q")?;
                forbid(self.rate, "rate")?;
                no_sign()?;
                SignalFamily::Gaussian
            }
            "scaled-gaussian" => {
                forbid(self.tau, "tau")?;
                forbid(self.q, "q")?;
                no_sign()?;
                SignalFamily::ScaledGaussian { rate: need(self.rate, "rate")? }
            }
            "shifted-gaussian" => {
                forbid(self.q, "q")?;
                no_sign()?;
                SignalFamily::ShiftedScaledGaussian {
                    rate: need(self.rate, "rate")?,
                    tau: need(self.tau, "tau")?,
                }
            }
            "tgaussian" => {
                forbid(self.tau, "tau")?;
                forbid(self.q, "q")?;
                forbid(self.rate, "rate")?;
                no_sign()?;
                SignalFamily::TTimesGaussian
            }
            "shifted-tgaussian" => {
                forbid(self.q, "q")?;
                forbid(self.rate, "rate")?;
                no_sign()?;
                SignalFamily::ShiftedTTimesGaussian { tau: need(self.tau, "tau")? }
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family `{other}` (expected delta, constant, cexp, texp, chirp, \
                     gaussian, scaled-gaussian, shifted-gaussian, tgaussian, shifted-tgaussian)"
                )))
            }
        })
    }
}
