//! Problem description: JSON file and command-line flags, merged with flags
//! taking precedence.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use elasto_riemann::numerics::ViscousConfig;
use elasto_riemann::{Params, State};

pub const DEFAULT_T: f64 = 1.0;
pub const DEFAULT_X_MAX: f64 = 2.0;
pub const DEFAULT_NX: usize = 201;
pub const DEFAULT_EPSILON: f64 = 0.005;
pub const DEFAULT_VISCOUS_NX: usize = 2000;
pub const DEFAULT_CFL: f64 = 0.5;
pub const DEFAULT_OUT: &str = "out";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum Mode {
    #[serde(rename = "exact")]
    #[value(name = "exact")]
    Exact,
    #[serde(rename = "exact+viscous")]
    #[value(name = "exact+viscous")]
    ExactViscous,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::ExactViscous => "exact+viscous",
        })
    }
}

/// Everything optional, so the file and the flags can each supply a part.
#[derive(Debug, Clone, Default, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct PartialConfig {
    /// Elastic wave speed k > 0
    #[arg(long)]
    pub k: Option<f64>,
    /// Boundary velocity u_b
    #[arg(long = "ub")]
    pub u_b: Option<f64>,
    /// Boundary stress sigma_b
    #[arg(long = "sb")]
    pub sigma_b: Option<f64>,
    /// Initial velocity u_0
    #[arg(long = "u0")]
    pub u_0: Option<f64>,
    /// Initial stress sigma_0
    #[arg(long = "s0")]
    pub sigma_0: Option<f64>,
    /// Sampling time
    #[arg(long)]
    pub t: Option<f64>,
    /// Right end of the sampled interval (0, x_max]
    #[arg(long = "xmax")]
    pub x_max: Option<f64>,
    /// Number of sample points
    #[arg(long)]
    pub nx: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    #[serde(default)]
    pub viscous: PartialViscous,
}

#[derive(Debug, Clone, Default, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct PartialViscous {
    /// Viscosity for the exact+viscous mode
    #[arg(long = "eps", id = "viscous_epsilon")]
    pub epsilon: Option<f64>,
    /// Grid points of the viscous run
    #[arg(long = "viscous-nx", id = "viscous_nx")]
    pub nx: Option<usize>,
    /// Courant number of the viscous run
    #[arg(long, id = "viscous_cfl")]
    pub cfl: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViscousSettings {
    pub epsilon: f64,
    pub nx: usize,
    pub cfl: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemConfig {
    pub params: Params,
    pub boundary: State,
    pub initial: State,
    pub t: f64,
    pub x_max: f64,
    pub nx: usize,
    pub mode: Mode,
    pub out: PathBuf,
    pub viscous: ViscousSettings,
}

impl ProblemConfig {
    pub fn viscous_config(&self) -> ViscousConfig {
        ViscousConfig {
            epsilon: self.viscous.epsilon,
            x_min: 0.0,
            x_max: self.x_max,
            nx: self.viscous.nx,
            t_end: self.t,
            cfl: self.viscous.cfl,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid config field `{field}`: {message}")]
pub struct ConfigError {
    pub field: &'static str,
    pub message: String,
}

fn bad(field: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError { field, message: message.into() }
}

pub fn load_file(path: &Path) -> Result<PartialConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad("config", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| bad("config", format!("{}: {e}", path.display())))
}

fn required(field: &'static str, flag: Option<f64>, file: Option<f64>) -> Result<f64, ConfigError> {
    let v = flag.or(file).ok_or_else(|| bad(field, "missing"))?;
    finite(field, v)
}

fn finite(field: &'static str, v: f64) -> Result<f64, ConfigError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad(field, format!("must be finite, got {v}")))
    }
}

fn positive(field: &'static str, v: f64) -> Result<f64, ConfigError> {
    if finite(field, v)? > 0.0 {
        Ok(v)
    } else {
        Err(bad(field, format!("must be positive, got {v}")))
    }
}

/// Merges flags over file values over defaults and validates the result.
pub fn resolve(flags: PartialConfig, file: PartialConfig) -> Result<ProblemConfig, ConfigError> {
    let k = positive("k", required("k", flags.k, file.k)?)?;
    let u_b = required("u_b", flags.u_b, file.u_b)?;
    let sigma_b = required("sigma_b", flags.sigma_b, file.sigma_b)?;
    let u_0 = required("u_0", flags.u_0, file.u_0)?;
    let sigma_0 = required("sigma_0", flags.sigma_0, file.sigma_0)?;
    let t = positive("t", flags.t.or(file.t).unwrap_or(DEFAULT_T))?;
    let x_max = positive("x_max", flags.x_max.or(file.x_max).unwrap_or(DEFAULT_X_MAX))?;
    let nx = flags.nx.or(file.nx).unwrap_or(DEFAULT_NX);
    if nx < 2 {
        return Err(bad("nx", format!("must be at least 2, got {nx}")));
    }
    let mode = flags.mode.or(file.mode).unwrap_or(Mode::Exact);
    let out = flags.out.or(file.out).unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));

    let (fv, ffile) = (flags.viscous, file.viscous);
    let epsilon = positive("viscous.epsilon", fv.epsilon.or(ffile.epsilon).unwrap_or(DEFAULT_EPSILON))?;
    let vnx = fv.nx.or(ffile.nx).unwrap_or(DEFAULT_VISCOUS_NX);
    if vnx < 16 {
        return Err(bad("viscous.nx", format!("must be at least 16, got {vnx}")));
    }
    let cfl = finite("viscous.cfl", fv.cfl.or(ffile.cfl).unwrap_or(DEFAULT_CFL))?;
    if !(cfl > 0.0 && cfl < 1.0) {
        return Err(bad("viscous.cfl", format!("must lie in (0, 1), got {cfl}")));
    }

    Ok(ProblemConfig {
        params: Params::new(k).map_err(|e| bad("k", e.to_string()))?,
        boundary: State::new(u_b, sigma_b).map_err(|e| bad("u_b", e.to_string()))?,
        initial: State::new(u_0, sigma_0).map_err(|e| bad("u_0", e.to_string()))?,
        t,
        x_max,
        nx,
        mode,
        out,
        viscous: ViscousSettings { epsilon, nx: vnx, cfl },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags() -> PartialConfig {
        PartialConfig { k: Some(1.0), u_b: Some(0.0), sigma_b: Some(0.0), u_0: Some(2.0), sigma_0: Some(2.0), ..Default::default() }
    }

    #[test]
    fn defaults_fill_in() {
        let c = resolve(flags(), PartialConfig::default()).unwrap();
        assert_eq!((c.t, c.x_max, c.nx, c.mode), (1.0, 2.0, 201, Mode::Exact));
        assert_eq!(c.viscous, ViscousSettings { epsilon: 0.005, nx: 2000, cfl: 0.5 });
    }

    #[test]
    fn flags_override_file() {
        let file: PartialConfig =
            serde_json::from_str(r#"{"k": 3, "u_b": 1, "sigma_b": 1, "u_0": 1, "sigma_0": 1, "nx": 9, "viscous": {"epsilon": 0.01}}"#)
                .unwrap();
        let c = resolve(flags(), file).unwrap();
        assert_eq!(c.params.k(), 1.0);
        assert_eq!(c.nx, 9);
        assert_eq!(c.viscous.epsilon, 0.01);
    }

    #[test]
    fn errors_name_the_field() {
        let cases: Vec<(PartialConfig, &str)> = vec![
            (PartialConfig { k: Some(-1.0), ..flags() }, "k"),
            (PartialConfig { k: None, ..flags() }, "k"),
            (PartialConfig { sigma_0: Some(f64::NAN), ..flags() }, "sigma_0"),
            (PartialConfig { nx: Some(1), ..flags() }, "nx"),
            (PartialConfig { t: Some(0.0), ..flags() }, "t"),
            (PartialConfig { viscous: PartialViscous { cfl: Some(1.5), ..Default::default() }, ..flags() }, "viscous.cfl"),
        ];
        for (c, field) in cases {
            assert_eq!(resolve(c, PartialConfig::default()).unwrap_err().field, field);
        }
    }

    #[test]
    fn unknown_file_keys_rejected() {
        assert!(serde_json::from_str::<PartialConfig>(r#"{"kappa": 1}"#).is_err());
        let m: PartialConfig = serde_json::from_str(r#"{"mode": "exact+viscous"}"#).unwrap();
        assert_eq!(m.mode, Some(Mode::ExactViscous));
    }
}
