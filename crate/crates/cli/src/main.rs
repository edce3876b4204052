//! `elasto-riemann`: solve one quarter-plane Riemann problem and write
//! `report.json` and `samples.csv` (plus `viscous.csv` in exact+viscous mode).

mod config;
mod report;

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;

use elasto_riemann::numerics::{l1_distance, viscous_solve};
use elasto_riemann::verify::audit;
use elasto_riemann::{solve_ibvp, Error as SolverError};

use config::{ConfigError, Mode, PartialConfig};
use report::{Report, Verification, ViscousReport};

/// Verification residuals above this (relative) fail the run.
const VERIFY_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "elasto-riemann", version, allow_negative_numbers = true, about = "Exact quarter-plane Riemann solver for nonconservative elastodynamics")]
struct Cli {
    /// JSON problem description; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    problem: PartialConfig,
}

#[derive(Debug, thiserror::Error)]
enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl RunError {
    fn exit_code(&self) -> u8 {
        match self {
            RunError::Config(_) => 2,
            RunError::Verification(_) => 3,
            RunError::Io { .. } => 1,
        }
    }
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<(), RunError> {
    let io_err = |source| RunError::Io { path: path.to_path_buf(), source };
    let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
    f(&mut w).and_then(|_| w.flush()).map_err(io_err)
}

fn run(cli: Cli) -> Result<(), RunError> {
    let file = match &cli.config {
        Some(path) => config::load_file(path)?,
        None => PartialConfig::default(),
    };
    let cfg = config::resolve(cli.problem, file)?;
    let p = cfg.params;

    let sol = solve_ibvp(cfg.boundary, cfg.initial, p);
    let summary = audit(&sol.structure, p);
    let passed = summary.passes(VERIFY_TOL);
    let mut report = Report::new(&cfg, &sol, Verification { summary, tolerance: VERIFY_TOL, passed });

    let viscous = if cfg.mode == Mode::ExactViscous {
        let field = viscous_solve(cfg.boundary, cfg.initial, p, &cfg.viscous_config()).map_err(|e| match e {
            SolverError::Stability(msg) => ConfigError { field: "viscous.nx", message: msg },
            other => ConfigError { field: "viscous", message: other.to_string() },
        })?;
        let l1 = l1_distance(&field, &sol, p, cfg.t).map_err(|e| ConfigError { field: "viscous", message: e.to_string() })?;
        report.viscous = Some(ViscousReport { settings: cfg.viscous.clone(), l1_distance: l1, field: "viscous.csv".into() });
        Some(field)
    } else {
        None
    };

    fs::create_dir_all(&cfg.out).map_err(|source| RunError::Io { path: cfg.out.clone(), source })?;
    write_file(&cfg.out.join("report.json"), |w| report.write(w))?;
    write_file(&cfg.out.join("samples.csv"), |w| report::write_samples(w, &sol, &cfg))?;
    if let Some(field) = viscous {
        write_file(&cfg.out.join("viscous.csv"), |w| field.write_csv(w))?;
    }

    if !passed {
        let s = &report.verification.summary;
        return Err(RunError::Verification(format!(
            "max RH residual {:e}, Lax {}, fan continuity {:e}, wave overlap {:e}",
            s.max_rh_residual,
            if s.lax_ok { "ok" } else { "violated" },
            s.fan_continuity_error,
            s.wave_overlap
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
