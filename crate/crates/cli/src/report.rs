//! `report.json` (schema 1) and `samples.csv`.

use std::io::{self, Write};

use serde::Serialize;

use elasto_riemann::curves::SignedDistances;
use elasto_riemann::verify::VerificationSummary;
use elasto_riemann::{riemann, Params, QuarterPlaneSolution, RegionLabel, State, Wave};

use crate::config::{Mode, ProblemConfig, ViscousSettings};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub mode: Mode,
    pub params: Params,
    pub boundary: State,
    pub initial: State,
    pub t: f64,
    pub x_max: f64,
    pub nx: usize,
    pub case: String,
    pub sonic: bool,
    pub region: RegionLabel,
    pub signed_distances: SignedDistances,
    pub intermediate_state: State,
    pub waves: Vec<Wave>,
    pub visible_waves: Vec<Wave>,
    pub trace: State,
    pub verification: Verification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub viscous: Option<ViscousReport>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    #[serde(flatten)]
    pub summary: VerificationSummary,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct ViscousReport {
    #[serde(flatten)]
    pub settings: ViscousSettings,
    pub l1_distance: f64,
    pub field: String,
}

impl Report {
    pub fn new(cfg: &ProblemConfig, sol: &QuarterPlaneSolution, verification: Verification) -> Report {
        Report {
            schema: SCHEMA,
            mode: cfg.mode,
            params: cfg.params,
            boundary: cfg.boundary,
            initial: cfg.initial,
            t: cfg.t,
            x_max: cfg.x_max,
            nx: cfg.nx,
            case: sol.case.to_string(),
            sonic: sol.case.is_sonic(),
            region: sol.region,
            signed_distances: sol.distances,
            intermediate_state: sol.structure.middle,
            waves: sol.structure.waves().copied().collect(),
            visible_waves: sol.visible_waves.clone(),
            trace: sol.trace,
            verification,
            viscous: None,
        }
    }

    pub fn write<W: Write>(&self, mut out: W) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }
}

/// Sample abscissae `x_i = i x_max / nx`, `i = 1..=nx`.
pub fn sample_points(x_max: f64, nx: usize) -> impl Iterator<Item = f64> {
    (1..=nx).map(move |i| i as f64 * x_max / nx as f64)
}

pub fn write_samples<W: Write>(mut out: W, sol: &QuarterPlaneSolution, cfg: &ProblemConfig) -> io::Result<()> {
    writeln!(out, "x,u,sigma")?;
    for x in sample_points(cfg.x_max, cfg.nx) {
        let s = riemann::sample(&sol.structure, x / cfg.t, cfg.params);
        writeln!(out, "{x},{},{}", s.u(), s.sigma())?;
    }
    Ok(())
}
