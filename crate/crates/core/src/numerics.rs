//! Vanishing-viscosity companion solver.
//!
//! Evolves
//!
//! ```text
//! u_t + u u_x - sigma_x       = eps u_xx
//! sigma_t + u sigma_x - k^2 u_x = eps sigma_xx
//! ```
//!
//! with explicit forward Euler in time and centred differences in space. It
//! exists only to cross-check the exact solver: as `eps -> 0` its solution
//! approaches the quarter-plane solution, including the boundary layer at
//! `x = 0` where the imposed data is not attained.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::boundary::QuarterPlaneSolution;
use crate::error::{Error, Result};
use crate::system::{Params, State};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViscousConfig {
    pub epsilon: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub t_end: f64,
    pub cfl: f64,
}

impl ViscousConfig {
    /// Quarter-plane run on `[0, x_max]`.
    pub fn quarter_plane(epsilon: f64, x_max: f64, nx: usize, t_end: f64) -> Self {
        ViscousConfig { epsilon, x_min: 0.0, x_max, nx, t_end, cfl: 0.5 }
    }

    /// Dirichlet data at `x_min` when the grid starts at the boundary,
    /// otherwise a full-line run with the jump at `x = 0`.
    pub fn is_quarter_plane(&self) -> bool {
        self.x_min == 0.0
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.epsilon, self.x_min, self.x_max, self.t_end, self.cfl]
            .iter()
            .all(|v| v.is_finite());
        if !all_finite {
            return Err(Error::Config("viscous config values must be finite".into()));
        }
        if self.epsilon <= 0.0 {
            return Err(Error::Config(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if self.nx < 16 {
            return Err(Error::Config(format!("nx must be at least 16, got {}", self.nx)));
        }
        if self.t_end <= 0.0 {
            return Err(Error::Config(format!("t_end must be positive, got {}", self.t_end)));
        }
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(Error::Config(format!("cfl must lie in (0, 1), got {}", self.cfl)));
        }
        if self.x_min > 0.0 || self.x_min.is_nan() || self.x_max <= 0.0 {
            return Err(Error::Config(format!(
                "grid must satisfy x_min = 0 or x_min < 0 < x_max, got [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        Ok(())
    }
}

/// Grid values of `u` and `sigma` at time `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViscousField {
    pub t: f64,
    pub x: Vec<f64>,
    pub u: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl ViscousField {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Writes `x,u,sigma` rows with a header; floats use the shortest
    /// representation that round-trips.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "x,u,sigma")?;
        for ((x, u), s) in self.x.iter().zip(&self.u).zip(&self.sigma) {
            writeln!(out, "{x},{u},{s}")?;
        }
        Ok(())
    }

    /// Position where `u` first crosses `level` from above (or below), with
    /// linear interpolation between grid points.
    pub fn crossing(&self, level: f64) -> Option<f64> {
        self.u.windows(2).enumerate().find_map(|(i, w)| {
            let (a, b) = (w[0] - level, w[1] - level);
            if a == 0.0 {
                Some(self.x[i])
            } else if a * b < 0.0 {
                Some(self.x[i] + (self.x[i + 1] - self.x[i]) * a / (a - b))
            } else {
                None
            }
        })
    }
}

fn max_speed(u: &[f64], k: f64) -> f64 {
    u.iter().fold(0.0f64, |m, v| m.max(v.abs())) + k
}

/// Integrates from the Riemann data to each time in `times` (increasing) and
/// returns the snapshots.
pub fn viscous_snapshots(
    boundary: State,
    initial: State,
    p: Params,
    cfg: &ViscousConfig,
    times: &[f64],
) -> Result<Vec<ViscousField>> {
    cfg.validate()?;
    if times.is_empty() || times.windows(2).any(|w| w[1] <= w[0]) || times[0] <= 0.0 {
        return Err(Error::Config("snapshot times must be positive and increasing".into()));
    }
    let n = cfg.nx;
    let dx = cfg.dx();
    let k = p.k();
    let k2 = k * k;
    let eps = cfg.epsilon;
    let x: Vec<f64> = (0..n).map(|i| cfg.x_min + dx * i as f64).collect();
    let quarter = cfg.is_quarter_plane();

    let mut u: Vec<f64> = x.iter().map(|&xi| if xi < 0.0 { boundary.u() } else { initial.u() }).collect();
    let mut s: Vec<f64> = x
        .iter()
        .map(|&xi| if xi < 0.0 { boundary.sigma() } else { initial.sigma() })
        .collect();
    if quarter {
        u[0] = boundary.u();
        s[0] = boundary.sigma();
    }
    let mut un = u.clone();
    let mut sn = s.clone();

    let diffusive_dt = dx * dx / (4.0 * eps);
    let mut out = Vec::with_capacity(times.len());
    let mut t = 0.0;
    for &target in times {
        while t < target {
            let a = max_speed(&u, k);
            let mut dt = (cfg.cfl * dx / a).min(diffusive_dt);
            if t + dt > target {
                dt = target - t;
            }
            // forward Euler with centred advection is stable for dt <= 2 eps / a^2
            if dt * a > dx || dt * eps / (dx * dx) > 0.5 || dt * a * a > 2.0 * eps {
                return Err(Error::Stability(format!(
                    "dt = {dt:e} with max speed {a}, dx = {dx:e}, eps = {eps}: cell Peclet number {:.3} too large \
                     (refine the grid or increase eps)",
                    a * dx / eps
                )));
            }
            let c = dt / (2.0 * dx);
            let d = eps * dt / (dx * dx);
            for i in 1..n - 1 {
                let dux = u[i + 1] - u[i - 1];
                let dsx = s[i + 1] - s[i - 1];
                un[i] = u[i] - c * (u[i] * dux - dsx) + d * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
                sn[i] = s[i] - c * (u[i] * dsx - k2 * dux) + d * (s[i + 1] - 2.0 * s[i] + s[i - 1]);
            }
            if quarter {
                un[0] = boundary.u();
                sn[0] = boundary.sigma();
            } else {
                un[0] = un[1];
                sn[0] = sn[1];
            }
            un[n - 1] = un[n - 2];
            sn[n - 1] = sn[n - 2];
            std::mem::swap(&mut u, &mut un);
            std::mem::swap(&mut s, &mut sn);
            t += dt;
            if !u.iter().chain(&s).all(|v| v.is_finite()) {
                return Err(Error::Stability(format!("solution became non-finite at t = {t}")));
            }
        }
        out.push(ViscousField { t: target, x: x.clone(), u: u.clone(), sigma: s.clone() });
    }
    Ok(out)
}

/// Viscous solution at `cfg.t_end`.
pub fn viscous_solve(boundary: State, initial: State, p: Params, cfg: &ViscousConfig) -> Result<ViscousField> {
    let mut v = viscous_snapshots(boundary, initial, p, cfg, &[cfg.t_end])?;
    Ok(v.pop().expect("one snapshot requested"))
}

/// `integral |u - u_exact| + |sigma - sigma_exact| dx` over the field's grid,
/// trapezoidal rule, exact solution sampled at `x / t`.
pub fn l1_distance(field: &ViscousField, exact: &QuarterPlaneSolution, p: Params, t: f64) -> Result<f64> {
    let n = field.x.len();
    if n < 2 || field.u.len() != n || field.sigma.len() != n {
        return Err(Error::Config(format!(
            "field arrays disagree: {} x, {} u, {} sigma",
            n,
            field.u.len(),
            field.sigma.len()
        )));
    }
    if t.is_nan() || t <= 0.0 || (t - field.t).abs() > 1e-12 * t.max(1.0) {
        return Err(Error::Config(format!("field is at t = {}, requested t = {t}", field.t)));
    }
    if field.x[0] < 0.0 {
        return Err(Error::Config("quarter-plane distance needs a grid in x >= 0".into()));
    }
    let err: Vec<f64> = (0..n)
        .map(|i| {
            let e = exact.sample(field.x[i] / t, p);
            (field.u[i] - e.u()).abs() + (field.sigma[i] - e.sigma()).abs()
        })
        .collect();
    Ok(err.windows(2).zip(field.x.windows(2)).map(|(e, x)| 0.5 * (e[0] + e[1]) * (x[1] - x[0])).sum())
}
