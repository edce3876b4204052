//! Admissibility and consistency checks that do not reuse the solver's own
//! construction: jump conditions, Lax inequalities, fan continuity and a
//! discrete weak-form residual.
//!
//! The nonconservative product `u sigma_x` is taken in the Volpert sense: across
//! a jump it contributes the arithmetic mean of `u` times the jump in `sigma`.

use serde::{Deserialize, Serialize};

use crate::boundary::QuarterPlaneSolution;
use crate::error::{Error, Result};
use crate::riemann::fan_point;
use crate::system::{pair_scale, Params, State, WaveFamily};
use crate::wave::{WaveKind, WaveStructure};

/// Left-hand sides of the two jump conditions for a discontinuity
/// `left -> right` travelling at `speed`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RHResidual {
    pub r_momentum: f64,
    pub r_stress: f64,
}

impl RHResidual {
    pub fn max_abs(&self) -> f64 {
        self.r_momentum.abs().max(self.r_stress.abs())
    }
}

/// ```text
/// r_momentum = -s [u] + [u^2]/2 - [sigma]
/// r_stress   = -s [sigma] + (u_l + u_r)/2 [sigma] - k^2 [u]
/// ```
pub fn rh_residual(left: State, right: State, speed: f64, p: Params) -> RHResidual {
    let du = right.u() - left.u();
    let ds = right.sigma() - left.sigma();
    let k2 = p.k() * p.k();
    let mean_u = 0.5 * (left.u() + right.u());
    RHResidual {
        r_momentum: -speed * du + 0.5 * (right.u() * right.u() - left.u() * left.u()) - ds,
        r_stress: -speed * ds + mean_u * ds - k2 * du,
    }
}

/// Magnitude of the largest individual term in [`rh_residual`], floored at 1.
/// Residuals are judged relative to this.
pub fn rh_scale(left: State, right: State, speed: f64, p: Params) -> f64 {
    let du = (right.u() - left.u()).abs();
    let ds = (right.sigma() - left.sigma()).abs();
    let umax = left.u().abs().max(right.u().abs());
    let k2 = p.k() * p.k();
    [1.0, speed.abs() * du, umax * umax, ds, speed.abs() * ds, umax * ds, k2 * du]
        .into_iter()
        .fold(0.0, f64::max)
}

/// Lax inequalities `lambda_j(right) - tol <= speed <= lambda_j(left) + tol`.
pub fn lax_check(left: State, right: State, speed: f64, family: WaveFamily, p: Params, tol: f64) -> bool {
    right.speed(family, p) - tol <= speed && speed <= left.speed(family, p) + tol
}

/// Aggregate checks of one wave structure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    /// Largest RH residual over all shocks, relative to [`rh_scale`].
    pub max_rh_residual: f64,
    pub lax_ok: bool,
    /// Largest mismatch between a fan's leading edge value and its right
    /// flank, relative to the pair scale.
    pub fan_continuity_error: f64,
    /// See [`WaveStructure::overlap`].
    pub wave_overlap: f64,
}

impl VerificationSummary {
    pub fn passes(&self, tol: f64) -> bool {
        self.lax_ok && self.max_rh_residual <= tol && self.fan_continuity_error <= tol && self.wave_overlap == 0.0
    }
}

pub const LAX_TOL: f64 = 1e-12;

pub fn audit(ws: &WaveStructure, p: Params) -> VerificationSummary {
    let mut out = VerificationSummary {
        max_rh_residual: 0.0,
        lax_ok: true,
        fan_continuity_error: 0.0,
        wave_overlap: ws.overlap(),
    };
    for w in ws.waves() {
        match w.kind {
            WaveKind::Shock { speed } => {
                let r = rh_residual(w.left, w.right, speed, p).max_abs() / rh_scale(w.left, w.right, speed, p);
                out.max_rh_residual = out.max_rh_residual.max(r);
                let tol = LAX_TOL * (1.0 + speed.abs() + p.k());
                out.lax_ok &= lax_check(w.left, w.right, speed, w.family, p, tol);
            }
            WaveKind::Rarefaction { xi_lo, xi_hi } => {
                let scale = pair_scale(w.left, w.right, p);
                let lead = fan_point(w.left, w.family, xi_hi, p);
                let trail = fan_point(w.left, w.family, xi_lo, p);
                let err = [
                    p.k() * (lead.u() - w.right.u()).abs(),
                    (lead.sigma() - w.right.sigma()).abs(),
                    p.k() * (trail.u() - w.left.u()).abs(),
                    (trail.sigma() - w.left.sigma()).abs(),
                ]
                .into_iter()
                .fold(0.0, f64::max)
                    / scale;
                out.fan_continuity_error = out.fan_continuity_error.max(err);
                // speeds must increase across the fan
                out.lax_ok &= w.left.speed(w.family, p) < w.right.speed(w.family, p);
            }
        }
    }
    out
}

/// Tensor grid over `[x_min, x_max] x [t_min, t_max]` used by
/// [`weak_residual`]; `levels` dyadic refinements of the window carry one
/// bump test function per sub-window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeakGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub nx: usize,
    pub nt: usize,
    pub levels: u32,
}

impl WeakGrid {
    pub fn new(x_min: f64, x_max: f64, t_min: f64, t_max: f64, nx: usize, nt: usize) -> Self {
        WeakGrid { x_min, x_max, t_min, t_max, nx, nt, levels: 3 }
    }

    /// Same window with `factor` times as many intervals in each direction.
    pub fn refined(&self, factor: usize) -> Self {
        WeakGrid {
            nx: (self.nx - 1) * factor + 1,
            nt: (self.nt - 1) * factor + 1,
            ..*self
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.t_min, self.t_max].iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::Config("weak grid bounds must be finite".into()));
        }
        if self.x_min < 0.0 || self.x_max <= self.x_min {
            return Err(Error::Config(format!(
                "weak grid needs 0 <= x_min < x_max, got [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        if self.t_min <= 0.0 || self.t_max <= self.t_min {
            return Err(Error::Config(format!(
                "weak grid needs 0 < t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        let min_points = (1usize << self.levels.min(16)) * 2 + 1;
        if self.nx < min_points || self.nt < min_points {
            return Err(Error::Config(format!(
                "weak grid needs at least {min_points} points per direction for {} levels, got {}x{}",
                self.levels, self.nx, self.nt
            )));
        }
        if self.levels == 0 || self.levels > 16 {
            return Err(Error::Config(format!("weak grid levels must be in 1..=16, got {}", self.levels)));
        }
        Ok(())
    }
}

/// `exp(1 - 1/(1 - z^2))` on `|z| < 1` and its derivative.
fn bump(z: f64) -> (f64, f64) {
    if z.abs() >= 1.0 {
        return (0.0, 0.0);
    }
    let q = 1.0 - z * z;
    let b = (1.0 - 1.0 / q).exp();
    (b, -2.0 * z / (q * q) * b)
}

/// One-dimensional factor of a test function sampled on a uniform grid.
struct Factor {
    value: Vec<f64>,
    deriv: Vec<f64>,
    /// value at the midpoints `(x_i + x_{i+1}) / 2`
    mid: Vec<f64>,
    /// index range with non-zero support
    range: std::ops::Range<usize>,
}

impl Factor {
    fn new(lo: f64, h: f64, n: usize, a: f64, b: f64) -> Factor {
        let c = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let eval = |x: f64| bump((x - c) / half);
        let mut value = vec![0.0; n];
        let mut deriv = vec![0.0; n];
        let mut mid = vec![0.0; n.saturating_sub(1)];
        let (mut first, mut last) = (n, 0);
        for i in 0..n {
            let x = lo + h * i as f64;
            let (v, d) = eval(x);
            value[i] = v;
            deriv[i] = d / half;
            if i + 1 < n {
                mid[i] = eval(x + 0.5 * h).0;
            }
            if v != 0.0 || (i + 1 < n && mid[i] != 0.0) {
                first = first.min(i);
                last = last.max(i + 1);
            }
        }
        let range = if first <= last { first..(last + 1).min(n) } else { 0..0 };
        Factor { value, deriv, mid, range }
    }
}

fn trapezoid_weight(i: usize, n: usize, h: f64) -> f64 {
    if i == 0 || i + 1 == n {
        0.5 * h
    } else {
        h
    }
}

/// Discrete weak-form residuals `(u equation, sigma equation)` of a quarter-plane solution.
///
/// Equation 1 is tested in conservation form,
/// `-integral(u phi_t + (u^2/2 - sigma) phi_x)`; equation 2 as
/// `integral(-sigma phi_t + k^2 u phi_x) + integral(phi u sigma_x)` with the
/// last product assembled cell by cell as `mean(u) * jump(sigma)` (Volpert).
/// Each residual is the largest absolute value over the bump test functions.
/// Quadrature is trapezoidal in both directions.
pub fn weak_residual(sol: &QuarterPlaneSolution, p: Params, grid: &WeakGrid) -> Result<(f64, f64)> {
    grid.validate()?;
    let (nx, nt) = (grid.nx, grid.nt);
    let hx = (grid.x_max - grid.x_min) / (nx - 1) as f64;
    let ht = (grid.t_max - grid.t_min) / (nt - 1) as f64;
    let k2 = p.k() * p.k();

    let mut u = vec![0.0; nx * nt];
    let mut sigma = vec![0.0; nx * nt];
    for j in 0..nt {
        let t = grid.t_min + ht * j as f64;
        for i in 0..nx {
            let x = grid.x_min + hx * i as f64;
            let s = sol.sample(x / t, p);
            u[j * nx + i] = s.u();
            sigma[j * nx + i] = s.sigma();
        }
    }

    let (mut worst1, mut worst2) = (0.0f64, 0.0f64);
    for level in 0..grid.levels {
        let parts = 1usize << level;
        let wx = (grid.x_max - grid.x_min) / parts as f64;
        let wt = (grid.t_max - grid.t_min) / parts as f64;
        let xs: Vec<Factor> = (0..parts)
            .map(|a| {
                let lo = grid.x_min + wx * a as f64;
                Factor::new(grid.x_min, hx, nx, lo, lo + wx)
            })
            .collect();
        let ts: Vec<Factor> = (0..parts)
            .map(|b| {
                let lo = grid.t_min + wt * b as f64;
                Factor::new(grid.t_min, ht, nt, lo, lo + wt)
            })
            .collect();
        for fx in &xs {
            for ft in &ts {
                let (mut r1, mut r2) = (0.0, 0.0);
                for j in ft.range.clone() {
                    let (tv, td) = (ft.value[j], ft.deriv[j]);
                    if tv == 0.0 && td == 0.0 {
                        continue;
                    }
                    let wtj = trapezoid_weight(j, nt, ht);
                    let row = j * nx;
                    let (mut a1, mut a2, mut volpert) = (0.0, 0.0, 0.0);
                    for i in fx.range.clone() {
                        let (uu, ss) = (u[row + i], sigma[row + i]);
                        let phi_t = fx.value[i] * td;
                        let phi_x = fx.deriv[i] * tv;
                        let w = trapezoid_weight(i, nx, hx);
                        a1 -= w * (uu * phi_t + (0.5 * uu * uu - ss) * phi_x);
                        a2 += w * (-ss * phi_t + k2 * uu * phi_x);
                        if i + 1 < nx {
                            let (ur, sr) = (u[row + i + 1], sigma[row + i + 1]);
                            volpert += fx.mid[i] * tv * 0.5 * (uu + ur) * (sr - ss);
                        }
                    }
                    r1 += wtj * a1;
                    r2 += wtj * (a2 + volpert);
                }
                worst1 = worst1.max(r1.abs());
                worst2 = worst2.max(r2.abs());
            }
        }
    }
    Ok((worst1, worst2))
}
