//! Full-line Riemann solver and the self-similar sampler.
//!
//! The solution of the Riemann problem `(left, right)` is a 1-wave from
//! `left` to the intermediate state followed by a 2-wave to `right`. Both wave
//! curves are straight, so the intermediate state is explicit and no
//! iteration is involved. Shock speeds are `s_j = (u_l + u_r)/2 + (-1)^j k`.

use crate::curves::{self, negligible, SignedDistances};
use crate::error::{Error, Result};
use crate::system::{pair_scale, Params, State, WaveFamily};
use crate::wave::{Wave, WaveKind, WaveStructure};

/// Fan value at `xi` for a `family` fan whose trailing edge (smallest `xi`)
/// is `anchor`: the anchor moved along the eigenvector `r_j` by
/// `xi - lambda_j(anchor)`. Exact at `xi = lambda_j(anchor)`.
#[inline]
pub(crate) fn fan_point(anchor: State, family: WaveFamily, xi: f64, p: Params) -> State {
    let dxi = xi - anchor.speed(family, p);
    let (_, dsigma) = family.eigenvector(p);
    State::raw(anchor.u() + dxi, anchor.sigma() + dsigma * dxi)
}

/// State inside a centred `family` rarefaction whose left flank is `anchor`.
///
/// Along the fan `u = xi - (-1)^j k` and `w_j` is constant; the free constant
/// is fixed by continuity at `xi = lambda_j(anchor)`. Fans only extend toward
/// increasing `xi`, so `xi` below the anchor's characteristic speed is a
/// range error.
pub fn fan_state(anchor: State, family: WaveFamily, xi: f64, p: Params) -> Result<State> {
    let lo = anchor.speed(family, p);
    if !xi.is_finite() || xi < lo {
        return Err(Error::OutsideFan { xi, lo, hi: f64::INFINITY });
    }
    Ok(fan_point(anchor, family, xi, p))
}

/// Builds the `family` wave from `left` to `right`, given that `right` lies on
/// the `family` wave curve of `left` (up to tolerance) and the wave has
/// non-zero strength.
fn elementary_wave(family: WaveFamily, left: State, right: State, p: Params) -> Wave {
    let kind = if right.u() > left.u() {
        WaveKind::Rarefaction {
            xi_lo: left.speed(family, p),
            xi_hi: right.speed(family, p),
        }
    } else {
        WaveKind::Shock { speed: family.shock_speed(left, right, p) }
    };
    Wave { family, kind, left, right }
}

/// Solves the Riemann problem with tolerance [`curves::DEFAULT_TOL`].
pub fn solve_riemann(left: State, right: State, p: Params) -> WaveStructure {
    solve_riemann_with_tol(left, right, p, curves::DEFAULT_TOL)
}

/// Solves the Riemann problem; a wave whose strength is within `tol` (relative
/// to the pair scale) is dropped and its flanking states merged.
pub fn solve_riemann_with_tol(left: State, right: State, p: Params, tol: f64) -> WaveStructure {
    let d = SignedDistances::between(left, right, p);
    let scale = pair_scale(left, right, p);
    // strength of the 1-wave is |d2|/2k, of the 2-wave |d1|/2k
    let has1 = !negligible(d.d2, scale, tol);
    let has2 = !negligible(d.d1, scale, tol);
    let middle = match (has1, has2) {
        (true, true) => curves::intermediate_state(left, right, p),
        (true, false) => right,
        (false, _) => left,
    };
    let wave1 = has1.then(|| elementary_wave(WaveFamily::Family1, left, middle, p));
    let wave2 = has2.then(|| elementary_wave(WaveFamily::Family2, middle, right, p));
    WaveStructure { left, wave1, middle, wave2, right }
}

/// Evaluates the self-similar solution at `xi = x / t`.
///
/// Right-continuous: exactly at a shock the right flank is returned, and a
/// fan's leading edge belongs to the state behind it.
pub fn sample(ws: &WaveStructure, xi: f64, p: Params) -> State {
    if let Some(w1) = &ws.wave1 {
        let (_, hi) = w1.speed_support();
        if xi < hi {
            return w1.state_at(xi, p);
        }
    }
    match &ws.wave2 {
        Some(w2) => w2.state_at(xi, p),
        None => ws.right,
    }
}
