//! Closed-form solutions for data on a common level set of one Riemann
//! invariant, `w_j(initial) = w_j(boundary)`.
//!
//! Only one family is active then, and the solution is a single `j`-wave (or
//! nothing) described entirely by the two characteristic speeds
//! `l_b = lambda_j(boundary)` and `l_0 = lambda_j(initial)`. The formulas here
//! are written directly in those terms and share no code with the Riemann
//! solver, so they serve as a regression oracle for [`super::solve_ibvp`].

use serde::Serialize;

use crate::curves::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::system::{pair_scale, Params, State, WaveFamily};

/// Configuration of the two characteristic speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LevelSetCase {
    /// `l_0 = l_b > 0`: constant state.
    Case1,
    /// `l_0 = l_b <= 0`: constant state.
    Case2,
    /// `0 < l_b < l_0`: boundary state, fan, initial state.
    Case3,
    /// `l_b <= 0 < l_0`: fan from the boundary, then initial state.
    Case4,
    /// `l_b < 0`, `l_0 <= 0`: initial state everywhere.
    Case5,
    /// `l_0 < l_b`, `l_b + l_0 > 0`: shock at `(l_b + l_0)/2` between the
    /// boundary and initial states.
    Case6,
    /// `l_0 < l_b`, `l_b >= 0`, `l_b + l_0 <= 0`: the shock does not enter the
    /// domain, initial state everywhere.
    ShockExits,
}

fn speeds(family: WaveFamily, boundary: State, initial: State, p: Params) -> (f64, f64) {
    let off = family.sign() * p.k();
    (boundary.u() + off, initial.u() + off)
}

/// Which configuration the level-set data falls in.
pub fn level_set_case(family: WaveFamily, boundary: State, initial: State, p: Params) -> LevelSetCase {
    let (lb, l0) = speeds(family, boundary, initial, p);
    let vscale = 1f64.max(p.k()).max(boundary.u().abs()).max(initial.u().abs());
    if (l0 - lb).abs() <= DEFAULT_TOL * vscale {
        if lb > 0.0 {
            LevelSetCase::Case1
        } else {
            LevelSetCase::Case2
        }
    } else if lb < l0 {
        if lb > 0.0 {
            LevelSetCase::Case3
        } else if l0 > 0.0 {
            LevelSetCase::Case4
        } else {
            LevelSetCase::Case5
        }
    } else if lb + l0 > 0.0 {
        LevelSetCase::Case6
    } else if lb < 0.0 {
        LevelSetCase::Case5
    } else {
        LevelSetCase::ShockExits
    }
}

/// Solution at `(x, t)` for data with `w_j(initial) = w_j(boundary)`.
///
/// Inside a fan `lambda_j = x/t`, so `u = x/t - (-1)^j k` and
/// `sigma = c_j - (-1)^j k u` with `c_j = w_j(boundary)`.
pub fn section3_closed_form(
    family: WaveFamily,
    boundary: State,
    initial: State,
    p: Params,
    x: f64,
    t: f64,
) -> Result<State> {
    if !(x.is_finite() && t.is_finite()) || x <= 0.0 || t <= 0.0 {
        return Err(Error::Domain(format!("closed form needs x > 0 and t > 0, got x = {x}, t = {t}")));
    }
    let c = boundary.invariant(family, p);
    let gap = initial.invariant(family, p) - c;
    if gap.abs() > DEFAULT_TOL * pair_scale(boundary, initial, p) {
        return Err(Error::Domain(format!(
            "initial state is off the level set of w{} through the boundary state (gap {gap:e})",
            family.index()
        )));
    }
    let (lb, l0) = speeds(family, boundary, initial, p);
    let xi = x / t;
    let off = family.sign() * p.k();
    let fan = |xi: f64| {
        let u = xi - off;
        State::raw(u, c - off * u)
    };
    Ok(match level_set_case(family, boundary, initial, p) {
        LevelSetCase::Case1 | LevelSetCase::Case2 | LevelSetCase::Case5 | LevelSetCase::ShockExits => initial,
        LevelSetCase::Case3 => {
            if xi < lb {
                boundary
            } else if xi < l0 {
                fan(xi)
            } else {
                initial
            }
        }
        LevelSetCase::Case4 => {
            if xi < l0 {
                fan(xi)
            } else {
                initial
            }
        }
        LevelSetCase::Case6 => {
            if xi < 0.5 * (lb + l0) {
                boundary
            } else {
                initial
            }
        }
    })
}
