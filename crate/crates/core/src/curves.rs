//! Wave curves through a fixed base state and the classification of a second
//! state against them.
//!
//! Both families have straight wave curves: the `j`-curve through `b` is the
//! level set `w_j = w_j(b)`, a rarefaction branch `R_j` for `u > u_b` and a
//! shock branch `S_j` for `u < u_b`. With
//!
//! ```text
//! d1 = (sigma_q - sigma_b) - k (u_q - u_b)      (zero on R1 u S1)
//! d2 = (sigma_q - sigma_b) + k (u_q - u_b)      (zero on R2 u S2)
//! ```
//!
//! the intermediate state of the Riemann problem `(b, q)` satisfies
//! `u* - u_b = d2 / 2k` and `u_q - u* = -d1 / 2k`. The first wave is therefore a
//! rarefaction iff `d2 > 0` and the second one iff `d1 < 0`, which fixes the
//! sign pattern of the four open regions:
//!
//! | region | between     | d1 | d2 | waves            |
//! |--------|-------------|----|----|------------------|
//! | Gamma1 | R1 and R2   | -  | +  | 1-fan, 2-fan     |
//! | Gamma2 | R2 and S1   | -  | -  | 1-shock, 2-fan   |
//! | Gamma3 | S1 and S2   | +  | -  | 1-shock, 2-shock |
//! | Gamma4 | S2 and R1   | +  | +  | 1-fan, 2-shock   |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::system::{pair_scale, Params, State, WaveFamily};

/// Default relative tolerance for on-curve detection and zero-strength waves.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    Coincident,
    OnR1,
    OnS1,
    OnR2,
    OnS2,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 9] = [
        RegionLabel::Coincident,
        RegionLabel::OnR1,
        RegionLabel::OnS1,
        RegionLabel::OnR2,
        RegionLabel::OnS2,
        RegionLabel::Gamma1,
        RegionLabel::Gamma2,
        RegionLabel::Gamma3,
        RegionLabel::Gamma4,
    ];
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedDistances {
    pub d1: f64,
    pub d2: f64,
}

impl SignedDistances {
    pub fn between(base: State, query: State, p: Params) -> Self {
        let ds = query.sigma() - base.sigma();
        let du = query.u() - base.u();
        let kdu = p.k() * du;
        SignedDistances { d1: ds - kdu, d2: ds + kdu }
    }

    /// Signed distance to the `j`-curve: `d1` for the first family, `d2` for
    /// the second.
    pub fn to_curve(&self, family: WaveFamily) -> f64 {
        match family {
            WaveFamily::Family1 => self.d1,
            WaveFamily::Family2 => self.d2,
        }
    }
}

/// Stress on the `family` wave curve through `base` at velocity `u`.
pub fn wave_curve_sigma(base: State, family: WaveFamily, u: f64, p: Params) -> f64 {
    base.sigma() - family.sign() * p.k() * (u - base.u())
}

/// Whether the `family`-wave joining `left` to `right` is absent, i.e. its
/// strength `|d| / 2k` vanishes at relative tolerance `tol`.
pub(crate) fn negligible(d: f64, scale: f64, tol: f64) -> bool {
    d.abs() <= tol * scale
}

/// Position of `query` relative to the four wave curves through `base`.
///
/// On-curve labels win over the open regions. A query within tolerance of
/// both lines is `Coincident`, which covers the zero-strength point `u_q = u_b`.
pub fn classify(base: State, query: State, p: Params, tol: f64) -> (RegionLabel, SignedDistances) {
    let d = SignedDistances::between(base, query, p);
    let scale = pair_scale(base, query, p);
    let on1 = negligible(d.d1, scale, tol);
    let on2 = negligible(d.d2, scale, tol);
    // On the 1-line d2 = 2k(u_q - u_b), on the 2-line d1 = -2k(u_q - u_b); the
    // branch is read off the other distance so labels agree with the solver.
    let label = match (on1, on2) {
        (true, true) => RegionLabel::Coincident,
        (true, false) if d.d2 > 0.0 => RegionLabel::OnR1,
        (true, false) => RegionLabel::OnS1,
        (false, true) if d.d1 < 0.0 => RegionLabel::OnR2,
        (false, true) => RegionLabel::OnS2,
        (false, false) => match (d.d1 < 0.0, d.d2 > 0.0) {
            (true, true) => RegionLabel::Gamma1,
            (true, false) => RegionLabel::Gamma2,
            (false, false) => RegionLabel::Gamma3,
            (false, true) => RegionLabel::Gamma4,
        },
    };
    (label, d)
}

/// Intersection of the first-family curve through `base` with the
/// second-family curve through `target`.
pub fn intermediate_state(base: State, target: State, p: Params) -> State {
    let k = p.k();
    let u = (target.sigma() - base.sigma()) / (2.0 * k) + 0.5 * (target.u() + base.u());
    let sigma = 0.5 * (target.sigma() + base.sigma()) + 0.5 * k * (target.u() - base.u());
    State::raw(u, sigma)
}
