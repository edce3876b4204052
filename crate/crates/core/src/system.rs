//! State space and characteristic algebra of
//!
//! ```text
//! u_t + u u_x - sigma_x   = 0
//! sigma_t + u sigma_x - k^2 u_x = 0
//! ```
//!
//! The coefficient matrix `A(u, sigma) = [[u, -1], [-k^2, u]]` has eigenvalues
//! `u - k < u + k` with constant right eigenvectors `(1, k)` and `(1, -k)`.
//! Everything family-dependent is written through the signed offset
//! `(-1)^j` of [`WaveFamily::sign`], so that speeds, curves and fans share a
//! single sign convention.

use serde::{Deserialize, Serialize};

use crate::error::{finite, Error, Result};

/// Elastic wave speed `k > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct Params {
    k: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    k: f64,
}

impl TryFrom<RawParams> for Params {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        Params::new(raw.k)
    }
}

impl From<Params> for RawParams {
    fn from(p: Params) -> Self {
        RawParams { k: p.k }
    }
}

impl Params {
    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 {
            Ok(Params { k })
        } else {
            Err(Error::InvalidWaveSpeed(k))
        }
    }

    #[inline]
    pub fn k(&self) -> f64 {
        self.k
    }
}

/// A point `(u, sigma)` of the state plane: velocity and stress.
///
/// Both components are finite; construction through [`State::new`] rejects
/// NaN and infinities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct State {
    u: f64,
    sigma: f64,
}

#[derive(Serialize, Deserialize)]
struct RawState {
    u: f64,
    sigma: f64,
}

impl TryFrom<RawState> for State {
    type Error = Error;
    fn try_from(raw: RawState) -> Result<Self> {
        State::new(raw.u, raw.sigma)
    }
}

impl From<State> for RawState {
    fn from(s: State) -> Self {
        RawState { u: s.u, sigma: s.sigma }
    }
}

impl State {
    pub fn new(u: f64, sigma: f64) -> Result<Self> {
        Ok(State {
            u: finite("u", u)?,
            sigma: finite("sigma", sigma)?,
        })
    }

    /// Builds a state from values already known to be finite.
    #[inline]
    pub(crate) fn raw(u: f64, sigma: f64) -> Self {
        debug_assert!(u.is_finite() && sigma.is_finite(), "non-finite state ({u}, {sigma})");
        State { u, sigma }
    }

    #[inline]
    pub fn u(&self) -> f64 {
        self.u
    }

    #[inline]
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Characteristic speed of the given family at this state.
    #[inline]
    pub fn speed(&self, family: WaveFamily, p: Params) -> f64 {
        self.u + family.sign() * p.k
    }

    /// Riemann invariant of the given family: `sigma + (-1)^j k u`.
    ///
    /// It is constant along the `j`-wave curve through this state.
    #[inline]
    pub fn invariant(&self, family: WaveFamily, p: Params) -> f64 {
        self.sigma + family.sign() * p.k * self.u
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WaveFamily {
    Family1,
    Family2,
}

impl WaveFamily {
    pub const ALL: [WaveFamily; 2] = [WaveFamily::Family1, WaveFamily::Family2];

    /// `(-1)^j`: `-1` for the first family, `+1` for the second.
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            WaveFamily::Family1 => -1.0,
            WaveFamily::Family2 => 1.0,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            WaveFamily::Family1 => 1,
            WaveFamily::Family2 => 2,
        }
    }

    /// Right eigenvector `r_j = (1, -(-1)^j k)`.
    #[inline]
    pub fn eigenvector(self, p: Params) -> (f64, f64) {
        (1.0, -self.sign() * p.k)
    }

    /// Shock speed `s_j = (u_l + u_r)/2 + (-1)^j k` between two states on the
    /// `j`-shock curve.
    #[inline]
    pub fn shock_speed(self, left: State, right: State, p: Params) -> f64 {
        0.5 * (left.u + right.u) + self.sign() * p.k
    }
}

/// `(lambda_1, lambda_2) = (u - k, u + k)`.
pub fn characteristic_speeds(s: State, p: Params) -> (f64, f64) {
    (s.speed(WaveFamily::Family1, p), s.speed(WaveFamily::Family2, p))
}

/// `(w_1, w_2) = (sigma - k u, sigma + k u)`.
pub fn riemann_invariants(s: State, p: Params) -> (f64, f64) {
    (s.invariant(WaveFamily::Family1, p), s.invariant(WaveFamily::Family2, p))
}

/// Inverse of [`riemann_invariants`].
pub fn state_from_invariants(w1: f64, w2: f64, p: Params) -> Result<State> {
    let w1 = finite("w1", w1)?;
    let w2 = finite("w2", w2)?;
    State::new((w2 - w1) / (2.0 * p.k), 0.5 * (w1 + w2))
}

/// Stress-scaled magnitude of a pair of states, `max(1, |sigma|, k|u|)`.
/// Relative tolerances throughout the crate are taken against this.
pub fn pair_scale(a: State, b: State, p: Params) -> f64 {
    let k = p.k;
    1f64.max(a.sigma.abs())
        .max(b.sigma.abs())
        .max(k * a.u.abs())
        .max(k * b.u.abs())
}
