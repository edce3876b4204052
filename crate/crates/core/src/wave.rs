//! Elementary waves and the self-similar wave structure built from them.

use serde::{Deserialize, Serialize};

use crate::system::{Params, State, WaveFamily};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveKind {
    Shock { speed: f64 },
    Rarefaction { xi_lo: f64, xi_hi: f64 },
}

/// One shock or rarefaction fan with its flanking states.
///
/// Zero-strength waves are never built; a missing wave is `None` in
/// [`WaveStructure`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wave {
    pub family: WaveFamily,
    #[serde(flatten)]
    pub kind: WaveKind,
    pub left: State,
    pub right: State,
}

impl Wave {
    pub fn strength(&self) -> f64 {
        (self.right.u() - self.left.u()).abs()
    }

    pub fn is_shock(&self) -> bool {
        matches!(self.kind, WaveKind::Shock { .. })
    }

    /// Smallest and largest `x/t` occupied by the wave.
    pub fn speed_support(&self) -> (f64, f64) {
        match self.kind {
            WaveKind::Shock { speed } => (speed, speed),
            WaveKind::Rarefaction { xi_lo, xi_hi } => (xi_lo, xi_hi),
        }
    }

    /// State inside the wave at `xi`, or `None` when `xi` is outside its
    /// support. For a fan this is the centred rarefaction anchored at the
    /// left flank; a shock has no interior.
    pub fn interior(&self, xi: f64, p: Params) -> Option<State> {
        match self.kind {
            WaveKind::Shock { .. } => None,
            WaveKind::Rarefaction { xi_lo, xi_hi } if xi >= xi_lo && xi < xi_hi => {
                Some(crate::riemann::fan_point(self.left, self.family, xi, p))
            }
            WaveKind::Rarefaction { .. } => None,
        }
    }

    /// Right-continuous evaluation of the single wave: `left` before its
    /// support, fan values inside, `right` from the shock position or the
    /// trailing fan edge on.
    pub fn state_at(&self, xi: f64, p: Params) -> State {
        match self.kind {
            WaveKind::Shock { speed } => {
                if xi < speed {
                    self.left
                } else {
                    self.right
                }
            }
            WaveKind::Rarefaction { xi_lo, xi_hi } => {
                if xi < xi_lo {
                    self.left
                } else if xi < xi_hi {
                    crate::riemann::fan_point(self.left, self.family, xi, p)
                } else {
                    self.right
                }
            }
        }
    }
}

/// Left state, optional 1-wave, middle state, optional 2-wave, right state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveStructure {
    pub left: State,
    pub wave1: Option<Wave>,
    pub middle: State,
    pub wave2: Option<Wave>,
    pub right: State,
}

impl WaveStructure {
    pub fn constant(s: State) -> Self {
        WaveStructure { left: s, wave1: None, middle: s, wave2: None, right: s }
    }

    pub fn waves(&self) -> impl Iterator<Item = &Wave> {
        self.wave1.iter().chain(self.wave2.iter())
    }

    pub fn is_constant(&self) -> bool {
        self.wave1.is_none() && self.wave2.is_none()
    }

    /// How far the 1-wave reaches past the start of the 2-wave,
    /// `max(0, sup speeds(wave1) - inf speeds(wave2))`.
    ///
    /// The two-wave construction only describes a weak solution when this is
    /// zero. Each wave speed moves by half the jump in `u`, while the gap
    /// between the families is a constant `2k`, so large enough data (for
    /// example `u_L - u_R > 4k` across two shocks) makes the 1-wave
    /// overrun the 2-wave.
    pub fn overlap(&self) -> f64 {
        match (&self.wave1, &self.wave2) {
            (Some(a), Some(b)) => (a.speed_support().1 - b.speed_support().0).max(0.0),
            _ => 0.0,
        }
    }

    pub fn is_ordered(&self) -> bool {
        self.overlap() == 0.0
    }

    /// Every shock speed and fan edge, in increasing order of position.
    pub fn speeds(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(4);
        for w in self.waves() {
            match w.kind {
                WaveKind::Shock { speed } => out.push(speed),
                WaveKind::Rarefaction { xi_lo, xi_hi } => {
                    out.push(xi_lo);
                    out.push(xi_hi);
                }
            }
        }
        out
    }
}
