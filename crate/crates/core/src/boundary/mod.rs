//! Quarter-plane problem `x > 0, t > 0` with constant initial data and
//! constant boundary data imposed in the weak (Riemann) sense.
//!
//! The solution is the full-line Riemann solution `R(boundary, initial)`
//! restricted to `x/t >= 0`; its trace at `x = 0+` is the admissible boundary
//! value. The case machine labels the solution with the sub-case whose
//! speed-sign pattern it realises, reading the speeds off the constructed
//! wave structure. A speed exactly equal to zero is treated as non-positive
//! (it does not enter the domain, matching the right-continuous sampler) and
//! the label is marked [`CaseLabel::Sonic`].

mod level_set;

use std::fmt;

use serde::{Serialize, Serializer};

pub use level_set::{section3_closed_form, level_set_case, LevelSetCase};

use crate::curves::{self, RegionLabel, SignedDistances};
use crate::riemann::{self, fan_point};
use crate::system::{pair_scale, Params, State};
use crate::wave::{Wave, WaveKind, WaveStructure};

/// Sub-cases of the quarter-plane construction.
///
/// | family | region        | waves            |
/// |--------|---------------|------------------|
/// | 1      | on `R1`       | 1-fan            |
/// | 2      | on `R2`       | 2-fan            |
/// | 3      | on `S1`       | 1-shock          |
/// | 4      | on `S2`       | 2-shock          |
/// | 5      | `Gamma1`      | 1-fan, 2-fan     |
/// | 6      | `Gamma2`      | 1-shock, 2-fan   |
/// | 7      | `Gamma3`      | 1-shock, 2-shock |
/// | 8      | `Gamma4`      | 1-fan, 2-shock   |
///
/// Within a family the letter says which waves reach into `x > 0`: `a` all of
/// them, `b` none, `c` (and its roman sub-cases) some.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubCase {
    C1a,
    C1b,
    C1c,
    C2a,
    C2b,
    C2c,
    C3a,
    C3b,
    C4a,
    C4b,
    C5a,
    C5b,
    C5cI,
    C5cII,
    C5cIII,
    C6a,
    C6b,
    C6cI,
    C6cII,
    C7a,
    C7b,
    C7c,
    C8a,
    C8b,
    C8cI,
    C8cII,
}

impl SubCase {
    pub const ALL: [SubCase; 26] = [
        SubCase::C1a,
        SubCase::C1b,
        SubCase::C1c,
        SubCase::C2a,
        SubCase::C2b,
        SubCase::C2c,
        SubCase::C3a,
        SubCase::C3b,
        SubCase::C4a,
        SubCase::C4b,
        SubCase::C5a,
        SubCase::C5b,
        SubCase::C5cI,
        SubCase::C5cII,
        SubCase::C5cIII,
        SubCase::C6a,
        SubCase::C6b,
        SubCase::C6cI,
        SubCase::C6cII,
        SubCase::C7a,
        SubCase::C7b,
        SubCase::C7c,
        SubCase::C8a,
        SubCase::C8b,
        SubCase::C8cI,
        SubCase::C8cII,
    ];

    pub fn family(self) -> u8 {
        use SubCase::*;
        match self {
            C1a | C1b | C1c => 1,
            C2a | C2b | C2c => 2,
            C3a | C3b => 3,
            C4a | C4b => 4,
            C5a | C5b | C5cI | C5cII | C5cIII => 5,
            C6a | C6b | C6cI | C6cII => 6,
            C7a | C7b | C7c => 7,
            C8a | C8b | C8cI | C8cII => 8,
        }
    }

    pub fn name(self) -> &'static str {
        use SubCase::*;
        match self {
            C1a => "1a",
            C1b => "1b",
            C1c => "1c",
            C2a => "2a",
            C2b => "2b",
            C2c => "2c",
            C3a => "3a",
            C3b => "3b",
            C4a => "4a",
            C4b => "4b",
            C5a => "5a",
            C5b => "5b",
            C5cI => "5c-i",
            C5cII => "5c-ii",
            C5cIII => "5c-iii",
            C6a => "6a",
            C6b => "6b",
            C6cI => "6c-i",
            C6cII => "6c-ii",
            C7a => "7a",
            C7b => "7b",
            C7c => "7c",
            C8a => "8a",
            C8b => "8b",
            C8cI => "8c-i",
            C8cII => "8c-ii",
        }
    }
}

impl fmt::Display for SubCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// Boundary and initial data coincide.
    Constant,
    Case(SubCase),
    /// Some wave speed or fan edge is exactly zero; the sub-case is the one
    /// obtained by counting that speed as non-positive.
    Sonic(SubCase),
}

impl CaseLabel {
    pub fn sub_case(self) -> Option<SubCase> {
        match self {
            CaseLabel::Constant => None,
            CaseLabel::Case(c) | CaseLabel::Sonic(c) => Some(c),
        }
    }

    pub fn is_sonic(self) -> bool {
        matches!(self, CaseLabel::Sonic(_))
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Constant => f.write_str("Constant"),
            CaseLabel::Case(c) => write!(f, "{c}"),
            CaseLabel::Sonic(c) => write!(f, "Sonic({c})"),
        }
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Solution of the quarter-plane problem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarterPlaneSolution {
    /// Full-line Riemann solution `R(boundary, initial)`.
    pub structure: WaveStructure,
    pub case: CaseLabel,
    pub region: RegionLabel,
    pub distances: SignedDistances,
    /// Limit of the solution as `x -> 0+`.
    pub trace: State,
    /// Waves, or the parts of fans, lying in `x/t > 0`, in order.
    pub visible_waves: Vec<Wave>,
}

impl QuarterPlaneSolution {
    pub fn boundary(&self) -> State {
        self.structure.left
    }

    pub fn initial(&self) -> State {
        self.structure.right
    }

    /// Evaluates the solution at `xi = x/t >= 0` from the trace and the visible
    /// waves only; `xi <= 0` returns the trace.
    pub fn sample(&self, xi: f64, p: Params) -> State {
        let mut current = self.trace;
        for w in &self.visible_waves {
            let (_, hi) = w.speed_support();
            if xi < hi {
                return w.state_at(xi, p);
            }
            current = w.right;
        }
        current
    }
}

/// Restriction of a wave to `xi > 0`, or `None` when nothing of it is left.
fn visible_part(w: &Wave, p: Params) -> Option<Wave> {
    match w.kind {
        WaveKind::Shock { speed } => (speed > 0.0).then_some(*w),
        WaveKind::Rarefaction { xi_lo, xi_hi } => {
            if xi_hi <= 0.0 {
                None
            } else if xi_lo >= 0.0 {
                Some(*w)
            } else {
                Some(Wave {
                    kind: WaveKind::Rarefaction { xi_lo: 0.0, xi_hi },
                    left: fan_point(w.left, w.family, 0.0, p),
                    ..*w
                })
            }
        }
    }
}

fn edges(w: &Wave) -> (f64, f64) {
    w.speed_support()
}

/// Assigns the sub-case from the speeds of the wave structure.
pub fn case_of(ws: &WaveStructure) -> CaseLabel {
    use SubCase::*;
    let pos = |s: f64| s > 0.0;
    let sub = match (&ws.wave1, &ws.wave2) {
        (None, None) => return CaseLabel::Constant,
        (Some(w1), None) => {
            let (lo, hi) = edges(w1);
            if w1.is_shock() {
                if pos(lo) {
                    C3a
                } else {
                    C3b
                }
            } else if pos(lo) {
                C1a
            } else if pos(hi) {
                C1c
            } else {
                C1b
            }
        }
        (None, Some(w2)) => {
            let (lo, hi) = edges(w2);
            if w2.is_shock() {
                if pos(lo) {
                    C4a
                } else {
                    C4b
                }
            } else if pos(lo) {
                C2a
            } else if pos(hi) {
                C2c
            } else {
                C2b
            }
        }
        (Some(w1), Some(w2)) => {
            let (lo1, hi1) = edges(w1);
            let (lo2, hi2) = edges(w2);
            match (w1.is_shock(), w2.is_shock()) {
                (false, false) => {
                    if pos(lo1) {
                        C5a
                    } else if !pos(hi2) {
                        C5b
                    } else if pos(hi1) {
                        C5cI
                    } else if pos(lo2) {
                        C5cII
                    } else {
                        C5cIII
                    }
                }
                (true, false) => {
                    if pos(lo1) {
                        C6a
                    } else if !pos(hi2) {
                        C6b
                    } else if pos(lo2) {
                        C6cI
                    } else {
                        C6cII
                    }
                }
                (true, true) => {
                    if pos(lo1) {
                        C7a
                    } else if !pos(hi2) {
                        C7b
                    } else {
                        C7c
                    }
                }
                (false, true) => {
                    if pos(lo1) {
                        C8a
                    } else if !pos(hi2) {
                        C8b
                    } else if pos(hi1) {
                        C8cI
                    } else {
                        C8cII
                    }
                }
            }
        }
    };
    if ws.speeds().contains(&0.0) {
        CaseLabel::Sonic(sub)
    } else {
        CaseLabel::Case(sub)
    }
}

/// Solves the quarter-plane problem with boundary data `boundary` and initial
/// data `initial`.
pub fn solve_ibvp(boundary: State, initial: State, p: Params) -> QuarterPlaneSolution {
    let (region, distances) = curves::classify(boundary, initial, p, curves::DEFAULT_TOL);
    let structure = riemann::solve_riemann(boundary, initial, p);
    let trace = riemann::sample(&structure, 0.0, p);
    let visible_waves = structure.waves().filter_map(|w| visible_part(w, p)).collect();
    QuarterPlaneSolution {
        case: case_of(&structure),
        region,
        distances,
        trace,
        visible_waves,
        structure,
    }
}

/// Boundary value attained by the solution, `lim x -> 0+`.
pub fn boundary_trace(sol: &QuarterPlaneSolution) -> State {
    sol.trace
}

/// Relative tolerance used when comparing traces.
pub const TRACE_TOL: f64 = 1e-12;

fn close(a: State, b: State, p: Params, tol: f64) -> bool {
    let scale = pair_scale(a, b, p);
    p.k() * (a.u() - b.u()).abs() <= tol * scale && (a.sigma() - b.sigma()).abs() <= tol * scale
}

/// Whether `candidate` is an admissible boundary value for `boundary`, i.e.
/// a trace `R(boundary, v)(0+)` for some state `v`.
///
/// Decided by idempotence: an admissible value is its own trace.
pub fn er_contains(boundary: State, candidate: State, p: Params) -> bool {
    let sol = solve_ibvp(boundary, candidate, p);
    close(sol.trace, candidate, p, TRACE_TOL)
}

/// Brute-force companion of [`er_contains`]: every state of `grid` whose
/// trace matches `candidate` within relative tolerance `tol`.
pub fn er_scan(boundary: State, candidate: State, grid: &[State], p: Params, tol: f64) -> Vec<State> {
    grid.iter()
        .copied()
        .filter(|&v| {
            let trace = riemann::sample(&riemann::solve_riemann(boundary, v, p), 0.0, p);
            close(trace, candidate, p, tol)
        })
        .collect()
}
