//! Exact solver for the Riemann-type initial-boundary value problem of the
//! nonconservative elastodynamics system
//!
//! ```text
//! u_t + u u_x - sigma_x         = 0
//! sigma_t + u sigma_x - k^2 u_x = 0,     x > 0, t > 0,
//! ```
//!
//! with constant initial state `(u_0, sigma_0)` and constant boundary state
//! `(u_b, sigma_b)` imposed in the Riemann sense. Shocks use the Volpert
//! product and the Lax admissibility condition.
//!
//! * [`system`]: parameters, states, characteristic speeds and Riemann invariants.
//! * [`curves`]: wave curves through a state and region classification.
//! * [`riemann`]: full-line Riemann solver and self-similar sampler.
//! * [`boundary`]: quarter-plane case machine, boundary traces, admissible
//!   boundary values and the level-set closed forms.
//! * [`verify`]: jump conditions, Lax checks and weak-form residuals.
//! * [`numerics`]: vanishing-viscosity finite-difference oracle.

pub mod boundary;
pub mod curves;
pub mod error;
pub mod numerics;
pub mod riemann;
pub mod system;
pub mod verify;
pub mod wave;

pub use boundary::{boundary_trace, er_contains, solve_ibvp, CaseLabel, QuarterPlaneSolution, SubCase};
pub use curves::{classify, intermediate_state, RegionLabel, SignedDistances};
pub use error::{Error, Result};
pub use riemann::{fan_state, sample, solve_riemann};
pub use system::{characteristic_speeds, riemann_invariants, state_from_invariants, Params, State, WaveFamily};
pub use wave::{Wave, WaveKind, WaveStructure};
