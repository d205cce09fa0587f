//! Pursuit on a containment ring: a fast evader crosses a disk on a straight
//! line while a slower pursuer, confined to the boundary circle and armed
//! with a nonzero capture radius, tries to intercept it.
//!
//! The crate computes every capture configuration in closed form (point,
//! exit-point, tangent), solves the grazing touch-and-go configuration
//! numerically, derives the worst-case pursuer start per evader heading,
//! runs parametric studies, and partitions the evader's heading circle into
//! escape and capture sets for one or more pursuers. A kinematic trajectory
//! simulator with event refinement serves as the independent oracle for all
//! of it.
//!
//! Conventions: the disk has radius `R` centered at the origin, the evader
//! starts at `(r, 0)`, speeds are normalized (`v_E = 1`, `v_P = gamma < 1`),
//! and clockwise pursuer motion means decreasing ring angle.

pub mod geometry;
pub mod plot;
pub mod reachability;
pub mod scenario;
pub mod sim;
pub mod sweep;
pub mod tgc;
pub mod worst_case;

/// Text formatting shared by every CSV emitter.
pub mod text {
    /// Format with 12 significant digits (scientific), stable for golden files.
    pub fn sig12(x: f64) -> String {
        format!("{x:.11e}")
    }
}

pub use geometry::{
    chord_offset, exc_start, exit_distance, exit_for_heading, heading_for_exit,
    point_capture_start, tac_start, tac_tangent_distance, RayExit, SolveError,
};
pub use reachability::{
    capture_predicate, capture_predicate_simulated, escape_set, ArcLabel, HeadingInterval,
    HeadingIntervalSet,
};
pub use scenario::{
    normalize_angle, signed_arc, CanonicalFrame, CaptureKind, CaptureSolution, Direction,
    DirectionPolicy, EvaderIntent, ParamError, PursuerSpec, ScenarioParams, ToleranceConfig, Vec2,
};
pub use sim::{capture_oracle, simulate, AgentState, Outcome, RelativeState, SimError, Trajectory};
pub use sweep::{sweep, sweep_csv, SweepAxis, SweepCell, SweepRecord};
pub use tgc::solve_tgc;
pub use worst_case::{worst_case_start, worst_case_sweep, WorstCaseResult};

#[cfg(test)]
mod tests {
    #[test]
    fn sig12_round_trips() {
        let x = 6.322764954949118_f64;
        let s = super::text::sig12(x);
        let back: f64 = s.parse().unwrap();
        assert!((back - x).abs() < 1e-11);
    }
}
