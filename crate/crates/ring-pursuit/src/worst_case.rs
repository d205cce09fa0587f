//! Worst-case pursuer start for a given evader heading: the capture
//! configuration covering the most angular range along the ring.
//!
//! "Travel" is the unwrapped arc from the start back to the exit angle,
//! `offset + gamma * d / R`; all candidate kinds share the exit anchor, so
//! comparing travels compares how far back the start sits. The regime is
//! never hardcoded: EXC, TAC, and TGC are all evaluated and the maximum wins.

use crate::geometry::{exc_start, point_capture_start, tac_start};
use crate::scenario::{CaptureKind, CaptureSolution, Direction, ScenarioParams};
use crate::tgc::solve_tgc;
use rayon::prelude::*;

/// The maximum-travel capture for one heading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorstCaseResult {
    pub solution: CaptureSolution,
    /// Arc from the start to the exit angle along the travel direction.
    pub travel: f64,
}

impl WorstCaseResult {
    /// The binding capture kind.
    pub fn regime(&self) -> CaptureKind {
        self.solution.kind
    }
}

/// Maximum-travel start over every capture kind that exists for this heading.
///
/// With `rho = 0` only point capture exists. Ties keep the earlier candidate
/// in the order EXC, TAC, TGC.
pub fn worst_case_start(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> WorstCaseResult {
    if params.capture_radius() == 0.0 {
        let solution = point_capture_start(params, psi_e, direction);
        return WorstCaseResult {
            travel: solution.travel(),
            solution,
        };
    }
    let mut best = exc_start(params, psi_e, direction);
    if let Ok(tac) = tac_start(params, psi_e, direction) {
        if tac.travel() > best.travel() {
            best = tac;
        }
    }
    if let Ok(tgc) = solve_tgc(params, psi_e, direction) {
        if tgc.travel() > best.travel() {
            best = tgc;
        }
    }
    WorstCaseResult {
        travel: best.travel(),
        solution: best,
    }
}

/// Elementwise [`worst_case_start`] over a heading list, input order kept.
pub fn worst_case_sweep(
    params: &ScenarioParams,
    headings: &[f64],
    direction: Direction,
) -> Vec<WorstCaseResult> {
    headings
        .par_iter()
        .map(|&psi| worst_case_start(params, psi, direction))
        .collect()
}
