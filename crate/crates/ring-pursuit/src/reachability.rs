//! Escape/capture partition of the evader's heading circle for one or more
//! ring pursuers.
//!
//! The per-heading predicate has a fast path: for a fixed direction, starts
//! between the least-travel bound (the trailing edge of the capture disk
//! grazing the exit) and the worst-case start capture without further work.
//! Starts outside that arc are decided by the trajectory simulator — they
//! are usually escapes, but a heading aimed into the pursuer's forward path
//! can be caught en route from starts far beyond the worst-case arc, so the
//! simulator stays authoritative there. Answers near the arc boundaries are
//! likewise confirmed by simulation.

use crate::geometry::{chord_offset, exit_for_heading};
use crate::scenario::{Direction, DirectionPolicy, EvaderIntent, PursuerSpec, ScenarioParams};
use crate::sim::capture_oracle;
use crate::worst_case::worst_case_start;
use rayon::prelude::*;
use std::f64::consts::TAU;
use std::fmt;

/// Number of samples in the initial heading grid.
pub const INITIAL_GRID: usize = 720;

/// Boundary localization tolerance, radians.
pub const BOUNDARY_RESOLUTION: f64 = 1e-6;

/// Label of a heading arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcLabel {
    Escape,
    Capture,
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLabel::Escape => write!(f, "ESCAPE"),
            ArcLabel::Capture => write!(f, "CAPTURE"),
        }
    }
}

/// One labeled heading arc `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeadingInterval {
    pub lo: f64,
    pub hi: f64,
    pub label: ArcLabel,
}

/// Disjoint labeled arcs covering `[0, 2pi)` exactly once, sorted ascending.
///
/// Adjacent arcs carry different labels; the pair split by the 0/2pi seam is
/// the one allowed exception (a single wrapped arc stored as two rows).
#[derive(Debug, Clone, PartialEq)]
pub struct HeadingIntervalSet {
    pub intervals: Vec<HeadingInterval>,
    /// Boundary localization tolerance the set was built with.
    pub resolution: f64,
}

impl HeadingIntervalSet {
    /// Total angular measure of the ESCAPE arcs, in `[0, 2pi]`.
    pub fn escape_measure(&self) -> f64 {
        self.intervals
            .iter()
            .filter(|iv| iv.label == ArcLabel::Escape)
            .map(|iv| iv.hi - iv.lo)
            .sum()
    }

    /// Label of the arc containing `psi` (taken mod `2pi`).
    pub fn label_at(&self, psi: f64) -> ArcLabel {
        let x = psi.rem_euclid(TAU);
        self.intervals
            .iter()
            .find(|iv| x >= iv.lo && x < iv.hi)
            .map(|iv| iv.label)
            .unwrap_or(ArcLabel::Escape)
    }

    /// CSV export with header `lo_rad,hi_rad,label`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lo_rad,hi_rad,label\n");
        for iv in &self.intervals {
            out.push_str(&format!(
                "{},{},{}\n",
                crate::text::sig12(iv.lo),
                crate::text::sig12(iv.hi),
                iv.label
            ));
        }
        out
    }
}

/// Capture test for one pursuer against one heading, honoring the pursuer's
/// direction policy (Favorable tries both directions).
pub fn capture_predicate(params: &ScenarioParams, psi_e: f64, pursuer: &PursuerSpec) -> bool {
    match pursuer.policy {
        DirectionPolicy::Fixed => {
            capture_in_direction(params, psi_e, pursuer.theta_p0, pursuer.direction)
        }
        DirectionPolicy::Favorable => {
            capture_in_direction(params, psi_e, pursuer.theta_p0, Direction::Clockwise)
                || capture_in_direction(
                    params,
                    psi_e,
                    pursuer.theta_p0,
                    Direction::Counterclockwise,
                )
        }
    }
}

/// Pure-simulation version of [`capture_predicate`] (no interval fast path).
pub fn capture_predicate_simulated(
    params: &ScenarioParams,
    psi_e: f64,
    pursuer: &PursuerSpec,
) -> bool {
    match pursuer.policy {
        DirectionPolicy::Fixed => {
            simulated_capture(params, psi_e, pursuer.theta_p0, pursuer.direction)
        }
        DirectionPolicy::Favorable => {
            simulated_capture(params, psi_e, pursuer.theta_p0, Direction::Clockwise)
                || simulated_capture(params, psi_e, pursuer.theta_p0, Direction::Counterclockwise)
        }
    }
}

fn simulated_capture(
    params: &ScenarioParams,
    psi_e: f64,
    theta_p0: f64,
    direction: Direction,
) -> bool {
    capture_oracle(
        params,
        &EvaderIntent::new(psi_e),
        &PursuerSpec::fixed(theta_p0, direction),
    )
    .is_capture()
}

fn capture_in_direction(
    params: &ScenarioParams,
    psi_e: f64,
    theta_p0: f64,
    direction: Direction,
) -> bool {
    // Immediate capture: the evader starts inside the capture disk.
    let start_gap = params.evader_start().distance(params.ring_point(theta_p0));
    if start_gap <= params.capture_radius() + params.tolerances().range_tol {
        return true;
    }

    let exit = exit_for_heading(params, psi_e);
    // Least travel: the trailing edge of the disk grazes the exit point, so
    // the start may sit up to `phi` past it (offset can be negative).
    let o_min = params.speed_ratio() * exit.distance / params.radius() - chord_offset(params);
    let o_max = worst_case_start(params, psi_e, direction).travel;
    // Offset of this start behind the exit, mapped into [o_min, o_min + 2pi).
    let o_raw = direction.sign() * (exit.theta_f - theta_p0);
    let o = o_min + (o_raw - o_min).rem_euclid(TAU);

    let guard = 2.0 * params.tolerances().angle_tol;
    if o >= o_min + guard && o <= o_max - guard {
        return true;
    }
    // Near a boundary or outside the arc: simulate. En-route captures of
    // headings crossing the pursuer's forward path live out here.
    simulated_capture(params, psi_e, theta_p0, direction)
}

/// Escape/capture partition for a set of pursuers: a heading escapes iff no
/// pursuer captures it. Boundaries are localized by bisection from a
/// 720-sample grid down to [`BOUNDARY_RESOLUTION`].
pub fn escape_set(params: &ScenarioParams, pursuers: &[PursuerSpec]) -> HeadingIntervalSet {
    assert!(
        !pursuers.is_empty(),
        "escape_set needs at least one pursuer"
    );
    escape_set_with_grid(params, pursuers, INITIAL_GRID)
}

/// [`escape_set`] with an explicit initial grid size (used by consistency tests).
pub fn escape_set_with_grid(
    params: &ScenarioParams,
    pursuers: &[PursuerSpec],
    grid: usize,
) -> HeadingIntervalSet {
    assert!(grid >= 8);
    let captured = |psi: f64| pursuers.iter().any(|p| capture_predicate(params, psi, p));

    let flags: Vec<bool> = (0..grid)
        .into_par_iter()
        .map(|k| captured(k as f64 * TAU / grid as f64))
        .collect();

    // Localize each grid-adjacent label change.
    let mut boundaries: Vec<(f64, bool)> = Vec::new();
    for k in 0..grid {
        let next = (k + 1) % grid;
        if flags[k] != flags[next] {
            let mut lo = k as f64 * TAU / grid as f64;
            let mut hi = (k + 1) as f64 * TAU / grid as f64;
            let lo_flag = flags[k];
            while hi - lo > BOUNDARY_RESOLUTION {
                let mid = 0.5 * (lo + hi);
                if captured(mid) == lo_flag {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            // Label to the right of the boundary.
            boundaries.push((hi.rem_euclid(TAU), flags[next]));
        }
    }
    boundaries.sort_by(|a, b| a.0.total_cmp(&b.0));

    let label_of = |captured: bool| {
        if captured {
            ArcLabel::Capture
        } else {
            ArcLabel::Escape
        }
    };

    let intervals = if boundaries.is_empty() {
        vec![HeadingInterval {
            lo: 0.0,
            hi: TAU,
            label: label_of(flags[0]),
        }]
    } else {
        // Walk the sorted boundaries; the stretch before the first one wraps
        // around from the last.
        let mut ivs = Vec::with_capacity(boundaries.len() + 1);
        let first_label = label_of(boundaries.last().unwrap().1);
        let mut cursor = 0.0;
        let mut current = first_label;
        for &(angle, captured_after) in &boundaries {
            if angle > cursor {
                ivs.push(HeadingInterval {
                    lo: cursor,
                    hi: angle,
                    label: current,
                });
            }
            cursor = angle;
            current = label_of(captured_after);
        }
        ivs.push(HeadingInterval {
            lo: cursor,
            hi: TAU,
            label: current,
        });
        ivs
    };

    HeadingIntervalSet {
        intervals,
        resolution: BOUNDARY_RESOLUTION,
    }
}
