//! Closed-form capture solutions: point capture, exit-point capture (EXC),
//! and tangent capture (TAC), plus heading/exit-point conversions.
//!
//! Start angles follow the unified signed form
//! `theta_P0 = theta_Pf - a * gamma * d / R` with `theta_Pf = theta_F - a * offset`,
//! where `a = -1` for CW and `a = +1` for CCW. With `a = -1` the pursuer starts
//! at a larger polar angle and sweeps down toward the exit; arcs and travel
//! distances stay nonnegative either way. Every solution here is also checked
//! against the kinematic simulator in tests, not just against the algebra.

use crate::scenario::{
    CaptureKind, CaptureSolution, Direction, EvaderIntent, ScenarioParams, Vec2,
};
use std::fmt;

/// Solver failures for configurations that do not exist geometrically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// No valid tangency: the capture circle cannot touch the evader's path
    /// inside the disk transit for this heading and side.
    NoTangency,
    /// The touch-and-go residual does not change sign between the TAC and EXC
    /// final angles; no TGC exists for this heading.
    NoBracket,
    /// Bisection failed to reach its tolerance within the iteration budget.
    NoConvergence,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoTangency => write!(f, "no tangent capture for this heading"),
            SolveError::NoBracket => write!(f, "touch-and-go residual does not bracket a root"),
            SolveError::NoConvergence => write!(f, "bisection did not converge"),
        }
    }
}

impl std::error::Error for SolveError {}

/// Where the evader's ray leaves the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayExit {
    /// Polar angle of the exit point, in `[0, 2pi)`.
    pub theta_f: f64,
    /// Distance from the evader start to the exit point (`EF`).
    pub distance: f64,
}

impl RayExit {
    pub fn point(&self, params: &ScenarioParams) -> Vec2 {
        params.ring_point(self.theta_f)
    }
}

impl EvaderIntent {
    /// Exit angle and distance for this heading.
    pub fn exit(&self, params: &ScenarioParams) -> RayExit {
        exit_for_heading(params, self.psi_e)
    }
}

/// Distance from `(r, 0)` to the ring point at `theta_f` (law of cosines).
pub fn exit_distance(params: &ScenarioParams, theta_f: f64) -> f64 {
    let radius = params.radius();
    let r = params.start_offset();
    (radius * radius + r * r - 2.0 * radius * r * theta_f.cos()).sqrt()
}

/// Heading that sends the evader from `(r, 0)` through the ring point at
/// `theta_f`. The arccos branch ambiguity of the law-of-cosines form is
/// avoided by taking the direction angle of `F - E` directly.
pub fn heading_for_exit(params: &ScenarioParams, theta_f: f64) -> f64 {
    let f = params.ring_point(theta_f);
    (f - params.evader_start()).angle()
}

/// Forward ray-circle intersection: exit point and distance for a heading.
///
/// `EF` is the positive root of `t^2 + 2 r t cos(psi) + r^2 - R^2 = 0`, which
/// exists for every interior start.
pub fn exit_for_heading(params: &ScenarioParams, psi_e: f64) -> RayExit {
    let radius = params.radius();
    let r = params.start_offset();
    let (s, c) = psi_e.sin_cos();
    let distance = -r * c + (radius * radius - r * r * s * s).sqrt();
    let f = params.evader_start() + Vec2::from_angle(psi_e) * distance;
    RayExit {
        theta_f: f.angle(),
        distance,
    }
}

/// Ring-chord offset `phi = 2 asin(rho / 2R)`: the angular separation of two
/// ring points whose chord equals the capture radius.
pub fn chord_offset(params: &ScenarioParams) -> f64 {
    2.0 * (params.capture_radius() / (2.0 * params.radius())).asin()
}

/// Angular separation of two ring points whose chord is `c`.
fn chord_to_arc(params: &ScenarioParams, chord: f64) -> f64 {
    2.0 * (chord / (2.0 * params.radius())).asin()
}

/// Assemble a solution from the exit anchor, travel-side offset, and the
/// evader distance at capture.
fn build_solution(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
    kind: CaptureKind,
    exit: RayExit,
    offset: f64,
    evader_travel: f64,
) -> CaptureSolution {
    let a = direction.sign();
    let theta_pf = exit.theta_f - a * offset;
    let theta_p0 = theta_pf - a * params.speed_ratio() * evader_travel / params.radius();
    CaptureSolution {
        kind,
        direction,
        theta_p0,
        theta_pf,
        theta_f: exit.theta_f,
        offset,
        t_c: evader_travel,
        evader_travel,
        capture_point: params.evader_start() + Vec2::from_angle(psi_e) * evader_travel,
    }
}

/// Point-capture start: pursuer and evader collocated at the exit point.
///
/// This is the `rho -> 0` limit of [`exc_start`] and is valid for any `rho`
/// as that limit.
pub fn point_capture_start(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> CaptureSolution {
    let exit = exit_for_heading(params, psi_e);
    build_solution(
        params,
        psi_e,
        direction,
        CaptureKind::Point,
        exit,
        0.0,
        exit.distance,
    )
}

/// Exit-point capture: the leading edge of the capture disk grazes the exit
/// point exactly when the evader reaches it. The pursuer sits `phi` short of
/// the exit along its travel direction at the capture instant.
pub fn exc_start(params: &ScenarioParams, psi_e: f64, direction: Direction) -> CaptureSolution {
    let exit = exit_for_heading(params, psi_e);
    build_solution(
        params,
        psi_e,
        direction,
        CaptureKind::ExitPoint,
        exit,
        chord_offset(params),
        exit.distance,
    )
}

/// Tangency offset of the pursuer from the evader's path: the capture disk
/// touches the path on the side the pursuer approaches from, i.e. at
/// `psi_e - a pi/2` from the touch point toward the ring.
fn approach_normal(psi_e: f64, direction: Direction) -> Vec2 {
    let (s, c) = psi_e.sin_cos();
    Vec2::new(s, -c) * direction.sign()
}

/// Evader distance to the tangent point for a tangent capture.
///
/// Positive root of the vector-loop quadratic
/// `EI^2 + 2 r cos(psi) EI + (r^2 + rho^2 + 2 a r rho sin(psi) - R^2) = 0`,
/// i.e. `EI = -r cos(psi) + sqrt(R^2 - (r sin(psi) + a rho)^2)`.
pub fn tac_tangent_distance(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> Result<f64, SolveError> {
    let radius = params.radius();
    let r = params.start_offset();
    let rho = params.capture_radius();
    let a = direction.sign();
    let (s, c) = psi_e.sin_cos();
    let lateral = r * s + a * rho;
    let disc = radius * radius - lateral * lateral;
    if disc < 0.0 {
        return Err(SolveError::NoTangency);
    }
    let ei = -r * c + disc.sqrt();
    let ef = exit_for_heading(params, psi_e).distance;
    if ei < 0.0 || ei > ef {
        return Err(SolveError::NoTangency);
    }
    Ok(ei)
}

/// Tangent-capture start: the pursuer's final ring point is reconstructed
/// from the tangent point plus the approach-side normal, and its angular
/// offset from the exit equals `2 asin(c / 2R)` with chord
/// `c = sqrt(IF^2 + rho^2)`.
///
/// Headings whose reconstructed final point falls on the far side of the exit
/// (the chord offset lands past `theta_F` along travel) are rejected as
/// `NoTangency`: the configuration is not a capture of the tangent type.
pub fn tac_start(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> Result<CaptureSolution, SolveError> {
    let ei = tac_tangent_distance(params, psi_e, direction)?;
    let exit = exit_for_heading(params, psi_e);
    let chord = ((exit.distance - ei) * (exit.distance - ei)
        + params.capture_radius() * params.capture_radius())
    .sqrt();
    let offset = chord_to_arc(params, chord);
    let solution = build_solution(
        params,
        psi_e,
        direction,
        CaptureKind::Tangent,
        exit,
        offset,
        ei,
    );
    // Certify the side: the chord-offset angle must agree with the
    // reconstructed final point I + rho * n.
    let reconstructed =
        solution.capture_point + approach_normal(psi_e, direction) * params.capture_radius();
    let gap = crate::scenario::normalize_angle(reconstructed.angle() - solution.theta_pf);
    let gap = gap.min(std::f64::consts::TAU - gap);
    if gap > 1e-6 {
        return Err(SolveError::NoTangency);
    }
    Ok(solution)
}

/// Reconstruct the TAC pursuer final point `P_f = I + rho * n` for the
/// geometric certificate (`|P_f| = R`, `dist(P_f, ray) = rho`).
pub fn tac_final_point(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> Result<Vec2, SolveError> {
    let ei = tac_tangent_distance(params, psi_e, direction)?;
    let touch = params.evader_start() + Vec2::from_angle(psi_e) * ei;
    Ok(touch + approach_normal(psi_e, direction) * params.capture_radius())
}
