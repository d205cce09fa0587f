//! Touch-and-go capture: grazing contact with `R_PE = rho` and
//! `Rdot_PE = 0` at the same instant.
//!
//! The capture point (the pursuer's final ring angle) is the unknown. For a
//! candidate final angle the touch time follows in closed form from the
//! evader's distance-to-point quadratic, the start is backtracked along the
//! ring, and the residual is the range rate at the touch with the moving
//! pursuer. Bisection runs on the residual sign between the TAC and EXC
//! final angles.
//!
//! The touch time is the *later* root of the quadratic (the instant the
//! evader would leave the capture disk anchored at the candidate point).
//! The earlier root breaks the bracket: at the EXC end it picks the entry
//! crossing, whose residual has the same sign as the TAC end.

use crate::geometry::{chord_offset, exit_for_heading, tac_start, SolveError};
use crate::scenario::{CaptureKind, CaptureSolution, Direction, ScenarioParams, Vec2};

/// Acceptance threshold on `|Rdot_PE|` at the returned touch (length/time,
/// with `v_E = 1`).
pub const RESIDUAL_TOL: f64 = 1e-6;

struct Candidate {
    theta_pf: f64,
    t_star: f64,
    residual: f64,
}

/// Evaluate one candidate final angle at offset `beta` behind the exit.
fn candidate(
    params: &ScenarioParams,
    theta_f: f64,
    psi_e: f64,
    direction: Direction,
    beta: f64,
) -> Option<Candidate> {
    let a = direction.sign();
    let rho = params.capture_radius();
    let theta_pf = theta_f - a * beta;
    let q = params.ring_point(theta_pf);
    let u = Vec2::from_angle(psi_e);
    let w = q - params.evader_start();
    let b = u.dot(w);
    let mut disc = b * b - (w.norm_squared() - rho * rho);
    if disc < 0.0 {
        // The discriminant vanishes at the tangent end of the bracket; only
        // rounding can push it below zero there.
        if disc < -1e-12 * params.radius() * params.radius() {
            return None;
        }
        disc = 0.0;
    }
    let t_star = b + disc.sqrt();
    if t_star < 0.0 {
        return None;
    }
    let e = params.evader_start() + u * t_star;
    let p_dot = Vec2::new(-theta_pf.sin(), theta_pf.cos()) * (a * params.speed_ratio());
    let residual = (e - q).dot(u - p_dot) / rho;
    Some(Candidate {
        theta_pf,
        t_star,
        residual,
    })
}

/// Solve the touch-and-go condition for one heading.
///
/// Fails with `NoBracket` when the residual does not change sign between the
/// TAC and EXC final angles (no TGC exists there; the caller falls back to
/// EXC/TAC), and with `NoConvergence` if the iteration budget runs out.
pub fn solve_tgc(
    params: &ScenarioParams,
    psi_e: f64,
    direction: Direction,
) -> Result<CaptureSolution, SolveError> {
    if params.capture_radius() == 0.0 {
        // Tangency and exit bounds coincide; no interval to search.
        return Err(SolveError::NoBracket);
    }
    let tac = tac_start(params, psi_e, direction).map_err(|_| SolveError::NoBracket)?;
    let exit = exit_for_heading(params, psi_e);
    let tol = params.tolerances();

    // Offsets behind the exit point along the travel direction.
    let mut lo = chord_offset(params);
    let mut hi = tac.offset;
    if hi - lo <= tol.angle_tol {
        return Err(SolveError::NoBracket);
    }

    let c_lo =
        candidate(params, exit.theta_f, psi_e, direction, lo).ok_or(SolveError::NoBracket)?;
    let c_hi =
        candidate(params, exit.theta_f, psi_e, direction, hi).ok_or(SolveError::NoBracket)?;
    if c_lo.residual == 0.0 || c_lo.residual.signum() == c_hi.residual.signum() {
        return Err(SolveError::NoBracket);
    }

    let lo_sign = c_lo.residual.signum();
    let mut best = c_lo;
    let mut iters = 0;
    while hi - lo > tol.angle_tol {
        if iters >= tol.max_bisection_iters {
            return Err(SolveError::NoConvergence);
        }
        iters += 1;
        let mid = 0.5 * (lo + hi);
        match candidate(params, exit.theta_f, psi_e, direction, mid) {
            Some(c) => {
                if c.residual.signum() == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
                best = c;
            }
            // Only the tangent end can degenerate; move toward the exit end.
            None => hi = mid,
        }
    }

    if best.residual.abs() > RESIDUAL_TOL {
        return Err(SolveError::NoConvergence);
    }

    let a = direction.sign();
    let theta_p0 = best.theta_pf - a * params.speed_ratio() * best.t_star / params.radius();
    Ok(CaptureSolution {
        kind: CaptureKind::TouchAndGo,
        direction,
        theta_p0,
        theta_pf: best.theta_pf,
        theta_f: exit.theta_f,
        offset: a * (exit.theta_f - best.theta_pf),
        t_c: best.t_star,
        evader_travel: best.t_star,
        capture_point: params.evader_start() + Vec2::from_angle(psi_e) * best.t_star,
    })
}
