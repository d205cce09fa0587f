//! Kinematic trajectory simulator and the relative-polar dynamics.
//!
//! This is the ground-truth oracle the analytic solvers are verified against.
//! Both agents have closed-form motion (the evader is a straight line, the
//! pursuer's ring angle is linear in time), so "integration" is exact state
//! evaluation plus event detection; the relative-polar state is additionally
//! propagated with RK4 purely as a numerical cross-check of the rate
//! equations.
//!
//! Event refinement matters here: a grazing contact never crosses the
//! capture level, so the scan looks for interior range minima (range-rate
//! sign changes) as well as level crossings, and refines both by bisection.

use crate::scenario::{Direction, EvaderIntent, PursuerSpec, ScenarioParams, Vec2};
use std::f64::consts::FRAC_PI_2;
use std::fmt;

/// Planar pose of one agent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgentState {
    pub x: f64,
    pub y: f64,
    pub heading: f64,
}

impl AgentState {
    pub fn position(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }
}

/// Relative-polar state: range, pursuer ring angle, and the two velocity
/// angles measured from the line of sight. `lambda` is carried as a derived
/// diagnostic (`lambda = psi_P - sigma_P`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeState {
    pub r_pe: f64,
    pub theta_p: f64,
    pub phi_e: f64,
    pub sigma_p: f64,
    pub lambda: f64,
}

/// Rates of the four tracked polar components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarRates {
    pub r_pe: f64,
    pub theta_p: f64,
    pub phi_e: f64,
    pub sigma_p: f64,
}

/// Simulator failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimError {
    /// Line-of-sight angle undefined: the agents are (numerically) collocated.
    SingularRange,
    /// The horizon ended before any outcome was reached.
    HorizonExceeded,
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::SingularRange => write!(f, "relative range too small: LOS angle undefined"),
            SimError::HorizonExceeded => write!(f, "horizon exceeded without an outcome"),
        }
    }
}

impl std::error::Error for SimError {}

/// How a simulated run ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    CapturedAt(f64),
    EscapedAt(f64),
}

impl Outcome {
    pub fn is_capture(&self) -> bool {
        matches!(self, Outcome::CapturedAt(_))
    }

    pub fn time(&self) -> f64 {
        match *self {
            Outcome::CapturedAt(t) | Outcome::EscapedAt(t) => t,
        }
    }
}

/// One time sample of a simulated run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub evader: AgentState,
    pub pursuer: AgentState,
    pub r_pe: f64,
    pub r_pe_rate: f64,
}

/// A simulated run: time-ordered samples plus the refined outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    pub outcome: Outcome,
}

impl Trajectory {
    /// CSV export with header `t,x_e,y_e,x_p,y_p,r_pe,r_pe_rate`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x_e,y_e,x_p,y_p,r_pe,r_pe_rate\n");
        for s in &self.samples {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                crate::text::sig12(s.t),
                crate::text::sig12(s.evader.x),
                crate::text::sig12(s.evader.y),
                crate::text::sig12(s.pursuer.x),
                crate::text::sig12(s.pursuer.y),
                crate::text::sig12(s.r_pe),
                crate::text::sig12(s.r_pe_rate),
            ));
        }
        out
    }
}

/// Evader pose at time `t` (straight-line motion at unit speed).
pub fn evader_state(params: &ScenarioParams, evader: &EvaderIntent, t: f64) -> AgentState {
    let p = params.evader_start() + evader.velocity() * t;
    AgentState {
        x: p.x,
        y: p.y,
        heading: evader.psi_e,
    }
}

/// Pursuer pose at time `t`: the ring angle is linear in time, so the ring
/// constraint holds exactly.
pub fn pursuer_state(params: &ScenarioParams, pursuer: &PursuerSpec, t: f64) -> AgentState {
    let theta =
        pursuer.theta_p0 + pursuer.direction.sign() * params.speed_ratio() * t / params.radius();
    let p = params.ring_point(theta);
    AgentState {
        x: p.x,
        y: p.y,
        heading: theta + pursuer.direction.sign() * FRAC_PI_2,
    }
}

/// Relative-polar state reconstructed from Cartesian poses.
pub fn relative_state(evader: &AgentState, pursuer: &AgentState) -> RelativeState {
    let rel = evader.position() - pursuer.position();
    let lambda = rel.y.atan2(rel.x);
    RelativeState {
        r_pe: rel.norm(),
        theta_p: pursuer.position().angle(),
        phi_e: evader.heading - lambda,
        sigma_p: pursuer.heading - lambda,
        lambda,
    }
}

/// Range rate `v_E cos(phi_E) - v_P cos(sigma_P)`.
pub fn relative_range_rate(state: &RelativeState, params: &ScenarioParams) -> f64 {
    state.phi_e.cos() - params.speed_ratio() * state.sigma_p.cos()
}

/// Rates of the relative-polar state.
///
/// `lambda_dot = (v_E sin(phi_E) - v_P sin(sigma_P)) / R_PE`, then
/// `phi_E_dot = -lambda_dot`, `sigma_P_dot = theta_P_dot - lambda_dot`,
/// `theta_P_dot = a v_P / R`.
pub fn polar_derivatives(
    state: &RelativeState,
    params: &ScenarioParams,
    direction: Direction,
) -> Result<PolarRates, SimError> {
    if state.r_pe <= params.tolerances().range_tol {
        return Err(SimError::SingularRange);
    }
    let gamma = params.speed_ratio();
    let lambda_dot = (state.phi_e.sin() - gamma * state.sigma_p.sin()) / state.r_pe;
    let theta_p_dot = direction.sign() * gamma / params.radius();
    Ok(PolarRates {
        r_pe: relative_range_rate(state, params),
        theta_p: theta_p_dot,
        phi_e: -lambda_dot,
        sigma_p: theta_p_dot - lambda_dot,
    })
}

/// RK4 propagation of the relative-polar state from the exact initial
/// condition, in `steps` equal steps up to `t_end`. Used as a numerical
/// cross-check of the rate equations; the simulator itself is exact.
pub fn propagate_polar_rk4(
    params: &ScenarioParams,
    evader: &EvaderIntent,
    pursuer: &PursuerSpec,
    t_end: f64,
    steps: usize,
) -> Result<RelativeState, SimError> {
    assert!(steps > 0 && t_end >= 0.0);
    let e0 = evader_state(params, evader, 0.0);
    let p0 = pursuer_state(params, pursuer, 0.0);
    let init = relative_state(&e0, &p0);
    let mut y = [init.r_pe, init.theta_p, init.phi_e, init.sigma_p];
    let h = t_end / steps as f64;
    let dir = pursuer.direction;

    let deriv = |y: &[f64; 4]| -> Result<[f64; 4], SimError> {
        let state = RelativeState {
            r_pe: y[0],
            theta_p: y[1],
            phi_e: y[2],
            sigma_p: y[3],
            lambda: 0.0,
        };
        let rates = polar_derivatives(&state, params, dir)?;
        Ok([rates.r_pe, rates.theta_p, rates.phi_e, rates.sigma_p])
    };

    for _ in 0..steps {
        let k1 = deriv(&y)?;
        let y2 = std::array::from_fn(|i| y[i] + 0.5 * h * k1[i]);
        let k2 = deriv(&y2)?;
        let y3 = std::array::from_fn(|i| y[i] + 0.5 * h * k2[i]);
        let k3 = deriv(&y3)?;
        let y4 = std::array::from_fn(|i| y[i] + h * k3[i]);
        let k4 = deriv(&y4)?;
        for i in 0..4 {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    let psi_p = y[1] + dir.sign() * FRAC_PI_2;
    Ok(RelativeState {
        r_pe: y[0],
        theta_p: y[1],
        phi_e: y[2],
        sigma_p: y[3],
        lambda: psi_p - y[3],
    })
}

/// Closed-form kinematics of one run, shared by the event scan and the
/// reachability predicates.
struct Run<'a> {
    params: &'a ScenarioParams,
    e0: Vec2,
    u: Vec2,
    theta_p0: f64,
    omega: f64,
}

impl<'a> Run<'a> {
    fn new(params: &'a ScenarioParams, evader: &EvaderIntent, pursuer: &PursuerSpec) -> Self {
        Self {
            params,
            e0: params.evader_start(),
            u: evader.velocity(),
            theta_p0: pursuer.theta_p0,
            omega: pursuer.direction.sign() * params.speed_ratio() / params.radius(),
        }
    }

    fn evader(&self, t: f64) -> Vec2 {
        self.e0 + self.u * t
    }

    fn pursuer_angle(&self, t: f64) -> f64 {
        self.theta_p0 + self.omega * t
    }

    fn pursuer(&self, t: f64) -> Vec2 {
        self.params.ring_point(self.pursuer_angle(t))
    }

    fn range(&self, t: f64) -> f64 {
        self.evader(t).distance(self.pursuer(t))
    }

    fn range_rate(&self, t: f64) -> f64 {
        let rel = self.evader(t) - self.pursuer(t);
        let theta = self.pursuer_angle(t);
        let p_dot = Vec2::new(-theta.sin(), theta.cos()) * (self.omega * self.params.radius());
        let d = rel.norm();
        if d == 0.0 {
            0.0
        } else {
            rel.dot(self.u - p_dot) / d
        }
    }
}

/// Bisect `f` for a sign change from positive to nonpositive on `[lo, hi]`,
/// shrinking the window to `width_tol`.
fn bisect_crossing(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    width_tol: f64,
    max_iters: u32,
) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..max_iters {
        if hi - lo <= width_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.is_sign_positive() == f_lo.is_sign_positive() && f_mid != 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Simulate one run until capture or escape.
///
/// Capture is the closed condition `R_PE <= rho` checked up to and including
/// the exit instant; a touch exactly at exit counts as capture. The touch
/// instant is refined by bisection on `R_PE - rho`; grazing contacts that
/// never cross the level are caught by locating interior range minima via
/// range-rate sign changes.
pub fn simulate(
    params: &ScenarioParams,
    evader: &EvaderIntent,
    pursuer: &PursuerSpec,
    horizon: f64,
) -> Result<Trajectory, SimError> {
    let run = Run::new(params, evader, pursuer);
    let rho = params.capture_radius();
    let range_tol = params.tolerances().range_tol;
    let max_iters = params.tolerances().max_bisection_iters;
    let t_exit = evader.exit(params).distance;
    let t_end = t_exit.min(horizon);
    let h = params.time_step();
    // Time window below which a range bisection resolves the range within
    // range_tol: both speeds are bounded by 1 and gamma.
    let t_tol = range_tol / (1.0 + params.speed_ratio());

    let mut samples = Vec::new();
    let push_sample = |t: f64, samples: &mut Vec<TrajectorySample>| {
        let e = evader_state(params, evader, t);
        let p = pursuer_state(params, pursuer, t);
        samples.push(TrajectorySample {
            t,
            evader: e,
            pursuer: p,
            r_pe: run.range(t),
            r_pe_rate: run.range_rate(t),
        });
    };

    push_sample(0.0, &mut samples);
    if run.range(0.0) <= rho + range_tol {
        return Ok(Trajectory {
            samples,
            outcome: Outcome::CapturedAt(0.0),
        });
    }

    let steps = (t_end / h).ceil().max(1.0) as usize;
    let mut t_prev = 0.0;
    for k in 1..=steps {
        let t = if k == steps { t_end } else { k as f64 * h };
        let g = |t: f64| run.range(t) - rho;

        // Interior minimum: the range rate swings negative to positive.
        let mut touch = None;
        if run.range_rate(t_prev) < 0.0 && run.range_rate(t) > 0.0 {
            let t_min = bisect_crossing(
                |t| -run.range_rate(t),
                t_prev,
                t,
                1e-15_f64.max(h * 1e-12),
                max_iters,
            );
            if g(t_min) <= range_tol {
                touch = Some(if g(t_min) < -range_tol {
                    bisect_crossing(g, t_prev, t_min, t_tol, max_iters)
                } else {
                    t_min
                });
            }
        }
        // Level crossing by the end of the step.
        if touch.is_none() && g(t) <= 0.0 {
            touch = Some(bisect_crossing(g, t_prev, t, t_tol, max_iters));
        }

        if let Some(t_touch) = touch {
            if t_touch > samples.last().map_or(0.0, |s| s.t) {
                push_sample(t_touch, &mut samples);
            }
            return Ok(Trajectory {
                samples,
                outcome: Outcome::CapturedAt(t_touch),
            });
        }

        push_sample(t, &mut samples);
        t_prev = t;
    }

    if horizon < t_exit {
        return Err(SimError::HorizonExceeded);
    }
    // Closed condition at the exit instant (the final step landed on t_exit).
    if run.range(t_exit) <= rho + range_tol {
        return Ok(Trajectory {
            samples,
            outcome: Outcome::CapturedAt(t_exit),
        });
    }
    Ok(Trajectory {
        samples,
        outcome: Outcome::EscapedAt(t_exit),
    })
}

/// Capture/escape verdict with an automatic horizon of `1.1 EF`.
pub fn capture_oracle(
    params: &ScenarioParams,
    evader: &EvaderIntent,
    pursuer: &PursuerSpec,
) -> Outcome {
    let horizon = 1.1 * evader.exit(params).distance;
    simulate(params, evader, pursuer, horizon)
        .expect("horizon covers the exit instant, so an outcome is always reached")
        .outcome
}
