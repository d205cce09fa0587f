//! Shared domain types and angle conventions.
//!
//! Everything downstream works in a canonical frame: the containment disk is
//! centered at the origin with radius `R`, the evader starts on the positive
//! x-axis at `(r, 0)`, speeds are normalized to `v_E = 1` and `v_P = gamma`,
//! and the pursuer rides the ring at polar angle `theta_P`. Clockwise motion
//! means strictly decreasing `theta_P`. Solvers keep angles unwrapped
//! (accumulating) so that travel comparisons stay monotone; normalize only at
//! presentation boundaries.

use std::f64::consts::TAU;
use std::fmt;

/// Minimal 2D vector used for positions and directions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at the given angle from the positive x-axis.
    pub fn from_angle(angle: f64) -> Self {
        Self::new(angle.cos(), angle.sin())
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Polar angle in `[0, 2pi)`.
    pub fn angle(self) -> f64 {
        normalize_angle(self.y.atan2(self.x))
    }

    /// Counter-clockwise perpendicular (rotation by +pi/2).
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

/// Wrap an angle into `[0, 2pi)`. Idempotent.
pub fn normalize_angle(x: f64) -> f64 {
    assert!(x.is_finite(), "normalize_angle: non-finite input {x}");
    let r = x.rem_euclid(TAU);
    // rem_euclid can return TAU when x is a tiny negative number.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Orbit direction of the pursuer along the ring.
///
/// The sign `a` enters every formula: clockwise motion decreases the polar
/// angle (`a = -1`), counter-clockwise increases it (`a = +1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

impl Direction {
    pub fn sign(self) -> f64 {
        match self {
            Direction::Clockwise => -1.0,
            Direction::Counterclockwise => 1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Clockwise => Direction::Counterclockwise,
            Direction::Counterclockwise => Direction::Clockwise,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Clockwise => write!(f, "cw"),
            Direction::Counterclockwise => write!(f, "ccw"),
        }
    }
}

/// Nonnegative angle traversed when moving from `from` to `to` in `direction`.
///
/// Result is in `[0, 2pi)`: moving that many radians along `direction`
/// starting at `from` reaches `to` modulo a full turn.
pub fn signed_arc(from: f64, to: f64, direction: Direction) -> f64 {
    normalize_angle(direction.sign() * (to - from))
}

/// Whether a pursuer picks its orbit direction up front or per evader heading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionPolicy {
    /// Moves only in `PursuerSpec::direction`.
    Fixed,
    /// Chooses CW or CCW per heading, whichever captures.
    Favorable,
}

/// A pursuer's starting ring angle and direction behavior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PursuerSpec {
    pub theta_p0: f64,
    pub direction: Direction,
    pub policy: DirectionPolicy,
}

impl PursuerSpec {
    pub fn fixed(theta_p0: f64, direction: Direction) -> Self {
        Self {
            theta_p0,
            direction,
            policy: DirectionPolicy::Fixed,
        }
    }

    pub fn favorable(theta_p0: f64) -> Self {
        Self {
            theta_p0,
            direction: Direction::Clockwise,
            policy: DirectionPolicy::Favorable,
        }
    }
}

/// The evader's constant heading in the canonical frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaderIntent {
    pub psi_e: f64,
}

impl EvaderIntent {
    pub fn new(psi_e: f64) -> Self {
        Self { psi_e }
    }

    pub fn velocity(&self) -> Vec2 {
        Vec2::from_angle(self.psi_e)
    }
}

/// Numeric tolerances shared by the solvers and the simulator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Angular bisection/localization tolerance, radians.
    pub angle_tol: f64,
    /// Length tolerance for range events and geometric certificates.
    pub range_tol: f64,
    /// Simulator base step; `None` derives it from the scenario (see
    /// [`ScenarioParams::time_step`]).
    pub time_step: Option<f64>,
    /// Iteration cap for every bisection loop.
    pub max_bisection_iters: u32,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            angle_tol: 1e-10,
            range_tol: 1e-9,
            time_step: None,
            max_bisection_iters: 200,
        }
    }
}

impl ToleranceConfig {
    fn validate(&self) -> Result<(), ParamError> {
        if !(self.angle_tol > 0.0 && self.angle_tol.is_finite()) {
            return Err(ParamError::new("angle_tol", "must be > 0", self.angle_tol));
        }
        if !(self.range_tol > 0.0 && self.range_tol.is_finite()) {
            return Err(ParamError::new("range_tol", "must be > 0", self.range_tol));
        }
        if let Some(h) = self.time_step {
            if !(h > 0.0 && h.is_finite()) {
                return Err(ParamError::new("time_step", "must be > 0", h));
            }
        }
        if self.max_bisection_iters == 0 {
            return Err(ParamError::new("max_bisection_iters", "must be >= 1", 0.0));
        }
        Ok(())
    }
}

/// A scenario parameter outside its admissible range.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamError {
    pub field: &'static str,
    pub constraint: &'static str,
    pub value: f64,
}

impl ParamError {
    fn new(field: &'static str, constraint: &'static str, value: f64) -> Self {
        Self {
            field,
            constraint,
            value,
        }
    }
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}: {}", self.field, self.value, self.constraint)
    }
}

impl std::error::Error for ParamError {}

/// Validated scenario: disk radius `R`, capture radius `rho`, speed ratio
/// `gamma = v_P / v_E < 1`, and the evader's start offset `r` along the
/// positive x-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    radius: f64,
    capture_radius: f64,
    speed_ratio: f64,
    start_offset: f64,
    tol: ToleranceConfig,
}

impl ScenarioParams {
    /// Build and validate a scenario with default tolerances.
    pub fn new(
        radius: f64,
        capture_radius: f64,
        speed_ratio: f64,
        start_offset: f64,
    ) -> Result<Self, ParamError> {
        Self::with_tolerances(
            radius,
            capture_radius,
            speed_ratio,
            start_offset,
            ToleranceConfig::default(),
        )
    }

    pub fn with_tolerances(
        radius: f64,
        capture_radius: f64,
        speed_ratio: f64,
        start_offset: f64,
        tol: ToleranceConfig,
    ) -> Result<Self, ParamError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(ParamError::new("R", "must satisfy R > 0", radius));
        }
        if !(capture_radius.is_finite() && (0.0..2.0 * radius).contains(&capture_radius)) {
            return Err(ParamError::new(
                "rho",
                "must satisfy 0 <= rho < 2R",
                capture_radius,
            ));
        }
        if !(speed_ratio.is_finite() && 0.0 < speed_ratio && speed_ratio < 1.0) {
            return Err(ParamError::new(
                "gamma",
                "must satisfy 0 < gamma < 1 (fast evader)",
                speed_ratio,
            ));
        }
        if !(start_offset.is_finite() && (0.0..radius).contains(&start_offset)) {
            return Err(ParamError::new(
                "r",
                "must satisfy 0 <= r < R",
                start_offset,
            ));
        }
        tol.validate()?;
        Ok(Self {
            radius,
            capture_radius,
            speed_ratio,
            start_offset,
            tol,
        })
    }

    /// Disk radius `R`.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Capture radius `rho`.
    pub fn capture_radius(&self) -> f64 {
        self.capture_radius
    }

    /// Speed ratio `gamma = v_P / v_E`.
    pub fn speed_ratio(&self) -> f64 {
        self.speed_ratio
    }

    /// Evader start distance `r` from the center.
    pub fn start_offset(&self) -> f64 {
        self.start_offset
    }

    pub fn tolerances(&self) -> &ToleranceConfig {
        &self.tol
    }

    /// Evader start position `(r, 0)` in the canonical frame.
    pub fn evader_start(&self) -> Vec2 {
        Vec2::new(self.start_offset, 0.0)
    }

    /// Ring point at polar angle `theta`.
    pub fn ring_point(&self, theta: f64) -> Vec2 {
        Vec2::from_angle(theta) * self.radius
    }

    /// Simulator step: the configured value, or
    /// `min(rho, R - r) / (10 (1 + gamma))` capped at `0.01 R`, which keeps a
    /// capture disk from being stepped over in one step. For `rho = 0` only
    /// the annulus width `R - r` applies.
    pub fn time_step(&self) -> f64 {
        if let Some(h) = self.tol.time_step {
            return h;
        }
        let gap = if self.capture_radius > 0.0 {
            self.capture_radius.min(self.radius - self.start_offset)
        } else {
            self.radius - self.start_offset
        };
        (gap / (10.0 * (1.0 + self.speed_ratio))).min(0.01 * self.radius)
    }
}

/// Rotation taking an arbitrary evader position into the canonical frame.
///
/// Callers with an evader at a general position rotate the whole scenario so
/// the evader sits at `(r, 0)`, solve there, and map angles back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalFrame {
    /// World angle of the evader position; subtracted to reach the canonical frame.
    pub rotation: f64,
    /// Evader distance from the center (the canonical `r`).
    pub start_offset: f64,
}

impl CanonicalFrame {
    pub fn for_evader(position: Vec2) -> Self {
        Self {
            rotation: position.angle(),
            start_offset: position.norm(),
        }
    }

    pub fn to_canonical(&self, world_angle: f64) -> f64 {
        world_angle - self.rotation
    }

    pub fn to_world(&self, canonical_angle: f64) -> f64 {
        canonical_angle + self.rotation
    }

    pub fn point_to_world(&self, p: Vec2) -> Vec2 {
        let (s, c) = self.rotation.sin_cos();
        Vec2::new(c * p.x - s * p.y, s * p.x + c * p.y)
    }
}

/// How a capture configuration closes the pursuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaptureKind {
    /// Collocation on the ring (`rho = 0` limit).
    Point,
    /// Capture exactly as the evader reaches the ring (EXC).
    ExitPoint,
    /// Capture disk tangent to the evader's path (TAC).
    Tangent,
    /// Grazing contact with zero range rate (TGC).
    TouchAndGo,
}

impl CaptureKind {
    /// Short code used in CSV output and figures.
    pub fn code(self) -> &'static str {
        match self {
            CaptureKind::Point => "POINT",
            CaptureKind::ExitPoint => "EXC",
            CaptureKind::Tangent => "TAC",
            CaptureKind::TouchAndGo => "TGC",
        }
    }
}

impl fmt::Display for CaptureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A fully determined capture configuration for one evader heading.
///
/// Angles are unwrapped relative to the exit angle `theta_f`, so
/// `direction.sign() * (theta_pf - theta_p0) >= 0` holds without modular
/// bookkeeping and travel comparisons are plain arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaptureSolution {
    pub kind: CaptureKind,
    pub direction: Direction,
    /// Required pursuer start angle.
    pub theta_p0: f64,
    /// Pursuer angle at the capture instant.
    pub theta_pf: f64,
    /// Exit angle of the evader's ray (diagnostic anchor for the angles above).
    pub theta_f: f64,
    /// Angular offset from `theta_pf` forward to `theta_f` along the travel
    /// direction (`phi` for EXC, the chord offset for TAC, zero for point capture).
    pub offset: f64,
    /// Capture time; equals `evader_travel` since `v_E = 1`.
    pub t_c: f64,
    /// Distance covered by the evader until capture (`EF`, `EI`, or the
    /// touch-point distance).
    pub evader_travel: f64,
    /// Evader position at the capture instant.
    pub capture_point: Vec2,
}

impl CaptureSolution {
    /// Angular range covered from the start back to the exit point:
    /// `offset + gamma * d / R`. This is the quantity the worst case maximizes.
    pub fn travel(&self) -> f64 {
        self.direction.sign() * (self.theta_f - self.theta_p0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn normalize_angle_examples() {
        assert_eq!(normalize_angle(0.0), 0.0);
        assert_abs_diff_eq!(normalize_angle(TAU), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(normalize_angle(-PI / 2.0), 3.0 * PI / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn signed_arc_examples() {
        assert_abs_diff_eq!(
            signed_arc(PI, PI / 2.0, Direction::Clockwise),
            PI / 2.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            signed_arc(PI / 2.0, PI, Direction::Clockwise),
            3.0 * PI / 2.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            signed_arc(0.0, PI / 2.0, Direction::Counterclockwise),
            PI / 2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn capture_radius_boundary_is_rejected() {
        // rho = 2R would put the chord offset at pi; out of domain.
        assert!(ScenarioParams::new(1.0, 2.0, 0.5, 0.4).is_err());
        assert!(ScenarioParams::new(1.0, 2.0 - 1e-9, 0.5, 0.4).is_ok());
    }

    #[test]
    fn default_time_step_formula() {
        let p = ScenarioParams::new(1.0, 0.5, 0.5, 0.4).unwrap();
        // min(0.5, 0.6) / (10 * 1.5) = 1/30, capped at 0.01.
        assert_abs_diff_eq!(p.time_step(), 0.01, epsilon = 1e-15);
        let p = ScenarioParams::new(1.0, 0.05, 0.5, 0.4).unwrap();
        assert_abs_diff_eq!(p.time_step(), 0.05 / 15.0, epsilon = 1e-15);
    }

    #[test]
    fn canonical_frame_round_trip() {
        let frame = CanonicalFrame::for_evader(Vec2::new(-0.3, 0.2));
        assert_abs_diff_eq!(frame.start_offset, (0.13f64).sqrt(), epsilon = 1e-15);
        let world = frame.to_world(frame.to_canonical(1.234));
        assert_abs_diff_eq!(world, 1.234, epsilon = 1e-12);
        let p = frame.point_to_world(Vec2::new(frame.start_offset, 0.0));
        assert_abs_diff_eq!(p.x, -0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(p.y, 0.2, epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(x in -100.0..100.0f64) {
            let once = normalize_angle(x);
            prop_assert!((0.0..TAU).contains(&once));
            prop_assert_eq!(normalize_angle(once), once);
        }

        #[test]
        fn arcs_complement_to_full_turn(a in -10.0..10.0f64, b in -10.0..10.0f64, cw in any::<bool>()) {
            let dir = if cw { Direction::Clockwise } else { Direction::Counterclockwise };
            let fwd = signed_arc(a, b, dir);
            let back = signed_arc(b, a, dir);
            let total = fwd + back;
            // Either both are zero (same angle mod 2pi) or they sum to 2pi.
            prop_assert!(total < 1e-9 || (total - TAU).abs() < 1e-9);
        }

        #[test]
        fn params_reject_out_of_range(
            radius in prop_oneof![Just(0.0), -10.0..0.0f64, 0.1..5.0f64],
            rho in -1.0..12.0f64,
            gamma in -1.0..2.0f64,
            r in -1.0..6.0f64,
        ) {
            let valid = radius > 0.0
                && (0.0..2.0 * radius).contains(&rho)
                && (gamma > 0.0 && gamma < 1.0)
                && (0.0..radius).contains(&r);
            prop_assert_eq!(ScenarioParams::new(radius, rho, gamma, r).is_ok(), valid);
        }

        #[test]
        fn params_reject_non_finite(which in 0usize..4) {
            let mut v = [1.0, 0.5, 0.5, 0.4];
            v[which] = f64::NAN;
            prop_assert!(ScenarioParams::new(v[0], v[1], v[2], v[3]).is_err());
        }
    }
}
