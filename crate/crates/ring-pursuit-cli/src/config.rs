//! TOML run configuration: scenario parameters, tolerances, an optional
//! evader heading, and pursuer placements. Command-line flags override the
//! file; unknown and duplicate keys are rejected by the parser.

use anyhow::{anyhow, bail, Context, Result};
use ring_pursuit::{Direction, PursuerSpec, ScenarioParams, ToleranceConfig};
use serde::Deserialize;
use std::f64::consts::PI;

/// Fully validated inputs for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: ScenarioParams,
    pub heading: Option<f64>,
    pub pursuers: Vec<PursuerSpec>,
}

/// Scenario values a command line can override.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub disk_radius: Option<f64>,
    pub rho: Option<f64>,
    pub gamma: Option<f64>,
    pub r: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scenario: Option<RawScenario>,
    tolerances: Option<RawTolerances>,
    evader: Option<RawEvader>,
    #[serde(default)]
    pursuer: Vec<RawPursuer>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(rename = "R")]
    radius: Option<f64>,
    rho: Option<f64>,
    gamma: Option<f64>,
    r: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    angle_tol: Option<f64>,
    range_tol: Option<f64>,
    time_step: Option<f64>,
    max_bisection_iters: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEvader {
    heading: AngleValue,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPursuer {
    theta: AngleValue,
    #[serde(default = "default_dir")]
    dir: String,
}

fn default_dir() -> String {
    "cw".to_string()
}

/// An angle given either as plain radians or as a string with a `pi` suffix
/// multiplier (`"1.6pi"`).
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AngleValue {
    Radians(f64),
    Text(String),
}

impl AngleValue {
    fn resolve(&self) -> Result<f64> {
        match self {
            AngleValue::Radians(x) => Ok(*x),
            AngleValue::Text(s) => parse_angle(s),
        }
    }
}

/// Parse an angle in radians with an optional `pi` literal multiplier.
pub fn parse_angle(text: &str) -> Result<f64> {
    let t = text.trim();
    let (body, factor) = match t.strip_suffix("pi") {
        Some(rest) => (rest.trim(), PI),
        None => (t, 1.0),
    };
    let scale: f64 = if body.is_empty() || body == "-" {
        // Bare "pi" / "-pi".
        if body == "-" {
            -1.0
        } else {
            1.0
        }
    } else {
        body.parse()
            .map_err(|_| anyhow!("invalid angle '{text}' (use radians or e.g. '1.6pi')"))?
    };
    Ok(scale * factor)
}

/// Parse a pursuer placement `THETA:DIR` with DIR in cw|ccw|fav (e.g.
/// `1.5708:cw`, `0.5pi:fav`).
pub fn parse_pursuer(text: &str) -> Result<PursuerSpec> {
    let (theta_text, dir_text) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("invalid pursuer '{text}' (expected THETA:DIR)"))?;
    let theta = parse_angle(theta_text)?;
    pursuer_from_parts(theta, dir_text)
}

fn pursuer_from_parts(theta: f64, dir: &str) -> Result<PursuerSpec> {
    match dir.trim().to_ascii_lowercase().as_str() {
        "cw" => Ok(PursuerSpec::fixed(theta, Direction::Clockwise)),
        "ccw" => Ok(PursuerSpec::fixed(theta, Direction::Counterclockwise)),
        "fav" | "favorable" => Ok(PursuerSpec::favorable(theta)),
        other => bail!("invalid direction '{other}' (expected cw, ccw, or fav)"),
    }
}

pub fn parse_direction(text: &str) -> Result<Direction> {
    match text.trim().to_ascii_lowercase().as_str() {
        "cw" => Ok(Direction::Clockwise),
        "ccw" => Ok(Direction::Counterclockwise),
        other => bail!("invalid direction '{other}' (expected cw or ccw)"),
    }
}

/// Parse and validate a config document, applying command-line overrides on
/// top and filling unset values with the standard scenario
/// (R=1, rho=0.5, gamma=0.5, r=0.4).
pub fn parse_config(text: &str, overrides: &Overrides) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).context("config parse error")?;

    let scenario = raw.scenario.unwrap_or_default();
    let radius = overrides.disk_radius.or(scenario.radius).unwrap_or(1.0);
    let rho = overrides.rho.or(scenario.rho).unwrap_or(0.5);
    let gamma = overrides.gamma.or(scenario.gamma).unwrap_or(0.5);
    let r = overrides.r.or(scenario.r).unwrap_or(0.4);

    let mut tol = ToleranceConfig::default();
    if let Some(rt) = raw.tolerances {
        if let Some(v) = rt.angle_tol {
            tol.angle_tol = v;
        }
        if let Some(v) = rt.range_tol {
            tol.range_tol = v;
        }
        if let Some(v) = rt.time_step {
            tol.time_step = Some(v);
        }
        if let Some(v) = rt.max_bisection_iters {
            tol.max_bisection_iters = v;
        }
    }

    let params = ScenarioParams::with_tolerances(radius, rho, gamma, r, tol)
        .map_err(|e| anyhow!("domain violation: {e}"))?;

    let heading = match raw.evader {
        Some(e) => Some(e.heading.resolve()?),
        None => None,
    };
    let pursuers = raw
        .pursuer
        .iter()
        .map(|p| pursuer_from_parts(p.theta.resolve()?, &p.dir))
        .collect::<Result<Vec<_>>>()?;

    Ok(RunConfig {
        params,
        heading,
        pursuers,
    })
}
