//! Parametric study: worst-case capture locations and regimes as one
//! parameter varies across a heading grid.

use crate::scenario::{CaptureKind, Direction, ParamError, ScenarioParams, Vec2};
use crate::worst_case::worst_case_start;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;

/// Which scenario parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Gamma,
    Rho,
    StartOffset,
}

impl SweepAxis {
    pub fn code(self) -> &'static str {
        match self {
            SweepAxis::Gamma => "gamma",
            SweepAxis::Rho => "rho",
            SweepAxis::StartOffset => "r",
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Solved cell of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepCell {
    /// Evader position at the capture instant.
    pub capture_point: Vec2,
    pub radius_from_center: f64,
    pub theta_pf: f64,
    pub regime: CaptureKind,
}

/// One (value, heading) cell; failures are recorded, never propagated.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub axis: SweepAxis,
    pub value: f64,
    pub heading: f64,
    pub outcome: Result<SweepCell, String>,
}

/// Default heading grid: 73 points uniform over `[pi, 2pi]`, the bottom-half
/// convention used by the capture-location plots.
pub fn default_heading_grid() -> Vec<f64> {
    (0..73).map(|k| PI + k as f64 * PI / 72.0).collect()
}

/// Default swept values, bracketing the rho = gamma = 0.5, r = 0.4 anchor.
pub const DEFAULT_GAMMA_VALUES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];
pub const DEFAULT_RHO_VALUES: [f64; 5] = [0.05, 0.2, 0.35, 0.5, 0.65];
pub const DEFAULT_START_OFFSET_VALUES: [f64; 5] = [0.0, 0.1, 0.2, 0.3, 0.4];

fn params_with(
    base: &ScenarioParams,
    axis: SweepAxis,
    value: f64,
) -> Result<ScenarioParams, ParamError> {
    let (mut rho, mut gamma, mut r) = (
        base.capture_radius(),
        base.speed_ratio(),
        base.start_offset(),
    );
    match axis {
        SweepAxis::Gamma => gamma = value,
        SweepAxis::Rho => rho = value,
        SweepAxis::StartOffset => r = value,
    }
    ScenarioParams::with_tolerances(base.radius(), rho, gamma, r, *base.tolerances())
}

/// Worst-case capture over the `values x headings` grid, value-major order.
pub fn sweep(
    base: &ScenarioParams,
    axis: SweepAxis,
    values: &[f64],
    headings: &[f64],
    direction: Direction,
) -> Vec<SweepRecord> {
    let cells: Vec<(f64, f64)> = values
        .iter()
        .flat_map(|&v| headings.iter().map(move |&h| (v, h)))
        .collect();
    cells
        .par_iter()
        .map(|&(value, heading)| {
            let outcome = params_with(base, axis, value)
                .map_err(|e| e.to_string())
                .map(|p| {
                    let w = worst_case_start(&p, heading, direction);
                    SweepCell {
                        capture_point: w.solution.capture_point,
                        radius_from_center: w.solution.capture_point.norm(),
                        theta_pf: w.solution.theta_pf,
                        regime: w.solution.kind,
                    }
                });
            SweepRecord {
                axis,
                value,
                heading,
                outcome,
            }
        })
        .collect()
}

/// CSV export with header `param,value,heading_rad,cap_x,cap_y,cap_r,theta_pf,regime`.
pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from("param,value,heading_rad,cap_x,cap_y,cap_r,theta_pf,regime\n");
    for rec in records {
        match &rec.outcome {
            Ok(cell) => out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                rec.axis,
                crate::text::sig12(rec.value),
                crate::text::sig12(rec.heading),
                crate::text::sig12(cell.capture_point.x),
                crate::text::sig12(cell.capture_point.y),
                crate::text::sig12(cell.radius_from_center),
                crate::text::sig12(cell.theta_pf),
                cell.regime
            )),
            Err(msg) => out.push_str(&format!(
                "{},{},{},nan,nan,nan,nan,error: {}\n",
                rec.axis,
                crate::text::sig12(rec.value),
                crate::text::sig12(rec.heading),
                msg.replace(',', ";")
            )),
        }
    }
    out
}

/// Mean capture radius of the solved cells for one swept value.
pub fn mean_capture_radius(records: &[SweepRecord], value: f64) -> f64 {
    let rs: Vec<f64> = records
        .iter()
        .filter(|r| r.value == value)
        .filter_map(|r| r.outcome.as_ref().ok())
        .map(|c| c.radius_from_center)
        .collect();
    rs.iter().sum::<f64>() / rs.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> ScenarioParams {
        ScenarioParams::new(1.0, 0.5, 0.5, 0.4).unwrap()
    }

    #[test]
    fn capture_radius_grows_with_speed_ratio() {
        let headings = default_heading_grid();
        let recs = sweep(
            &base(),
            SweepAxis::Gamma,
            &[0.3, 0.5, 0.7],
            &headings,
            Direction::Clockwise,
        );
        let means: Vec<f64> = [0.3, 0.5, 0.7]
            .iter()
            .map(|&v| mean_capture_radius(&recs, v))
            .collect();
        assert!(means[0] <= means[1] && means[1] <= means[2], "{means:?}");
    }

    #[test]
    fn small_capture_radius_gives_ring_captures() {
        let headings = default_heading_grid();
        let recs = sweep(
            &base(),
            SweepAxis::Rho,
            &[0.02],
            &headings,
            Direction::Clockwise,
        );
        for rec in &recs {
            let cell = rec.outcome.as_ref().unwrap();
            assert_eq!(cell.regime, CaptureKind::ExitPoint);
            assert!((cell.radius_from_center - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn central_start_gives_all_exit_captures() {
        let headings = default_heading_grid();
        let recs = sweep(
            &base(),
            SweepAxis::StartOffset,
            &[0.0],
            &headings,
            Direction::Clockwise,
        );
        for rec in &recs {
            assert_eq!(rec.outcome.as_ref().unwrap().regime, CaptureKind::ExitPoint);
        }
    }

    #[test]
    fn invalid_values_become_row_errors() {
        let recs = sweep(
            &base(),
            SweepAxis::Gamma,
            &[0.5, 1.2],
            &[1.5 * PI],
            Direction::Clockwise,
        );
        assert!(recs[0].outcome.is_ok());
        let err = recs[1].outcome.as_ref().unwrap_err();
        assert!(err.contains("gamma"), "error must name the field: {err}");
        // The sweep still has one row per cell, in order.
        assert_eq!(recs.len(), 2);
        let csv = sweep_csv(&recs);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn records_are_deterministic() {
        let headings = default_heading_grid();
        let a = sweep(
            &base(),
            SweepAxis::Gamma,
            &DEFAULT_GAMMA_VALUES,
            &headings,
            Direction::Clockwise,
        );
        let b = sweep(
            &base(),
            SweepAxis::Gamma,
            &DEFAULT_GAMMA_VALUES,
            &headings,
            Direction::Clockwise,
        );
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            match (&x.outcome, &y.outcome) {
                (Ok(cx), Ok(cy)) => {
                    assert_eq!(cx.capture_point.x.to_bits(), cy.capture_point.x.to_bits());
                    assert_eq!(cx.capture_point.y.to_bits(), cy.capture_point.y.to_bits());
                    assert_eq!(cx.theta_pf.to_bits(), cy.theta_pf.to_bits());
                }
                (Err(ex), Err(ey)) => assert_eq!(ex, ey),
                _ => panic!("outcome mismatch between identical sweeps"),
            }
        }
    }
}
