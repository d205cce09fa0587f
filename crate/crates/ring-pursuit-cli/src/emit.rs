//! CSV record emission and reparsing for the solver outputs.

use anyhow::{anyhow, Context, Result};
use ring_pursuit::text::sig12;
use ring_pursuit::CaptureSolution;

pub const SOLVE_HEADER: &str =
    "regime,heading_rad,theta_f_rad,theta_p0_rad,theta_pf_rad,t_c,evader_travel,cap_x,cap_y,travel_rad";

/// One-row record for a capture solution.
pub fn solve_record_csv(heading: f64, sol: &CaptureSolution) -> String {
    format!(
        "{SOLVE_HEADER}\n{},{},{},{},{},{},{},{},{},{}\n",
        sol.kind,
        sig12(heading),
        sig12(sol.theta_f),
        sig12(sol.theta_p0),
        sig12(sol.theta_pf),
        sig12(sol.t_c),
        sig12(sol.evader_travel),
        sig12(sol.capture_point.x),
        sig12(sol.capture_point.y),
        sig12(sol.travel()),
    )
}

/// A reparsed solve record: the regime code plus the numeric columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveRecord {
    pub regime: String,
    pub values: Vec<f64>,
}

pub fn parse_solve_csv(text: &str) -> Result<SolveRecord> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| anyhow!("empty record"))?;
    if header != SOLVE_HEADER {
        return Err(anyhow!("unexpected header: {header}"));
    }
    let row = lines.next().ok_or_else(|| anyhow!("missing record row"))?;
    let mut fields = row.split(',');
    let regime = fields
        .next()
        .ok_or_else(|| anyhow!("missing regime column"))?
        .to_string();
    let values = fields
        .map(|f| f.parse::<f64>().context("bad numeric field"))
        .collect::<Result<Vec<f64>>>()?;
    Ok(SolveRecord { regime, values })
}

/// Reparse an interval-set export (`lo_rad,hi_rad,label`).
pub fn parse_interval_csv(text: &str) -> Result<Vec<(f64, f64, String)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("lo_rad,hi_rad,label") => {}
        other => return Err(anyhow!("unexpected header: {other:?}")),
    }
    lines
        .map(|line| {
            let mut f = line.split(',');
            let lo = f.next().ok_or_else(|| anyhow!("row too short"))?.parse()?;
            let hi = f.next().ok_or_else(|| anyhow!("row too short"))?.parse()?;
            let label = f
                .next()
                .ok_or_else(|| anyhow!("row too short"))?
                .to_string();
            Ok((lo, hi, label))
        })
        .collect()
}
