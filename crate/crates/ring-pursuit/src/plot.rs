//! Static SVG figures: heading reachability fans and sweep scatter plots.

use crate::reachability::{ArcLabel, HeadingIntervalSet};
use crate::scenario::{PursuerSpec, ScenarioParams, Vec2};
use crate::sweep::SweepRecord;
use std::fmt::Write;

const ESCAPE_COLOR: &str = "#2ca02c";
const CAPTURE_COLOR: &str = "#ff7f0e";

fn svg_header(size: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"480\" height=\"480\">\n",
        -size, -size, 2.0 * size, 2.0 * size
    )
}

// SVG y grows downward; flip so CCW angles render CCW.
fn to_svg(p: Vec2) -> (f64, f64) {
    (p.x, -p.y)
}

/// Heading fan for an escape/capture partition: green arcs escape, orange
/// arcs capture, drawn as wedges from the evader start. Pursuer starts are
/// marked on the ring.
pub fn heading_set_svg(
    params: &ScenarioParams,
    set: &HeadingIntervalSet,
    pursuers: &[PursuerSpec],
) -> String {
    let radius = params.radius();
    let fan = 1.45 * radius;
    let origin = params.evader_start();
    let mut out = svg_header(1.6 * radius);

    for iv in &set.intervals {
        let color = match iv.label {
            ArcLabel::Escape => ESCAPE_COLOR,
            ArcLabel::Capture => CAPTURE_COLOR,
        };
        // Split wide arcs so each SVG arc spans < pi.
        let span = iv.hi - iv.lo;
        let pieces = (span / std::f64::consts::PI).ceil().max(1.0) as usize;
        for i in 0..pieces {
            let a0 = iv.lo + span * i as f64 / pieces as f64;
            let a1 = iv.lo + span * (i + 1) as f64 / pieces as f64;
            let p0 = to_svg(origin + Vec2::from_angle(a0) * fan);
            let p1 = to_svg(origin + Vec2::from_angle(a1) * fan);
            let o = to_svg(origin);
            let _ = writeln!(
                out,
                "<path d=\"M {:.5} {:.5} L {:.5} {:.5} A {fan:.5} {fan:.5} 0 0 0 {:.5} {:.5} Z\" \
                 fill=\"{color}\" fill-opacity=\"0.35\" stroke=\"none\"/>",
                o.0, o.1, p0.0, p0.1, p1.0, p1.1
            );
        }
    }

    let _ = writeln!(
        out,
        "<circle cx=\"0\" cy=\"0\" r=\"{radius}\" fill=\"none\" stroke=\"#333\" stroke-width=\"0.01\"/>"
    );
    let e = to_svg(origin);
    let _ = writeln!(
        out,
        "<rect x=\"{:.5}\" y=\"{:.5}\" width=\"0.05\" height=\"0.05\" fill=\"#1f77b4\"/>",
        e.0 - 0.025,
        e.1 - 0.025
    );
    for pursuer in pursuers {
        let p = to_svg(params.ring_point(pursuer.theta_p0));
        let _ = writeln!(
            out,
            "<circle cx=\"{:.5}\" cy=\"{:.5}\" r=\"0.035\" fill=\"#d62728\"/>",
            p.0, p.1
        );
        let _ = writeln!(
            out,
            "<circle cx=\"{:.5}\" cy=\"{:.5}\" r=\"{}\" fill=\"none\" stroke=\"#d62728\" \
             stroke-width=\"0.008\" stroke-dasharray=\"0.04 0.03\"/>",
            p.0,
            p.1,
            params.capture_radius()
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Scatter of worst-case capture points over the disk, colored by regime.
pub fn sweep_scatter_svg(params: &ScenarioParams, records: &[SweepRecord]) -> String {
    let radius = params.radius();
    let mut out = svg_header(1.3 * radius);
    let _ = writeln!(
        out,
        "<circle cx=\"0\" cy=\"0\" r=\"{radius}\" fill=\"#f7f7f7\" stroke=\"#333\" stroke-width=\"0.01\"/>"
    );
    for rec in records {
        if let Ok(cell) = &rec.outcome {
            let color = match cell.regime.code() {
                "EXC" | "POINT" => ESCAPE_COLOR,
                "TGC" => CAPTURE_COLOR,
                _ => "#9467bd",
            };
            let p = to_svg(cell.capture_point);
            let _ = writeln!(
                out,
                "<circle cx=\"{:.5}\" cy=\"{:.5}\" r=\"0.02\" fill=\"{color}\"/>",
                p.0, p.1
            );
        }
    }
    let e = to_svg(params.evader_start());
    let _ = writeln!(
        out,
        "<rect x=\"{:.5}\" y=\"{:.5}\" width=\"0.05\" height=\"0.05\" fill=\"#1f77b4\"/>",
        e.0 - 0.025,
        e.1 - 0.025
    );
    out.push_str("</svg>\n");
    out
}
