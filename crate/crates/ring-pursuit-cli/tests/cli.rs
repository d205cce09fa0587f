//! End-to-end tests of the `ring-pursuit` binary: subcommand outputs, file
//! round trips, exit codes, and the help golden files.

use ring_pursuit_cli::emit::{parse_interval_csv, parse_solve_csv};
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ring-pursuit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_worst_reports_the_grazing_regime() {
    // The worked scenario: heading 1.6pi with the standard parameters.
    let out = run(&[
        "solve",
        "--kind",
        "worst",
        "--heading",
        "1.6pi",
        "--rho",
        "0.5",
        "--gamma",
        "0.5",
        "--r",
        "0.4",
        "--dir",
        "cw",
    ]);
    assert!(out.status.success());
    let rec = parse_solve_csv(&stdout(&out)).unwrap();
    assert_eq!(rec.regime, "TGC");
    // theta_p0 (column 2 of the numeric fields).
    assert!(
        (rec.values[2] - 6.33216452).abs() < 1e-6,
        "{:?}",
        rec.values
    );
}

#[test]
fn solve_kinds_round_trip_to_library_values() {
    let p = ring_pursuit::ScenarioParams::new(1.0, 0.5, 0.5, 0.4).unwrap();
    let psi = 1.6 * std::f64::consts::PI;
    for (kind, sol) in [
        (
            "exc",
            ring_pursuit::exc_start(&p, psi, ring_pursuit::Direction::Clockwise),
        ),
        (
            "tac",
            ring_pursuit::tac_start(&p, psi, ring_pursuit::Direction::Clockwise).unwrap(),
        ),
    ] {
        let out = run(&["solve", "--kind", kind, "--heading", "1.6pi"]);
        assert!(out.status.success());
        let rec = parse_solve_csv(&stdout(&out)).unwrap();
        assert!((rec.values[2] - sol.theta_p0).abs() < 1e-9);
        assert!((rec.values[3] - sol.theta_pf).abs() < 1e-9);
        assert!((rec.values[4] - sol.t_c).abs() < 1e-9);
    }
}

#[test]
fn simulate_emits_the_trajectory_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traj.csv");
    let out = run(&[
        "simulate",
        "--heading",
        "1.3pi",
        "--pursuer",
        "5.8:cw",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x_e,y_e,x_p,y_p,r_pe,r_pe_rate"));
    let first: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .map(|f| f.parse().unwrap())
        .collect();
    assert_eq!(first.len(), 7);
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 0.4).abs() < 1e-12);
    // Outcome line lands on stdout when the CSV goes to a file.
    assert!(stdout(&out).starts_with("captured") || stdout(&out).starts_with("escaped"));
}

#[test]
fn reach_partitions_two_evenly_located_pursuers() {
    let out = run(&["reach", "--pursuer", "1.5708:cw", "--pursuer", "4.7124:cw"]);
    assert!(out.status.success());
    let rows = parse_interval_csv(&stdout(&out)).unwrap();
    assert!(rows.len() >= 2, "expected several arcs, got {rows:?}");
    // Cover [0, 2pi) contiguously.
    assert_eq!(rows[0].0, 0.0);
    let total: f64 = rows.iter().map(|(lo, hi, _)| hi - lo).sum();
    assert!((total - std::f64::consts::TAU).abs() < 1e-9);
    for w in rows.windows(2) {
        assert_eq!(w[0].1, w[1].0);
    }
    assert!(rows.iter().any(|(_, _, l)| l == "ESCAPE"));
    assert!(rows.iter().any(|(_, _, l)| l == "CAPTURE"));
}

#[test]
fn reach_writes_a_figure_when_asked() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("reach.svg");
    let out = run(&[
        "reach",
        "--pursuer",
        "0.5pi:cw",
        "--out",
        dir.path().join("reach.csv").to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
}

#[test]
fn sweep_emits_the_sweep_schema() {
    let out = run(&["sweep", "--vary", "gamma", "--values", "0.3,0.5,0.7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("param,value,heading_rad,cap_x,cap_y,cap_r,theta_pf,regime")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3 * 73);
    assert!(rows[0].starts_with("gamma,"));
    // Reparse one row numerically.
    let fields: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(fields.len(), 8);
    let cap_r: f64 = fields[5].parse().unwrap();
    assert!(cap_r > 0.0 && cap_r <= 1.0 + 1e-9);
}

#[test]
fn config_file_drives_a_run_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "[scenario]\nR = 1.0\nrho = 0.5\ngamma = 0.5\nr = 0.4\n\n[evader]\nheading = \"1.6pi\"\n",
    )
    .unwrap();
    let out = run(&[
        "solve",
        "--kind",
        "worst",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(parse_solve_csv(&stdout(&out)).unwrap().regime, "TGC");

    // A flag override changes the scenario: tiny rho forces the EXC regime.
    let out = run(&[
        "solve",
        "--kind",
        "worst",
        "--config",
        cfg.to_str().unwrap(),
        "--rho",
        "0.02",
    ]);
    assert!(out.status.success());
    assert_eq!(parse_solve_csv(&stdout(&out)).unwrap().regime, "EXC");
}

#[test]
fn domain_errors_exit_one_with_a_single_diagnostic_line() {
    let out = run(&[
        "solve",
        "--kind",
        "worst",
        "--heading",
        "1.6pi",
        "--gamma",
        "1.2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("gamma"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["solve", "--heading", "1.6pi"]); // missing --kind
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn no_tangency_is_a_domain_error() {
    // Straight-up heading with a CW pursuer has no tangent capture.
    let out = run(&[
        "solve",
        "--kind",
        "tac",
        "--heading",
        "0.5pi",
        "--dir",
        "cw",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_matches_the_golden_files() {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (args, file) in [
        (vec!["--help"], "help.txt"),
        (vec!["solve", "--help"], "help_solve.txt"),
        (vec!["simulate", "--help"], "help_simulate.txt"),
        (vec!["sweep", "--help"], "help_sweep.txt"),
        (vec!["reach", "--help"], "help_reach.txt"),
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let golden = std::fs::read_to_string(golden_dir.join(file)).unwrap();
        assert_eq!(stdout(&out), golden, "help drifted from {file}");
    }
}
