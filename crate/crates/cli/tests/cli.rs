//! End-to-end checks of the command-line interface: exit codes, artifact
//! layout, config echo round-trips, and single-thread determinism.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_surfscft"))
}

/// Arguments for a seconds-scale solve on a 42-dof mesh.
const TINY: &[&str] = &[
    "--surface",
    "sphere:1.0",
    "--p",
    "1",
    "--level",
    "1",
    "--nt",
    "17",
    "--chi-n",
    "12",
    "--f",
    "0.5",
    "--threads",
    "1",
];

#[test]
fn config_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "degree = 9\n").unwrap();
    let out = bin().args(["scft", "--config"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("degree"), "stderr should name the bad key: {msg}");

    let missing = dir.path().join("absent.toml");
    let out = bin()
        .args(["scft", "--config"])
        .arg(&missing)
        .output()
        .unwrap();
    assert_ne!(out.status.code(), Some(0));

    // A continuation run without targets is a configuration error.
    let out = bin().arg("continue").args(TINY).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_writes_artifacts_and_echo_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first");
    let out = bin()
        .arg("scft")
        .args(TINY)
        .args(["--seed", "7", "--out"])
        .arg(&first)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    for name in ["config.toml", "summary.csv", "iterations.csv", "fields_final.vtk"] {
        assert!(first.join(name).is_file(), "missing artifact {name}");
    }
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("converged=true"), "stdout: {stdout}");

    // Rerunning from the echoed config alone must reproduce the run bitwise.
    let second = dir.path().join("second");
    let status = bin()
        .args(["scft", "--config"])
        .arg(first.join("config.toml"))
        .args(["--threads", "1", "--out"])
        .arg(&second)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let a = std::fs::read(first.join("iterations.csv")).unwrap();
    let b = std::fs::read(second.join("iterations.csv")).unwrap();
    assert_eq!(a, b, "echoed config must reproduce the iteration history");
    let a = std::fs::read(first.join("summary.csv")).unwrap();
    let b = std::fs::read(second.join("summary.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn flags_override_config_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "surface = \"sphere:1.0\"\ndegree = 1\nlevel = 1\nchi_n = 12.0\nf = 0.5\ncontour_nodes = 17\n",
    )
    .unwrap();
    let out_dir = dir.path().join("run");
    let status = bin()
        .args(["scft", "--config"])
        .arg(&cfg)
        .args(["--chi-n", "13.5", "--threads", "1", "--out"])
        .arg(&out_dir)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let echoed = std::fs::read_to_string(out_dir.join("config.toml")).unwrap();
    assert!(
        echoed.contains("chi_n = 13.5"),
        "flag override missing from echo: {echoed}"
    );
    assert!(echoed.contains("contour_nodes = 17"));
}

#[test]
fn study_commands_emit_their_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["heat-order", "--p", "1", "--level", "3", "--nt", "8"])
        .args(["--threads", "1", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = std::fs::read_to_string(dir.path().join("heat_order.csv")).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("degree,level,n_dofs,h_max,error_l2"));
    // Levels two and three of a single degree give two data rows.
    assert_eq!(lines.count(), 2);
    assert!(String::from_utf8_lossy(&out.stdout).contains("measured order"));
}

#[test]
fn adaptive_solve_reports_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        concat!(
            // A balanced homogeneous start is an exact fixed point, so each
            // mesh converges immediately and the run exits the outer loop fast.
            "surface = \"sphere:1.0\"\ndegree = 1\nlevel = 1\n",
            "chi_n = 12.0\nf = 0.5\ncontour_nodes = 17\ninit = \"homogeneous\"\n",
            "adapt_max_iterations = 8\nmax_cycles = 2\nmax_iterations = 60\n",
        ),
    )
    .unwrap();
    let out_dir = dir.path().join("run");
    let out = bin()
        .args(["scft-adaptive", "--config"])
        .arg(&cfg)
        .args(["--threads", "1", "--out"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out_dir.join("cycles.csv").is_file());
    assert!(String::from_utf8_lossy(&out.stdout).contains("cycles="));
}
