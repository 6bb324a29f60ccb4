//! Command-line driver: benchmark studies and production field-theory runs.
//!
//! A run is described by a flat `key = value` config file; every flag
//! overrides the corresponding key. The effective configuration is echoed
//! into the output directory, and rerunning an echoed config reproduces the
//! run (bitwise, at `--threads 1`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use surfscft::harness::{
    self, configure_threads, fmt_e, heat_order_slopes, RunConfig,
};
use surfscft::Error;

#[derive(Parser)]
#[command(
    name = "surfscft",
    version,
    about = "Polymer self-consistent field theory on curved surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Configuration file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Surface: sphere, sphere:R, saddle, paraboloid, or expr:<formula>.
    #[arg(long, global = true)]
    surface: Option<String>,
    /// Polynomial degree of geometry and fields (1-3).
    #[arg(long, global = true)]
    p: Option<usize>,
    /// Icosphere subdivision level of the starting mesh.
    #[arg(long, global = true)]
    level: Option<usize>,
    /// Contour nodes N_t (heat-order defaults to 512 plain steps,
    /// contour-order to 32, contour-integral to 64).
    #[arg(long, global = true)]
    nt: Option<usize>,
    /// Deferred-correction sweeps J.
    #[arg(long, global = true)]
    sdc: Option<usize>,
    /// Interaction strength times chain length.
    #[arg(long = "chi-n", global = true)]
    chi_n: Option<f64>,
    /// A-block fraction.
    #[arg(long, global = true)]
    f: Option<f64>,
    /// Marking threshold scale.
    #[arg(long, global = true)]
    theta: Option<f64>,
    /// Seed for the initial field noise.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory (created if missing); omit for terminal-only runs.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (1 makes every output bitwise reproducible).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Spatial convergence of the manufactured heat problem per degree.
    HeatOrder,
    /// Contour convergence: stepped versus deferred-corrected integration.
    ContourOrder,
    /// Contour-integral error table at matched spatial resolution.
    ContourIntegral,
    /// Field-theory solve on a fixed mesh.
    Scft,
    /// Field-theory solve with adaptive meshing.
    ScftAdaptive,
    /// Interaction-strength continuation over chi_n_targets.
    Continue,
}

impl Command {
    fn mode_name(self) -> &'static str {
        match self {
            Command::HeatOrder => "heat-order",
            Command::ContourOrder => "contour-order",
            Command::ContourIntegral => "contour-integral",
            Command::Scft => "scft",
            Command::ScftAdaptive => "scft-adaptive",
            Command::Continue => "continue",
        }
    }
}

fn effective_config(cli: &Cli) -> Result<RunConfig, Error> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(s) = &cli.surface {
        cfg.surface = s.clone();
    }
    if let Some(p) = cli.p {
        cfg.degree = p;
    }
    if let Some(level) = cli.level {
        cfg.level = level;
    }
    if let Some(nt) = cli.nt {
        cfg.contour_nodes = nt;
    }
    if let Some(j) = cli.sdc {
        cfg.sdc_sweeps = j;
    }
    if let Some(chi_n) = cli.chi_n {
        cfg.chi_n = chi_n;
    }
    if let Some(f) = cli.f {
        cfg.f = f;
    }
    if let Some(theta) = cli.theta {
        cfg.theta = theta;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    cfg.mode = Some(cli.command.mode_name().to_string());
    cfg.validate()?;
    Ok(cfg)
}

/// Benchmark node counts: halvings of `top` down to eight nodes.
fn halving_counts(top: usize) -> Vec<usize> {
    let mut counts = Vec::new();
    let mut n = top.max(8);
    while n >= 8 {
        counts.push(n);
        if n % 2 != 0 {
            break;
        }
        n /= 2;
    }
    counts.reverse();
    counts
}

fn write_study_csv(
    cfg: &RunConfig,
    out: &Option<PathBuf>,
    name: &str,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), Error> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        cfg.echo(dir)?;
        let mut text = header.join(",");
        text.push('\n');
        for row in rows {
            text.push_str(&row.join(","));
            text.push('\n');
        }
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Error> {
    configure_threads(cli.threads.unwrap_or(0))?;
    let cfg = effective_config(cli)?;
    match cli.command {
        Command::HeatOrder => {
            let degrees: Vec<usize> = match cli.p {
                Some(p) => vec![p],
                None => vec![1, 2, 3],
            };
            let top_level = cfg.level.max(3);
            let levels: Vec<usize> = (2..=top_level).collect();
            // The study isolates spatial error, so the default contour
            // integrator is many plain steps; pass --sdc to use the
            // spectral grid instead.
            let nt = cli.nt.unwrap_or(512);
            let scheme = match cli.sdc {
                Some(j) => harness::ContourScheme::SpectralDeferred(j),
                None => harness::ContourScheme::CrankNicolson,
            };
            let rows = harness::run_heat_order_study(&degrees, &levels, nt, scheme, cfg.linear_tol)?;
            println!("degree  level    dofs       h_max          final L2 error");
            for r in &rows {
                println!(
                    "{:>6}  {:>5}  {:>6}  {:>13}  {:>13}",
                    r.degree,
                    r.level,
                    r.n_dofs,
                    fmt_e(r.h_max),
                    fmt_e(r.error_l2)
                );
            }
            for (p, slope) in heat_order_slopes(&rows) {
                println!("degree {p}: measured order {slope:.3}");
            }
            let csv: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.degree.to_string(),
                        r.level.to_string(),
                        r.n_dofs.to_string(),
                        fmt_e(r.h_max),
                        fmt_e(r.error_l2),
                    ]
                })
                .collect();
            write_study_csv(
                &cfg,
                &cli.out,
                "heat_order.csv",
                &["degree", "level", "n_dofs", "h_max", "error_l2"],
                &csv,
            )
        }
        Command::ContourOrder | Command::ContourIntegral => {
            let top = cli.nt.unwrap_or(match cli.command {
                Command::ContourOrder => 32,
                _ => 64,
            });
            let counts = halving_counts(top);
            let (rows, what, file) = match cli.command {
                Command::ContourOrder => (
                    harness::run_contour_order_study(cfg.level, cfg.degree, &counts, cfg.linear_tol)?,
                    "final-time",
                    "contour_order.csv",
                ),
                _ => (
                    harness::run_contour_integral_study(
                        cfg.level,
                        cfg.degree,
                        &counts,
                        cfg.linear_tol,
                    )?,
                    "contour-integral",
                    "contour_integral.csv",
                ),
            };
            println!("{what} L2 errors (degree {}, level {}):", cfg.degree, cfg.level);
            println!("   N_t        stepped       corrected");
            for r in &rows {
                println!(
                    "{:>6}  {:>13}  {:>13}",
                    r.contour_nodes,
                    fmt_e(r.error_cn),
                    fmt_e(r.error_sdc)
                );
            }
            let csv: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.contour_nodes.to_string(),
                        fmt_e(r.error_cn),
                        fmt_e(r.error_sdc),
                    ]
                })
                .collect();
            write_study_csv(
                &cfg,
                &cli.out,
                file,
                &["contour_nodes", "error_cn", "error_sdc"],
                &csv,
            )
        }
        Command::Scft => {
            let artifacts = harness::run_scft(&cfg, cli.out.as_deref())?;
            let s = &artifacts.solution;
            println!(
                "converged={} iterations={} H={} Q={} incompressibility={} exchange={} dofs={}",
                s.converged,
                s.iterations,
                fmt_e(s.h),
                fmt_e(s.big_q),
                fmt_e(s.incompressibility),
                fmt_e(s.exchange),
                artifacts.n_dofs
            );
            if !s.converged {
                return Err(Error::SolveFailed(format!(
                    "no self-consistency within {} iterations",
                    s.iterations
                )));
            }
            Ok(())
        }
        Command::ScftAdaptive => {
            let artifacts = harness::run_scft_adaptive(&cfg, cli.out.as_deref())?;
            let s = &artifacts.solution;
            println!(
                "converged={} iterations={} cycles={} H={} Q={} dofs={} h_min={}",
                s.converged,
                artifacts.total_iterations,
                artifacts.cycles.len(),
                fmt_e(s.h),
                fmt_e(s.big_q),
                artifacts.n_dofs,
                fmt_e(artifacts.h_min)
            );
            if !s.converged {
                return Err(Error::SolveFailed(format!(
                    "no self-consistency within {} iterations",
                    artifacts.total_iterations
                )));
            }
            Ok(())
        }
        Command::Continue => {
            let stages = harness::run_continuation(&cfg, cli.out.as_deref())?;
            println!("  chi_n              H              Q    dofs  iterations");
            let mut failed = false;
            for (chi_n, a) in &stages {
                println!(
                    "{:>7}  {:>13}  {:>13}  {:>6}  {:>10}",
                    chi_n,
                    fmt_e(a.solution.h),
                    fmt_e(a.solution.big_q),
                    a.n_dofs,
                    a.total_iterations
                );
                failed |= !a.solution.converged;
            }
            if failed {
                return Err(Error::SolveFailed(
                    "a continuation stage did not reach self-consistency".into(),
                ));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
