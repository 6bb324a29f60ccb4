//! Run configuration, the manufactured parabolic benchmark, convergence
//! study drivers, the production field-theory drivers (uniform, adaptive,
//! and interaction-strength continuation), and CSV/VTK emission.
//!
//! Configuration lives in a flat `key = value` file; every key has a
//! default, the effective configuration is echoed beside the outputs, and
//! the echo re-parses to an identical run.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::adaptivity::{adapt_cycle, element_indicators, reference_deviation};
use crate::assembly::Assembler;
use crate::contour::{cn_sweep_on_nodes, solve_propagator, uniform_nodes, ContourGrid};
use crate::mesh::{transfer_field, HighOrderSurfaceMesh};
use crate::scft::{
    homogeneous_exchange_field, seeded_initial_state, IterationRecord, IterationStep,
    ScftParams, ScftSolution, ScftState, ScftSystem,
};
use crate::surface::LevelSetSurface;
use crate::vtk::{write_linearized_vtk, write_mesh_vtk};
use crate::{Error, Result};

/// Every knob of a run, with defaults chosen so a bare config is already a
/// sensible spotted-phase computation on the sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Optional run mode, informational when driven through subcommands.
    pub mode: Option<String>,
    /// Surface name: `sphere`, `sphere:R`, `saddle`, `paraboloid`, or
    /// `expr:<formula>` for a level-set expression.
    pub surface: String,
    /// Polynomial degree of geometry and fields, in {1, 2, 3}.
    pub degree: usize,
    /// Icosphere subdivision level of the starting mesh.
    pub level: usize,
    /// Interaction strength times chain length.
    pub chi_n: f64,
    /// A-block fraction.
    pub f: f64,
    /// Contour nodes N_t (intervals = N_t - 1).
    pub contour_nodes: usize,
    /// Deferred-correction sweeps J.
    pub sdc_sweeps: usize,
    /// Pressure-field mixing step.
    pub lambda_plus: f64,
    /// Exchange-field mixing step.
    pub lambda_minus: f64,
    /// Stop when the free energy moves less than this between iterations.
    pub energy_tol: f64,
    /// ... or when both field defects drop below this.
    pub residual_tol: f64,
    /// Inner linear-solver relative tolerance.
    pub linear_tol: f64,
    /// Iteration cap per mesh.
    pub max_iterations: usize,
    /// Marking threshold scale.
    pub theta: f64,
    /// Largest refine/coarsen depth per adaptation cycle.
    pub clamp: u32,
    /// Override of the mesh edge-length floor (elements are never split
    /// below it); `None` keeps the mesh default.
    pub h_floor: Option<f64>,
    /// Adapt when the indicator dispersion falls below this...
    pub adapt_reference: f64,
    /// ... or after this many iterations since the last adaptation.
    pub adapt_max_iterations: usize,
    /// Hard cap on adaptation cycles.
    pub max_cycles: usize,
    /// Seed for the initial exchange-field noise.
    pub seed: u64,
    /// Initial fields: `seeded`, `zero`, or `homogeneous`.
    pub init: String,
    /// Write field snapshots every this many iterations (0 = final only).
    pub vtk_every: usize,
    /// Interaction strengths for the continuation driver, visited in order.
    pub chi_n_targets: Vec<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: None,
            surface: "sphere:3.56".into(),
            degree: 2,
            level: 4,
            chi_n: 25.0,
            f: 0.2,
            contour_nodes: 200,
            sdc_sweeps: 1,
            lambda_plus: 2.0,
            lambda_minus: 2.0,
            energy_tol: 1e-6,
            residual_tol: 1e-9,
            linear_tol: 1e-10,
            max_iterations: 2000,
            theta: 1.0,
            clamp: 2,
            h_floor: None,
            adapt_reference: 0.1,
            adapt_max_iterations: 500,
            max_cycles: 40,
            seed: 1,
            init: "seeded".into(),
            vtk_every: 0,
            chi_n_targets: Vec::new(),
        }
    }
}

const MODES: [&str; 6] = [
    "heat-order",
    "contour-order",
    "contour-integral",
    "scft",
    "scft-adaptive",
    "continue",
];

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: RunConfig =
            toml::from_str(text).map_err(|e| Error::Config(format!("bad config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.degree) {
            return Err(Error::Config(format!(
                "degree must be 1, 2 or 3, got {}",
                self.degree
            )));
        }
        if let Some(mode) = &self.mode {
            if !MODES.contains(&mode.as_str()) {
                return Err(Error::Config(format!(
                    "unknown mode {mode:?}; expected one of {MODES:?}"
                )));
            }
        }
        if !["seeded", "zero", "homogeneous"].contains(&self.init.as_str()) {
            return Err(Error::Config(format!(
                "unknown init {:?}; expected seeded, zero or homogeneous",
                self.init
            )));
        }
        if let Some(h) = self.h_floor {
            if !(h > 0.0) {
                return Err(Error::Config(format!("h_floor must be positive, got {h}")));
            }
        }
        if self.level > 9 {
            return Err(Error::Config(format!(
                "icosphere level {} is beyond any practical size",
                self.level
            )));
        }
        // the surface spec must parse
        self.surface()?;
        Ok(())
    }

    pub fn surface(&self) -> Result<LevelSetSurface> {
        LevelSetSurface::from_name(&self.surface)
    }

    pub fn build_mesh(&self) -> Result<HighOrderSurfaceMesh> {
        let mut mesh = HighOrderSurfaceMesh::icosphere(self.surface()?, self.level, self.degree)?;
        if let Some(h) = self.h_floor {
            mesh.h_floor = h;
        }
        Ok(mesh)
    }

    pub fn scft_params(&self) -> ScftParams {
        ScftParams {
            chi_n: self.chi_n,
            f: self.f,
            contour_nodes: self.contour_nodes,
            sdc_sweeps: self.sdc_sweeps,
            lambda_plus: self.lambda_plus,
            lambda_minus: self.lambda_minus,
            energy_tol: self.energy_tol,
            residual_tol: self.residual_tol,
            linear_tol: self.linear_tol,
            max_iterations: self.max_iterations,
        }
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(format!("cannot serialise: {e}")))
    }

    /// Echo the effective configuration beside the run outputs.
    pub fn echo(&self, out_dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(out_dir)?;
        let path = out_dir.join("config.toml");
        std::fs::write(&path, self.to_toml_string()?)?;
        Ok(path)
    }
}

/// Pin the global worker pool to `n` threads (0 leaves the default alone).
/// Call once, before any parallel work; single-threaded runs make every
/// output bitwise reproducible.
pub fn configure_threads(n: usize) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Config(format!("cannot size the thread pool: {e}")))
}

// ---------------------------------------------------------------------------
// manufactured parabolic benchmark
// ---------------------------------------------------------------------------

/// The manufactured heat problem on a sphere of radius `radius`:
/// du/dt = Lap_S u + f with u = sin(pi x) sin(pi y) sin(pi z) e^{-t},
/// run to T = 1.
#[derive(Debug, Clone, Copy)]
pub struct HeatBenchmark {
    pub radius: f64,
}

impl HeatBenchmark {
    pub fn unit_sphere() -> Self {
        HeatBenchmark { radius: 1.0 }
    }

    pub fn exact(&self, x: [f64; 3], t: f64) -> f64 {
        let pi = std::f64::consts::PI;
        (pi * x[0]).sin() * (pi * x[1]).sin() * (pi * x[2]).sin() * (-t).exp()
    }

    /// Forcing that makes `exact` solve the surface heat equation: the
    /// ambient Laplacian of the extension minus the normal second
    /// derivative and the curvature term of the sphere.
    pub fn forcing(&self, x: [f64; 3], t: f64) -> f64 {
        let pi = std::f64::consts::PI;
        let r2 = self.radius * self.radius;
        let (sx, cx) = (pi * x[0]).sin_cos();
        let (sy, cy) = (pi * x[1]).sin_cos();
        let (sz, cz) = (pi * x[2]).sin_cos();
        let et = (-t).exp();
        (2.0 * pi * pi - 1.0) * et * sx * sy * sz
            + (2.0 * pi / r2) * et * (x[0] * cx * sy * sz + x[1] * sx * cy * sz + x[2] * sx * sy * cz)
            + (2.0 * pi * pi / r2)
                * et
                * (x[0] * x[1] * cx * cy * sz
                    + x[0] * x[2] * cx * sy * cz
                    + x[1] * x[2] * sx * cy * cz)
    }

    /// The exact value of int_0^1 u dt at a fixed surface point.
    pub fn exact_time_integral(&self, x: [f64; 3]) -> f64 {
        self.exact(x, 0.0) * (1.0 - (-1.0f64).exp())
    }
}

/// Time integrator used for a benchmark run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContourScheme {
    /// Plain Crank-Nicolson steps on a uniform grid.
    CrankNicolson,
    /// Chebyshev-panel predictor plus this many correction sweeps.
    SpectralDeferred(usize),
}

impl ContourScheme {
    pub fn label(&self) -> String {
        match self {
            ContourScheme::CrankNicolson => "cn".into(),
            ContourScheme::SpectralDeferred(j) => format!("sdc{j}"),
        }
    }
}

/// Outcome of one benchmark solve.
#[derive(Debug, Clone, Copy)]
pub struct HeatRunResult {
    pub n_dofs: usize,
    pub h_max: f64,
    /// L2 error of u_h against the exact solution at T = 1.
    pub error_l2: f64,
    /// L2 error of the contour integral of u_h against its exact value,
    /// using the scheme's matching quadrature over the trajectory.
    pub integral_error_l2: f64,
}

/// Solve the forced heat problem on an icosphere of the unit sphere and
/// measure the final-time and integrated errors.
pub fn run_heat_once(
    level: usize,
    degree: usize,
    n_intervals: usize,
    scheme: ContourScheme,
    linear_tol: f64,
) -> Result<HeatRunResult> {
    let bench = HeatBenchmark::unit_sphere();
    let mesh = HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), level, degree)?;
    let asm = Assembler::new(&mesh)?;
    let mass = asm.mass();
    let stiffness = asm.stiffness();
    let q0 = asm.interpolate(|x| bench.exact(x, 0.0));
    let load = |t: f64| asm.load_vector(|x| bench.forcing(x, t));
    let (trajectory, weights) = match scheme {
        ContourScheme::CrankNicolson => {
            let nodes = uniform_nodes(n_intervals);
            let q = cn_sweep_on_nodes(&nodes, &mass, &stiffness, &q0, Some(&load), linear_tol)?;
            (q, fourth_order_weights(n_intervals))
        }
        ContourScheme::SpectralDeferred(sweeps) => {
            let grid = ContourGrid::with_breakpoints(&[0.0, 1.0], n_intervals)?;
            let q = solve_propagator(
                &grid,
                &mass,
                &[&stiffness],
                &q0,
                Some(&load),
                sweeps,
                linear_tol,
            )?;
            let w = grid.quadrature_weights();
            (q, w)
        }
    };
    let error_l2 = asm.l2_error(
        trajectory.last().expect("nonempty trajectory"),
        |x| bench.exact(x, 1.0),
    );
    let n = asm.n_dofs();
    let mut integral = vec![0.0; n];
    for (w, q) in weights.iter().zip(&trajectory) {
        if *w != 0.0 {
            for i in 0..n {
                integral[i] += w * q[i];
            }
        }
    }
    let integral_error_l2 = asm.l2_error(&integral, |x| bench.exact_time_integral(x));
    let h_max = mesh
        .active_elements()
        .iter()
        .map(|&e| mesh.element_size(e))
        .fold(0.0, f64::max);
    Ok(HeatRunResult {
        n_dofs: n,
        h_max,
        error_l2,
        integral_error_l2,
    })
}

/// Composite fourth-order quadrature weights on a uniform grid over [0, 1]:
/// simpson pairs, with a 3/8 tail when the interval count is odd.
pub fn fourth_order_weights(n_intervals: usize) -> Vec<f64> {
    assert!(n_intervals >= 2, "need at least two intervals");
    let h = 1.0 / n_intervals as f64;
    let mut w = vec![0.0; n_intervals + 1];
    let simpson_end = if n_intervals % 2 == 0 {
        n_intervals
    } else {
        n_intervals - 3
    };
    let mut k = 0;
    while k + 2 <= simpson_end {
        w[k] += h / 3.0;
        w[k + 1] += 4.0 * h / 3.0;
        w[k + 2] += h / 3.0;
        k += 2;
    }
    if simpson_end < n_intervals {
        let c = 3.0 * h / 8.0;
        w[simpson_end] += c;
        w[simpson_end + 1] += 3.0 * c;
        w[simpson_end + 2] += 3.0 * c;
        w[simpson_end + 3] += c;
    }
    w
}

/// Least-squares slope of y against x.
pub fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    assert!(x.len() >= 2);
    let k = x.len() as f64;
    let (sx, sy) = (x.iter().sum::<f64>(), y.iter().sum::<f64>());
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    (k * sxy - sx * sy) / (k * sxx - sx * sx)
}

/// One row of the spatial order study.
#[derive(Debug, Clone, Copy)]
pub struct OrderStudyRow {
    pub degree: usize,
    pub level: usize,
    pub n_dofs: usize,
    pub h_max: f64,
    pub error_l2: f64,
}

/// Final-time error across mesh levels for each degree, with the contour
/// resolved finely enough that spatial error dominates.
pub fn run_heat_order_study(
    degrees: &[usize],
    levels: &[usize],
    n_intervals: usize,
    scheme: ContourScheme,
    linear_tol: f64,
) -> Result<Vec<OrderStudyRow>> {
    let mut rows = Vec::new();
    for &degree in degrees {
        for &level in levels {
            let run = run_heat_once(level, degree, n_intervals, scheme, linear_tol)?;
            rows.push(OrderStudyRow {
                degree,
                level,
                n_dofs: run.n_dofs,
                h_max: run.h_max,
                error_l2: run.error_l2,
            });
        }
    }
    Ok(rows)
}

/// Per-degree least-squares slopes of log error against log h.
pub fn heat_order_slopes(rows: &[OrderStudyRow]) -> Vec<(usize, f64)> {
    let mut degrees: Vec<usize> = rows.iter().map(|r| r.degree).collect();
    degrees.dedup();
    degrees
        .into_iter()
        .map(|p| {
            let x: Vec<f64> = rows
                .iter()
                .filter(|r| r.degree == p)
                .map(|r| r.h_max.ln())
                .collect();
            let y: Vec<f64> = rows
                .iter()
                .filter(|r| r.degree == p)
                .map(|r| r.error_l2.ln())
                .collect();
            (p, least_squares_slope(&x, &y))
        })
        .collect()
}

/// One row of the contour order/integral studies: both schemes at one N_t.
#[derive(Debug, Clone, Copy)]
pub struct ContourStudyRow {
    pub contour_nodes: usize,
    pub error_cn: f64,
    pub error_sdc: f64,
}

/// Final-time error against N_t for Crank-Nicolson and one-sweep deferred
/// correction on a fixed mesh fine enough that contour error dominates.
pub fn run_contour_order_study(
    level: usize,
    degree: usize,
    node_counts: &[usize],
    linear_tol: f64,
) -> Result<Vec<ContourStudyRow>> {
    node_counts
        .iter()
        .map(|&nt| {
            let cn = run_heat_once(level, degree, nt - 1, ContourScheme::CrankNicolson, linear_tol)?;
            let sdc = run_heat_once(
                level,
                degree,
                nt - 1,
                ContourScheme::SpectralDeferred(1),
                linear_tol,
            )?;
            Ok(ContourStudyRow {
                contour_nodes: nt,
                error_cn: cn.error_l2,
                error_sdc: sdc.error_l2,
            })
        })
        .collect()
}

/// Contour-integral error against N_t: the stepped trajectory integrated by
/// the composite fourth-order rule versus the spectral trajectory integrated
/// by Clenshaw-Curtis weights.
pub fn run_contour_integral_study(
    level: usize,
    degree: usize,
    node_counts: &[usize],
    linear_tol: f64,
) -> Result<Vec<ContourStudyRow>> {
    node_counts
        .iter()
        .map(|&nt| {
            let cn = run_heat_once(level, degree, nt - 1, ContourScheme::CrankNicolson, linear_tol)?;
            let sdc = run_heat_once(
                level,
                degree,
                nt - 1,
                ContourScheme::SpectralDeferred(1),
                linear_tol,
            )?;
            Ok(ContourStudyRow {
                contour_nodes: nt,
                error_cn: cn.integral_error_l2,
                error_sdc: sdc.integral_error_l2,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// file emission
// ---------------------------------------------------------------------------

/// Fixed-precision scientific format used in every CSV cell.
pub fn fmt_e(v: f64) -> String {
    format!("{v:.12e}")
}

fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut text = String::new();
    let _ = writeln!(text, "{}", header.join(","));
    for row in rows {
        let _ = writeln!(text, "{}", row.join(","));
    }
    std::fs::write(path, text)?;
    Ok(())
}

fn write_vtk_pair(
    dir: &Path,
    stem: &str,
    mesh: &HighOrderSurfaceMesh,
    fields: &[(&str, &[f64])],
) -> Result<()> {
    write_mesh_vtk(&dir.join(format!("{stem}.vtk")), mesh, fields)?;
    if mesh.degree > 1 {
        write_linearized_vtk(&dir.join(format!("{stem}_linear.vtk")), mesh, fields)?;
    }
    Ok(())
}

fn iteration_rows(history: &[IterationRecord]) -> Vec<Vec<String>> {
    history
        .iter()
        .map(|r| {
            vec![
                r.iteration.to_string(),
                fmt_e(r.h),
                fmt_e(r.big_q),
                fmt_e(r.incompressibility),
                fmt_e(r.exchange),
                fmt_e(r.delta_h),
            ]
        })
        .collect()
}

const ITERATION_HEADER: [&str; 6] = [
    "iteration",
    "H",
    "Q",
    "incompressibility",
    "exchange",
    "deltaH",
];

// ---------------------------------------------------------------------------
// field-theory drivers
// ---------------------------------------------------------------------------

/// Initial fields per the config's `init` choice.
pub fn initial_state(cfg: &RunConfig, asm: &Assembler) -> Result<ScftState> {
    let n = asm.n_dofs();
    match cfg.init.as_str() {
        "zero" => Ok(ScftState {
            omega_plus: vec![0.0; n],
            omega_minus: vec![0.0; n],
        }),
        "homogeneous" => Ok(ScftState {
            omega_plus: vec![0.0; n],
            omega_minus: vec![homogeneous_exchange_field(cfg.chi_n, cfg.f); n],
        }),
        "seeded" => Ok(seeded_initial_state(
            &asm.dof_positions(),
            cfg.chi_n,
            cfg.f,
            cfg.seed,
        )),
        other => Err(Error::Config(format!("unknown init {other:?}"))),
    }
}

/// Size measures of a mesh's active elements.
pub fn mesh_resolution(mesh: &HighOrderSurfaceMesh) -> (f64, f64) {
    let mut h_min = f64::MAX;
    let mut h_max = 0.0f64;
    for &e in &mesh.active_elements() {
        let h = mesh.element_size(e);
        h_min = h_min.min(h);
        h_max = h_max.max(h);
    }
    (h_min, h_max)
}

/// Everything a fixed-mesh run leaves behind.
#[derive(Debug)]
pub struct ScftArtifacts {
    pub solution: ScftSolution,
    pub n_dofs: usize,
    pub h_min: f64,
    pub h_max: f64,
}

fn density_fields<'a>(
    step_phi_a: &'a [f64],
    step_phi_b: &'a [f64],
    state: &'a ScftState,
) -> Vec<(&'static str, &'a [f64])> {
    vec![
        ("phi_a", step_phi_a),
        ("phi_b", step_phi_b),
        ("omega_plus", &state.omega_plus),
        ("omega_minus", &state.omega_minus),
    ]
}

/// Solve on a fixed mesh; when `out_dir` is given, write the effective
/// config, the iteration history, field snapshots, and a one-row summary.
pub fn run_scft(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<ScftArtifacts> {
    cfg.validate()?;
    let mesh = cfg.build_mesh()?;
    let sys = ScftSystem::new(&mesh, cfg.scft_params())?;
    let mut state = initial_state(cfg, &sys.assembler)?;
    if let Some(dir) = out_dir {
        cfg.echo(dir)?;
    }
    let vtk_every = cfg.vtk_every;
    let solution = sys.solve_with(&mut state, |it, step| {
        if let Some(dir) = out_dir {
            if vtk_every > 0 && it % vtk_every == 0 {
                // snapshots carry the densities; the conjugate fields are
                // written once with the final frame below
                write_vtk_pair(
                    dir,
                    &format!("fields_{it:04}"),
                    &mesh,
                    &[("phi_a", &step.phi_a), ("phi_b", &step.phi_b)],
                )?;
            }
        }
        Ok(())
    })?;
    let (h_min, h_max) = mesh_resolution(&mesh);
    if let Some(dir) = out_dir {
        write_csv(
            &dir.join("iterations.csv"),
            &ITERATION_HEADER,
            &iteration_rows(&solution.history),
        )?;
        write_vtk_pair(
            dir,
            "fields_final",
            &mesh,
            &density_fields(&solution.phi_a, &solution.phi_b, &state),
        )?;
        write_csv(
            &dir.join("summary.csv"),
            &[
                "H",
                "Q",
                "incompressibility",
                "exchange",
                "iterations",
                "converged",
                "n_dofs",
                "h_min",
                "h_max",
            ],
            &[vec![
                fmt_e(solution.h),
                fmt_e(solution.big_q),
                fmt_e(solution.incompressibility),
                fmt_e(solution.exchange),
                solution.iterations.to_string(),
                (solution.converged as u8).to_string(),
                sys.n_dofs().to_string(),
                fmt_e(h_min),
                fmt_e(h_max),
            ]],
        )?;
    }
    Ok(ScftArtifacts {
        solution,
        n_dofs: sys.n_dofs(),
        h_min,
        h_max,
    })
}

/// One adaptation event of the adaptive driver.
#[derive(Debug, Clone, Copy)]
pub struct CycleRecord {
    pub cycle: usize,
    pub n_dofs_before: usize,
    pub n_dofs_after: usize,
    /// Smallest element size after the adaptation.
    pub h_min: f64,
    /// Indicator dispersion that triggered the adaptation.
    pub e_ref: f64,
    /// Energy and partition function measured just before adapting.
    pub h: f64,
    pub big_q: f64,
    /// Field-theory iterations spent on the mesh before this adaptation.
    pub iterations: usize,
}

/// Everything an adaptive run leaves behind.
#[derive(Debug)]
pub struct AdaptiveArtifacts {
    pub mesh: HighOrderSurfaceMesh,
    pub state: ScftState,
    pub solution: ScftSolution,
    pub cycles: Vec<CycleRecord>,
    pub n_dofs: usize,
    pub h_min: f64,
    pub h_max: f64,
    pub total_iterations: usize,
}

struct InnerRun {
    records: Vec<IterationRecord>,
    converged: bool,
    e_ref: f64,
    last: IterationStep,
}

/// Iterate on one mesh until convergence or an adaptation trigger: the
/// indicator dispersion localising below the reference (when armed), or the
/// iteration budget since the last adaptation running out.
fn scft_until_trigger(
    sys: &ScftSystem,
    cfg: &RunConfig,
    state: &mut ScftState,
    iteration_offset: usize,
    dispersion_armed: bool,
) -> Result<InnerRun> {
    let mut records = Vec::new();
    let mut prev_h: Option<f64> = None;
    let mut converged = false;
    let mut e_ref = f64::NAN;
    let mut last: Option<IterationStep> = None;
    let budget = cfg
        .adapt_max_iterations
        .min(cfg.max_iterations)
        .max(1);
    for it in 0..budget {
        let step = sys.iteration(state)?;
        let delta_h = prev_h.map_or(f64::NAN, |p| step.h - p);
        records.push(IterationRecord {
            iteration: iteration_offset + it,
            h: step.h,
            big_q: step.big_q,
            incompressibility: step.incompressibility,
            exchange: step.exchange,
            delta_h,
        });
        let indicators = element_indicators(&sys.assembler, &step.q_end, &step.q_dagger_end)?;
        e_ref = reference_deviation(&indicators);
        let energy_ok = prev_h.is_some_and(|p| (step.h - p).abs() < cfg.energy_tol);
        let residual_ok =
            step.incompressibility < cfg.residual_tol && step.exchange < cfg.residual_tol;
        prev_h = Some(step.h);
        last = Some(step);
        if energy_ok || residual_ok {
            converged = true;
            break;
        }
        if dispersion_armed && e_ref < cfg.adapt_reference {
            break;
        }
    }
    Ok(InnerRun {
        records,
        converged,
        e_ref,
        last: last.expect("at least one iteration"),
    })
}

/// Adaptive solve from an explicit starting mesh and fields. The outer loop
/// alternates field iteration and mesh adaptation until the energy is stable
/// across an adaptation boundary (or adaptation stops changing the mesh).
pub fn run_scft_adaptive_from(
    cfg: &RunConfig,
    mut mesh: HighOrderSurfaceMesh,
    mut state: ScftState,
    out_dir: Option<&Path>,
) -> Result<AdaptiveArtifacts> {
    cfg.validate()?;
    if let Some(dir) = out_dir {
        cfg.echo(dir)?;
    }
    let params = cfg.scft_params();
    let mut all_records: Vec<IterationRecord> = Vec::new();
    let mut cycles: Vec<CycleRecord> = Vec::new();
    let mut prev_converged_h: Option<f64> = None;
    let mut final_sol: Option<ScftSolution> = None;
    // the dispersion trigger disarms after an adaptation that changed
    // nothing, so a mesh the marking is happy with still iterates to
    // convergence instead of spinning through no-op cycles
    let mut dispersion_armed = true;

    for cycle in 0..cfg.max_cycles.max(1) {
        let sys = ScftSystem::new(&mesh, params.clone())?;
        if state.omega_plus.len() != sys.n_dofs() {
            return Err(Error::Mesh(format!(
                "field length {} does not match the mesh ({} dofs)",
                state.omega_plus.len(),
                sys.n_dofs()
            )));
        }
        let inner =
            scft_until_trigger(&sys, cfg, &mut state, all_records.len(), dispersion_armed)?;
        all_records.extend(inner.records.iter().copied());

        let energy_stable_across_boundary = inner.converged
            && prev_converged_h
                .is_some_and(|p| (inner.last.h - p).abs() < cfg.energy_tol);
        if inner.converged {
            prev_converged_h = Some(inner.last.h);
        }
        let out_of_budget = cycle + 1 == cfg.max_cycles.max(1)
            || all_records.len() >= cfg.max_iterations;
        if energy_stable_across_boundary || out_of_budget {
            final_sol = Some(solution_from(&inner, &all_records));
            break;
        }

        // adapt: indicate on the chain-end fields, rebuild, transfer
        let report = adapt_cycle(
            &sys.assembler,
            &inner.last.q_end,
            &inner.last.q_dagger_end,
            cfg.theta,
            cfg.clamp,
        )?;
        let n_before = sys.n_dofs();
        let new_mesh = report.outcome.mesh;
        let new_dofs = crate::assembly::DofMap::new(&new_mesh).len();
        let changed = new_dofs != n_before
            || new_mesh.active_element_count() != mesh.active_element_count();
        if !changed {
            if inner.converged {
                // converged and the marking has nothing left to say
                final_sol = Some(solution_from(&inner, &all_records));
                break;
            }
            dispersion_armed = false;
            continue;
        }
        dispersion_armed = true;
        let omega_plus = transfer_field(&mesh, &state.omega_plus, &new_mesh)?;
        let omega_minus = transfer_field(&mesh, &state.omega_minus, &new_mesh)?;
        state = ScftState {
            omega_plus,
            omega_minus,
        };
        mesh = new_mesh;
        let (h_min, _) = mesh_resolution(&mesh);
        cycles.push(CycleRecord {
            cycle,
            n_dofs_before: n_before,
            n_dofs_after: new_dofs,
            h_min,
            e_ref: inner.e_ref,
            h: inner.last.h,
            big_q: inner.last.big_q,
            iterations: inner.records.len(),
        });
    }

    let solution = final_sol.expect("loop always sets the final solution");
    let (h_min, h_max) = mesh_resolution(&mesh);
    let n_dofs = crate::assembly::DofMap::new(&mesh).len();
    if let Some(dir) = out_dir {
        write_csv(
            &dir.join("iterations.csv"),
            &ITERATION_HEADER,
            &iteration_rows(&all_records),
        )?;
        write_csv(
            &dir.join("cycles.csv"),
            &[
                "cycle",
                "n_dofs_before",
                "n_dofs_after",
                "h_min",
                "e_ref",
                "H",
                "Q",
                "iterations",
            ],
            &cycles
                .iter()
                .map(|c| {
                    vec![
                        c.cycle.to_string(),
                        c.n_dofs_before.to_string(),
                        c.n_dofs_after.to_string(),
                        fmt_e(c.h_min),
                        fmt_e(c.e_ref),
                        fmt_e(c.h),
                        fmt_e(c.big_q),
                        c.iterations.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?;
        write_vtk_pair(
            dir,
            "fields_final",
            &mesh,
            &density_fields(&solution.phi_a, &solution.phi_b, &state),
        )?;
        write_csv(
            &dir.join("summary.csv"),
            &[
                "H",
                "Q",
                "incompressibility",
                "exchange",
                "iterations",
                "converged",
                "n_dofs",
                "h_min",
                "h_max",
                "cycles",
            ],
            &[vec![
                fmt_e(solution.h),
                fmt_e(solution.big_q),
                fmt_e(solution.incompressibility),
                fmt_e(solution.exchange),
                solution.iterations.to_string(),
                (solution.converged as u8).to_string(),
                n_dofs.to_string(),
                fmt_e(h_min),
                fmt_e(h_max),
                cycles.len().to_string(),
            ]],
        )?;
    }
    let total_iterations = all_records.len();
    Ok(AdaptiveArtifacts {
        mesh,
        state,
        solution,
        cycles,
        n_dofs,
        h_min,
        h_max,
        total_iterations,
    })
}

fn solution_from(inner: &InnerRun, all_records: &[IterationRecord]) -> ScftSolution {
    ScftSolution {
        converged: inner.converged,
        iterations: all_records.len(),
        h: inner.last.h,
        big_q: inner.last.big_q,
        incompressibility: inner.last.incompressibility,
        exchange: inner.last.exchange,
        phi_a: inner.last.phi_a.clone(),
        phi_b: inner.last.phi_b.clone(),
        q_end: inner.last.q_end.clone(),
        q_dagger_end: inner.last.q_dagger_end.clone(),
        history: all_records.to_vec(),
    }
}

/// Adaptive solve starting from the configured mesh and initial fields.
pub fn run_scft_adaptive(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<AdaptiveArtifacts> {
    cfg.validate()?;
    let mesh = cfg.build_mesh()?;
    let asm = Assembler::new(&mesh)?;
    let state = initial_state(cfg, &asm)?;
    drop(asm);
    run_scft_adaptive_from(cfg, mesh, state, out_dir)
}

/// Continuation over `chi_n_targets`: each stage starts from the previous
/// stage's final mesh and fields. Per-stage outputs land in
/// `out/chi_<value>/`; a top-level summary collects one row per stage.
pub fn run_continuation(
    cfg: &RunConfig,
    out_dir: Option<&Path>,
) -> Result<Vec<(f64, AdaptiveArtifacts)>> {
    cfg.validate()?;
    if cfg.chi_n_targets.is_empty() {
        return Err(Error::Config(
            "continuation needs a nonempty chi_n_targets list".into(),
        ));
    }
    let mut mesh = cfg.build_mesh()?;
    let asm = Assembler::new(&mesh)?;
    let mut state = initial_state(cfg, &asm)?;
    drop(asm);
    let mut stages = Vec::new();
    for &chi_n in &cfg.chi_n_targets {
        let mut stage_cfg = cfg.clone();
        stage_cfg.chi_n = chi_n;
        let stage_dir = out_dir.map(|d| d.join(format!("chi_{chi_n}")));
        let artifacts =
            run_scft_adaptive_from(&stage_cfg, mesh, state, stage_dir.as_deref())?;
        mesh = artifacts.mesh.clone();
        state = ScftState {
            omega_plus: artifacts.state.omega_plus.clone(),
            omega_minus: artifacts.state.omega_minus.clone(),
        };
        stages.push((chi_n, artifacts));
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        let rows: Vec<Vec<String>> = stages
            .iter()
            .map(|(chi_n, a)| {
                vec![
                    fmt_e(*chi_n),
                    fmt_e(a.solution.h),
                    fmt_e(a.solution.big_q),
                    a.n_dofs.to_string(),
                    fmt_e(a.h_min),
                    a.total_iterations.to_string(),
                    (a.solution.converged as u8).to_string(),
                ]
            })
            .collect();
        write_csv(
            &dir.join("summary.csv"),
            &["chi_n", "H", "Q", "n_dofs", "h_min", "iterations", "converged"],
            &rows,
        )?;
    }
    Ok(stages)
}

/// The dof count of the uniform icosphere whose smallest element first
/// reaches `h_min`, for comparing adaptive and uniform resolution budgets.
/// Returns (level, dofs).
pub fn uniform_dof_estimate(
    surface: &LevelSetSurface,
    degree: usize,
    h_min: f64,
    start_level: usize,
) -> Result<(usize, usize)> {
    assert!((1..=3).contains(&degree));
    for level in start_level..=11 {
        let mesh = HighOrderSurfaceMesh::icosphere(surface.clone(), level, 1)?;
        let (mesh_h_min, _) = mesh_resolution(&mesh);
        if mesh_h_min <= h_min * 1.05 {
            let vertices = mesh.nodes.len();
            let faces = mesh.active_element_count();
            let mut edge_set = HashSet::new();
            for &e in &mesh.active_elements() {
                let [a, b, c] = mesh.element_vertices(e);
                for (u, v) in [(a, b), (b, c), (a, c)] {
                    edge_set.insert((u.min(v), u.max(v)));
                }
            }
            let edges = edge_set.len();
            let dofs = vertices
                + (degree - 1) * edges
                + (degree - 1) * (degree.saturating_sub(2)) / 2 * faces;
            return Ok((level, dofs));
        }
    }
    Err(Error::Mesh(format!(
        "no icosphere level at or below 11 reaches h_min {h_min}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn config_round_trips_through_its_echo() {
        let mut cfg = RunConfig::default();
        cfg.mode = Some("scft-adaptive".into());
        cfg.chi_n_targets = vec![25.0, 40.0, 60.0];
        cfg.h_floor = Some(0.015);
        cfg.surface = "expr: x^2 + y^2 + z^2 - 2".into();
        let text = cfg.to_toml_string().unwrap();
        let back = RunConfig::parse(&text).unwrap();
        assert_eq!(cfg, back);

        let dir = tempfile::tempdir().unwrap();
        let path = cfg.echo(dir.path()).unwrap();
        let loaded = RunConfig::load(&path).unwrap();
        assert_eq!(cfg, loaded);
    }

    #[test]
    fn config_rejects_bad_values() {
        assert!(RunConfig::parse("degree = 4").is_err());
        assert!(RunConfig::parse("degree = 0").is_err());
        assert!(RunConfig::parse("mode = \"interpretive-dance\"").is_err());
        assert!(RunConfig::parse("init = \"nope\"").is_err());
        assert!(RunConfig::parse("surface = \"dodecahedron\"").is_err());
        assert!(RunConfig::parse("h_floor = -0.1").is_err());
        // unknown keys are configuration mistakes, not silence
        assert!(RunConfig::parse("degre = 2").is_err());
        // a sane partial config parses and keeps defaults elsewhere
        let cfg = RunConfig::parse("degree = 3\nchi_n = 30.0").unwrap();
        assert_eq!(cfg.degree, 3);
        assert_eq!(cfg.chi_n, 30.0);
        assert_eq!(cfg.f, 0.2);
    }

    #[test]
    fn forcing_is_consistent_with_a_finite_difference_surface_laplacian() {
        // closest-point extension: for x on the surface, the ambient
        // Laplacian of u(project(y)) equals the surface Laplacian of u
        let bench = HeatBenchmark::unit_sphere();
        let surface = LevelSetSurface::unit_sphere();
        let t = 0.3;
        let h = 2e-3;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let raw: [f64; 3] = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ];
            let norm = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
            if norm < 0.3 {
                continue;
            }
            let x = [raw[0] / norm, raw[1] / norm, raw[2] / norm];
            let u_ext = |y: [f64; 3]| bench.exact(surface.project(y).unwrap(), t);
            let mut lap = 0.0;
            for d in 0..3 {
                let mut plus = x;
                let mut minus = x;
                plus[d] += h;
                minus[d] -= h;
                lap += (u_ext(plus) - 2.0 * u_ext(x) + u_ext(minus)) / (h * h);
            }
            // du/dt = Lap_S u + f, and du/dt = -u for this solution
            let defect = -bench.exact(x, t) - lap - bench.forcing(x, t);
            assert!(
                defect.abs() < 1e-3,
                "forcing inconsistent at {x:?}: defect {defect}"
            );
        }
    }

    #[test]
    fn fourth_order_weights_integrate_cubics_exactly() {
        for n in [2usize, 3, 5, 7, 12, 15] {
            let w = fourth_order_weights(n);
            assert_eq!(w.len(), n + 1);
            let total: f64 = w.iter().sum();
            assert!((total - 1.0).abs() < 1e-14, "n={n}: weights sum {total}");
            for p in 0..=3 {
                let exact = 1.0 / (p as f64 + 1.0);
                let approx: f64 = w
                    .iter()
                    .enumerate()
                    .map(|(k, wk)| wk * (k as f64 / n as f64).powi(p))
                    .sum();
                assert!(
                    (approx - exact).abs() < 1e-14,
                    "n={n}, power {p}: {approx} vs {exact}"
                );
            }
        }
        // fourth-order error decay on a quartic
        let err = |n: usize| {
            let w = fourth_order_weights(n);
            let approx: f64 = w
                .iter()
                .enumerate()
                .map(|(k, wk)| wk * (k as f64 / n as f64).powi(4))
                .sum();
            (approx - 0.2).abs()
        };
        assert!(err(64) < err(8) / 500.0, "{} vs {}", err(64), err(8));
    }

    #[test]
    fn slope_helper_recovers_an_exact_line() {
        let x = [0.0, 1.0, 2.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 3.5 * v - 1.0).collect();
        assert!((least_squares_slope(&x, &y) - 3.5).abs() < 1e-12);
    }

    #[test]
    fn heat_run_reports_sane_errors_at_small_scale() {
        let run = run_heat_once(2, 2, 24, ContourScheme::SpectralDeferred(1), 1e-11).unwrap();
        assert_eq!(run.n_dofs, 642);
        assert!(run.h_max > 0.2 && run.h_max < 0.6, "h_max {}", run.h_max);
        assert!(run.error_l2 < 2e-2, "final error {}", run.error_l2);
        assert!(run.integral_error_l2 < 2e-2, "integral error {}", run.integral_error_l2);
        // the crank-nicolson path exercises the uniform grid and the
        // composite rule
        let cn = run_heat_once(2, 2, 24, ContourScheme::CrankNicolson, 1e-11).unwrap();
        assert!(cn.error_l2 < 5e-2);
    }

    #[test]
    fn uniform_estimate_matches_icosphere_dof_counts() {
        let surface = LevelSetSurface::unit_sphere();
        let mesh = HighOrderSurfaceMesh::icosphere(surface.clone(), 3, 1).unwrap();
        let (h_min, _) = mesh_resolution(&mesh);
        // level 3: 642 vertices, 1920 edges, 1280 faces
        let (level, dofs) = uniform_dof_estimate(&surface, 1, h_min, 1).unwrap();
        assert_eq!((level, dofs), (3, 642));
        let (_, dofs2) = uniform_dof_estimate(&surface, 2, h_min, 1).unwrap();
        assert_eq!(dofs2, 642 + 1920);
        let (_, dofs3) = uniform_dof_estimate(&surface, 3, h_min, 1).unwrap();
        assert_eq!(dofs3, 642 + 2 * 1920 + 1280);
    }

    fn tiny_cfg() -> RunConfig {
        RunConfig {
            surface: "sphere".into(),
            degree: 1,
            level: 1,
            chi_n: 12.0,
            f: 0.4,
            contour_nodes: 17,
            sdc_sweeps: 1,
            max_iterations: 40,
            init: "homogeneous".into(),
            energy_tol: 1e-7,
            ..RunConfig::default()
        }
    }

    #[test]
    fn fixed_mesh_driver_emits_consistent_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = tiny_cfg();
        let a = run_scft(&cfg, Some(dir.path())).unwrap();
        assert_eq!(a.n_dofs, 42);
        assert!(a.h_min > 0.0 && a.h_min <= a.h_max);
        assert_eq!(a.solution.history.len(), a.solution.iterations);
        let iterations = std::fs::read_to_string(dir.path().join("iterations.csv")).unwrap();
        assert_eq!(iterations.lines().count(), a.solution.iterations + 1);
        assert!(iterations.starts_with("iteration,H,Q,"));
        let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        assert_eq!(summary.lines().count(), 2);
        assert!(dir.path().join("fields_final.vtk").exists());
        assert!(dir.path().join("config.toml").exists());
        // identical config, identical bytes
        let dir2 = tempfile::tempdir().unwrap();
        run_scft(&cfg, Some(dir2.path())).unwrap();
        let again = std::fs::read_to_string(dir2.path().join("iterations.csv")).unwrap();
        assert_eq!(iterations, again);
    }

    #[test]
    fn adaptive_driver_records_cycles_and_matches_its_mesh() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = tiny_cfg();
        cfg.adapt_max_iterations = 6;
        cfg.max_cycles = 3;
        cfg.init = "seeded".into();
        cfg.max_iterations = 60;
        let a = run_scft_adaptive(&cfg, Some(dir.path())).unwrap();
        assert_eq!(a.state.omega_plus.len(), a.n_dofs);
        assert_eq!(a.solution.history.len(), a.total_iterations);
        let cycles = std::fs::read_to_string(dir.path().join("cycles.csv")).unwrap();
        assert_eq!(cycles.lines().count(), a.cycles.len() + 1);
        for c in &a.cycles {
            assert!(c.n_dofs_before > 0 && c.n_dofs_after > 0);
            assert!(c.h_min > 0.0);
        }
        assert!(dir.path().join("summary.csv").exists());
        assert!(dir.path().join("iterations.csv").exists());
    }
}
