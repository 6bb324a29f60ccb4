//! End-to-end acceptance checks: spatial and contour convergence orders,
//! spectral-versus-stepped contour accuracy, the exact zero-field fixed
//! point of the field iteration, a converged melt pilot, refinement
//! mechanics, and the element/quadrature/marking property suite.
//!
//! Each check prints one `[PASS]`/`[FAIL]` line carrying its measured
//! numbers before asserting, so a failing run still reports every
//! measurement. Tests marked `#[ignore]` are the full-scale variants meant
//! for scheduled runs:
//!
//! ```text
//! cargo test --release --test acceptance -- --ignored --test-threads 1
//! ```

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;
use std::sync::Arc;

use surfscft::adaptivity::{log_marks, recover_gradient};
use surfscft::assembly::{Assembler, CsrMatrix, CsrPattern, DofMap};
use surfscft::contour::{cn_sweep_on_nodes, solve_propagator, uniform_nodes, ContourGrid};
use surfscft::element::{barycentric_monomial_integral, gauss_rule, ShapeBasis};
use surfscft::harness::{
    heat_order_slopes, least_squares_slope, run_contour_integral_study, run_heat_order_study,
    run_scft, run_scft_adaptive, uniform_dof_estimate, ContourScheme, HeatBenchmark, RunConfig,
};
use surfscft::mesh::{transfer_field, HighOrderSurfaceMesh};
use surfscft::scft::{ScftParams, ScftState, ScftSystem};
use surfscft::surface::LevelSetSurface;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "[PASS]"
    } else {
        "[FAIL]"
    }
}

fn unit_icosphere(level: usize, degree: usize) -> HighOrderSurfaceMesh {
    HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), level, degree).unwrap()
}

// ---------------------------------------------------------------------------
// 1. Spatial convergence: L2 orders p+1 for degrees 1..3 on nested spheres.
// ---------------------------------------------------------------------------

#[test]
fn spatial_l2_orders_match_element_degree() {
    // 512 plain trapezoidal steps push the contour error far below the
    // spatial error of every (degree, level) pair in the sweep.
    let rows =
        run_heat_order_study(&[1, 2, 3], &[2, 3, 4], 512, ContourScheme::CrankNicolson, 1e-12)
            .unwrap();
    let slopes = heat_order_slopes(&rows);
    let ok = slopes
        .iter()
        .all(|&(p, s)| (s - (p as f64 + 1.0)).abs() <= 0.25);
    let detail: Vec<String> = slopes
        .iter()
        .map(|&(p, s)| format!("p{p} {s:.3}"))
        .collect();
    let line = format!(
        "{} spatial L2 convergence, sphere levels 2-4: slopes {} (target p+1 within 0.25)",
        verdict(ok),
        detail.join(", ")
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 2. Contour stepping orders: plain stepping is second order, one deferred
//    correction sweep is fourth order, on the surface benchmark and on the
//    scalar surrogate dq/dt = -q.
// ---------------------------------------------------------------------------

#[test]
fn contour_stepping_is_second_order_and_one_sweep_reaches_fourth() {
    // Surface leg: coarse cubic sphere, error measured against a
    // finely-stepped run of the same semidiscrete system so the spatial
    // error cancels exactly and the pure time error is visible.
    let mesh = unit_icosphere(0, 3);
    let asm = Assembler::new(&mesh).unwrap();
    let mass = asm.mass();
    let stiff = asm.stiffness();
    let bench = HeatBenchmark::unit_sphere();
    let q0 = asm.interpolate(|x| bench.exact(x, 0.0));
    let load = |t: f64| asm.load_vector(|x| bench.forcing(x, t));
    let reference =
        cn_sweep_on_nodes(&uniform_nodes(16384), &mass, &stiff, &q0, Some(&load), 1e-13).unwrap();
    let q_ref = reference.last().unwrap().clone();
    let time_err = |q: &[f64]| {
        let d: Vec<f64> = q.iter().zip(&q_ref).map(|(a, b)| a - b).collect();
        asm.l2_norm(&d)
    };

    let cn_counts = [16usize, 32, 64, 128];
    let cn_errs: Vec<f64> = cn_counts
        .iter()
        .map(|&n| {
            let q = cn_sweep_on_nodes(&uniform_nodes(n), &mass, &stiff, &q0, Some(&load), 1e-13)
                .unwrap();
            time_err(q.last().unwrap())
        })
        .collect();
    let sdc_counts = [24usize, 32, 48, 64];
    let sdc_errs: Vec<f64> = sdc_counts
        .iter()
        .map(|&n| {
            let grid = ContourGrid::with_breakpoints(&[0.0, 1.0], n).unwrap();
            let q = solve_propagator(&grid, &mass, &[&stiff], &q0, Some(&load), 1, 1e-13).unwrap();
            time_err(q.last().unwrap())
        })
        .collect();
    let slope_of = |counts: &[usize], errs: &[f64]| {
        let x: Vec<f64> = counts.iter().map(|&n| (1.0 / n as f64).ln()).collect();
        let y: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
        least_squares_slope(&x, &y)
    };
    let pde_cn = slope_of(&cn_counts, &cn_errs);
    let pde_sdc = slope_of(&sdc_counts, &sdc_errs);

    // Scalar surrogate dq/dt = -q, q(0) = 1, exact value e^{-1} at t = 1.
    let pattern = Arc::new(CsrPattern { n: 1, row_ptr: vec![0, 1], col_idx: vec![0] });
    let mut sm = CsrMatrix::zeros(pattern.clone());
    sm.values[0] = 1.0;
    let mut sop = CsrMatrix::zeros(pattern);
    sop.values[0] = 1.0;
    let exact = (-1.0f64).exp();
    let scn_counts = [16usize, 32, 64, 128];
    let scn_errs: Vec<f64> = scn_counts
        .iter()
        .map(|&n| {
            let q = cn_sweep_on_nodes(&uniform_nodes(n), &sm, &sop, &[1.0], None, 1e-13).unwrap();
            (q.last().unwrap()[0] - exact).abs()
        })
        .collect();
    let ssdc_counts = [8usize, 16, 32];
    let ssdc_errs: Vec<f64> = ssdc_counts
        .iter()
        .map(|&n| {
            let grid = ContourGrid::with_breakpoints(&[0.0, 1.0], n).unwrap();
            let q = solve_propagator(&grid, &sm, &[&sop], &[1.0], None, 1, 1e-13).unwrap();
            (q.last().unwrap()[0] - exact).abs()
        })
        .collect();
    let scalar_cn = slope_of(&scn_counts, &scn_errs);
    let scalar_sdc = slope_of(&ssdc_counts, &ssdc_errs);

    let ok = (pde_cn - 2.0).abs() <= 0.2
        && (pde_sdc - 4.0).abs() <= 0.4
        && (scalar_cn - 2.0).abs() <= 0.2
        && (scalar_sdc - 4.0).abs() <= 0.4;
    let line = format!(
        "{} contour orders: surface CN {pde_cn:.3} / SDC {pde_sdc:.3}, scalar CN {scalar_cn:.3} / SDC {scalar_sdc:.3} (targets 2 within 0.2, 4 within 0.4)",
        verdict(ok)
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 3. Spectral contour grid versus plain stepping on the chain-averaged
//    density: the structure of the comparison at CI scale, the full-size
//    gap as a scheduled run.
// ---------------------------------------------------------------------------

#[test]
fn spectral_contour_grid_beats_plain_stepping() {
    let counts = [8usize, 16, 32, 64];
    let rows = run_contour_integral_study(4, 3, &counts, 1e-10).unwrap();
    let cn: Vec<f64> = rows.iter().map(|r| r.error_cn).collect();
    let sdc: Vec<f64> = rows.iter().map(|r| r.error_sdc).collect();

    // At the coarsest grid the corrected solver is already an order of
    // magnitude ahead; it then sits on the spatial floor (flat to within
    // 25%) which plain stepping only reaches at the finest count (within
    // 30%), while still decaying towards it (>= 1.5x from 32 to 64).
    let gap8 = cn[0] / sdc[0];
    let plateau: f64 = {
        let hi = sdc[1..].iter().cloned().fold(f64::MIN, f64::max);
        let lo = sdc[1..].iter().cloned().fold(f64::MAX, f64::min);
        hi / lo
    };
    let floor_ratio = cn[3] / sdc[3];
    let cn_decay = cn[2] / cn[3];
    let ok = gap8 >= 10.0 && plateau <= 1.25 && floor_ratio <= 1.3 && cn_decay >= 1.5;
    let line = format!(
        "{} density error, cubic level-4 sphere: gap at 8 nodes {gap8:.1}x (>=10), corrected plateau {plateau:.3} (<=1.25), shared floor ratio {floor_ratio:.3} (<=1.3), stepped decay 32->64 {cn_decay:.2}x (>=1.5)",
        verdict(ok)
    );
    println!("{line}");
    assert!(ok, "{line}");
}

#[test]
#[ignore = "full-scale contour gap, run on schedule"]
fn full_scale_spectral_contour_gap() {
    let rows = run_contour_integral_study(5, 3, &[16, 32], 1e-10).unwrap();
    let sdc16 = rows[0].error_sdc;
    let cn32 = rows[1].error_cn;
    let gap = cn32 / sdc16;
    let anchor = sdc16 / 1.89e-7;
    let ok = gap >= 10.0 && (0.1..=10.0).contains(&anchor);
    let line = format!(
        "{} full-scale density error, cubic level-5 sphere (92162 dofs): corrected@16 {sdc16:.3e} vs stepped@32 {cn32:.3e}, gap {gap:.1}x (>=10), reference-scale ratio {anchor:.2} (in [0.1, 10])",
        verdict(ok)
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 4. Zero fields are an exact fixed point of the iteration.
// ---------------------------------------------------------------------------

#[test]
fn zero_fields_are_an_exact_fixed_point() {
    let mesh = unit_icosphere(2, 2);
    let zeros = |n: usize| ScftState { omega_plus: vec![0.0; n], omega_minus: vec![0.0; n] };

    // Symmetric composition: both field residuals vanish identically, so
    // the solve terminates after a single iteration.
    let params = ScftParams {
        chi_n: 20.0,
        f: 0.5,
        contour_nodes: 33,
        ..ScftParams::default()
    };
    let sys = ScftSystem::new(&mesh, params).unwrap();
    let mut state = zeros(sys.n_dofs());
    let sol = sys.solve(&mut state).unwrap();
    let q_dev = (sol.big_q - 1.0).abs();
    let phi_dev = sol
        .phi_a
        .iter()
        .map(|p| (p - 0.5).abs())
        .fold(0.0, f64::max);
    let h_dev = sol.h.abs();

    // Asymmetric composition: the exchange residual is nonzero, so the
    // iteration continues, but a single step still reports the exact
    // partition function, block fraction, and energy.
    let params2 = ScftParams {
        chi_n: 20.0,
        f: 0.35,
        contour_nodes: 33,
        ..ScftParams::default()
    };
    let sys2 = ScftSystem::new(&mesh, params2).unwrap();
    let mut state2 = zeros(sys2.n_dofs());
    let step = sys2.iteration(&mut state2).unwrap();
    let q_dev2 = (step.big_q - 1.0).abs();
    let phi_dev2 = step
        .phi_a
        .iter()
        .map(|p| (p - 0.35).abs())
        .fold(0.0, f64::max);
    let h_dev2 = step.h.abs();

    let ok = sol.converged
        && sol.iterations == 1
        && q_dev <= 1e-8
        && phi_dev <= 1e-8
        && h_dev <= 1e-10
        && q_dev2 <= 1e-8
        && phi_dev2 <= 1e-8
        && h_dev2 <= 1e-10;
    let line = format!(
        "{} zero-field fixed point: f=0.5 one iteration, |Q-1| {q_dev:.1e}, max|phi_A-f| {phi_dev:.1e}, |H| {h_dev:.1e}; f=0.35 probe |Q-1| {q_dev2:.1e}, max|phi_A-f| {phi_dev2:.1e}, |H| {h_dev2:.1e} (<= 1e-8 / 1e-8 / 1e-10)",
        verdict(ok)
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 5. Melt pilot: the quadratic level-4 sphere at chi N = 25, f = 0.2
//    converges with a small incompressibility defect; the level-6 run
//    reproducing the reference observables is a scheduled test.
// ---------------------------------------------------------------------------

#[test]
fn melt_pilot_converges_with_small_incompressibility() {
    let cfg = RunConfig {
        // One decade beyond the production energy tolerance: the energy
        // settles before the incompressibility defect does, and the extra
        // iterations carry the defect below the acceptance bar.
        energy_tol: 1e-8,
        ..RunConfig::default()
    };
    let art = run_scft(&cfg, None).unwrap();
    let sol = &art.solution;
    let delta_h = sol.history.last().map(|r| r.delta_h.abs()).unwrap_or(f64::NAN);
    let ok = sol.converged && delta_h < 1e-6 && sol.incompressibility < 1e-2;
    let line = format!(
        "{} melt pilot, quadratic level-4 sphere R=3.56, chiN=25, f=0.2: converged={} after {} iterations, |dH| {delta_h:.1e} (< 1e-6), incompressibility {:.2e} (< 1e-2), H {:.6}, Q {:.4}",
        verdict(ok),
        sol.converged,
        sol.iterations,
        sol.incompressibility,
        sol.h,
        sol.big_q
    );
    println!("{line}");
    assert!(ok, "{line}");
}

#[test]
#[ignore = "full-scale melt observables, run on schedule"]
fn full_scale_melt_matches_reference_observables() {
    let cfg = RunConfig { level: 6, ..RunConfig::default() };
    let art = run_scft(&cfg, None).unwrap();
    let sol = &art.solution;
    let q_rel = (sol.big_q / 3.2326e2 - 1.0).abs();
    let h_dev = (sol.h - (-2.336165)).abs();
    let ok = sol.converged && q_rel <= 1e-2 && h_dev <= 5e-3;
    let line = format!(
        "{} full-scale melt, quadratic level-6 sphere: converged={} after {} iterations, Q {:.4} (within 1% of 323.26: rel {q_rel:.2e}), H {:.6} (within 5e-3 of -2.336165: dev {h_dev:.2e})",
        verdict(ok),
        sol.converged,
        sol.iterations,
        sol.big_q,
        sol.h
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 6. Refinement mechanics: marking one element changes the mesh only near
//    that element, coarsening restores it, and fields survive the round
//    trip; the adaptive-versus-uniform efficiency comparison is scheduled.
// ---------------------------------------------------------------------------

#[test]
fn refinement_is_local_and_round_trips() {
    let mesh = unit_icosphere(2, 2);
    let sorted_tri = |m: &HighOrderSurfaceMesh, e: u32| {
        let mut v = m.element_vertices(e);
        v.sort_unstable();
        v
    };
    let before = mesh.active_elements();
    let n0 = before.len();
    let before_set: HashSet<[u32; 3]> = before.iter().map(|&e| sorted_tri(&mesh, e)).collect();

    let target = before[37];
    let tverts = mesh.element_vertices(target);
    let t_centroid = centroid(&mesh, tverts);
    let t_size = mesh.element_size(target);

    let out = mesh.refine(&HashMap::from([(target, 1)])).unwrap();
    assert!(out.skipped_floor.is_empty(), "no edge-length floor at this scale");
    let fine = out.mesh;
    let after = fine.active_elements();
    let after_set: HashSet<[u32; 3]> = after.iter().map(|&e| sorted_tri(&fine, e)).collect();

    // Locality, removals: only the target and elements sharing one of its
    // edges (two vertices) may disappear.
    let vanished: Vec<&[u32; 3]> = before_set.difference(&after_set).collect();
    let removals_local = vanished.len() <= 4
        && vanished.iter().all(|tri| {
            tri.iter().filter(|v| tverts.contains(v)).count() >= 2
        });
    // Locality, additions: every new element sits within two element sizes
    // of the target's centroid.
    let added: Vec<&[u32; 3]> = after_set.difference(&before_set).collect();
    let additions_local = added.iter().all(|tri| {
        let c = centroid(&fine, **tri);
        dist(c, t_centroid) <= 2.0 * t_size
    });

    // Round trip: asking every element to merge collapses exactly the
    // sibling groups created above and reproduces the original mesh.
    let all_marked: HashMap<u32, u32> = after.iter().map(|&e| (e, 1)).collect();
    let back = fine.coarsen(&all_marked).unwrap().mesh;
    let back_set: HashSet<[u32; 3]> =
        back.active_elements().iter().map(|&e| sorted_tri(&back, e)).collect();
    let round_trip = back.active_element_count() == n0 && back_set == before_set;

    // A smooth field survives refine + coarsen with interpolation-scale
    // damage only (node projection makes child patches deviate slightly
    // from their parent, so the transfer is not bitwise).
    let asm0 = Assembler::new(&mesh).unwrap();
    let f = |x: [f64; 3]| x[0] + 2.0 * x[1] - x[2];
    let f0 = asm0.interpolate(f);
    let f1 = transfer_field(&mesh, &f0, &fine).unwrap();
    let f2 = transfer_field(&fine, &f1, &back).unwrap();
    let asm_back = Assembler::new(&back).unwrap();
    let transfer_err = asm_back.l2_error(&f2, f);
    let transfer_ok = f2.len() == f0.len() && transfer_err <= 1e-2;

    let ok = removals_local && additions_local && round_trip && transfer_ok;
    let line = format!(
        "{} refinement mechanics on the level-2 quadratic sphere: {} removals all touch the target's edges ({}), {} additions within 2 element sizes ({}), coarsen restores all {} elements ({}), round-trip field error {transfer_err:.1e} (<= 1e-2)",
        verdict(ok),
        vanished.len(),
        removals_local,
        added.len(),
        additions_local,
        n0,
        round_trip
    );
    println!("{line}");
    assert!(ok, "{line}");
}

fn centroid(mesh: &HighOrderSurfaceMesh, verts: [u32; 3]) -> [f64; 3] {
    let mut c = [0.0; 3];
    for v in verts {
        let p = mesh.nodes[v as usize];
        for k in 0..3 {
            c[k] += p[k] / 3.0;
        }
    }
    c
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Dof count of the degree-p icosphere at a subdivision level (10 * 4^l + 2
/// vertices, 30 * 4^l edges, 20 * 4^l faces).
fn icosphere_dofs(level: usize, degree: usize) -> usize {
    let quad = 4usize.pow(level as u32);
    let (v, e, f) = (10 * quad + 2, 30 * quad, 20 * quad);
    v + (degree - 1) * e + (degree - 1) * degree.saturating_sub(2) / 2 * f
}

#[test]
#[ignore = "adaptive-versus-uniform efficiency, run on schedule"]
fn adaptive_solve_matches_uniform_observables_with_fewer_dofs() {
    let cfg = RunConfig::default();
    let adaptive = run_scft_adaptive(&cfg, None).unwrap();

    // Uniform comparator: the subdivision level whose edge length matches
    // the adapted mesh's finest, raised further if needed so it carries at
    // least twice the adapted dof count.
    let (matched_level, est) = uniform_dof_estimate(
        &cfg.surface().unwrap(),
        cfg.degree,
        adaptive.h_min,
        cfg.level,
    )
    .unwrap();
    let mut ucfg = cfg.clone();
    ucfg.level = matched_level;
    while icosphere_dofs(ucfg.level, ucfg.degree) < 2 * adaptive.n_dofs {
        ucfg.level += 1;
    }
    let uniform = run_scft(&ucfg, None).unwrap();

    let q_rel = (adaptive.solution.big_q / uniform.solution.big_q - 1.0).abs();
    let dof_ratio = adaptive.n_dofs as f64 / est as f64;
    let ok = adaptive.solution.converged
        && uniform.solution.converged
        && uniform.n_dofs >= 2 * adaptive.n_dofs
        && q_rel < 1e-3
        && dof_ratio <= 0.60;
    let line = format!(
        "{} adaptive vs uniform: Q {:.4} on {} adapted dofs vs {:.4} on {} uniform dofs at level {} (rel {q_rel:.2e}, < 1e-3; comparator >= 2x dofs), matched-resolution uniform mesh needs {est} dofs for h_min {:.3} (ratio {dof_ratio:.2}, <= 0.60)",
        verdict(ok),
        adaptive.solution.big_q,
        adaptive.n_dofs,
        uniform.solution.big_q,
        uniform.n_dofs,
        ucfg.level,
        adaptive.h_min
    );
    println!("{line}");
    assert!(ok, "{line}");
}

// ---------------------------------------------------------------------------
// 7. Element, quadrature, and marking properties, each against an
//    independent closed-form oracle.
// ---------------------------------------------------------------------------

#[test]
fn element_quadrature_and_marking_properties_hold() {
    let mut checks: Vec<(&'static str, bool)> = Vec::new();

    // Shape functions: nodal Kronecker property, partition of unity,
    // vanishing gradient sum, and reproduction of every monomial the basis
    // claims to span, at interior probe points.
    let probes = [
        [0.1, 0.2],
        [0.3, 0.3],
        [1.0 / 3.0, 1.0 / 3.0],
        [0.25, 0.7],
        [0.05, 0.05],
        [0.6, 0.15],
    ];
    let mut shape_ok = true;
    for p in 1..=3usize {
        let basis = ShapeBasis::new(p);
        let nodes = basis.lattice_points();
        for (beta, &node) in nodes.iter().enumerate() {
            for alpha in 0..basis.len() {
                let want = if alpha == beta { 1.0 } else { 0.0 };
                shape_ok &= (basis.eval(alpha, node) - want).abs() <= 1e-12;
            }
        }
        for &u in &probes {
            let vals = basis.eval_all(u);
            shape_ok &= (vals.iter().sum::<f64>() - 1.0).abs() <= 1e-12;
            let mut gsum = [0.0; 2];
            for alpha in 0..basis.len() {
                let g = basis.eval_gradient(alpha, u);
                gsum[0] += g[0];
                gsum[1] += g[1];
            }
            shape_ok &= gsum[0].abs() <= 1e-11 && gsum[1].abs() <= 1e-11;
            for a in 0..=p {
                for b in 0..=(p - a) {
                    let f = |x: [f64; 2]| x[0].powi(a as i32) * x[1].powi(b as i32);
                    let interp: f64 = nodes
                        .iter()
                        .zip(&vals)
                        .map(|(&x, &phi)| f(x) * phi)
                        .sum();
                    shape_ok &= (interp - f(u)).abs() <= 1e-11;
                }
            }
        }
    }
    checks.push(("shape functions", shape_ok));

    // Triangle quadrature: positive interior rules that integrate every
    // monomial up to the advertised degree exactly (reference-triangle
    // integral of xi^a eta^b equals a! b! / (a+b+2)!).
    let mut quad_ok = true;
    for d in 1..=20usize {
        let rule = gauss_rule(d);
        quad_ok &= rule.degree >= d;
        quad_ok &= (rule.weights.iter().sum::<f64>() - 1.0).abs() <= 1e-13;
        quad_ok &= rule.weights.iter().all(|&w| w > 0.0);
        quad_ok &= rule
            .points
            .iter()
            .all(|l| l.iter().all(|&li| li > 0.0 && li < 1.0));
        for a in 0..=d {
            for b in 0..=(d - a) {
                let num: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(l, &w)| w * l[1].powi(a as i32) * l[2].powi(b as i32))
                    .sum::<f64>()
                    * 0.5;
                let exact = barycentric_monomial_integral(0, a, b, 0.5);
                quad_ok &= (num - exact).abs() <= 5e-14;
            }
        }
    }
    checks.push(("triangle quadrature", quad_ok));

    // Contour quadrature: the weights of a single 12-interval panel
    // integrate t^k exactly through degree 12, like any interpolatory rule
    // on 13 nodes.
    let grid = ContourGrid::with_breakpoints(&[0.0, 1.0], 12).unwrap();
    let w = grid.quadrature_weights();
    let mut cc_ok = grid.panels.len() == 1 && w.len() == grid.nodes.len();
    for k in 0..=12usize {
        let num: f64 = grid
            .nodes
            .iter()
            .zip(&w)
            .map(|(&t, &wi)| wi * t.powi(k as i32))
            .sum();
        cc_ok &= (num - 1.0 / (k as f64 + 1.0)).abs() <= 1e-13;
    }
    checks.push(("contour quadrature", cc_ok));

    // Mass matrix: its total equals the quadrature area bit-for-bit (both
    // integrate the constant 1), and the area converges to 4 pi at order
    // p+1 or better.
    let mut mass_ok = true;
    for p in 1..=3usize {
        let mut errs = Vec::new();
        for level in 1..=3usize {
            let mesh = unit_icosphere(level, p);
            let asm = Assembler::new(&mesh).unwrap();
            let total: f64 = asm.mass().values.iter().sum();
            let area = asm.area();
            mass_ok &= (total - area).abs() <= 1e-12 * area;
            errs.push(((area - 4.0 * PI).abs()).ln());
        }
        let xs: Vec<f64> = (1..=3).map(|l| (0.5f64.powi(l as i32)).ln()).collect();
        let slope = least_squares_slope(&xs, &errs);
        mass_ok &= slope >= p as f64 + 1.0 - 0.35;
    }
    checks.push(("mass equals area, order p+1", mass_ok));

    // Stiffness matrix: constants lie in its kernel.
    let mesh = unit_icosphere(3, 2);
    let asm = Assembler::new(&mesh).unwrap();
    let a = asm.stiffness();
    let ones = vec![1.0; asm.n_dofs()];
    let a1 = matvec(&a, &ones);
    let diag_scale = (0..asm.n_dofs())
        .map(|i| csr_get(&a, i, i).abs())
        .fold(0.0, f64::max);
    let kernel_resid = a1.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let kernel_ok = kernel_resid <= 1e-10 * diag_scale;
    checks.push(("stiffness kernel", kernel_ok));

    // Smallest nonzero Laplace-Beltrami eigenvalue of the unit sphere is 2:
    // shifted inverse iteration with constants deflated in the mass inner
    // product.
    let m = asm.mass();
    let shifted = CsrMatrix {
        pattern: a.pattern.clone(),
        values: a.values.iter().zip(&m.values).map(|(x, y)| x + y).collect(),
    };
    let positions = asm.dof_positions();
    let mut v: Vec<f64> = positions.iter().map(|p| p[0] + 0.3 * p[1] * p[2]).collect();
    let m1 = matvec(&m, &ones);
    let vol: f64 = m1.iter().sum();
    for _ in 0..60 {
        let b = matvec(&m, &v);
        let (y, _) = surfscft::assembly::solve_sym(&shifted, &b, Some(&v), 1e-12, 10_000).unwrap();
        let mean: f64 = y.iter().zip(&m1).map(|(yi, mi)| yi * mi).sum::<f64>() / vol;
        let mut y: Vec<f64> = y.iter().map(|yi| yi - mean).collect();
        let norm = y
            .iter()
            .zip(&matvec(&m, &y))
            .map(|(a, b)| a * b)
            .sum::<f64>()
            .sqrt();
        for yi in &mut y {
            *yi /= norm;
        }
        v = y;
    }
    let num: f64 = v.iter().zip(&matvec(&a, &v)).map(|(a, b)| a * b).sum();
    let den: f64 = v.iter().zip(&matvec(&m, &v)).map(|(a, b)| a * b).sum();
    let lambda = num / den;
    let eig_ok = (lambda - 2.0).abs() <= 0.02;
    checks.push(("sphere eigenvalue 2", eig_ok));

    // Logarithmic marking: doubling counts above and below the scaled mean,
    // clamped; zero indicators request maximal merging; a degenerate scale
    // marks nothing; the marks are invariant under rescaling all
    // indicators.
    let ind = [4.0, 1.0, 0.25];
    let marks = log_marks(&ind, 1.0, 2);
    let mut marks_ok = marks == vec![1, -1, -2];
    marks_ok &= log_marks(&ind, 4.0, 2) == vec![-1, -2, -2];
    let scaled: Vec<f64> = ind.iter().map(|e| e * 3.7e3).collect();
    marks_ok &= log_marks(&scaled, 1.0, 2) == marks;
    marks_ok &= log_marks(&[1.0, 0.0, 1.0], 1.0, 3) == vec![1, -3, 1];
    marks_ok &= log_marks(&[0.0, 0.0], 1.0, 2) == vec![0, 0];
    checks.push(("logarithmic marking", marks_ok));

    // Refine / coarsen round trip on the flat icosahedron.
    let mesh1 = unit_icosphere(1, 1);
    let n1 = mesh1.active_element_count();
    let first = mesh1.active_elements()[0];
    let fine = mesh1.refine(&HashMap::from([(first, 1)])).unwrap().mesh;
    let all: HashMap<u32, u32> = fine.active_elements().iter().map(|&e| (e, 1)).collect();
    let back = fine.coarsen(&all).unwrap().mesh;
    checks.push(("refine/coarsen round trip", back.active_element_count() == n1));

    // Gradient recovery: on a degree-1 mesh the element gradients are the
    // flat-triangle gradients, and the recovered value at a vertex must be
    // their inverse-area-weighted average over the adjacent elements
    // (computed here from scratch, vertex positions and values only).
    let mesh_r = unit_icosphere(1, 1);
    let asm_r = Assembler::new(&mesh_r).unwrap();
    let field = asm_r.interpolate(|x| x[0] + 2.0 * x[1] - x[2]);
    let rec = recover_gradient(&asm_r, &field).unwrap();
    let dofs = DofMap::new(&mesh_r);
    let node_to_dof: HashMap<u32, usize> =
        (0..dofs.len()).map(|k| (dofs.node(k), k)).collect();
    let mut num = vec![[0.0; 3]; dofs.len()];
    let mut den = vec![0.0; dofs.len()];
    for &e in &mesh_r.active_elements() {
        let verts = mesh_r.element_vertices(e);
        let p: Vec<[f64; 3]> = verts.iter().map(|&v| mesh_r.nodes[v as usize]).collect();
        let f: Vec<f64> = verts.iter().map(|&v| field[node_to_dof[&v]]).collect();
        let e1 = sub(p[1], p[0]);
        let e2 = sub(p[2], p[0]);
        let n = cross(e1, e2);
        let area = 0.5 * dot(n, n).sqrt();
        let g = solve3(
            [e1, e2, n],
            [f[1] - f[0], f[2] - f[0], 0.0],
        );
        let w = 1.0 / area;
        for &v in &verts {
            let d = node_to_dof[&v];
            for k in 0..3 {
                num[d][k] += w * g[k];
            }
            den[d] += w;
        }
    }
    let rec_ok = (0..dofs.len()).all(|d| {
        (0..3).all(|k| (rec[d][k] - num[d][k] / den[d]).abs() <= 1e-10)
    });
    checks.push(("harmonic gradient recovery", rec_ok));

    let ok = checks.iter().all(|&(_, good)| good);
    let detail: Vec<String> = checks
        .iter()
        .map(|&(name, good)| format!("{name} {}", if good { "ok" } else { "FAILED" }))
        .collect();
    let line = format!(
        "{} element/quadrature/marking properties: {}",
        verdict(ok),
        detail.join("; ")
    );
    println!("{line}");
    assert!(ok, "{line}");
}

fn matvec(m: &CsrMatrix, v: &[f64]) -> Vec<f64> {
    let p = &m.pattern;
    (0..p.n)
        .map(|i| {
            (p.row_ptr[i]..p.row_ptr[i + 1])
                .map(|k| m.values[k] * v[p.col_idx[k]])
                .sum()
        })
        .collect()
}

fn csr_get(m: &CsrMatrix, i: usize, j: usize) -> f64 {
    let p = &m.pattern;
    (p.row_ptr[i]..p.row_ptr[i + 1])
        .find(|&k| p.col_idx[k] == j)
        .map(|k| m.values[k])
        .unwrap_or(0.0)
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Solve the 3x3 system rows * x = rhs by Cramer's rule.
fn solve3(rows: [[f64; 3]; 3], rhs: [f64; 3]) -> [f64; 3] {
    let det = dot(rows[0], cross(rows[1], rows[2]));
    let mut x = [0.0; 3];
    for c in 0..3 {
        let mut m = rows;
        for r in 0..3 {
            m[r][c] = rhs[r];
        }
        x[c] = dot(m[0], cross(m[1], m[2])) / det;
    }
    x
}
