//! A-posteriori error indication by gradient recovery, logarithmic element
//! marking, and the mesh-adaptation cycle.
//!
//! The indicator of an element is the mean of the recovered-gradient norms
//! of the two chain-end propagator fields over that element. Marking is
//! logarithmic: an element whose indicator sits k doublings above the scaled
//! mesh average is split k times (clamped to two levels per cycle), one
//! sitting k doublings below is merged k times. The dispersion of the
//! indicator distribution (population standard deviation over range) serves
//! as the trigger that tells a driver when the indicators have localised
//! enough to make adapting worthwhile.

use rayon::prelude::*;

use crate::assembly::Assembler;
use crate::mesh::{element_geometry, MarkingPlan, RefineOutcome};
use crate::Result;

/// Recovered surface gradient at every dof: the element-wise gradients of
/// the finite-element field, evaluated at the dof's node and averaged over
/// the adjacent active elements with inverse-area weights, so the smallest
/// (locally most accurate) elements dominate the average.
pub fn recover_gradient(asm: &Assembler, field: &[f64]) -> Result<Vec<[f64; 3]>> {
    let mesh = asm.mesh;
    let basis = asm.basis();
    let lattice = basis.lattice_points();
    let (lat_vals, lat_grads) = basis.tabulate(&lattice);
    let rule = asm.quadrature();
    let quad_pts = rule.reference_points();
    let (q_vals, q_grads) = basis.tabulate(&quad_pts);
    let elements = mesh.active_elements();

    let per_elem: Vec<(Vec<usize>, f64, Vec<[f64; 3]>)> = elements
        .par_iter()
        .map(|&e| {
            let dofs = asm.dofs.element_dofs(mesh, e);
            let geo_q = element_geometry(mesh, e, &q_vals, &q_grads)?;
            let area: f64 = 0.5
                * rule
                    .weights
                    .iter()
                    .zip(&geo_q.sqrt_det)
                    .map(|(w, s)| w * s)
                    .sum::<f64>();
            let geo_l = element_geometry(mesh, e, &lat_vals, &lat_grads)?;
            let mut grads = Vec::with_capacity(lattice.len());
            for pt in 0..lattice.len() {
                let mut dref = [0.0; 2];
                for (alpha, &d) in dofs.iter().enumerate() {
                    let g = lat_grads[pt][alpha];
                    dref[0] += field[d] * g[0];
                    dref[1] += field[d] * g[1];
                }
                let gi = geo_l.inv_metric[pt];
                let j = geo_l.jacobian[pt];
                let mut gs = [0.0; 3];
                for a in 0..2 {
                    for b in 0..2 {
                        let c = gi[a][b] * dref[b];
                        gs[0] += c * j[a][0];
                        gs[1] += c * j[a][1];
                        gs[2] += c * j[a][2];
                    }
                }
                grads.push(gs);
            }
            Ok((dofs, area, grads))
        })
        .collect::<Result<Vec<_>>>()?;

    let n = asm.n_dofs();
    let mut num = vec![[0.0; 3]; n];
    let mut den = vec![0.0; n];
    for (dofs, area, grads) in &per_elem {
        let w = 1.0 / area.max(f64::MIN_POSITIVE);
        for (alpha, &d) in dofs.iter().enumerate() {
            num[d][0] += w * grads[alpha][0];
            num[d][1] += w * grads[alpha][1];
            num[d][2] += w * grads[alpha][2];
            den[d] += w;
        }
    }
    Ok(num
        .into_iter()
        .zip(den)
        .map(|(v, d)| {
            debug_assert!(d > 0.0, "every dof belongs to an active element");
            [v[0] / d, v[1] / d, v[2] / d]
        })
        .collect())
}

/// Element indicators, one per entry of `mesh.active_elements()`: the mean
/// of the L2 norms over the element of the recovered gradients of the two
/// chain-end fields.
pub fn element_indicators(
    asm: &Assembler,
    q_end: &[f64],
    q_dagger_end: &[f64],
) -> Result<Vec<f64>> {
    let g1 = recover_gradient(asm, q_end)?;
    let g2 = recover_gradient(asm, q_dagger_end)?;
    let mesh = asm.mesh;
    let basis = asm.basis();
    let rule = asm.quadrature();
    let quad_pts = rule.reference_points();
    let (q_vals, q_grads) = basis.tabulate(&quad_pts);
    mesh.active_elements()
        .par_iter()
        .map(|&e| {
            let dofs = asm.dofs.element_dofs(mesh, e);
            let geo = element_geometry(mesh, e, &q_vals, &q_grads)?;
            let mut n1 = 0.0;
            let mut n2 = 0.0;
            for (pt, w) in rule.weights.iter().enumerate() {
                let mut v1 = [0.0; 3];
                let mut v2 = [0.0; 3];
                for (alpha, &d) in dofs.iter().enumerate() {
                    let phi = q_vals[pt][alpha];
                    for c in 0..3 {
                        v1[c] += phi * g1[d][c];
                        v2[c] += phi * g2[d][c];
                    }
                }
                let scale = 0.5 * w * geo.sqrt_det[pt];
                n1 += scale * (v1[0] * v1[0] + v1[1] * v1[1] + v1[2] * v1[2]);
                n2 += scale * (v2[0] * v2[0] + v2[1] * v2[1] + v2[2] * v2[2]);
            }
            Ok(0.5 * (n1.sqrt() + n2.sqrt()))
        })
        .collect()
}

/// Logarithmic marks: round(log2(e / (theta * mean))), clamped to
/// [-clamp, clamp] levels per cycle. Zero indicators mark maximal
/// coarsening; a non-positive mean marks nothing (there is no scale to
/// compare against).
pub fn log_marks(indicators: &[f64], theta: f64, clamp: u32) -> Vec<i32> {
    let mean = indicators.iter().sum::<f64>() / indicators.len().max(1) as f64;
    if !(mean > 0.0) || !(theta > 0.0) {
        return vec![0; indicators.len()];
    }
    let cap = clamp as f64;
    indicators
        .iter()
        .map(|&e| {
            if e <= 0.0 {
                -(clamp as i32)
            } else {
                let n = (e / (theta * mean)).log2().round();
                n.clamp(-cap, cap) as i32
            }
        })
        .collect()
}

/// Dispersion of the indicator distribution: population standard deviation
/// divided by the range, 0 for a degenerate (constant) distribution. Always
/// in [0, 1/2].
pub fn reference_deviation(indicators: &[f64]) -> f64 {
    if indicators.is_empty() {
        return 0.0;
    }
    let n = indicators.len() as f64;
    let mean = indicators.iter().sum::<f64>() / n;
    let var = indicators.iter().map(|&e| (e - mean) * (e - mean)).sum::<f64>() / n;
    let max = indicators.iter().cloned().fold(f64::MIN, f64::max);
    let min = indicators.iter().cloned().fold(f64::MAX, f64::min);
    let range = max - min;
    if range > 0.0 {
        var.sqrt() / range
    } else {
        0.0
    }
}

/// Split signed marks into the refine/coarsen maps that `apply_plan` takes.
pub fn plan_from_marks(elements: &[u32], marks: &[i32]) -> MarkingPlan {
    assert_eq!(elements.len(), marks.len());
    let mut plan = MarkingPlan::default();
    for (&e, &m) in elements.iter().zip(marks) {
        match m.cmp(&0) {
            std::cmp::Ordering::Greater => {
                plan.refine.insert(e, m as u32);
            }
            std::cmp::Ordering::Less => {
                plan.coarsen.insert(e, (-m) as u32);
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    plan
}

/// What one adaptation pass did.
#[derive(Debug)]
pub struct AdaptReport {
    pub outcome: RefineOutcome,
    /// Dispersion of the indicator distribution that drove the marking.
    pub reference_deviation: f64,
    pub marked_refine: usize,
    pub marked_coarsen: usize,
}

/// One full adaptation pass: indicate, mark, and rebuild the mesh. Field
/// transfer onto `report.outcome.mesh` is the caller's business (it knows
/// which fields matter).
pub fn adapt_cycle(
    asm: &Assembler,
    q_end: &[f64],
    q_dagger_end: &[f64],
    theta: f64,
    clamp: u32,
) -> Result<AdaptReport> {
    let indicators = element_indicators(asm, q_end, q_dagger_end)?;
    let elements = asm.mesh.active_elements();
    let marks = log_marks(&indicators, theta, clamp);
    let plan = plan_from_marks(&elements, &marks);
    let marked_refine = plan.refine.len();
    let marked_coarsen = plan.coarsen.len();
    let outcome = asm.mesh.apply_plan(&plan)?;
    Ok(AdaptReport {
        outcome,
        reference_deviation: reference_deviation(&indicators),
        marked_refine,
        marked_coarsen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{transfer_field, HighOrderSurfaceMesh};
    use crate::surface::LevelSetSurface;
    use proptest::prelude::*;

    fn sphere(level: usize, p: usize) -> HighOrderSurfaceMesh {
        HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), level, p).unwrap()
    }

    #[test]
    fn recovered_gradient_of_linear_field_on_flat_patch_is_exact() {
        let surface = LevelSetSurface::from_expression("z").unwrap();
        let mesh =
            HighOrderSurfaceMesh::parametric_patch(surface, [0.0, 1.0], [0.0, 1.0], 4, 4, 2)
                .unwrap();
        let asm = Assembler::new(&mesh).unwrap();
        let field = asm.interpolate(|x| x[0] + 2.0 * x[1]);
        let g = recover_gradient(&asm, &field).unwrap();
        for (i, gi) in g.iter().enumerate() {
            assert!(
                (gi[0] - 1.0).abs() < 1e-10
                    && (gi[1] - 2.0).abs() < 1e-10
                    && gi[2].abs() < 1e-10,
                "dof {i}: {gi:?}"
            );
        }
    }

    #[test]
    fn recovered_gradient_is_tangential_on_sphere() {
        let mesh = sphere(2, 2);
        let asm = Assembler::new(&mesh).unwrap();
        let field = asm.interpolate(|x| x[2]);
        let g = recover_gradient(&asm, &field).unwrap();
        let pos = asm.dof_positions();
        let mut worst = 0.0f64;
        for (gi, p) in g.iter().zip(&pos) {
            let radial = gi[0] * p[0] + gi[1] * p[1] + gi[2] * p[2];
            worst = worst.max(radial.abs());
            // surface gradient of z on the unit sphere is e_z - z x, with
            // norm^2 = 1 - z^2
            let nrm2 = gi[0] * gi[0] + gi[1] * gi[1] + gi[2] * gi[2];
            assert!(
                (nrm2 - (1.0 - p[2] * p[2])).abs() < 0.05,
                "gradient magnitude at z={}: {nrm2}",
                p[2]
            );
        }
        assert!(worst < 0.05, "max radial component {worst}");
    }

    #[test]
    fn indicators_scale_linearly_with_the_field() {
        let mesh = sphere(1, 2);
        let asm = Assembler::new(&mesh).unwrap();
        let f1 = asm.interpolate(|x| x[2]);
        let f3: Vec<f64> = f1.iter().map(|v| 3.0 * v).collect();
        let e1 = element_indicators(&asm, &f1, &f1).unwrap();
        let e3 = element_indicators(&asm, &f3, &f3).unwrap();
        assert_eq!(e1.len(), mesh.active_element_count());
        for (a, b) in e1.iter().zip(&e3) {
            assert!((b - 3.0 * a).abs() < 1e-12 * b.abs().max(1.0));
        }
        // mixing the two fields averages the two norms
        let em = element_indicators(&asm, &f1, &f3).unwrap();
        for ((a, b), m) in e1.iter().zip(&e3).zip(&em) {
            assert!((m - 0.5 * (a + b)).abs() < 1e-12 * m.abs().max(1.0));
        }
    }

    #[test]
    fn log_marking_references() {
        let marks = log_marks(&[1.0, 1.0, 1.0, 1.0, 16.0], 1.0, 2);
        // mean 4: the small entries sit two doublings below, the large two above
        assert_eq!(marks, vec![-2, -2, -2, -2, 2]);
        // sixteen entries dominated by one: the big entry sits four
        // doublings above the mean, the tiny one far below
        let mut values = vec![1.0; 16];
        values[0] = 1e6;
        values[1] = 1e-9;
        let marks = log_marks(&values, 1.0, 2);
        assert_eq!(marks[0], 2);
        assert_eq!(marks[1], -2);
        // a wider clamp admits deeper marks
        let marks = log_marks(&values, 1.0, 3);
        assert_eq!(marks[0], 3);
        assert_eq!(marks[1], -3);
        // an indicator three doublings below the mean saturates the default
        // clamp: mean is 8 here, so the first entry wants -3 but gets -2
        let marks = log_marks(&[1.0, 9.0, 9.0, 9.0, 9.0, 9.0, 9.0, 9.0], 1.0, 2);
        assert_eq!(marks, vec![-2, 0, 0, 0, 0, 0, 0, 0]);
        // theta rescales the neutral band
        let marks = log_marks(&[1.0, 2.0, 4.0], 4.0 / 7.0, 2);
        assert_eq!(marks.len(), 3);
        // zero indicators coarsen maximally, all-zero marks nothing
        assert_eq!(log_marks(&[0.0, 1.0], 1.0, 2)[0], -2);
        assert_eq!(log_marks(&[0.0, 0.0], 1.0, 2), vec![0, 0]);
    }

    #[test]
    fn reference_deviation_references() {
        assert_eq!(reference_deviation(&[0.0, 1.0]), 0.5);
        assert_eq!(reference_deviation(&[3.0, 3.0, 3.0]), 0.0);
        assert_eq!(reference_deviation(&[]), 0.0);
        let spread = reference_deviation(&[0.0, 0.0, 0.0, 1.0]);
        assert!((spread - 0.25 * 3.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn adapt_cycle_refines_where_the_gradient_concentrates() {
        let mesh = sphere(2, 2);
        let asm = Assembler::new(&mesh).unwrap();
        // steep transition layer around the equator
        let field = asm.interpolate(|x| (8.0 * x[2]).tanh());
        let report = adapt_cycle(&asm, &field, &field, 1.0, 2).unwrap();
        assert!(report.marked_refine > 0);
        let new_mesh = &report.outcome.mesh;
        assert!(new_mesh.active_element_count() > mesh.active_element_count());
        // every red split landed near the equator
        for &e in &new_mesh.active_elements() {
            let rec = &new_mesh.elements[e as usize];
            if rec.generation > 1 && !rec.green {
                let [a, b, c] = new_mesh.element_vertices(e);
                let z = (new_mesh.nodes[a as usize][2]
                    + new_mesh.nodes[b as usize][2]
                    + new_mesh.nodes[c as usize][2])
                    / 3.0;
                assert!(z.abs() < 0.6, "refined element far from the layer: z={z}");
            }
        }
        // the transfer must not degrade the field beyond its own
        // interpolation error on the source mesh
        let err_old = asm.l2_error(&field, |x| (8.0 * x[2]).tanh());
        let transferred = transfer_field(&mesh, &field, new_mesh).unwrap();
        let asm2 = Assembler::new(new_mesh).unwrap();
        let err_new = asm2.l2_error(&transferred, |x| (8.0 * x[2]).tanh());
        assert!(
            err_new < 1.5 * err_old + 1e-9,
            "transfer error {err_new} vs source interpolation error {err_old}"
        );
    }

    proptest! {
        #[test]
        fn marks_always_lie_within_the_clamp(
            values in proptest::collection::vec(0.0f64..1e6, 1..60),
            theta in 0.05f64..20.0,
            clamp in 1u32..4,
        ) {
            let c = clamp as i32;
            for m in log_marks(&values, theta, clamp) {
                prop_assert!((-c..=c).contains(&m));
            }
        }

        #[test]
        fn marks_are_invariant_under_indicator_rescaling(
            values in proptest::collection::vec(1e-6f64..1e6, 1..40),
            theta in 0.1f64..10.0,
            scale in 1e-3f64..1e3,
        ) {
            // both the indicators and the comparison mean scale together,
            // so the marks cannot move
            let scaled: Vec<f64> = values.iter().map(|v| v * scale).collect();
            prop_assert_eq!(
                log_marks(&values, theta, 2),
                log_marks(&scaled, theta, 2)
            );
        }

        #[test]
        fn larger_theta_never_increases_a_mark(
            values in proptest::collection::vec(1e-6f64..1e6, 1..40),
            theta in 0.1f64..5.0,
            factor in 1.0f64..8.0,
        ) {
            let loose = log_marks(&values, theta * factor, 2);
            let tight = log_marks(&values, theta, 2);
            for (l, t) in loose.iter().zip(&tight) {
                prop_assert!(l <= t, "mark rose from {t} to {l} as theta grew");
            }
        }

        #[test]
        fn reference_deviation_is_bounded_by_half(
            values in proptest::collection::vec(-1e9f64..1e9, 1..60),
        ) {
            let r = reference_deviation(&values);
            prop_assert!((0.0..=0.5 + 1e-12).contains(&r), "deviation {r}");
        }

        #[test]
        fn plans_partition_the_marked_elements(
            marks in proptest::collection::vec(-2i32..=2, 1..40),
        ) {
            let elements: Vec<u32> = (0..marks.len() as u32).collect();
            let plan = plan_from_marks(&elements, &marks);
            let zeros = marks.iter().filter(|&&m| m == 0).count();
            prop_assert_eq!(plan.refine.len() + plan.coarsen.len() + zeros, marks.len());
            for (e, n) in &plan.refine {
                prop_assert_eq!(marks[*e as usize], *n as i32);
            }
            for (e, n) in &plan.coarsen {
                prop_assert_eq!(marks[*e as usize], -(*n as i32));
            }
        }
    }
}
