//! Chain-contour discretisation: piecewise Chebyshev grids with panel
//! breakpoints at field discontinuities, Crank-Nicolson sweeps between
//! nodes, spectral deferred correction, and Clenshaw-Curtis quadrature
//! (plain and cumulative) on each panel.
//!
//! Grids over [0, 1] are split into panels at the supplied breakpoints; each
//! panel carries Chebyshev (cosine-clustered) nodes so that panel-wise
//! polynomial interpolation of the propagator trajectory is stable, which is
//! what the deferred-correction residual integrals rely on. The mirror grid
//! (t -> 1 - t) is built by reflecting node values, so a forward node t_k and
//! backward node index N-1-k pair to t and 1-t exactly, with no interpolation
//! in contour ever needed for density accumulation.

use std::collections::HashMap;
use std::sync::Arc;

use crate::assembly::{solve_sym, CsrMatrix};
use crate::{Error, Result};

/// One Chebyshev panel: `n` intervals (n + 1 nodes) over [a, b].
#[derive(Debug, Clone)]
pub struct ChebyshevPanel {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl ChebyshevPanel {
    /// Ascending node positions a + (b - a) (1 - cos(k pi / n)) / 2.
    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.n)
            .map(|k| {
                let u = 0.5 * (1.0 - (k as f64 * std::f64::consts::PI / self.n as f64).cos());
                self.a + (self.b - self.a) * u
            })
            .collect()
    }
}

/// Clenshaw-Curtis operators for a panel size: cumulative integration
/// matrices acting on node values. `cum[k][j]` gives the weight of node j in
/// the integral from the panel start to node k, per unit panel length.
#[derive(Debug)]
pub struct PanelOps {
    pub n: usize,
    pub cum: Vec<Vec<f64>>,
}

impl PanelOps {
    pub fn build(n: usize) -> Self {
        assert!(n >= 1);
        let nf = n as f64;
        let pi = std::f64::consts::PI;
        let mut cum = vec![vec![0.0; n + 1]; n + 1];
        // columns: response to the unit vector at node j
        for j in 0..=n {
            // Chebyshev interpolation coefficients c_m of the unit sample
            // (DCT-I with halved end terms)
            let sj = if j == 0 || j == n { 0.5 } else { 1.0 };
            let mut c = vec![0.0; n + 1];
            for (m, cm) in c.iter_mut().enumerate() {
                *cm = 2.0 / nf * sj * (m as f64 * j as f64 * pi / nf).cos();
            }
            c[0] *= 0.5;
            c[n] *= 0.5;
            // antiderivative coefficients: int T_0 = T_1, int T_1 = T_2 / 4,
            // int T_m = T_{m+1}/(2(m+1)) - T_{m-1}/(2(m-1)) for m >= 2
            // (the T_0 component of the antiderivative cancels in differences)
            let mut b = vec![0.0; n + 3];
            b[1] += c[0];
            if n >= 1 {
                b[2] += c[1] / 4.0;
            }
            for m in 2..=n {
                let mf = m as f64;
                b[m + 1] += c[m] / (2.0 * (mf + 1.0));
                b[m - 1] -= c[m] / (2.0 * (mf - 1.0));
            }
            // node k sits at x_k = cos(k pi / n), with x descending as t
            // ascends: int_a^{t_k} = (panel length / 2) (B(1) - B(x_k))
            for k in 0..=n {
                let mut s = 0.0;
                for (m, bm) in b.iter().enumerate().skip(1) {
                    let xk = (m as f64 * k as f64 * pi / nf).cos();
                    s += bm * (1.0 - xk);
                }
                cum[k][j] = 0.5 * s;
            }
        }
        PanelOps { n, cum }
    }

    /// Quadrature weights for the full panel, per unit length.
    pub fn weights(&self) -> &[f64] {
        &self.cum[self.n]
    }
}

/// Piecewise-Chebyshev contour grid over [0, 1].
#[derive(Debug, Clone)]
pub struct ContourGrid {
    pub panels: Vec<ChebyshevPanel>,
    /// Global ascending node positions; panel joins are stored once.
    pub nodes: Vec<f64>,
    /// Global index of each panel's first node.
    pub panel_start: Vec<usize>,
    ops: HashMap<usize, Arc<PanelOps>>,
}

impl ContourGrid {
    /// Build a grid with the given breakpoints (must start at 0 and end at 1,
    /// strictly increasing) and `total_intervals` Chebyshev intervals
    /// distributed across the panels proportionally to length, with at least
    /// 8 intervals per panel.
    pub fn with_breakpoints(breaks: &[f64], total_intervals: usize) -> Result<Self> {
        if breaks.len() < 2 || breaks[0] != 0.0 || *breaks.last().unwrap() != 1.0 {
            return Err(Error::Config(format!(
                "contour breakpoints must run from 0 to 1, got {breaks:?}"
            )));
        }
        if breaks.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config(format!(
                "contour breakpoints must be strictly increasing, got {breaks:?}"
            )));
        }
        let k = breaks.len() - 1;
        // every panel keeps at least eight nodes (seven intervals) so the
        // per-panel interpolation stays meaningfully spectral
        const MIN_INTERVALS: usize = 7;
        if total_intervals < MIN_INTERVALS * k {
            return Err(Error::Config(format!(
                "{total_intervals} contour intervals cannot cover {k} panels at >= {MIN_INTERVALS} each"
            )));
        }
        // largest-remainder apportionment of intervals by panel length
        let lengths: Vec<f64> = breaks.windows(2).map(|w| w[1] - w[0]).collect();
        let mut counts: Vec<usize> = lengths
            .iter()
            .map(|l| (l * total_intervals as f64).floor() as usize)
            .collect();
        let mut rem: Vec<(f64, usize)> = lengths
            .iter()
            .enumerate()
            .map(|(i, l)| (l * total_intervals as f64 - counts[i] as f64, i))
            .collect();
        rem.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
        let mut missing = total_intervals - counts.iter().sum::<usize>();
        for &(_, i) in rem.iter().cycle() {
            if missing == 0 {
                break;
            }
            counts[i] += 1;
            missing -= 1;
        }
        // enforce the per-panel minimum by borrowing from the largest panel
        loop {
            let deficit: usize = counts
                .iter()
                .map(|&c| MIN_INTERVALS.saturating_sub(c))
                .sum();
            if deficit == 0 {
                break;
            }
            for c in counts.iter_mut() {
                if *c < MIN_INTERVALS {
                    *c = MIN_INTERVALS;
                }
            }
            let mut surplus = counts.iter().sum::<usize>() - total_intervals;
            while surplus > 0 {
                let i = (0..k)
                    .max_by_key(|&i| counts[i])
                    .expect("at least one panel");
                if counts[i] <= MIN_INTERVALS {
                    return Err(Error::Config(
                        "cannot satisfy the per-panel interval minimum".into(),
                    ));
                }
                counts[i] -= 1;
                surplus -= 1;
            }
        }
        let panels: Vec<ChebyshevPanel> = (0..k)
            .map(|i| ChebyshevPanel { a: breaks[i], b: breaks[i + 1], n: counts[i] })
            .collect();
        Self::from_panels(panels)
    }

    fn from_panels(panels: Vec<ChebyshevPanel>) -> Result<Self> {
        let mut nodes = Vec::new();
        let mut panel_start = Vec::with_capacity(panels.len());
        for (i, p) in panels.iter().enumerate() {
            let pn = p.nodes();
            if i == 0 {
                panel_start.push(0);
                nodes.extend(pn);
            } else {
                panel_start.push(nodes.len() - 1);
                nodes.extend(&pn[1..]);
            }
        }
        let mut ops = HashMap::new();
        for p in &panels {
            ops.entry(p.n)
                .or_insert_with(|| Arc::new(PanelOps::build(p.n)));
        }
        Ok(ContourGrid { panels, nodes, panel_start, ops })
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Index pairing node i with the node at 1 - t on the mirror grid.
    pub fn companion(&self, i: usize) -> usize {
        self.nodes.len() - 1 - i
    }

    /// The reflected grid over s = 1 - t. Node values are reflected exactly:
    /// mirror.nodes[i] == 1 - self.nodes[N - 1 - i] bitwise.
    pub fn mirror(&self) -> ContourGrid {
        let panels: Vec<ChebyshevPanel> = self
            .panels
            .iter()
            .rev()
            .map(|p| ChebyshevPanel { a: 1.0 - p.b, b: 1.0 - p.a, n: p.n })
            .collect();
        let nodes: Vec<f64> = self.nodes.iter().rev().map(|t| 1.0 - t).collect();
        let mut panel_start = Vec::with_capacity(panels.len());
        let mut acc = 0;
        for p in &panels {
            panel_start.push(acc);
            acc += p.n;
        }
        ContourGrid { panels, nodes, panel_start, ops: self.ops.clone() }
    }

    pub fn ops_for(&self, panel: usize) -> &PanelOps {
        &self.ops[&self.panels[panel].n]
    }

    /// Global node index range (inclusive) of a panel.
    pub fn panel_range(&self, panel: usize) -> (usize, usize) {
        let s = self.panel_start[panel];
        (s, s + self.panels[panel].n)
    }

    /// Number of leading panels covered by [0, t] (panel ends <= t + eps).
    pub fn panels_until(&self, t: f64) -> usize {
        self.panels.iter().filter(|p| p.b <= t + 1e-12).count()
    }

    /// Global quadrature weights: integral over [0,1] of a nodal trajectory
    /// is the weighted sum of node values.
    pub fn quadrature_weights(&self) -> Vec<f64> {
        self.quadrature_weights_range(0, self.panels.len())
    }

    /// Quadrature weights covering only panels `p0..p1`; zero elsewhere.
    /// Panel-join nodes receive contributions only from panels inside the
    /// range, so splitting at a breakpoint partitions the full weights.
    pub fn quadrature_weights_range(&self, p0: usize, p1: usize) -> Vec<f64> {
        let mut w = vec![0.0; self.nodes.len()];
        for k in p0..p1 {
            let ops = self.ops_for(k);
            let len = self.panels[k].b - self.panels[k].a;
            let (s, _) = self.panel_range(k);
            for (j, wj) in ops.weights().iter().enumerate() {
                w[s + j] += len * wj;
            }
        }
        w
    }

    /// Integrate a scalar trajectory sampled at the grid nodes.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.nodes.len());
        self.quadrature_weights()
            .iter()
            .zip(values)
            .map(|(w, v)| w * v)
            .sum()
    }
}

/// Reusable workspace for the step systems (left and right matrices share the
/// mass/operator pattern).
struct StepWork {
    lhs: CsrMatrix,
    rhs_mat: CsrMatrix,
    rhs: Vec<f64>,
    tmp: Vec<f64>,
}

impl StepWork {
    fn new(mass: &CsrMatrix) -> Self {
        StepWork {
            lhs: CsrMatrix::zeros(mass.pattern.clone()),
            rhs_mat: CsrMatrix::zeros(mass.pattern.clone()),
            rhs: vec![0.0; mass.n()],
            tmp: vec![0.0; mass.n()],
        }
    }
}

/// Crank-Nicolson sweep of M dq/dt = -L q + b(t) across the grid.
///
/// `ops[k]` is the spatial operator L of panel k (stiffness plus any
/// field-weighted mass), sharing the mass matrix pattern. `load`, if given,
/// returns the assembled load vector b(t). Returns the trajectory at every
/// grid node, starting from `q0`.
pub fn cn_sweep(
    grid: &ContourGrid,
    mass: &CsrMatrix,
    ops: &[&CsrMatrix],
    q0: &[f64],
    load: Option<&(dyn Fn(f64) -> Vec<f64> + Sync)>,
    tol: f64,
) -> Result<Vec<Vec<f64>>> {
    assert_eq!(ops.len(), grid.panels.len());
    assert_eq!(q0.len(), mass.n());
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(grid.n_nodes());
    q.push(q0.to_vec());
    let mut work = StepWork::new(mass);
    for k in 0..grid.panels.len() {
        let (s, e) = grid.panel_range(k);
        for n in s..e {
            let dt = grid.nodes[n + 1] - grid.nodes[n];
            let half = 0.5 * dt;
            work.lhs.set_combination(1.0, mass, half, ops[k]);
            work.rhs_mat.set_combination(1.0, mass, -half, ops[k]);
            work.rhs_mat.mul_vec(&q[n], &mut work.rhs);
            if let Some(f) = load {
                let b0 = f(grid.nodes[n]);
                let b1 = f(grid.nodes[n + 1]);
                for i in 0..work.rhs.len() {
                    work.rhs[i] += half * (b0[i] + b1[i]);
                }
            }
            let (next, _) = solve_sym(&work.lhs, &work.rhs, Some(&q[n]), tol, 10_000)?;
            q.push(next);
        }
    }
    Ok(q)
}

/// Crank-Nicolson sweep of M dq/dt = -L q + b(t) over an explicit ascending
/// node list with a single operator throughout. This is the plain stepped
/// integrator used for benchmark comparisons on uniform grids; the panelled
/// `cn_sweep` is the production path.
pub fn cn_sweep_on_nodes(
    nodes: &[f64],
    mass: &CsrMatrix,
    op: &CsrMatrix,
    q0: &[f64],
    load: Option<&(dyn Fn(f64) -> Vec<f64> + Sync)>,
    tol: f64,
) -> Result<Vec<Vec<f64>>> {
    assert!(nodes.len() >= 2);
    assert!(nodes.windows(2).all(|w| w[1] > w[0]));
    assert_eq!(q0.len(), mass.n());
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(nodes.len());
    q.push(q0.to_vec());
    let mut work = StepWork::new(mass);
    for n in 0..nodes.len() - 1 {
        let half = 0.5 * (nodes[n + 1] - nodes[n]);
        work.lhs.set_combination(1.0, mass, half, op);
        work.rhs_mat.set_combination(1.0, mass, -half, op);
        work.rhs_mat.mul_vec(&q[n], &mut work.rhs);
        if let Some(f) = load {
            let b0 = f(nodes[n]);
            let b1 = f(nodes[n + 1]);
            for i in 0..work.rhs.len() {
                work.rhs[i] += half * (b0[i] + b1[i]);
            }
        }
        let (next, _) = solve_sym(&work.lhs, &work.rhs, Some(&q[n]), tol, 10_000)?;
        q.push(next);
    }
    Ok(q)
}

/// Evenly spaced nodes over [0, 1] with the given interval count.
pub fn uniform_nodes(n_intervals: usize) -> Vec<f64> {
    assert!(n_intervals >= 1);
    (0..=n_intervals)
        .map(|k| k as f64 / n_intervals as f64)
        .collect()
}

/// One spectral deferred correction sweep over the whole grid, updating `q`
/// in place. The residual of the current trajectory against the Picard
/// integral form is measured with panel-wise Clenshaw-Curtis cumulative
/// integration, and the correction propagates through the same
/// Crank-Nicolson stepping as the predictor.
pub fn sdc_sweep(
    grid: &ContourGrid,
    mass: &CsrMatrix,
    ops: &[&CsrMatrix],
    q: &mut [Vec<f64>],
    load: Option<&(dyn Fn(f64) -> Vec<f64> + Sync)>,
    tol: f64,
) -> Result<()> {
    assert_eq!(ops.len(), grid.panels.len());
    assert_eq!(q.len(), grid.n_nodes());
    let ndof = mass.n();
    // snapshot each panel's starting value before any update this sweep
    let starts_old: Vec<Vec<f64>> = grid
        .panel_start
        .iter()
        .map(|&s| q[s].clone())
        .collect();
    let mut work = StepWork::new(mass);
    let mut e_prev = vec![0.0; ndof];
    let mut e_next = vec![0.0; ndof];

    for (k, panel) in grid.panels.iter().enumerate() {
        let (s, e) = grid.panel_range(k);
        let npts = panel.n + 1;
        let len = panel.b - panel.a;
        // f_n = -L q_n + b(t_n) on the panel's old trajectory
        let mut fvals: Vec<Vec<f64>> = Vec::with_capacity(npts);
        for (local, n) in (s..=e).enumerate() {
            let qn = if local == 0 { &starts_old[k] } else { &q[n] };
            let mut fv = vec![0.0; ndof];
            ops[k].mul_vec(qn, &mut fv);
            for v in fv.iter_mut() {
                *v = -*v;
            }
            if let Some(bf) = load {
                let b = bf(grid.nodes[n]);
                for i in 0..ndof {
                    fv[i] += b[i];
                }
            }
            fvals.push(fv);
        }
        // residual gamma_n = M q_start + int_0^{t_n} f - M q_n; gamma_0 = 0
        let cum = &grid.ops_for(k).cum;
        let mut gamma: Vec<Vec<f64>> = Vec::with_capacity(npts);
        let mut m_start = vec![0.0; ndof];
        mass.mul_vec(&starts_old[k], &mut m_start);
        for local in 0..npts {
            let mut g = m_start.clone();
            for (j, fv) in fvals.iter().enumerate() {
                let w = len * cum[local][j];
                if w != 0.0 {
                    for i in 0..ndof {
                        g[i] += w * fv[i];
                    }
                }
            }
            let qn = if local == 0 { &starts_old[k] } else { &q[s + local] };
            mass.mul_vec(qn, &mut work.tmp);
            for i in 0..ndof {
                g[i] -= work.tmp[i];
            }
            gamma.push(g);
        }
        // error sweep: e_0 carries the already-updated panel start
        for i in 0..ndof {
            e_prev[i] = q[s][i] - starts_old[k][i];
        }
        for local in 0..panel.n {
            let n = s + local;
            let dt = grid.nodes[n + 1] - grid.nodes[n];
            let half = 0.5 * dt;
            work.lhs.set_combination(1.0, mass, half, ops[k]);
            work.rhs_mat.set_combination(1.0, mass, -half, ops[k]);
            work.rhs_mat.mul_vec(&e_prev, &mut work.rhs);
            for i in 0..ndof {
                work.rhs[i] += gamma[local + 1][i] - gamma[local][i];
            }
            let (sol, _) = solve_sym(&work.lhs, &work.rhs, Some(&e_prev), tol, 10_000)?;
            e_next.copy_from_slice(&sol);
            for i in 0..ndof {
                q[n + 1][i] += e_next[i];
            }
            std::mem::swap(&mut e_prev, &mut e_next);
        }
    }
    Ok(())
}

/// Crank-Nicolson predictor plus `sweeps` deferred-correction sweeps.
pub fn solve_propagator(
    grid: &ContourGrid,
    mass: &CsrMatrix,
    ops: &[&CsrMatrix],
    q0: &[f64],
    load: Option<&(dyn Fn(f64) -> Vec<f64> + Sync)>,
    sweeps: usize,
    tol: f64,
) -> Result<Vec<Vec<f64>>> {
    let mut q = cn_sweep(grid, mass, ops, q0, load, tol)?;
    for _ in 0..sweeps {
        sdc_sweep(grid, mass, ops, &mut q, load, tol)?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::CsrPattern;

    fn scalar_pattern() -> Arc<CsrPattern> {
        Arc::new(CsrPattern { n: 1, row_ptr: vec![0, 1], col_idx: vec![0] })
    }

    fn scalar_matrix(pattern: &Arc<CsrPattern>, v: f64) -> CsrMatrix {
        let mut m = CsrMatrix::zeros(pattern.clone());
        m.values[0] = v;
        m
    }

    #[test]
    fn chebyshev_panel_nodes_are_clustered_and_exact() {
        let p = ChebyshevPanel { a: 0.0, b: 1.0, n: 2 };
        let nodes = p.nodes();
        assert_eq!(nodes[0], 0.0);
        assert!((nodes[1] - 0.5).abs() < 1e-15);
        assert_eq!(nodes[2], 1.0);
        let p = ChebyshevPanel { a: 0.0, b: 1.0, n: 4 };
        let nodes = p.nodes();
        assert!((nodes[1] - 0.14644660940672627).abs() < 1e-15);
        assert_eq!(nodes[0], 0.0);
        assert_eq!(nodes[4], 1.0);
        // symmetric about the midpoint
        for k in 0..=4 {
            assert!((nodes[k] + nodes[4 - k] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn clenshaw_curtis_integrates_polynomials_exactly() {
        // interpolatory rule on n+1 Chebyshev points: exact to degree n
        for n in [4usize, 8, 13] {
            let ops = PanelOps::build(n);
            let p = ChebyshevPanel { a: -1.0, b: 1.0, n };
            let nodes = p.nodes();
            for d in 0..=n {
                let vals: Vec<f64> = nodes.iter().map(|&t| t.powi(d as i32)).collect();
                let approx: f64 = ops
                    .weights()
                    .iter()
                    .zip(&vals)
                    .map(|(w, v)| 2.0 * w * v)
                    .sum();
                let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
                assert!(
                    (approx - exact).abs() < 1e-13,
                    "n={n} degree {d}: {approx} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn clenshaw_curtis_x_squared_and_exponential_references() {
        let ops = PanelOps::build(4);
        let p = ChebyshevPanel { a: -1.0, b: 1.0, n: 4 };
        let vals: Vec<f64> = p.nodes().iter().map(|&t| t * t).collect();
        let i: f64 = ops.weights().iter().zip(&vals).map(|(w, v)| 2.0 * w * v).sum();
        assert!((i - 2.0 / 3.0).abs() < 1e-14, "x^2 integral {i}");

        let ops = PanelOps::build(8);
        let p = ChebyshevPanel { a: -1.0, b: 1.0, n: 8 };
        let vals: Vec<f64> = p.nodes().iter().map(|&t| t.exp()).collect();
        let i: f64 = ops.weights().iter().zip(&vals).map(|(w, v)| 2.0 * w * v).sum();
        let exact = std::f64::consts::E - 1.0 / std::f64::consts::E;
        assert!((i - exact).abs() < 1e-6, "exp integral {i} vs {exact}");
    }

    #[test]
    fn cumulative_integration_matches_antiderivative() {
        let n = 16;
        let ops = PanelOps::build(n);
        let p = ChebyshevPanel { a: 0.0, b: 1.0, n };
        let nodes = p.nodes();
        let vals: Vec<f64> = nodes.iter().map(|&t| t.cos()).collect();
        for k in 0..=n {
            let approx: f64 = ops.cum[k]
                .iter()
                .zip(&vals)
                .map(|(w, v)| w * v)
                .sum();
            let exact = nodes[k].sin();
            assert!(
                (approx - exact).abs() < 1e-12,
                "cumulative at node {k}: {approx} vs {exact}"
            );
        }
        // weights row equals the last cumulative row by construction
        assert_eq!(ops.weights(), &ops.cum[n][..]);
        // positivity of the full-panel weights
        assert!(ops.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn grid_apportions_intervals_with_minimum_and_break_alignment() {
        let g = ContourGrid::with_breakpoints(&[0.0, 0.2, 1.0], 63).unwrap();
        assert_eq!(g.panels.len(), 2);
        let total: usize = g.panels.iter().map(|p| p.n).sum();
        assert_eq!(total, 63);
        assert!(g.panels.iter().all(|p| p.n >= 7));
        assert_eq!(g.n_nodes(), 64);
        assert_eq!(g.panels[0].b, 0.2);
        // breakpoint node stored exactly once
        let hits = g.nodes.iter().filter(|&&t| t == 0.2).count();
        assert_eq!(hits, 1);
        assert_eq!(g.panels_until(0.2), 1);
        // tiny panel forces the minimum of eight nodes
        let g = ContourGrid::with_breakpoints(&[0.0, 0.01, 1.0], 40).unwrap();
        assert_eq!(g.panels[0].n, 7);
        assert_eq!(g.panels[1].n, 33);
        // a single panel may run as small as eight nodes
        let g = ContourGrid::with_breakpoints(&[0.0, 1.0], 7).unwrap();
        assert_eq!(g.n_nodes(), 8);
        // impossible request errors
        assert!(ContourGrid::with_breakpoints(&[0.0, 0.5, 1.0], 10).is_err());
        assert!(ContourGrid::with_breakpoints(&[0.1, 1.0], 32).is_err());
        assert!(ContourGrid::with_breakpoints(&[0.0, 0.5, 0.5, 1.0], 32).is_err());
    }

    #[test]
    fn mirror_grid_pairs_nodes_bitwise() {
        let g = ContourGrid::with_breakpoints(&[0.0, 0.35, 1.0], 48).unwrap();
        let m = g.mirror();
        let n = g.n_nodes();
        assert_eq!(m.n_nodes(), n);
        for i in 0..n {
            // bitwise equality by construction
            assert_eq!(m.nodes[i], 1.0 - g.nodes[n - 1 - i]);
            assert_eq!(g.companion(i), n - 1 - i);
        }
        // mirrored panels cover the reflected breakpoints
        assert_eq!(m.panels[0].a, 0.0);
        assert!((m.panels[0].b - 0.65).abs() < 1e-15);
        // weights of the mirror are the reversed weights of the original
        let wg = g.quadrature_weights();
        let wm = m.quadrature_weights();
        for i in 0..n {
            assert!((wm[i] - wg[n - 1 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn grid_quadrature_integrates_across_panels() {
        let g = ContourGrid::with_breakpoints(&[0.0, 0.3, 1.0], 40).unwrap();
        let vals: Vec<f64> = g.nodes.iter().map(|&t| (2.5 * t).exp()).collect();
        let exact = ((2.5f64).exp() - 1.0) / 2.5;
        let approx = g.integrate(&vals);
        assert!((approx - exact).abs() < 1e-9, "{approx} vs {exact}");
        let w = g.quadrature_weights();
        let total: f64 = w.iter().sum();
        assert!((total - 1.0).abs() < 1e-14, "weights sum {total}");
    }

    /// Scalar surrogate M = 1, L = lambda: dq/dt = -lambda q, q(1) known.
    fn decay_error(n_intervals: usize, sweeps: usize, lambda: f64) -> f64 {
        let grid = ContourGrid::with_breakpoints(&[0.0, 1.0], n_intervals).unwrap();
        let pattern = scalar_pattern();
        let mass = scalar_matrix(&pattern, 1.0);
        let op = scalar_matrix(&pattern, lambda);
        let ops = vec![&op; 1];
        let q = solve_propagator(&grid, &mass, &ops, &[1.0], None, sweeps, 1e-14).unwrap();
        (q.last().unwrap()[0] - (-lambda).exp()).abs()
    }

    /// Least-squares slope of log(err) against log(1/n).
    fn ls_slope(ns: &[usize], errs: &[f64]) -> f64 {
        let x: Vec<f64> = ns.iter().map(|&n| -(n as f64).ln()).collect();
        let y: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
        let k = x.len() as f64;
        let (sx, sy) = (x.iter().sum::<f64>(), y.iter().sum::<f64>());
        let sxx: f64 = x.iter().map(|v| v * v).sum();
        let sxy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        (k * sxy - sx * sy) / (k * sxx - sx * sx)
    }

    #[test]
    fn crank_nicolson_converges_at_second_order() {
        let errs: Vec<f64> = [16, 32, 64, 128]
            .iter()
            .map(|&n| decay_error(n, 0, 4.0))
            .collect();
        for w in errs.windows(2) {
            let rate = (w[0] / w[1]).log2();
            assert!(rate > 1.8 && rate < 2.3, "CN rates from {errs:?}");
        }
        // unit decay: overall slope lands tightly on 2
        let ns = [16usize, 32, 64, 128];
        let errs: Vec<f64> = ns.iter().map(|&n| decay_error(n, 0, 1.0)).collect();
        let s = ls_slope(&ns, &errs);
        assert!((s - 2.0).abs() < 0.1, "CN slope {s} from {errs:?}");
    }

    #[test]
    fn single_deferred_correction_reaches_fourth_order() {
        let ns = [8usize, 16, 32];
        let errs: Vec<f64> = ns.iter().map(|&n| decay_error(n, 1, 4.0)).collect();
        for w in errs.windows(2) {
            let rate = (w[0] / w[1]).log2();
            assert!(rate > 3.5, "SDC rates from {errs:?}");
        }
        let s = ls_slope(&ns, &errs);
        assert!((s - 4.0).abs() < 0.8, "SDC slope {s} from {errs:?}");
        // and it is far more accurate than plain CN at equal resolution
        assert!(decay_error(32, 1, 4.0) < decay_error(32, 0, 4.0) / 50.0);
    }

    #[test]
    fn second_correction_sweep_reaches_sixth_order() {
        let ns = [8usize, 16, 32];
        let errs: Vec<f64> = ns.iter().map(|&n| decay_error(n, 2, 4.0)).collect();
        let s = ls_slope(&ns, &errs);
        assert!((s - 6.0).abs() < 1.2, "two-sweep slope {s} from {errs:?}");
        // still above round-off at the finest grid
        assert!(errs[2] > 1e-14, "round-off contaminated: {errs:?}");
    }

    #[test]
    fn uniform_node_sweep_matches_decay_and_integrates_loads_exactly() {
        let pattern = scalar_pattern();
        let mass = scalar_matrix(&pattern, 1.0);
        let op = scalar_matrix(&pattern, 4.0);
        // second order on the decay problem
        let mut errs = Vec::new();
        for n in [32usize, 64, 128] {
            let nodes = uniform_nodes(n);
            let q = cn_sweep_on_nodes(&nodes, &mass, &op, &[1.0], None, 1e-14).unwrap();
            errs.push((q.last().unwrap()[0] - (-4.0f64).exp()).abs());
        }
        let s = ls_slope(&[32, 64, 128], &errs);
        assert!((s - 2.0).abs() < 0.15, "uniform CN slope {s}");
        // trapezoidal load handling is exact for a linear-in-t right side
        let zero = scalar_matrix(&pattern, 0.0);
        let nodes = uniform_nodes(10);
        let load = |t: f64| vec![2.0 * t];
        let q = cn_sweep_on_nodes(&nodes, &mass, &zero, &[0.0], Some(&load), 1e-14).unwrap();
        for (qi, &t) in q.iter().zip(&nodes) {
            assert!((qi[0] - t * t).abs() < 1e-14, "at t={t}: {}", qi[0]);
        }
    }

    #[test]
    fn forced_scalar_problem_tracks_manufactured_solution() {
        // q(t) = cos t solves dq/dt = -q + (cos t - sin t - ... ): choose
        // L = 1, b(t) = -sin t + cos t so M dq/dt = -L q + b holds exactly
        let grid = ContourGrid::with_breakpoints(&[0.0, 0.4, 1.0], 32).unwrap();
        let pattern = scalar_pattern();
        let mass = scalar_matrix(&pattern, 1.0);
        let op = scalar_matrix(&pattern, 1.0);
        let ops = vec![&op, &op];
        let load = |t: f64| vec![-t.sin() + t.cos()];
        let q = solve_propagator(&grid, &mass, &ops, &[1.0], Some(&load), 2, 1e-14).unwrap();
        for (qi, &t) in q.iter().zip(&grid.nodes) {
            assert!(
                (qi[0] - t.cos()).abs() < 2e-9,
                "at t={t}: {} vs {}",
                qi[0],
                t.cos()
            );
        }
    }

    #[test]
    fn multi_panel_sdc_is_continuous_and_accurate() {
        // two panels with different operators: decay rate switches at 0.25
        let grid = ContourGrid::with_breakpoints(&[0.0, 0.25, 1.0], 48).unwrap();
        let pattern = scalar_pattern();
        let mass = scalar_matrix(&pattern, 1.0);
        let op1 = scalar_matrix(&pattern, 6.0);
        let op2 = scalar_matrix(&pattern, 1.0);
        let ops = vec![&op1, &op2];
        let q = solve_propagator(&grid, &mass, &ops, &[1.0], None, 2, 1e-14).unwrap();
        let exact = (-6.0 * 0.25f64).exp() * (-(1.0 - 0.25f64)).exp();
        let err = (q.last().unwrap()[0] - exact).abs();
        assert!(err < 1e-8, "switched decay error {err}");
    }
}
