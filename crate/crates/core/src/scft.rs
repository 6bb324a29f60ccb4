//! Self-consistent field theory for an AB diblock copolymer melt confined
//! to a curved surface.
//!
//! The chain propagators solve M dq/dt = -(K + M_w) q along the chain
//! contour, where K is the Laplace-Beltrami stiffness matrix and M_w the
//! mass matrix weighted by the region field (w_A = omega_plus - omega_minus
//! on the A block, w_B = omega_plus + omega_minus on the B block). The
//! backward propagator runs in the reflected contour variable s = 1 - t, so
//! its region layout mirrors the forward one and forward node k pairs
//! exactly with backward node N - 1 - k for density accumulation.
//!
//! Field updates are explicit mixing steps on the pressure-like field
//! omega_plus (driven by the incompressibility defect) and the exchange
//! field omega_minus (driven by the exchange defect); iteration stops when
//! the free energy stalls or both defects drop below the fixed-point
//! tolerance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assembly::{Assembler, CsrMatrix};
use crate::contour::{solve_propagator, ContourGrid};
use crate::mesh::HighOrderSurfaceMesh;
use crate::{Error, Result};

/// Model and iteration parameters for a diblock melt.
#[derive(Debug, Clone)]
pub struct ScftParams {
    /// Flory-Huggins interaction strength times chain length.
    pub chi_n: f64,
    /// A-block fraction of the chain, in (0, 1).
    pub f: f64,
    /// Number of contour nodes for the forward grid (intervals = nodes - 1).
    pub contour_nodes: usize,
    /// Deferred-correction sweeps after the Crank-Nicolson predictor.
    pub sdc_sweeps: usize,
    /// Mixing step for the pressure field update.
    pub lambda_plus: f64,
    /// Mixing step for the exchange field update.
    pub lambda_minus: f64,
    /// Stop when |H_k - H_{k-1}| falls below this.
    pub energy_tol: f64,
    /// ... or when both field defects fall below this.
    pub residual_tol: f64,
    /// Inner linear-solver relative tolerance.
    pub linear_tol: f64,
    /// Iteration cap for `solve`.
    pub max_iterations: usize,
}

impl Default for ScftParams {
    fn default() -> Self {
        ScftParams {
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
        }
    }
}

/// The two conjugate fields, indexed by mesh dof.
#[derive(Debug, Clone)]
pub struct ScftState {
    pub omega_plus: Vec<f64>,
    pub omega_minus: Vec<f64>,
}

/// Everything one mixing iteration produces, measured before the fields
/// were updated (i.e. consistent with the state that produced it).
#[derive(Debug, Clone)]
pub struct IterationStep {
    /// Free energy per chain of the current fields.
    pub h: f64,
    /// Single-chain partition function.
    pub big_q: f64,
    /// Max norm of phi_A + phi_B - 1 over the dofs.
    pub incompressibility: f64,
    /// Max norm of 2 omega_minus / chi N - (phi_A - phi_B) over the dofs.
    pub exchange: f64,
    /// A-block density.
    pub phi_a: Vec<f64>,
    /// B-block density.
    pub phi_b: Vec<f64>,
    /// Forward propagator at the free chain end, q(., 1).
    pub q_end: Vec<f64>,
    /// Backward propagator at its free end, evaluated over the full chain.
    pub q_dagger_end: Vec<f64>,
}

/// One row of the iteration history.
#[derive(Debug, Clone, Copy)]
pub struct IterationRecord {
    pub iteration: usize,
    pub h: f64,
    pub big_q: f64,
    pub incompressibility: f64,
    pub exchange: f64,
    pub delta_h: f64,
}

/// Outcome of a field-theory solve on a fixed mesh.
#[derive(Debug)]
pub struct ScftSolution {
    pub converged: bool,
    pub iterations: usize,
    pub h: f64,
    pub big_q: f64,
    pub incompressibility: f64,
    pub exchange: f64,
    pub phi_a: Vec<f64>,
    pub phi_b: Vec<f64>,
    pub q_end: Vec<f64>,
    pub q_dagger_end: Vec<f64>,
    pub history: Vec<IterationRecord>,
}

/// Assembled operators and contour grids for one mesh.
pub struct ScftSystem<'m> {
    pub assembler: Assembler<'m>,
    pub params: ScftParams,
    mass: CsrMatrix,
    stiffness: CsrMatrix,
    area: f64,
    /// M . 1, the dof weights of the surface integral.
    weights: Vec<f64>,
    /// Forward contour grid with a panel break at t = f.
    pub grid_forward: ContourGrid,
    /// Reflected grid for the backward propagator.
    pub grid_backward: ContourGrid,
    /// Number of leading forward panels covering the A block [0, f].
    a_panels: usize,
}

impl<'m> ScftSystem<'m> {
    pub fn new(mesh: &'m HighOrderSurfaceMesh, params: ScftParams) -> Result<Self> {
        if !(params.f > 0.0 && params.f < 1.0) {
            return Err(Error::Config(format!(
                "block fraction must lie strictly inside (0, 1), got {}",
                params.f
            )));
        }
        if !(params.chi_n > 0.0) {
            return Err(Error::Config(format!(
                "interaction strength must be positive, got {}",
                params.chi_n
            )));
        }
        if !(params.lambda_plus > 0.0 && params.lambda_minus > 0.0) {
            return Err(Error::Config(format!(
                "mixing steps must be positive, got {} and {}",
                params.lambda_plus, params.lambda_minus
            )));
        }
        if !(params.energy_tol > 0.0) {
            return Err(Error::Config(format!(
                "energy tolerance must be positive, got {}",
                params.energy_tol
            )));
        }
        if params.contour_nodes < 2 {
            return Err(Error::Config(
                "need at least two contour nodes".into(),
            ));
        }
        let assembler = Assembler::new(mesh)?;
        let mass = assembler.mass();
        let stiffness = assembler.stiffness();
        let n = mass.n();
        let mut weights = vec![0.0; n];
        mass.mul_vec(&vec![1.0; n], &mut weights);
        let area = assembler.area();
        let grid_forward =
            ContourGrid::with_breakpoints(&[0.0, params.f, 1.0], params.contour_nodes - 1)?;
        let grid_backward = grid_forward.mirror();
        let a_panels = grid_forward.panels_until(params.f);
        Ok(ScftSystem {
            assembler,
            params,
            mass,
            stiffness,
            area,
            weights,
            grid_forward,
            grid_backward,
            a_panels,
        })
    }

    pub fn n_dofs(&self) -> usize {
        self.mass.n()
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Surface integral of a nodal field.
    pub fn integral(&self, field: &[f64]) -> f64 {
        self.weights.iter().zip(field).map(|(w, v)| w * v).sum()
    }

    /// Area-normalised L2 norm sqrt( (1/|S|) int v^2 ).
    pub fn rms(&self, field: &[f64]) -> f64 {
        let mut mv = vec![0.0; field.len()];
        self.mass.mul_vec(field, &mut mv);
        let q: f64 = mv.iter().zip(field).map(|(a, b)| a * b).sum();
        (q.max(0.0) / self.area).sqrt()
    }

    /// Solve both chain propagators for the given fields. Returns the full
    /// trajectories on the forward and backward grids.
    pub fn propagators(&self, state: &ScftState) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
        let n = self.n_dofs();
        assert_eq!(state.omega_plus.len(), n);
        assert_eq!(state.omega_minus.len(), n);
        let w_a: Vec<f64> = state
            .omega_plus
            .iter()
            .zip(&state.omega_minus)
            .map(|(p, m)| p - m)
            .collect();
        let w_b: Vec<f64> = state
            .omega_plus
            .iter()
            .zip(&state.omega_minus)
            .map(|(p, m)| p + m)
            .collect();
        let mut op_a = self.assembler.field_mass(&w_a);
        op_a.axpy(1.0, &self.stiffness);
        let mut op_b = self.assembler.field_mass(&w_b);
        op_b.axpy(1.0, &self.stiffness);

        // forward panel regions: A up to the breakpoint, then B; the
        // backward grid walks the chain from the other end, so its panel
        // regions are reversed
        let fwd_ops: Vec<&CsrMatrix> = self
            .grid_forward
            .panels
            .iter()
            .enumerate()
            .map(|(k, _)| if k < self.a_panels { &op_a } else { &op_b })
            .collect();
        let n_panels = self.grid_backward.panels.len();
        let bwd_ops: Vec<&CsrMatrix> = (0..n_panels)
            .map(|k| {
                if k < n_panels - self.a_panels {
                    &op_b
                } else {
                    &op_a
                }
            })
            .collect();
        let ones = vec![1.0; n];
        let tol = self.params.linear_tol;
        let sweeps = self.params.sdc_sweeps;
        let (qf, qb) = rayon::join(
            || {
                solve_propagator(
                    &self.grid_forward,
                    &self.mass,
                    &fwd_ops,
                    &ones,
                    None,
                    sweeps,
                    tol,
                )
            },
            || {
                solve_propagator(
                    &self.grid_backward,
                    &self.mass,
                    &bwd_ops,
                    &ones,
                    None,
                    sweeps,
                    tol,
                )
            },
        );
        Ok((qf?, qb?))
    }

    /// Partition function and block densities from the two trajectories.
    pub fn observables(
        &self,
        qf: &[Vec<f64>],
        qb: &[Vec<f64>],
    ) -> Result<(f64, Vec<f64>, Vec<f64>)> {
        let n = self.n_dofs();
        let n_nodes = self.grid_forward.n_nodes();
        assert_eq!(qf.len(), n_nodes);
        assert_eq!(qb.len(), n_nodes);
        let big_q = self.integral(qf.last().expect("nonempty trajectory")) / self.area;
        if !(big_q > 0.0) || !big_q.is_finite() {
            return Err(Error::NonPositiveQ(big_q));
        }
        let w_a = self
            .grid_forward
            .quadrature_weights_range(0, self.a_panels);
        let w_b = self
            .grid_forward
            .quadrature_weights_range(self.a_panels, self.grid_forward.panels.len());
        let mut phi_a = vec![0.0; n];
        let mut phi_b = vec![0.0; n];
        for k in 0..n_nodes {
            let c = self.grid_forward.companion(k);
            let (wa, wb) = (w_a[k], w_b[k]);
            if wa == 0.0 && wb == 0.0 {
                continue;
            }
            let (fk, bk) = (&qf[k], &qb[c]);
            if wa != 0.0 {
                for i in 0..n {
                    phi_a[i] += wa * fk[i] * bk[i];
                }
            }
            if wb != 0.0 {
                for i in 0..n {
                    phi_b[i] += wb * fk[i] * bk[i];
                }
            }
        }
        let inv_q = 1.0 / big_q;
        for v in phi_a.iter_mut() {
            *v *= inv_q;
        }
        for v in phi_b.iter_mut() {
            *v *= inv_q;
        }
        Ok((big_q, phi_a, phi_b))
    }

    /// Free energy per chain of the given fields.
    pub fn energy(&self, state: &ScftState, big_q: f64) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n_dofs() {
            acc += self.weights[i]
                * (-state.omega_plus[i]
                    + state.omega_minus[i] * state.omega_minus[i] / self.params.chi_n);
        }
        acc / self.area - big_q.ln()
    }

    /// One mixing iteration: propagate, measure, then update the fields in
    /// place. The returned step describes the fields as they were measured.
    pub fn iteration(&self, state: &mut ScftState) -> Result<IterationStep> {
        let (qf, qb) = self.propagators(state)?;
        let (big_q, phi_a, phi_b) = self.observables(&qf, &qb)?;
        let h = self.energy(state, big_q);
        let (incompressibility, exchange) = update_fields(
            state,
            &phi_a,
            &phi_b,
            self.params.chi_n,
            self.params.lambda_plus,
            self.params.lambda_minus,
        );
        let q_end = qf.last().expect("nonempty trajectory").clone();
        let q_dagger_end = qb.last().expect("nonempty trajectory").clone();
        Ok(IterationStep {
            h,
            big_q,
            incompressibility,
            exchange,
            phi_a,
            phi_b,
            q_end,
            q_dagger_end,
        })
    }

    /// Iterate to self-consistency on this mesh.
    pub fn solve(&self, state: &mut ScftState) -> Result<ScftSolution> {
        self.solve_with(state, |_, _| Ok(()))
    }

    /// Like `solve`, invoking `on_step` after every iteration (snapshot
    /// emission, progress logging); an error from the callback aborts.
    pub fn solve_with(
        &self,
        state: &mut ScftState,
        mut on_step: impl FnMut(usize, &IterationStep) -> Result<()>,
    ) -> Result<ScftSolution> {
        let mut history = Vec::new();
        let mut prev_h: Option<f64> = None;
        let mut last: Option<IterationStep> = None;
        let mut converged = false;
        for it in 0..self.params.max_iterations {
            let step = self.iteration(state)?;
            on_step(it, &step)?;
            let delta_h = prev_h.map_or(f64::NAN, |p| step.h - p);
            history.push(IterationRecord {
                iteration: it,
                h: step.h,
                big_q: step.big_q,
                incompressibility: step.incompressibility,
                exchange: step.exchange,
                delta_h,
            });
            let energy_ok = prev_h.is_some_and(|p| (step.h - p).abs() < self.params.energy_tol);
            let residual_ok = step.incompressibility < self.params.residual_tol
                && step.exchange < self.params.residual_tol;
            prev_h = Some(step.h);
            last = Some(step);
            if energy_ok || residual_ok {
                converged = true;
                break;
            }
        }
        let step = last.expect("at least one iteration");
        Ok(ScftSolution {
            converged,
            iterations: history.len(),
            h: step.h,
            big_q: step.big_q,
            incompressibility: step.incompressibility,
            exchange: step.exchange,
            phi_a: step.phi_a,
            phi_b: step.phi_b,
            q_end: step.q_end,
            q_dagger_end: step.q_dagger_end,
            history,
        })
    }
}

/// Explicit mixing step on both fields, in place: the pressure-like field
/// moves up the incompressibility defect phi_A + phi_B - 1 and the exchange
/// field moves down the exchange defect 2 omega_minus / chi N -
/// (phi_A - phi_B). Returns the max norms of the two defects, measured
/// before the update; a state whose defects vanish is left untouched.
pub fn update_fields(
    state: &mut ScftState,
    phi_a: &[f64],
    phi_b: &[f64],
    chi_n: f64,
    lambda_plus: f64,
    lambda_minus: f64,
) -> (f64, f64) {
    let n = state.omega_plus.len();
    assert_eq!(state.omega_minus.len(), n);
    assert_eq!(phi_a.len(), n);
    assert_eq!(phi_b.len(), n);
    let mut incompressibility = 0.0_f64;
    let mut exchange = 0.0_f64;
    for i in 0..n {
        let defect_plus = phi_a[i] + phi_b[i] - 1.0;
        let defect_minus = 2.0 * state.omega_minus[i] / chi_n - (phi_a[i] - phi_b[i]);
        incompressibility = incompressibility.max(defect_plus.abs());
        exchange = exchange.max(defect_minus.abs());
        state.omega_plus[i] += lambda_plus * defect_plus;
        state.omega_minus[i] -= lambda_minus * defect_minus;
    }
    (incompressibility, exchange)
}

/// The spatially uniform exchange field at which the homogeneous melt is
/// stationary, chi N (2f - 1) / 2.
pub fn homogeneous_exchange_field(chi_n: f64, f: f64) -> f64 {
    chi_n * (2.0 * f - 1.0) / 2.0
}

/// Free energy of the homogeneous melt, -chi N (1 - 2f)^2 / 4.
pub fn homogeneous_energy(chi_n: f64, f: f64) -> f64 {
    -chi_n * (1.0 - 2.0 * f) * (1.0 - 2.0 * f) / 4.0
}

/// Seed fields: omega_plus = 0 and omega_minus at its homogeneous value
/// plus twelve icosahedrally arranged bumps and a little seeded noise, to
/// break symmetry towards a spotted minority-block pattern.
pub fn seeded_initial_state(
    positions: &[[f64; 3]],
    chi_n: f64,
    f: f64,
    seed: u64,
) -> ScftState {
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let norm = (1.0 + phi * phi).sqrt();
    let mut dirs = Vec::with_capacity(12);
    for &s0 in &[1.0, -1.0] {
        for &s1 in &[1.0, -1.0] {
            dirs.push([0.0, s0 / norm, s1 * phi / norm]);
            dirs.push([s1 * phi / norm, 0.0, s0 / norm]);
            dirs.push([s0 / norm, s1 * phi / norm, 0.0]);
        }
    }
    let base = homogeneous_exchange_field(chi_n, f);
    let amp = 0.4 * chi_n;
    let sigma2 = 0.1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let omega_minus: Vec<f64> = positions
        .iter()
        .map(|p| {
            let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            let u = if r > 0.0 {
                [p[0] / r, p[1] / r, p[2] / r]
            } else {
                [0.0, 0.0, 1.0]
            };
            let mut bumps = 0.0;
            for d in &dirs {
                let dx = u[0] - d[0];
                let dy = u[1] - d[1];
                let dz = u[2] - d[2];
                let dist2 = dx * dx + dy * dy + dz * dz;
                bumps += (-dist2 / (2.0 * sigma2)).exp();
            }
            base + amp * bumps + rng.gen_range(-0.5..0.5)
        })
        .collect();
    ScftState {
        omega_plus: vec![0.0; positions.len()],
        omega_minus,
    }
}
