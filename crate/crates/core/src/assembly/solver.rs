//! Symmetric Krylov solvers: Jacobi-preconditioned conjugate gradients with
//! an automatic MINRES fallback when negative curvature is detected (the
//! time-stepping matrices are symmetric and, for admissible step sizes,
//! positive definite — the fallback guards strongly indefinite field data).
//!
//! Inner products are accumulated serially so iteration counts and results
//! are independent of the thread pool.

use super::CsrMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub iterations: usize,
    pub residual: f64,
    pub used_minres: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solve A x = b for symmetric A to relative residual `tol`, warm-starting
/// from `x0` when given.
pub fn solve_sym(
    a: &CsrMatrix,
    b: &[f64],
    x0: Option<&[f64]>,
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, SolveStats)> {
    let n = a.n();
    assert_eq!(b.len(), n);
    let norm_b = norm(b);
    if norm_b == 0.0 {
        return Ok((vec![0.0; n], SolveStats::default()));
    }
    let mut diag = a.diagonal();
    for d in diag.iter_mut() {
        if d.abs() < 1e-300 {
            *d = 1.0;
        }
    }

    let mut x = match x0 {
        Some(v) => {
            assert_eq!(v.len(), n);
            v.to_vec()
        }
        None => vec![0.0; n],
    };
    let mut r = vec![0.0; n];
    a.mul_vec(&x, &mut r);
    for i in 0..n {
        r[i] = b[i] - r[i];
    }
    let mut z: Vec<f64> = r.iter().zip(&diag).map(|(ri, di)| ri / di).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];
    let target = tol * norm_b;

    for it in 0..max_iter {
        let res = norm(&r);
        if res <= target {
            return Ok((x, SolveStats { iterations: it, residual: res / norm_b, used_minres: false }));
        }
        a.mul_vec(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 || !pap.is_finite() {
            // negative curvature: the matrix is not positive definite along
            // this direction; restart with MINRES from the current iterate
            let (y, stats) = minres(a, b, Some(&x), &diag, tol, max_iter)?;
            return Ok((
                y,
                SolveStats { iterations: it + stats.iterations, residual: stats.residual, used_minres: true },
            ));
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        for i in 0..n {
            z[i] = r[i] / diag[i];
        }
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    let res = norm(&r) / norm_b;
    if res <= 100.0 * tol {
        // accept a near miss rather than abort a long outer iteration
        return Ok((x, SolveStats { iterations: max_iter, residual: res, used_minres: false }));
    }
    Err(Error::SolveFailed(format!(
        "conjugate gradients stalled at relative residual {res:.3e} after {max_iter} iterations"
    )))
}

/// Jacobi-preconditioned MINRES for symmetric (possibly indefinite) systems.
fn minres(
    a: &CsrMatrix,
    b: &[f64],
    x0: Option<&[f64]>,
    diag: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, SolveStats)> {
    let n = a.n();
    let inv_sqrt_d: Vec<f64> = diag.iter().map(|d| 1.0 / d.abs().sqrt()).collect();
    // symmetric diagonal scaling: solve (D^-1/2 A D^-1/2) (D^1/2 x) = D^-1/2 b
    let apply = |v: &[f64], out: &mut Vec<f64>| {
        let scaled: Vec<f64> = v.iter().zip(&inv_sqrt_d).map(|(x, s)| x * s).collect();
        a.mul_vec(&scaled, out);
        for i in 0..n {
            out[i] *= inv_sqrt_d[i];
        }
    };
    let bs: Vec<f64> = b.iter().zip(&inv_sqrt_d).map(|(x, s)| x * s).collect();
    let mut xs: Vec<f64> = match x0 {
        Some(v) => v.iter().zip(&inv_sqrt_d).map(|(x, s)| x / s).collect(),
        None => vec![0.0; n],
    };

    let mut r = vec![0.0; n];
    apply(&xs, &mut r);
    for i in 0..n {
        r[i] = bs[i] - r[i];
    }
    let mut beta = norm(&r);
    if beta == 0.0 {
        let x: Vec<f64> = xs.iter().zip(&inv_sqrt_d).map(|(x, s)| x * s).collect();
        return Ok((x, SolveStats { iterations: 0, residual: 0.0, used_minres: true }));
    }
    let mut v_prev = vec![0.0; n];
    let mut v: Vec<f64> = r.iter().map(|x| x / beta).collect();
    let (mut c, mut s) = (1.0f64, 0.0f64);
    let (mut c_prev, mut s_prev) = (1.0f64, 0.0f64);
    let mut w = vec![0.0; n];
    let mut w_prev = vec![0.0; n];
    let mut eta = beta;
    let norm_bs = norm(&bs).max(1e-300);
    let mut work = vec![0.0; n];
    let mut final_res = 1.0;
    let mut iters = 0;

    for it in 0..max_iter {
        iters = it + 1;
        apply(&v, &mut work);
        let alpha = dot(&v, &work);
        for i in 0..n {
            work[i] -= alpha * v[i] + beta * v_prev[i];
        }
        let beta_next = norm(&work);
        // two previous Givens rotations applied to the new column
        let delta = c * alpha - c_prev * s * beta;
        let rho2 = s * alpha + c_prev * c * beta;
        let rho3 = s_prev * beta;
        let rho1 = (delta * delta + beta_next * beta_next).sqrt();
        if rho1 == 0.0 {
            break;
        }
        let c_next = delta / rho1;
        let s_next = beta_next / rho1;
        for i in 0..n {
            let wn = (v[i] - rho2 * w[i] - rho3 * w_prev[i]) / rho1;
            w_prev[i] = w[i];
            w[i] = wn;
            xs[i] += c_next * eta * w[i];
        }
        eta = -s_next * eta;
        final_res = eta.abs() / norm_bs;
        if final_res <= tol {
            break;
        }
        if beta_next == 0.0 {
            break;
        }
        for i in 0..n {
            let vn = work[i] / beta_next;
            v_prev[i] = v[i];
            v[i] = vn;
        }
        beta = beta_next;
        c_prev = c;
        s_prev = s;
        c = c_next;
        s = s_next;
    }
    let x: Vec<f64> = xs.iter().zip(&inv_sqrt_d).map(|(x, s)| x * s).collect();
    if final_res <= 100.0 * tol {
        Ok((x, SolveStats { iterations: iters, residual: final_res, used_minres: true }))
    } else {
        Err(Error::SolveFailed(format!(
            "minres stalled at relative residual {final_res:.3e} after {iters} iterations"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::{Assembler, CsrMatrix};
    use crate::mesh::HighOrderSurfaceMesh;
    use crate::surface::LevelSetSurface;

    fn test_system() -> (CsrMatrix, CsrMatrix, usize) {
        let mesh =
            HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), 2, 2).unwrap();
        let asm = Assembler::new(&mesh).unwrap();
        let n = asm.n_dofs();
        (asm.mass(), asm.stiffness(), n)
    }

    #[test]
    fn cg_solves_shifted_laplacian_to_tolerance() {
        let (m, a, n) = test_system();
        let mut sys = CsrMatrix::zeros(m.pattern.clone());
        sys.set_combination(1.0, &m, 0.01, &a);
        let b: Vec<f64> = (0..n).map(|i| ((i * 37) % 11) as f64 - 5.0).collect();
        let (x, stats) = solve_sym(&sys, &b, None, 1e-11, 2000).unwrap();
        let mut r = vec![0.0; n];
        sys.mul_vec(&x, &mut r);
        let res: f64 = r
            .iter()
            .zip(&b)
            .map(|(ax, bb)| (ax - bb) * (ax - bb))
            .sum::<f64>()
            .sqrt();
        let nb: f64 = b.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!(res / nb <= 1e-10, "residual {res}");
        assert!(!stats.used_minres);
        assert!(stats.iterations > 0);
    }

    #[test]
    fn warm_start_from_solution_takes_no_iterations() {
        let (m, a, n) = test_system();
        let mut sys = CsrMatrix::zeros(m.pattern.clone());
        sys.set_combination(1.0, &m, 0.01, &a);
        let b: Vec<f64> = (0..n).map(|i| (i as f64 * 0.01).sin()).collect();
        let (x, _) = solve_sym(&sys, &b, None, 1e-12, 4000).unwrap();
        let (_, stats) = solve_sym(&sys, &b, Some(&x), 1e-10, 4000).unwrap();
        assert_eq!(stats.iterations, 0, "warm start should converge instantly");
    }

    #[test]
    fn indefinite_system_falls_back_to_minres() {
        let (m, a, n) = test_system();
        // strongly negative shift: M - 0.5 A is indefinite on a fine mesh
        let mut sys = CsrMatrix::zeros(m.pattern.clone());
        sys.set_combination(1.0, &m, -0.5, &a);
        let b: Vec<f64> = (0..n).map(|i| ((i % 7) as f64) - 3.0).collect();
        let (x, stats) = solve_sym(&sys, &b, None, 1e-9, 20000).unwrap();
        assert!(stats.used_minres, "expected the minres fallback to engage");
        let mut r = vec![0.0; n];
        sys.mul_vec(&x, &mut r);
        let res: f64 = r
            .iter()
            .zip(&b)
            .map(|(ax, bb)| (ax - bb) * (ax - bb))
            .sum::<f64>()
            .sqrt();
        let nb: f64 = b.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!(res / nb <= 1e-6, "residual {}", res / nb);
    }

    #[test]
    fn zero_rhs_returns_zero() {
        let (m, _, n) = test_system();
        let (x, stats) = solve_sym(&m, &vec![0.0; n], None, 1e-12, 10).unwrap();
        assert!(x.iter().all(|&v| v == 0.0));
        assert_eq!(stats.iterations, 0);
    }
}
