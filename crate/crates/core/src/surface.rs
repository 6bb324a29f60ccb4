//! Level-set surface descriptions and point projection.
//!
//! A surface is the zero set of a smooth psi: R^3 -> R with non-vanishing
//! gradient near the surface. Projection onto the surface runs a damped
//! Newton iteration along grad(psi),
//!
//!   x <- x - psi(x) grad(psi)(x) / |grad(psi)(x)|^2,
//!
//! followed by tangential sliding so that points within the convergence tube
//! land at (a numerical approximation of) the closest surface point.

use crate::{Error, Result};

mod expr;
pub use expr::Expression;

/// Built-in and user-supplied level-set surfaces.
#[derive(Debug, Clone)]
pub enum SurfaceKind {
    /// psi = x^2 + y^2 + z^2 - r^2 (closed surface).
    Sphere { radius: f64 },
    /// psi = z - x^2 + y^2 (open saddle sheet, meshed as a parametric patch).
    Saddle,
    /// psi = z - x^2 - y^2 (open paraboloid sheet).
    Paraboloid,
    /// psi given by a parsed expression in x, y, z; gradient by central
    /// finite differences.
    Expression { text: String, compiled: Expression },
}

/// How points are moved onto the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionMode {
    /// Damped Newton along grad(psi) plus tangential sliding: approximately
    /// the closest surface point. The right choice for closed surfaces.
    ClosestPoint,
    /// One-dimensional Newton in z only, keeping (x, y) fixed. The right
    /// choice for graph-like patches, where it preserves the parametric
    /// footprint of the mesh (closest-point projection would drag boundary
    /// nodes off the patch boundary).
    VerticalLift,
}

#[derive(Debug, Clone)]
pub struct LevelSetSurface {
    pub kind: SurfaceKind,
    /// Characteristic length L of the surface; projection and mesh tolerances
    /// are scaled by it.
    pub length_scale: f64,
    pub projection: ProjectionMode,
}

/// Newton tolerance on |psi| relative to the length scale.
const PROJECT_TOL: f64 = 1e-12;
const MAX_NEWTON_ITERS: usize = 30;

impl LevelSetSurface {
    pub fn sphere(radius: f64) -> Self {
        assert!(radius > 0.0);
        Self {
            kind: SurfaceKind::Sphere { radius },
            length_scale: radius,
            projection: ProjectionMode::ClosestPoint,
        }
    }

    pub fn unit_sphere() -> Self {
        Self::sphere(1.0)
    }

    pub fn saddle() -> Self {
        Self {
            kind: SurfaceKind::Saddle,
            length_scale: 1.0,
            projection: ProjectionMode::ClosestPoint,
        }
    }

    pub fn paraboloid() -> Self {
        Self {
            kind: SurfaceKind::Paraboloid,
            length_scale: 1.0,
            projection: ProjectionMode::ClosestPoint,
        }
    }

    /// Parse a level-set expression in the variables x, y, z.
    pub fn from_expression(text: &str) -> Result<Self> {
        let compiled = Expression::parse(text)?;
        Ok(Self {
            kind: SurfaceKind::Expression { text: text.to_string(), compiled },
            length_scale: 1.0,
            projection: ProjectionMode::ClosestPoint,
        })
    }

    /// Parse a surface name: `sphere` (unit), `sphere:R`, `saddle`,
    /// `paraboloid`, or `expr:<formula>`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("expr:") {
            return Self::from_expression(rest);
        }
        if let Some(rest) = name.strip_prefix("sphere:") {
            let r: f64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad sphere radius {rest:?}")))?;
            if !(r > 0.0) {
                return Err(Error::Config(format!("sphere radius must be positive, got {r}")));
            }
            return Ok(Self::sphere(r));
        }
        match name {
            "sphere" => Ok(Self::unit_sphere()),
            "saddle" => Ok(Self::saddle()),
            "paraboloid" => Ok(Self::paraboloid()),
            other => Err(Error::Config(format!(
                "unknown surface {other:?}; expected sphere[:R], saddle, paraboloid or expr:<formula>"
            ))),
        }
    }

    pub fn psi(&self, x: [f64; 3]) -> f64 {
        match &self.kind {
            SurfaceKind::Sphere { radius } => {
                x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - radius * radius
            }
            SurfaceKind::Saddle => x[2] - x[0] * x[0] + x[1] * x[1],
            SurfaceKind::Paraboloid => x[2] - x[0] * x[0] - x[1] * x[1],
            SurfaceKind::Expression { compiled, .. } => compiled.eval(x),
        }
    }

    pub fn grad_psi(&self, x: [f64; 3]) -> [f64; 3] {
        match &self.kind {
            SurfaceKind::Sphere { .. } => [2.0 * x[0], 2.0 * x[1], 2.0 * x[2]],
            SurfaceKind::Saddle => [-2.0 * x[0], 2.0 * x[1], 1.0],
            SurfaceKind::Paraboloid => [-2.0 * x[0], -2.0 * x[1], 1.0],
            SurfaceKind::Expression { compiled, .. } => {
                let mut g = [0.0; 3];
                for i in 0..3 {
                    let h = 1e-6 * (1.0 + x[i].abs());
                    let mut xp = x;
                    let mut xm = x;
                    xp[i] += h;
                    xm[i] -= h;
                    g[i] = (compiled.eval(xp) - compiled.eval(xm)) / (2.0 * h);
                }
                g
            }
        }
    }

    /// Outward-oriented unit normal grad(psi)/|grad(psi)|.
    pub fn normal(&self, x: [f64; 3]) -> [f64; 3] {
        let g = self.grad_psi(x);
        let n = norm(g);
        [g[0] / n, g[1] / n, g[2] / n]
    }

    /// Switch node placement to vertical lifting (see `ProjectionMode`).
    pub fn with_vertical_lift(mut self) -> Self {
        self.projection = ProjectionMode::VerticalLift;
        self
    }

    /// Move a point onto the surface according to the projection mode.
    /// Errors if |psi| has not converged within the iteration budget.
    pub fn project(&self, x0: [f64; 3]) -> Result<[f64; 3]> {
        let tol = PROJECT_TOL * self.length_scale.max(1.0) * self.length_scale.max(1.0);
        if self.projection == ProjectionMode::VerticalLift {
            return self.lift_z(x0, tol);
        }
        let mut q = self.newton_to_surface(x0, tol)?;
        // Slide along the surface until the offset x0 - q is parallel to the
        // normal; each slide is re-projected onto the level set.
        for _ in 0..12 {
            let n = self.normal(q);
            let d = [x0[0] - q[0], x0[1] - q[1], x0[2] - q[2]];
            let dn = dot(d, n);
            let t = [d[0] - dn * n[0], d[1] - dn * n[1], d[2] - dn * n[2]];
            let tn = norm(t);
            if tn <= PROJECT_TOL * self.length_scale.max(1.0) {
                break;
            }
            let cand = [q[0] + t[0], q[1] + t[1], q[2] + t[2]];
            match self.newton_to_surface(cand, tol) {
                Ok(next) => q = next,
                Err(_) => break, // keep the last on-surface point
            }
        }
        Ok(q)
    }

    /// Newton in z with (x, y) held fixed.
    fn lift_z(&self, x0: [f64; 3], tol: f64) -> Result<[f64; 3]> {
        let mut x = x0;
        for _ in 0..60 {
            let f = self.psi(x);
            if f.abs() <= tol {
                return Ok(x);
            }
            let dz = self.grad_psi(x)[2];
            if dz == 0.0 {
                break;
            }
            x[2] -= f / dz;
        }
        let f = self.psi(x);
        if f.abs() <= 1e3 * tol {
            Ok(x)
        } else {
            Err(Error::ProjectionFailed(format!(
                "z-lift |psi| = {:.3e} from {x0:?}",
                f.abs()
            )))
        }
    }

    fn newton_to_surface(&self, x0: [f64; 3], tol: f64) -> Result<[f64; 3]> {
        let mut x = x0;
        let mut f = self.psi(x);
        for _ in 0..MAX_NEWTON_ITERS {
            if f.abs() <= tol {
                return Ok(x);
            }
            let g = self.grad_psi(x);
            let g2 = dot(g, g);
            if g2 == 0.0 {
                return Err(Error::ProjectionFailed(format!(
                    "vanishing level-set gradient at {x:?}"
                )));
            }
            let step = [f * g[0] / g2, f * g[1] / g2, f * g[2] / g2];
            // damping: halve the step until |psi| decreases
            let mut lambda = 1.0;
            loop {
                let cand = [x[0] - lambda * step[0], x[1] - lambda * step[1], x[2] - lambda * step[2]];
                let fc = self.psi(cand);
                if fc.abs() < f.abs() || lambda < 1.0 / 1024.0 {
                    x = cand;
                    f = fc;
                    break;
                }
                lambda *= 0.5;
            }
        }
        if f.abs() <= tol {
            Ok(x)
        } else {
            Err(Error::ProjectionFailed(format!(
                "|psi| = {:.3e} after {MAX_NEWTON_ITERS} iterations from {x0:?}",
                f.abs()
            )))
        }
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_projection_is_radial() {
        let s = LevelSetSurface::sphere(2.0);
        let p = s.project([3.0, 0.0, 0.0]).unwrap();
        assert!((p[0] - 2.0).abs() < 1e-10 && p[1].abs() < 1e-12 && p[2].abs() < 1e-12);
        let p = s.project([0.3, -0.7, 0.4]).unwrap();
        assert!(s.psi(p).abs() < 1e-10);
        let r = norm(p);
        assert!((r - 2.0).abs() < 1e-10);
        // radial direction preserved for the closest point on a sphere
        let d = norm([0.3, -0.7, 0.4]);
        for i in 0..3 {
            assert!((p[i] - [0.3, -0.7, 0.4][i] * 2.0 / d).abs() < 1e-9);
        }
    }

    #[test]
    fn projection_matches_dense_grid_nearest_point_on_paraboloid() {
        // Oracle: brute-force closest point over a fine parametric grid of
        // z = x^2 + y^2. Checked for generic points within the convergence
        // tube of the surface.
        let s = LevelSetSurface::paraboloid();
        for &x0 in &[[0.5, 0.3, 0.6], [-0.4, 0.2, 0.0], [0.1, -0.6, 0.55], [0.0, 0.45, 0.1]] {
            let p = s.project(x0).unwrap();
            assert!(s.psi(p).abs() < 1e-10);
            let n = 2000;
            let mut best = f64::INFINITY;
            for i in 0..=n {
                for j in 0..=n {
                    let gx = -1.5 + 3.0 * i as f64 / n as f64;
                    let gy = -1.5 + 3.0 * j as f64 / n as f64;
                    let gz = gx * gx + gy * gy;
                    let d2 = (gx - x0[0]).powi(2) + (gy - x0[1]).powi(2) + (gz - x0[2]).powi(2);
                    best = best.min(d2);
                }
            }
            let d_proj = norm([p[0] - x0[0], p[1] - x0[1], p[2] - x0[2]]);
            let d_grid = best.sqrt();
            // grid spacing 1.5e-3: projection may beat the grid, never lose
            // by more than a grid cell
            assert!(
                d_proj <= d_grid + 3e-3,
                "projection {d_proj} vs grid oracle {d_grid} from {x0:?}"
            );
        }
    }

    #[test]
    fn saddle_projection_lands_on_surface() {
        let s = LevelSetSurface::saddle();
        let p = s.project([0.4, 0.3, 0.2]).unwrap();
        assert!(s.psi(p).abs() < 1e-10);
        assert!((p[2] - (p[0] * p[0] - p[1] * p[1])).abs() < 1e-10);
    }

    #[test]
    fn expression_surface_matches_builtin_sphere() {
        let e = LevelSetSurface::from_expression("x^2 + y^2 + z^2 - 4").unwrap();
        let s = LevelSetSurface::sphere(2.0);
        for &x in &[[1.0, 2.0, -0.5], [0.1, 0.0, 3.0]] {
            assert!((e.psi(x) - s.psi(x)).abs() < 1e-12);
        }
        let p = e.project([3.0, 0.1, -0.2]).unwrap();
        assert!((norm(p) - 2.0).abs() < 1e-8);
    }

    #[test]
    fn surface_names_parse() {
        assert!(LevelSetSurface::from_name("sphere").is_ok());
        assert!(LevelSetSurface::from_name("sphere:3.56").is_ok());
        assert!(LevelSetSurface::from_name("saddle").is_ok());
        assert!(LevelSetSurface::from_name("paraboloid").is_ok());
        assert!(LevelSetSurface::from_name("expr: z - x*y").is_ok());
        assert!(LevelSetSurface::from_name("klein-bottle").is_err());
        assert!(LevelSetSurface::from_name("sphere:-1").is_err());
    }
}
