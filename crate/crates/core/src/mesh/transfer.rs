//! Interpolation of nodal fields between meshes over the same surface.
//!
//! Every degree of freedom of the target mesh sits at a physical node on the
//! surface; its value is obtained by locating a source element containing
//! that point (via a uniform hash grid over element bounding boxes and a
//! Gauss-Newton inversion of the curved element map) and evaluating the
//! source finite element function there. Points that fall in no source
//! element — possible near refinement boundaries, since two discretisations
//! of the same surface differ at high order — fall back to the nearest
//! candidate element with reference coordinates clamped to the triangle.

use std::collections::HashMap;

use rayon::prelude::*;

use super::HighOrderSurfaceMesh;
use crate::assembly::DofMap;
use crate::element::ShapeBasis;
use crate::{Error, Result};

/// Interpolate `values` (indexed by the dof map of `old`) onto the dofs of
/// `new`, returning a vector indexed by the dof map of `new`.
pub fn transfer_field(
    old: &HighOrderSurfaceMesh,
    values: &[f64],
    new: &HighOrderSurfaceMesh,
) -> Result<Vec<f64>> {
    let old_dofs = DofMap::new(old);
    let new_dofs = DofMap::new(new);
    if values.len() != old_dofs.len() {
        return Err(Error::Mesh(format!(
            "field has {} entries but the source mesh has {} dofs",
            values.len(),
            old_dofs.len()
        )));
    }
    // fast path: identical node layout (same mesh or a clone)
    if old_dofs.len() == new_dofs.len() {
        let same = (0..old_dofs.len()).all(|k| {
            old.nodes[old_dofs.node(k) as usize] == new.nodes[new_dofs.node(k) as usize]
        });
        if same {
            return Ok(values.to_vec());
        }
    }

    let locator = Locator::build(old);
    let basis = ShapeBasis::new(old.degree);
    let out: Vec<f64> = (0..new_dofs.len())
        .into_par_iter()
        .map(|k| {
            let x = new.nodes[new_dofs.node(k) as usize];
            let (e, u) = locator.locate(old, &basis, x);
            element_value(old, &old_dofs, &basis, e, u, values)
        })
        .collect();
    Ok(out)
}

fn element_value(
    mesh: &HighOrderSurfaceMesh,
    dofs: &DofMap,
    basis: &ShapeBasis,
    e: u32,
    u: [f64; 2],
    values: &[f64],
) -> f64 {
    let mut v = 0.0;
    for (alpha, &node) in mesh.elements[e as usize].nodes.iter().enumerate() {
        let dof = dofs
            .dof(node)
            .expect("active element nodes always carry dofs");
        v += values[dof] * basis.eval(alpha, u);
    }
    v
}

/// Uniform hash grid over the bounding boxes of the active source elements.
struct Locator {
    cell: f64,
    origin: [f64; 3],
    grid: HashMap<[i64; 3], Vec<u32>>,
    centroids: HashMap<u32, [f64; 3]>,
}

impl Locator {
    fn build(mesh: &HighOrderSurfaceMesh) -> Self {
        let active = mesh.active_elements();
        let mut max_extent: f64 = 0.0;
        let mut lo = [f64::INFINITY; 3];
        let mut boxes = Vec::with_capacity(active.len());
        let mut centroids = HashMap::new();
        for &e in &active {
            let rec = &mesh.elements[e as usize];
            let mut bmin = [f64::INFINITY; 3];
            let mut bmax = [f64::NEG_INFINITY; 3];
            let mut c = [0.0; 3];
            for &n in &rec.nodes {
                let p = mesh.nodes[n as usize];
                for d in 0..3 {
                    bmin[d] = bmin[d].min(p[d]);
                    bmax[d] = bmax[d].max(p[d]);
                    c[d] += p[d];
                }
            }
            let inv = 1.0 / rec.nodes.len() as f64;
            for d in 0..3 {
                c[d] *= inv;
                max_extent = max_extent.max(bmax[d] - bmin[d]);
                lo[d] = lo[d].min(bmin[d]);
            }
            centroids.insert(e, c);
            boxes.push((e, bmin, bmax));
        }
        // pad so that surface points slightly off the discrete element are
        // still found in the element's own cells
        let cell = (1.3 * max_extent).max(1e-12);
        let pad = 0.15 * max_extent;
        let mut grid: HashMap<[i64; 3], Vec<u32>> = HashMap::new();
        for (e, bmin, bmax) in boxes {
            let i0 = Self::index_of(&lo, cell, [bmin[0] - pad, bmin[1] - pad, bmin[2] - pad]);
            let i1 = Self::index_of(&lo, cell, [bmax[0] + pad, bmax[1] + pad, bmax[2] + pad]);
            for ix in i0[0]..=i1[0] {
                for iy in i0[1]..=i1[1] {
                    for iz in i0[2]..=i1[2] {
                        grid.entry([ix, iy, iz]).or_default().push(e);
                    }
                }
            }
        }
        Locator { cell, origin: lo, grid, centroids }
    }

    fn index_of(origin: &[f64; 3], cell: f64, x: [f64; 3]) -> [i64; 3] {
        [
            ((x[0] - origin[0]) / cell).floor() as i64,
            ((x[1] - origin[1]) / cell).floor() as i64,
            ((x[2] - origin[2]) / cell).floor() as i64,
        ]
    }

    /// Candidate source elements near `x`, nearest centroid first.
    fn candidates(&self, x: [f64; 3]) -> Vec<u32> {
        let idx = Self::index_of(&self.origin, self.cell, x);
        let mut seen = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(v) = self.grid.get(&[idx[0] + dx, idx[1] + dy, idx[2] + dz]) {
                        for &e in v {
                            if !seen.contains(&e) {
                                seen.push(e);
                            }
                        }
                    }
                }
            }
        }
        seen.sort_by(|&a, &b| {
            let da = dist2(self.centroids[&a], x);
            let db = dist2(self.centroids[&b], x);
            da.partial_cmp(&db).unwrap().then(a.cmp(&b))
        });
        seen
    }

    /// Locate the element containing `x` and its reference coordinates; if
    /// none contains it, the nearest candidate with clamped coordinates.
    fn locate(
        &self,
        mesh: &HighOrderSurfaceMesh,
        basis: &ShapeBasis,
        x: [f64; 3],
    ) -> (u32, [f64; 2]) {
        let candidates = self.candidates(x);
        let mut best: Option<(f64, u32, [f64; 2])> = None;
        for &e in &candidates {
            let u = invert_map(mesh, basis, e, x);
            let bary_min = (1.0 - u[0] - u[1]).min(u[0]).min(u[1]);
            if bary_min >= -1e-9 {
                return (e, u);
            }
            let uc = clamp_to_triangle(u);
            let r = dist2(mesh.eval_element(e, uc, basis), x);
            if best.map_or(true, |(rb, _, _)| r < rb) {
                best = Some((r, e, uc));
            }
        }
        match best {
            Some((_, e, u)) => (e, u),
            None => {
                // grid miss (point far from every padded box): brute force
                let mut bf: Option<(f64, u32, [f64; 2])> = None;
                for e in mesh.active_elements() {
                    let u = clamp_to_triangle(invert_map(mesh, basis, e, x));
                    let r = dist2(mesh.eval_element(e, u, basis), x);
                    if bf.map_or(true, |(rb, _, _)| r < rb) {
                        bf = Some((r, e, u));
                    }
                }
                let (_, e, u) = bf.expect("mesh has at least one active element");
                (e, u)
            }
        }
    }
}

/// Gauss-Newton inversion of the element map: find u with X(u) closest to x.
fn invert_map(
    mesh: &HighOrderSurfaceMesh,
    basis: &ShapeBasis,
    e: u32,
    x: [f64; 3],
) -> [f64; 2] {
    let mut u = [1.0 / 3.0, 1.0 / 3.0];
    for _ in 0..30 {
        let pos = mesh.eval_element(e, u, basis);
        // rows of j are the reference-direction tangents dx/dxi, dx/deta
        let j = mesh.element_jacobian(e, u, basis);
        let r = [x[0] - pos[0], x[1] - pos[1], x[2] - pos[2]];
        // normal equations of the 3x2 least squares problem
        let mut jtj = [[0.0; 2]; 2];
        let mut jtr = [0.0; 2];
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..3 {
                    jtj[a][b] += j[a][d] * j[b][d];
                }
            }
            for d in 0..3 {
                jtr[a] += j[a][d] * r[d];
            }
        }
        let det = jtj[0][0] * jtj[1][1] - jtj[0][1] * jtj[1][0];
        if det.abs() < 1e-300 {
            break;
        }
        let du = [
            (jtj[1][1] * jtr[0] - jtj[0][1] * jtr[1]) / det,
            (jtj[0][0] * jtr[1] - jtj[1][0] * jtr[0]) / det,
        ];
        u[0] += du[0];
        u[1] += du[1];
        if du[0] * du[0] + du[1] * du[1] < 1e-26 {
            break;
        }
    }
    u
}

fn clamp_to_triangle(u: [f64; 2]) -> [f64; 2] {
    let mut xi = u[0].max(0.0);
    let mut eta = u[1].max(0.0);
    let s = xi + eta;
    if s > 1.0 {
        xi /= s;
        eta /= s;
    }
    [xi, eta]
}

fn dist2(a: [f64; 3], b: [f64; 3]) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    d[0] * d[0] + d[1] * d[1] + d[2] * d[2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::LevelSetSurface;
    use std::collections::HashMap as Map;

    fn sphere_mesh(level: usize, p: usize) -> HighOrderSurfaceMesh {
        HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), level, p).unwrap()
    }

    fn nodal_field(mesh: &HighOrderSurfaceMesh, f: impl Fn([f64; 3]) -> f64) -> Vec<f64> {
        let dofs = DofMap::new(mesh);
        (0..dofs.len())
            .map(|k| f(mesh.nodes[dofs.node(k) as usize]))
            .collect()
    }

    #[test]
    fn identical_mesh_transfer_is_exact() {
        let m = sphere_mesh(2, 2);
        let v = nodal_field(&m, |x| x[0] * x[1] + 0.5 * x[2]);
        let w = transfer_field(&m, &v, &m).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn coarse_to_fine_preserves_linear_fields_on_flat_patches() {
        // z = x^2 + y^2 over a small patch; transfer x-coordinate field,
        // which the curved interpolation reproduces to element accuracy
        let surf = LevelSetSurface::paraboloid();
        let coarse =
            HighOrderSurfaceMesh::parametric_patch(surf.clone(), [-0.5, 0.5], [-0.5, 0.5], 8, 8, 2)
                .unwrap();
        let fine = coarse.refine_uniform().unwrap().mesh;
        let v = nodal_field(&coarse, |x| x[0]);
        let w = transfer_field(&coarse, &v, &fine).unwrap();
        let expected = nodal_field(&fine, |x| x[0]);
        let max_err = w
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        // coordinate fields are degree-1 in the element parameters only up
        // to the geometry error of the coarse mesh
        assert!(max_err < 5e-4, "max interpolation error {max_err}");
    }

    #[test]
    fn fine_to_coarse_round_trip_preserves_coarse_interpolant() {
        let coarse = sphere_mesh(1, 2);
        let fine = coarse.refine_uniform().unwrap().mesh;
        let v = nodal_field(&coarse, |x| (3.0 * x[0]).sin() + x[1] * x[2]);
        let on_fine = transfer_field(&coarse, &v, &fine).unwrap();
        let back = transfer_field(&fine, &on_fine, &coarse).unwrap();
        let max_err = v
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        // coarse nodes are nodes of the fine mesh, so the round trip is
        // limited only by point location and map inversion accuracy
        assert!(max_err < 1e-9, "round trip error {max_err}");
    }

    #[test]
    fn transfer_after_local_adaptation_stays_close() {
        let m = sphere_mesh(2, 2);
        let mut marks = Map::new();
        for &e in &m.active_elements()[..20] {
            marks.insert(e, 1);
        }
        let refined = m.refine(&marks).unwrap().mesh;
        let v = nodal_field(&m, |x| x[2] * x[2]);
        let w = transfer_field(&m, &v, &refined).unwrap();
        let expected = nodal_field(&refined, |x| x[2] * x[2]);
        let max_err = w
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(max_err < 5e-3, "post-adaptation error {max_err}");
    }

    #[test]
    fn wrong_length_field_is_rejected() {
        let m = sphere_mesh(1, 1);
        let err = transfer_field(&m, &[1.0, 2.0], &m);
        assert!(err.is_err());
    }
}
