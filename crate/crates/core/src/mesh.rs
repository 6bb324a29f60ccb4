//! High-order surface meshes: construction, geometry, refinement, transfer.
//!
//! A mesh stores a refinement forest of curved triangular elements. Every
//! element carries its (p+1)(p+2)/2 Lagrange nodes in canonical lattice order;
//! nodes are created once and shared through vertex/edge/face lookup tables so
//! conforming neighbours reference identical node ids. Leaf elements (no
//! children, not tombstoned) form the active triangulation used for assembly.
//!
//! Red refinement splits an element into four congruent children through the
//! projected images of its reference edge midpoints; green (bisection)
//! elements close hanging nodes and are always undone before further
//! refinement or coarsening. New nodes are images of parent lattice points
//! under the parent's geometric map, projected onto the level-set surface, so
//! interpolation nodes always lie on the surface.

use std::collections::HashMap;

use crate::element::{
    edge_local_index, node_count, vertex_local_indices, ShapeBasis,
};
use crate::surface::LevelSetSurface;
use crate::{Error, Result};

mod refine;
mod transfer;

pub use refine::{MarkingPlan, RefineOutcome};
pub use transfer::transfer_field;

/// Affine map from child reference coordinates to parent reference
/// coordinates: u_parent = B u_child + c.
#[derive(Debug, Clone, Copy)]
pub struct RefMap {
    pub b: [[f64; 2]; 2],
    pub c: [f64; 2],
}

impl RefMap {
    pub fn apply(&self, u: [f64; 2]) -> [f64; 2] {
        [
            self.b[0][0] * u[0] + self.b[0][1] * u[1] + self.c[0],
            self.b[1][0] * u[0] + self.b[1][1] * u[1] + self.c[1],
        ]
    }
}

/// One element of the refinement forest.
#[derive(Debug, Clone)]
pub struct ElementRecord {
    /// Global node ids in canonical lattice order.
    pub nodes: Vec<u32>,
    pub parent: Option<u32>,
    /// Child element ids: empty for leaves, 4 for red splits, 2 for green.
    pub children: Vec<u32>,
    pub generation: u16,
    /// True for green (bisection) closure elements.
    pub green: bool,
    /// Tombstone left behind when a green closure is undone.
    pub dead: bool,
    /// Reference map into the parent's coordinates (roots: None).
    pub ref_map: Option<RefMap>,
}

impl ElementRecord {
    pub fn is_leaf(&self) -> bool {
        !self.dead && self.children.is_empty()
    }
}

/// Curved triangular surface mesh of geometric degree p.
#[derive(Debug, Clone)]
pub struct HighOrderSurfaceMesh {
    pub degree: usize,
    pub surface: LevelSetSurface,
    /// All nodes ever created (append-only within a mesh lineage).
    pub nodes: Vec<[f64; 3]>,
    /// Refinement forest; indices are element ids.
    pub elements: Vec<ElementRecord>,
    /// Vertex-pair (sorted) -> midpoint vertex created when the edge split.
    pub(crate) edge_midpoints: HashMap<(u32, u32), u32>,
    /// Vertex-pair (sorted) -> interior edge lattice nodes ordered from the
    /// smaller to the larger vertex id.
    pub(crate) edge_nodes: HashMap<(u32, u32), Vec<u32>>,
    /// Sorted vertex triple -> interior face nodes (reused when p <= 3).
    pub(crate) face_nodes: HashMap<[u32; 3], Vec<u32>>,
    /// Minimum allowed edge length for refinement (1e-4 of the surface scale).
    pub h_floor: f64,
}

impl HighOrderSurfaceMesh {
    /// Ids of active (leaf) elements in ascending order.
    pub fn active_elements(&self) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&e| self.elements[e as usize].is_leaf())
            .collect()
    }

    pub fn active_element_count(&self) -> usize {
        self.elements.iter().filter(|e| e.is_leaf()).count()
    }

    /// Distinct nodes referenced by active elements.
    pub fn active_node_count(&self) -> usize {
        let mut seen = vec![false; self.nodes.len()];
        let mut count = 0;
        for rec in self.elements.iter().filter(|e| e.is_leaf()) {
            for &n in &rec.nodes {
                if !seen[n as usize] {
                    seen[n as usize] = true;
                    count += 1;
                }
            }
        }
        count
    }

    /// Vertex ids (corner nodes) of an element.
    pub fn element_vertices(&self, e: u32) -> [u32; 3] {
        let rec = &self.elements[e as usize];
        let [a, b, c] = vertex_local_indices(self.degree);
        [rec.nodes[a], rec.nodes[b], rec.nodes[c]]
    }

    /// Evaluate the geometric map of element e at reference point u.
    pub fn eval_element(&self, e: u32, u: [f64; 2], basis: &ShapeBasis) -> [f64; 3] {
        let rec = &self.elements[e as usize];
        let mut x = [0.0; 3];
        for (alpha, &n) in rec.nodes.iter().enumerate() {
            let phi = basis.eval(alpha, u);
            let p = self.nodes[n as usize];
            x[0] += phi * p[0];
            x[1] += phi * p[1];
            x[2] += phi * p[2];
        }
        x
    }

    /// Jacobian columns (dx/dxi, dx/deta) of element e at u.
    pub fn element_jacobian(&self, e: u32, u: [f64; 2], basis: &ShapeBasis) -> [[f64; 3]; 2] {
        let rec = &self.elements[e as usize];
        let mut j = [[0.0; 3]; 2];
        for (alpha, &n) in rec.nodes.iter().enumerate() {
            let g = basis.eval_gradient(alpha, u);
            let p = self.nodes[n as usize];
            for d in 0..3 {
                j[0][d] += g[0] * p[d];
                j[1][d] += g[1] * p[d];
            }
        }
        j
    }

    /// Longest vertex-chord of an element (element size measure).
    pub fn element_size(&self, e: u32) -> f64 {
        let [a, b, c] = self.element_vertices(e);
        let pa = self.nodes[a as usize];
        let pb = self.nodes[b as usize];
        let pc = self.nodes[c as usize];
        dist(pa, pb).max(dist(pb, pc)).max(dist(pa, pc))
    }

    /// Shortest vertex-chord of an element.
    pub fn min_edge(&self, e: u32) -> f64 {
        let [a, b, c] = self.element_vertices(e);
        let pa = self.nodes[a as usize];
        let pb = self.nodes[b as usize];
        let pc = self.nodes[c as usize];
        dist(pa, pb).min(dist(pb, pc)).min(dist(pa, pc))
    }

    /// Minimum element size over the active mesh.
    pub fn h_min(&self) -> f64 {
        self.active_elements()
            .iter()
            .map(|&e| self.element_size(e))
            .fold(f64::INFINITY, f64::min)
    }

    /// Maximum element size over the active mesh.
    pub fn h_max(&self) -> f64 {
        self.active_elements()
            .iter()
            .map(|&e| self.element_size(e))
            .fold(0.0, f64::max)
    }

    /// Build an icosphere mesh of the given subdivision level and degree.
    ///
    /// The icosahedron is subdivided `level` times (each vertex projected to
    /// the surface), producing 20 * 4^level root elements, then degree-p
    /// lattice nodes are placed by projecting chord lattice points.
    pub fn icosphere(surface: LevelSetSurface, level: usize, degree: usize) -> Result<Self> {
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let raw: [[f64; 3]; 12] = [
            [-1.0, phi, 0.0],
            [1.0, phi, 0.0],
            [-1.0, -phi, 0.0],
            [1.0, -phi, 0.0],
            [0.0, -1.0, phi],
            [0.0, 1.0, phi],
            [0.0, -1.0, -phi],
            [0.0, 1.0, -phi],
            [phi, 0.0, -1.0],
            [phi, 0.0, 1.0],
            [-phi, 0.0, -1.0],
            [-phi, 0.0, 1.0],
        ];
        let faces: [[u32; 3]; 20] = [
            [0, 11, 5],
            [0, 5, 1],
            [0, 1, 7],
            [0, 7, 10],
            [0, 10, 11],
            [1, 5, 9],
            [5, 11, 4],
            [11, 10, 2],
            [10, 7, 6],
            [7, 1, 8],
            [3, 9, 4],
            [3, 4, 2],
            [3, 2, 6],
            [3, 6, 8],
            [3, 8, 9],
            [4, 9, 5],
            [2, 4, 11],
            [6, 2, 10],
            [8, 6, 7],
            [9, 8, 1],
        ];
        // place the canonical vertices near the surface scale before projecting
        let scale = surface.length_scale / (1.0 + phi * phi).sqrt();
        let mut verts: Vec<[f64; 3]> = Vec::with_capacity(12);
        for v in raw {
            let seed = [v[0] * scale, v[1] * scale, v[2] * scale];
            verts.push(surface.project(seed)?);
        }
        let mut tris: Vec<[u32; 3]> = faces.to_vec();
        for _ in 0..level {
            let mut midpoints: HashMap<(u32, u32), u32> = HashMap::new();
            let mut next: Vec<[u32; 3]> = Vec::with_capacity(tris.len() * 4);
            for t in &tris {
                let mut mid = [0u32; 3];
                for (k, (i, j)) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])].iter().enumerate() {
                    let key = (*i.min(j), *i.max(j));
                    let id = match midpoints.get(&key) {
                        Some(&id) => id,
                        None => {
                            let a = verts[*i as usize];
                            let b = verts[*j as usize];
                            let m = surface.project([
                                0.5 * (a[0] + b[0]),
                                0.5 * (a[1] + b[1]),
                                0.5 * (a[2] + b[2]),
                            ])?;
                            let id = verts.len() as u32;
                            verts.push(m);
                            midpoints.insert(key, id);
                            id
                        }
                    };
                    mid[k] = id;
                }
                let [m01, m12, m02] = mid;
                next.push([t[0], m01, m02]);
                next.push([m01, t[1], m12]);
                next.push([m02, m12, t[2]]);
                next.push([m01, m12, m02]);
            }
            tris = next;
        }
        Self::from_linear(surface, verts, tris, degree)
    }

    /// Build a structured triangulated patch over [x0,x1] x [y0,y1] lifted
    /// onto the surface along z. Suitable for open graph-like surfaces
    /// (saddle, paraboloid). The mesh keeps vertical-lift node placement so
    /// refinement preserves the parametric footprint of the patch.
    pub fn parametric_patch(
        surface: LevelSetSurface,
        xr: [f64; 2],
        yr: [f64; 2],
        nx: usize,
        ny: usize,
        degree: usize,
    ) -> Result<Self> {
        assert!(nx >= 1 && ny >= 1);
        let surface = surface.with_vertical_lift();
        let mut verts = Vec::with_capacity((nx + 1) * (ny + 1));
        for j in 0..=ny {
            for i in 0..=nx {
                let x = xr[0] + (xr[1] - xr[0]) * i as f64 / nx as f64;
                let y = yr[0] + (yr[1] - yr[0]) * j as f64 / ny as f64;
                verts.push(surface.project([x, y, 0.0])?);
            }
        }
        let vid = |i: usize, j: usize| (j * (nx + 1) + i) as u32;
        let mut tris = Vec::with_capacity(2 * nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                // split each quad along the diagonal, alternating to avoid bias
                if (i + j) % 2 == 0 {
                    tris.push([vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)]);
                    tris.push([vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)]);
                } else {
                    tris.push([vid(i, j), vid(i + 1, j), vid(i, j + 1)]);
                    tris.push([vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)]);
                }
            }
        }
        Self::from_linear(surface, verts, tris, degree)
    }

    /// Build a degree-p mesh from a linear (vertex/triangle) mesh whose
    /// vertices already lie on the surface.
    pub fn from_linear(
        surface: LevelSetSurface,
        verts: Vec<[f64; 3]>,
        tris: Vec<[u32; 3]>,
        degree: usize,
    ) -> Result<Self> {
        assert!(degree >= 1, "geometric degree must be at least 1");
        let h_floor = 1e-4 * surface.length_scale;
        let mut mesh = Self {
            degree,
            surface,
            nodes: verts,
            elements: Vec::with_capacity(tris.len()),
            edge_midpoints: HashMap::new(),
            edge_nodes: HashMap::new(),
            face_nodes: HashMap::new(),
            h_floor,
        };
        for t in &tris {
            let [v0, v1, v2] = *t;
            let a = mesh.nodes[v0 as usize];
            let b = mesh.nodes[v1 as usize];
            let c = mesh.nodes[v2 as usize];
            let chord = move |u: [f64; 2]| {
                let l0 = 1.0 - u[0] - u[1];
                [
                    l0 * a[0] + u[0] * b[0] + u[1] * c[0],
                    l0 * a[1] + u[0] * b[1] + u[1] * c[1],
                    l0 * a[2] + u[0] * b[2] + u[1] * c[2],
                ]
            };
            let nodes = mesh.build_element_nodes([v0, v1, v2], &chord)?;
            mesh.elements.push(ElementRecord {
                nodes,
                parent: None,
                children: Vec::new(),
                generation: 0,
                green: false,
                dead: false,
                ref_map: None,
            });
        }
        mesh.check_nodes_on_surface()?;
        Ok(mesh)
    }

    /// Assemble the lattice-ordered node list of an element with vertices
    /// (v0, v1, v2), creating shared edge/face nodes as needed. `locate` maps
    /// a reference point to a pre-projection position in R^3.
    pub(crate) fn build_element_nodes(
        &mut self,
        vertices: [u32; 3],
        locate: &dyn Fn([f64; 2]) -> [f64; 3],
    ) -> Result<Vec<u32>> {
        let p = self.degree;
        let np = node_count(p);
        let mut nodes = vec![u32::MAX; np];
        let [i0, i1, i2] = vertex_local_indices(p);
        nodes[i0] = vertices[0];
        nodes[i1] = vertices[1];
        nodes[i2] = vertices[2];
        // edge interior nodes, shared through the oriented edge table
        let ref_vertex = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        for (la, lb) in [(0usize, 1usize), (1, 2), (0, 2)] {
            if p < 2 {
                break;
            }
            let (ga, gb) = (vertices[la], vertices[lb]);
            let key = (ga.min(gb), ga.max(gb));
            if !self.edge_nodes.contains_key(&key) {
                // create the interior nodes walking from the smaller global id
                let (ra, rb) = if ga <= gb {
                    (ref_vertex[la], ref_vertex[lb])
                } else {
                    (ref_vertex[lb], ref_vertex[la])
                };
                let mut created = Vec::with_capacity(p - 1);
                for k in 1..p {
                    let t = k as f64 / p as f64;
                    let u = [ra[0] + t * (rb[0] - ra[0]), ra[1] + t * (rb[1] - ra[1])];
                    let x = self.surface.project(locate(u))?;
                    created.push(self.push_node(x));
                }
                self.edge_nodes.insert(key, created);
            }
            let stored = &self.edge_nodes[&key];
            for k in 1..p {
                let idx = edge_local_index(p, la, lb, k);
                // stored order runs from min(ga,gb) to max(ga,gb)
                nodes[idx] = if ga <= gb { stored[k - 1] } else { stored[p - 1 - k] };
            }
        }
        // interior nodes: reused via the face table when unambiguous (<= 1)
        let interior: Vec<usize> = (0..np).filter(|i| nodes[*i] == u32::MAX).collect();
        if !interior.is_empty() {
            let mut key = [vertices[0], vertices[1], vertices[2]];
            key.sort_unstable();
            let reusable = interior.len() <= 1;
            if reusable && self.face_nodes.contains_key(&key) {
                let stored = self.face_nodes[&key].clone();
                for (slot, id) in interior.iter().zip(stored) {
                    nodes[*slot] = id;
                }
            } else {
                let basis = ShapeBasis::new(p);
                let mut created = Vec::with_capacity(interior.len());
                for &slot in &interior {
                    let u = basis.indices()[slot].lattice_point();
                    let x = self.surface.project(locate(u))?;
                    let id = self.push_node(x);
                    nodes[slot] = id;
                    created.push(id);
                }
                if reusable {
                    self.face_nodes.insert(key, created);
                }
            }
        }
        debug_assert!(nodes.iter().all(|&n| n != u32::MAX));
        Ok(nodes)
    }

    pub(crate) fn push_node(&mut self, x: [f64; 3]) -> u32 {
        self.nodes.push(x);
        (self.nodes.len() - 1) as u32
    }

    /// Verify every active node satisfies |psi| <= 1e-10 L.
    pub fn check_nodes_on_surface(&self) -> Result<()> {
        let tol = 1e-10 * self.surface.length_scale.max(1.0) * self.surface.length_scale.max(1.0);
        for rec in self.elements.iter().filter(|e| e.is_leaf()) {
            for &n in &rec.nodes {
                let v = self.surface.psi(self.nodes[n as usize]);
                if v.abs() > tol {
                    return Err(Error::Mesh(format!(
                        "node {n} off-surface: |psi| = {:.3e}",
                        v.abs()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Per-quadrature-point geometric data of one element.
#[derive(Debug, Clone)]
pub struct ElementGeometry {
    /// Jacobian columns (dx/dxi, dx/deta) at each point.
    pub jacobian: Vec<[[f64; 3]; 2]>,
    /// First fundamental form g = J^T J.
    pub metric: Vec<[[f64; 2]; 2]>,
    pub inv_metric: Vec<[[f64; 2]; 2]>,
    /// sqrt(det g): surface measure factor.
    pub sqrt_det: Vec<f64>,
    /// Mapped positions of the reference points.
    pub position: Vec<[f64; 3]>,
}

/// Evaluate Jacobians, metric, inverse metric and measure of element e at the
/// given reference points. `grads` and `values` are basis tables at those
/// points (as produced by `ShapeBasis::tabulate`). Errors on det g <= 0.
pub fn element_geometry(
    mesh: &HighOrderSurfaceMesh,
    e: u32,
    values: &[Vec<f64>],
    grads: &[Vec<[f64; 2]>],
) -> Result<ElementGeometry> {
    let rec = &mesh.elements[e as usize];
    let npts = grads.len();
    let mut geo = ElementGeometry {
        jacobian: Vec::with_capacity(npts),
        metric: Vec::with_capacity(npts),
        inv_metric: Vec::with_capacity(npts),
        sqrt_det: Vec::with_capacity(npts),
        position: Vec::with_capacity(npts),
    };
    for q in 0..npts {
        let mut j = [[0.0f64; 3]; 2];
        let mut x = [0.0f64; 3];
        for (alpha, &n) in rec.nodes.iter().enumerate() {
            let p = mesh.nodes[n as usize];
            let g = grads[q][alpha];
            let v = values[q][alpha];
            for d in 0..3 {
                j[0][d] += g[0] * p[d];
                j[1][d] += g[1] * p[d];
                x[d] += v * p[d];
            }
        }
        let g00 = j[0][0] * j[0][0] + j[0][1] * j[0][1] + j[0][2] * j[0][2];
        let g01 = j[0][0] * j[1][0] + j[0][1] * j[1][1] + j[0][2] * j[1][2];
        let g11 = j[1][0] * j[1][0] + j[1][1] * j[1][1] + j[1][2] * j[1][2];
        let det = g00 * g11 - g01 * g01;
        if det <= 0.0 || !det.is_finite() {
            return Err(Error::DegenerateElement(format!(
                "element {e}: det g = {det:.3e} at reference point {q}"
            )));
        }
        geo.jacobian.push(j);
        geo.metric.push([[g00, g01], [g01, g11]]);
        geo.inv_metric
            .push([[g11 / det, -g01 / det], [-g01 / det, g00 / det]]);
        geo.sqrt_det.push(det.sqrt());
        geo.position.push(x);
    }
    Ok(geo)
}

pub(crate) fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::gauss_rule;

    fn icosphere(level: usize, p: usize) -> HighOrderSurfaceMesh {
        HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), level, p).unwrap()
    }

    #[test]
    fn icosphere_counts_match_closed_forms() {
        // V = 10 4^l + 2, F = 20 4^l; degree-p nodes V + (p-1)E + (p-1)(p-2)/2 F
        let m = icosphere(0, 1);
        assert_eq!(m.active_element_count(), 20);
        assert_eq!(m.active_node_count(), 12);
        for level in 0..=3 {
            for p in 1..=3 {
                let m = icosphere(level, p);
                let pow = 4usize.pow(level as u32);
                let v = 10 * pow + 2;
                let e = 30 * pow;
                let f = 20 * pow;
                assert_eq!(m.active_element_count(), f, "level {level}");
                let face_interior = if p >= 2 { (p - 1) * (p - 2) / 2 } else { 0 };
                let expect = v + (p - 1) * e + face_interior * f;
                assert_eq!(m.active_node_count(), expect, "level {level} p {p}");
            }
        }
    }

    #[test]
    fn icosphere_level5_linear_and_level6_quadratic_node_counts() {
        let m = icosphere(5, 1);
        assert_eq!(m.active_node_count(), 10242);
        let m = HighOrderSurfaceMesh::icosphere(LevelSetSurface::sphere(3.56), 6, 2).unwrap();
        assert_eq!(m.active_node_count(), 163842);
        assert_eq!(m.active_node_count(), 40 * 4usize.pow(6) + 2);
    }

    #[test]
    fn all_nodes_lie_on_surface() {
        for p in 1..=3 {
            let m = icosphere(2, p);
            m.check_nodes_on_surface().unwrap();
        }
    }

    #[test]
    fn conforming_neighbours_share_edge_nodes() {
        // every vertex pair that appears as an element edge appears in
        // exactly two active elements with identical interior edge nodes
        let m = icosphere(2, 3);
        let mut edge_count: HashMap<(u32, u32), usize> = HashMap::new();
        for &e in &m.active_elements() {
            let [a, b, c] = m.element_vertices(e);
            for (i, j) in [(a, b), (b, c), (a, c)] {
                *edge_count.entry((i.min(j), i.max(j))).or_insert(0) += 1;
            }
        }
        assert!(edge_count.values().all(|&c| c == 2), "closed surface edge incidence");
    }

    #[test]
    fn element_geometry_has_positive_measure() {
        let rule = gauss_rule(6);
        for p in 1..=3 {
            let m = icosphere(1, p);
            let basis = ShapeBasis::new(p);
            let (values, grads) = basis.tabulate(&rule.reference_points());
            for &e in &m.active_elements() {
                let geo = element_geometry(&m, e, &values, &grads).unwrap();
                assert!(geo.sqrt_det.iter().all(|&s| s > 0.0));
            }
        }
    }

    #[test]
    fn sphere_area_converges_with_order_at_least_p_plus_1() {
        let exact = 4.0 * std::f64::consts::PI;
        for p in 1..=3 {
            let mut errs = Vec::new();
            for level in 1..=3 {
                let m = icosphere(level, p);
                let rule = gauss_rule(2 * p + 2);
                let basis = ShapeBasis::new(p);
                let (values, grads) = basis.tabulate(&rule.reference_points());
                let mut area = 0.0;
                for &e in &m.active_elements() {
                    let geo = element_geometry(&m, e, &values, &grads).unwrap();
                    for (w, s) in rule.weights.iter().zip(&geo.sqrt_det) {
                        area += 0.5 * w * s;
                    }
                }
                errs.push((exact - area).abs());
            }
            // successive levels halve h; estimate the order from the last pair
            let slope = (errs[1] / errs[2]).log2();
            assert!(
                slope > p as f64 + 1.0 - 0.3,
                "p={p}: area errors {errs:?}, slope {slope}"
            );
            assert!(errs[2] < errs[1] && errs[1] < errs[0], "monotone decrease");
        }
    }

    #[test]
    fn saddle_patch_area_matches_riemann_sum_oracle() {
        // area of z = x^2 - y^2 over [-1,1]^2: dense midpoint Riemann sum of
        // sqrt(1 + 4x^2 + 4y^2)
        let n = 2000;
        let h = 2.0 / n as f64;
        let mut oracle = 0.0;
        for i in 0..n {
            for j in 0..n {
                let x: f64 = -1.0 + (i as f64 + 0.5) * h;
                let y: f64 = -1.0 + (j as f64 + 0.5) * h;
                oracle += (1.0 + 4.0 * x * x + 4.0 * y * y).sqrt() * h * h;
            }
        }
        let m = HighOrderSurfaceMesh::parametric_patch(
            LevelSetSurface::saddle(),
            [-1.0, 1.0],
            [-1.0, 1.0],
            48,
            48,
            3,
        )
        .unwrap();
        let rule = gauss_rule(8);
        let basis = ShapeBasis::new(3);
        let (values, grads) = basis.tabulate(&rule.reference_points());
        let mut area = 0.0;
        for &e in &m.active_elements() {
            let geo = element_geometry(&m, e, &values, &grads).unwrap();
            for (w, s) in rule.weights.iter().zip(&geo.sqrt_det) {
                area += 0.5 * w * s;
            }
        }
        let rel = (area - oracle).abs() / oracle;
        assert!(rel < 1e-5, "patch area {area} vs oracle {oracle} (rel {rel:.2e})");
    }

    #[test]
    fn patch_is_conforming_with_expected_counts() {
        let m = HighOrderSurfaceMesh::parametric_patch(
            LevelSetSurface::paraboloid(),
            [-0.5, 0.5],
            [-0.5, 0.5],
            4,
            4,
            2,
        )
        .unwrap();
        assert_eq!(m.active_element_count(), 32);
        // vertices (nx+1)(ny+1) = 25, edges: interior diagonals 16 + grid
        let v = 25;
        let e = 2 * 4 * 5 + 16; // horizontal + vertical + diagonal
        assert_eq!(m.active_node_count(), v + e);
    }
}
