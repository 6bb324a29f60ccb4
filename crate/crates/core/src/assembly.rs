//! Finite element assembly over active mesh elements: degree-of-freedom
//! numbering, sparse matrices with a shared symbolic pattern, mass /
//! stiffness / field-weighted operators, load vectors and integral
//! functionals, plus the symmetric Krylov solvers used by the time stepper.
//!
//! All integrals are evaluated in reference coordinates with the first
//! fundamental form of the element map: for a curved triangle with Jacobian
//! J (3x2), metric g = J^T J and area factor sqrt(det g), so no tangential
//! projection of 3-vectors is ever needed — gradients contract through
//! g^{-1} directly.

use std::sync::Arc;

use rayon::prelude::*;

use crate::element::{gauss_rule, ShapeBasis, TriangleQuadratureRule};
use crate::mesh::{element_geometry, HighOrderSurfaceMesh};
use crate::Result;

pub mod solver;
pub use solver::{solve_sym, SolveStats};

/// Maps between global node ids and dense degree-of-freedom indices.
///
/// Dofs are the nodes referenced by active elements, numbered in ascending
/// node-id order, which makes the numbering deterministic and stable under
/// mesh modifications that keep a node alive.
#[derive(Debug, Clone)]
pub struct DofMap {
    node_of_dof: Vec<u32>,
    dof_of_node: Vec<u32>,
}

const NO_DOF: u32 = u32::MAX;

impl DofMap {
    pub fn new(mesh: &HighOrderSurfaceMesh) -> Self {
        let mut flags = vec![false; mesh.nodes.len()];
        for e in mesh.active_elements() {
            for &n in &mesh.elements[e as usize].nodes {
                flags[n as usize] = true;
            }
        }
        let node_of_dof: Vec<u32> = (0..mesh.nodes.len() as u32)
            .filter(|&n| flags[n as usize])
            .collect();
        let mut dof_of_node = vec![NO_DOF; mesh.nodes.len()];
        for (k, &n) in node_of_dof.iter().enumerate() {
            dof_of_node[n as usize] = k as u32;
        }
        DofMap { node_of_dof, dof_of_node }
    }

    pub fn len(&self) -> usize {
        self.node_of_dof.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_of_dof.is_empty()
    }

    /// Global node id carrying dof `k`.
    pub fn node(&self, k: usize) -> u32 {
        self.node_of_dof[k]
    }

    /// Dof index of a global node, if the node is active.
    pub fn dof(&self, node: u32) -> Option<usize> {
        match self.dof_of_node.get(node as usize) {
            Some(&d) if d != NO_DOF => Some(d as usize),
            _ => None,
        }
    }

    /// Dof indices of an element's nodes, in local node order.
    pub fn element_dofs(&self, mesh: &HighOrderSurfaceMesh, e: u32) -> Vec<usize> {
        mesh.elements[e as usize]
            .nodes
            .iter()
            .map(|&n| self.dof(n).expect("active element node must carry a dof"))
            .collect()
    }
}

/// Shared symbolic CSR structure (row pointers and sorted column indices).
#[derive(Debug)]
pub struct CsrPattern {
    pub n: usize,
    pub row_ptr: Vec<usize>,
    pub col_idx: Vec<usize>,
}

impl CsrPattern {
    /// Index into `values` of entry (i, j), if present in the pattern.
    pub fn find(&self, i: usize, j: usize) -> Option<usize> {
        let row = &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]];
        row.binary_search(&j).ok().map(|k| self.row_ptr[i] + k)
    }
}

/// Sparse symmetric matrix over a shared pattern.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    pub pattern: Arc<CsrPattern>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    pub fn zeros(pattern: Arc<CsrPattern>) -> Self {
        let nnz = pattern.col_idx.len();
        CsrMatrix { pattern, values: vec![0.0; nnz] }
    }

    pub fn n(&self) -> usize {
        self.pattern.n
    }

    pub fn value_at(&self, i: usize, j: usize) -> f64 {
        self.pattern.find(i, j).map_or(0.0, |k| self.values[k])
    }

    /// self <- alpha * a + beta * b; all three share one pattern.
    pub fn set_combination(&mut self, alpha: f64, a: &CsrMatrix, beta: f64, b: &CsrMatrix) {
        assert!(Arc::ptr_eq(&self.pattern, &a.pattern) && Arc::ptr_eq(&self.pattern, &b.pattern));
        for ((dst, &x), &y) in self.values.iter_mut().zip(&a.values).zip(&b.values) {
            *dst = alpha * x + beta * y;
        }
    }

    /// self <- self + alpha * a (shared pattern).
    pub fn axpy(&mut self, alpha: f64, a: &CsrMatrix) {
        assert!(Arc::ptr_eq(&self.pattern, &a.pattern));
        for (dst, &x) in self.values.iter_mut().zip(&a.values) {
            *dst += alpha * x;
        }
    }

    /// y = A x. Row-parallel with a sequential sum per row, so the result is
    /// bitwise reproducible regardless of thread count.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.pattern.n);
        assert_eq!(y.len(), self.pattern.n);
        let rp = &self.pattern.row_ptr;
        let ci = &self.pattern.col_idx;
        let vals = &self.values;
        y.par_iter_mut().enumerate().for_each(|(i, yi)| {
            let mut s = 0.0;
            for k in rp[i]..rp[i + 1] {
                s += vals[k] * x[ci[k]];
            }
            *yi = s;
        });
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.pattern.n)
            .map(|i| self.value_at(i, i))
            .collect()
    }

    /// Write in MatrixMarket coordinate format (general, 1-based).
    pub fn write_matrix_market(&self, path: &std::path::Path) -> Result<()> {
        use std::io::Write as _;
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        writeln!(f, "%%MatrixMarket matrix coordinate real general")?;
        writeln!(f, "{} {} {}", self.pattern.n, self.pattern.n, self.values.len())?;
        for i in 0..self.pattern.n {
            for k in self.pattern.row_ptr[i]..self.pattern.row_ptr[i + 1] {
                writeln!(f, "{} {} {:.16e}", i + 1, self.pattern.col_idx[k] + 1, self.values[k])?;
            }
        }
        Ok(())
    }
}

/// Per-element geometry tabulated at the quadrature points.
struct ElementQuadData {
    /// dof indices in local node order
    dofs: Vec<usize>,
    /// sqrt(det g) at each quadrature point
    sqrt_det: Vec<f64>,
    /// inverse metric at each quadrature point
    inv_metric: Vec<[[f64; 2]; 2]>,
    /// physical position of each quadrature point
    position: Vec<[f64; 3]>,
}

/// Assembles operators over the active elements of one mesh.
pub struct Assembler<'m> {
    pub mesh: &'m HighOrderSurfaceMesh,
    pub dofs: DofMap,
    basis: ShapeBasis,
    rule: TriangleQuadratureRule,
    /// basis values at quadrature points: [q][alpha]
    tab_values: Vec<Vec<f64>>,
    /// reference gradients at quadrature points: [q][alpha]
    tab_grads: Vec<Vec<[f64; 2]>>,
    elements: Vec<u32>,
    quad: Vec<ElementQuadData>,
    pattern: Arc<CsrPattern>,
}

impl<'m> Assembler<'m> {
    /// Assembler with the default quadrature (degree 2p + 2, exact for mass
    /// matrices of degree-p bases with margin for the curved area factor).
    pub fn new(mesh: &'m HighOrderSurfaceMesh) -> Result<Self> {
        Self::with_quadrature_degree(mesh, 2 * mesh.degree + 2)
    }

    pub fn with_quadrature_degree(mesh: &'m HighOrderSurfaceMesh, degree: usize) -> Result<Self> {
        let dofs = DofMap::new(mesh);
        let basis = ShapeBasis::new(mesh.degree);
        let rule = gauss_rule(degree);
        let points = rule.reference_points();
        let (tab_values, tab_grads) = basis.tabulate(&points);
        let elements = mesh.active_elements();

        // per-element geometry at quadrature points, in parallel
        let quad: Result<Vec<ElementQuadData>> = elements
            .par_iter()
            .map(|&e| {
                let edofs = dofs.element_dofs(mesh, e);
                let geo = element_geometry(mesh, e, &tab_values, &tab_grads)?;
                Ok(ElementQuadData {
                    dofs: edofs,
                    sqrt_det: geo.sqrt_det,
                    inv_metric: geo.inv_metric,
                    position: geo.position,
                })
            })
            .collect();
        let quad = quad?;

        // symbolic pattern: union of element dof blocks
        let n = dofs.len();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        for data in &quad {
            for &i in &data.dofs {
                for &j in &data.dofs {
                    rows[i].push(j);
                }
            }
        }
        let mut row_ptr = Vec::with_capacity(n + 1);
        let mut col_idx = Vec::new();
        row_ptr.push(0);
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
            col_idx.extend_from_slice(row);
            row_ptr.push(col_idx.len());
        }
        let pattern = Arc::new(CsrPattern { n, row_ptr, col_idx });

        Ok(Assembler {
            mesh,
            dofs,
            basis,
            rule,
            tab_values,
            tab_grads,
            elements,
            quad,
            pattern,
        })
    }

    pub fn pattern(&self) -> Arc<CsrPattern> {
        Arc::clone(&self.pattern)
    }

    pub fn n_dofs(&self) -> usize {
        self.dofs.len()
    }

    pub fn basis(&self) -> &ShapeBasis {
        &self.basis
    }

    pub fn quadrature(&self) -> &TriangleQuadratureRule {
        &self.rule
    }

    /// Physical coordinates of each dof's node.
    pub fn dof_positions(&self) -> Vec<[f64; 3]> {
        (0..self.dofs.len())
            .map(|k| self.mesh.nodes[self.dofs.node(k) as usize])
            .collect()
    }

    fn assemble<F>(&self, local: F) -> CsrMatrix
    where
        F: Fn(usize, &ElementQuadData) -> Vec<f64> + Sync,
    {
        let nb = self.basis.len();
        let locals: Vec<Vec<f64>> = (0..self.elements.len())
            .into_par_iter()
            .map(|ei| local(ei, &self.quad[ei]))
            .collect();
        let mut mat = CsrMatrix::zeros(self.pattern());
        // sequential scatter in element order keeps the sums reproducible
        for (data, loc) in self.quad.iter().zip(&locals) {
            for a in 0..nb {
                let i = data.dofs[a];
                for b in 0..nb {
                    let j = data.dofs[b];
                    let k = self.pattern.find(i, j).expect("pattern covers element blocks");
                    mat.values[k] += loc[a * nb + b];
                }
            }
        }
        mat
    }

    /// Mass matrix: entries of phi_a phi_b integrated over the surface.
    pub fn mass(&self) -> CsrMatrix {
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let vals = &self.tab_values;
        self.assemble(|_, data| {
            let mut loc = vec![0.0; nb * nb];
            for q in 0..w.len() {
                let scale = 0.5 * w[q] * data.sqrt_det[q];
                for a in 0..nb {
                    let pa = vals[q][a] * scale;
                    for b in 0..nb {
                        loc[a * nb + b] += pa * vals[q][b];
                    }
                }
            }
            loc
        })
    }

    /// Stiffness matrix of the Laplace-Beltrami operator: reference gradients
    /// contracted through the inverse metric, weighted by the area factor.
    pub fn stiffness(&self) -> CsrMatrix {
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let grads = &self.tab_grads;
        self.assemble(|_, data| {
            let mut loc = vec![0.0; nb * nb];
            for q in 0..w.len() {
                let gi = data.inv_metric[q];
                let scale = 0.5 * w[q] * data.sqrt_det[q];
                for a in 0..nb {
                    let ga = grads[q][a];
                    // g^{-1} grad_a, reused across b
                    let ha = [
                        gi[0][0] * ga[0] + gi[0][1] * ga[1],
                        gi[1][0] * ga[0] + gi[1][1] * ga[1],
                    ];
                    for b in 0..nb {
                        let gb = grads[q][b];
                        loc[a * nb + b] += scale * (ha[0] * gb[0] + ha[1] * gb[1]);
                    }
                }
            }
            loc
        })
    }

    /// Weighted mass matrix with the finite element field `field` (nodal
    /// coefficients over this assembler's dofs) as the weight.
    pub fn field_mass(&self, field: &[f64]) -> CsrMatrix {
        assert_eq!(field.len(), self.dofs.len());
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let vals = &self.tab_values;
        self.assemble(|_, data| {
            let mut loc = vec![0.0; nb * nb];
            for q in 0..w.len() {
                let mut fq = 0.0;
                for a in 0..nb {
                    fq += field[data.dofs[a]] * vals[q][a];
                }
                let scale = 0.5 * w[q] * data.sqrt_det[q] * fq;
                for a in 0..nb {
                    let pa = vals[q][a] * scale;
                    for b in 0..nb {
                        loc[a * nb + b] += pa * vals[q][b];
                    }
                }
            }
            loc
        })
    }

    /// Load vector of a spatial function: entries of phi_a f integrated over
    /// the surface.
    pub fn load_vector(&self, f: impl Fn([f64; 3]) -> f64 + Sync) -> Vec<f64> {
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let vals = &self.tab_values;
        let locals: Vec<Vec<f64>> = self
            .quad
            .par_iter()
            .map(|data| {
                let mut loc = vec![0.0; nb];
                for q in 0..w.len() {
                    let scale = 0.5 * w[q] * data.sqrt_det[q] * f(data.position[q]);
                    for a in 0..nb {
                        loc[a] += scale * vals[q][a];
                    }
                }
                loc
            })
            .collect();
        let mut out = vec![0.0; self.dofs.len()];
        for (data, loc) in self.quad.iter().zip(&locals) {
            for a in 0..nb {
                out[data.dofs[a]] += loc[a];
            }
        }
        out
    }

    /// Integral of a finite element field over the surface.
    pub fn integrate(&self, field: &[f64]) -> f64 {
        assert_eq!(field.len(), self.dofs.len());
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let vals = &self.tab_values;
        let parts: Vec<f64> = self
            .quad
            .par_iter()
            .map(|data| {
                let mut s = 0.0;
                for q in 0..w.len() {
                    let mut fq = 0.0;
                    for a in 0..nb {
                        fq += field[data.dofs[a]] * vals[q][a];
                    }
                    s += 0.5 * w[q] * data.sqrt_det[q] * fq;
                }
                s
            })
            .collect();
        parts.iter().sum()
    }

    /// Surface area of the active mesh under this quadrature.
    pub fn area(&self) -> f64 {
        let w = &self.rule.weights;
        let parts: Vec<f64> = self
            .quad
            .par_iter()
            .map(|data| {
                let mut s = 0.0;
                for q in 0..w.len() {
                    s += 0.5 * w[q] * data.sqrt_det[q];
                }
                s
            })
            .collect();
        parts.iter().sum()
    }

    /// L2 norm over the surface of (field - exact).
    pub fn l2_error(&self, field: &[f64], exact: impl Fn([f64; 3]) -> f64 + Sync) -> f64 {
        assert_eq!(field.len(), self.dofs.len());
        let nb = self.basis.len();
        let w = &self.rule.weights;
        let vals = &self.tab_values;
        let parts: Vec<f64> = self
            .quad
            .par_iter()
            .map(|data| {
                let mut s = 0.0;
                for q in 0..w.len() {
                    let mut fq = 0.0;
                    for a in 0..nb {
                        fq += field[data.dofs[a]] * vals[q][a];
                    }
                    let d = fq - exact(data.position[q]);
                    s += 0.5 * w[q] * data.sqrt_det[q] * d * d;
                }
                s
            })
            .collect();
        parts.iter().sum::<f64>().max(0.0).sqrt()
    }

    /// L2 norm of a finite element field.
    pub fn l2_norm(&self, field: &[f64]) -> f64 {
        self.l2_error(field, |_| 0.0)
    }

    /// Interpolate a spatial function at the dof nodes.
    pub fn interpolate(&self, f: impl Fn([f64; 3]) -> f64) -> Vec<f64> {
        (0..self.dofs.len())
            .map(|k| f(self.mesh.nodes[self.dofs.node(k) as usize]))
            .collect()
    }
}
