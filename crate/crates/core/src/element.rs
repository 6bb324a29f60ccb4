//! Degree-p Lagrange basis on the reference triangle and symmetric quadrature.
//!
//! The reference triangle is {(xi, eta): xi >= 0, eta >= 0, xi + eta <= 1}
//! with barycentric coordinates l = (1 - xi - eta, xi, eta). Basis functions
//! are indexed by multi-indices m = (m0, m1, m2), |m| = p, enumerated with
//! m0 descending and, within each m0 group, m1 descending. The node of basis
//! alpha sits at the lattice point u_alpha = (m1/p, m2/p), and the basis is
//! the classical product form
//!
//!   phi_m(u) = (1/m!) prod_{i=0..2} prod_{j=0..m_i-1} (p l_i(u) - j),
//!
//! with m! = m0! m1! m2! and empty products equal to 1.

use crate::quad_tables::LADDER;

/// Barycentric exponent triple (m0, m1, m2) with m0 + m1 + m2 = p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    pub m0: usize,
    pub m1: usize,
    pub m2: usize,
}

impl MultiIndex {
    pub fn degree(&self) -> usize {
        self.m0 + self.m1 + self.m2
    }

    /// Lattice node in reference coordinates (xi, eta) = (m1/p, m2/p).
    pub fn lattice_point(&self) -> [f64; 2] {
        let p = self.degree();
        if p == 0 {
            // degenerate single-node case: use the centroid
            return [1.0 / 3.0, 1.0 / 3.0];
        }
        [self.m1 as f64 / p as f64, self.m2 as f64 / p as f64]
    }
}

/// Number of Lagrange nodes for degree p: (p+1)(p+2)/2.
pub fn node_count(p: usize) -> usize {
    (p + 1) * (p + 2) / 2
}

/// All multi-indices of degree p in canonical order (m0 descending, then m1
/// descending). For p = 2 this yields (2,0,0), (1,1,0), (1,0,1), (0,2,0),
/// (0,1,1), (0,0,2).
pub fn enumerate_multi_indices(p: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(node_count(p));
    for s in 0..=p {
        let m0 = p - s;
        for m2 in 0..=s {
            out.push(MultiIndex { m0, m1: s - m2, m2 });
        }
    }
    out
}

/// Local indices of the three vertex nodes (l0 = 1, l1 = 1, l2 = 1).
pub fn vertex_local_indices(p: usize) -> [usize; 3] {
    [0, p * (p + 1) / 2, node_count(p) - 1]
}

/// Local index of the interior edge node k (k = 1..p-1) on the edge between
/// local vertices a and b, walking from a to b. Edges are identified by their
/// vertex pair (0,1), (1,2) or (0,2).
pub fn edge_local_index(p: usize, a: usize, b: usize, k: usize) -> usize {
    debug_assert!(k >= 1 && k < p);
    // multi-index of the node: vertex a's exponent is p-k, vertex b's is k
    let mut m = [0usize; 3];
    m[a] = p - k;
    m[b] = k;
    multi_index_position(p, m[0], m[1], m[2])
}

/// Canonical position of multi-index (m0, m1, m2) in the enumeration order.
pub fn multi_index_position(p: usize, m0: usize, m1: usize, m2: usize) -> usize {
    debug_assert_eq!(m0 + m1 + m2, p);
    let s = p - m0;
    s * (s + 1) / 2 + m2
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Lagrange basis of degree p >= 1 on the reference triangle.
#[derive(Debug, Clone)]
pub struct ShapeBasis {
    p: usize,
    indices: Vec<MultiIndex>,
    inv_factorials: Vec<f64>,
}

impl ShapeBasis {
    pub fn new(p: usize) -> Self {
        assert!(p >= 1, "basis degree must be at least 1");
        let indices = enumerate_multi_indices(p);
        let inv_factorials = indices
            .iter()
            .map(|m| 1.0 / (factorial(m.m0) * factorial(m.m1) * factorial(m.m2)))
            .collect();
        Self { p, indices, inv_factorials }
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    /// Reference coordinates of every lattice node, in basis order.
    pub fn lattice_points(&self) -> Vec<[f64; 2]> {
        self.indices.iter().map(|m| m.lattice_point()).collect()
    }

    /// Evaluate basis function alpha at reference point u = (xi, eta).
    pub fn eval(&self, alpha: usize, u: [f64; 2]) -> f64 {
        let m = self.indices[alpha];
        let l = [1.0 - u[0] - u[1], u[0], u[1]];
        let p = self.p as f64;
        let mut value = self.inv_factorials[alpha];
        for (mi, li) in [m.m0, m.m1, m.m2].into_iter().zip(l) {
            for j in 0..mi {
                value *= p * li - j as f64;
            }
        }
        value
    }

    /// Reference gradient (d/dxi, d/deta) of basis function alpha at u.
    ///
    /// The basis is a product of affine factors f_{i,j}(u) = p l_i(u) - j, so
    /// the gradient is the product-rule sum over factors; each term drops one
    /// factor and multiplies by p grad(l_i). This stays exact at lattice
    /// points where individual factors vanish.
    pub fn eval_gradient(&self, alpha: usize, u: [f64; 2]) -> [f64; 2] {
        let m = [self.indices[alpha].m0, self.indices[alpha].m1, self.indices[alpha].m2];
        let l = [1.0 - u[0] - u[1], u[0], u[1]];
        let grad_l = [[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]];
        let p = self.p as f64;
        let mut grad = [0.0, 0.0];
        for i in 0..3 {
            for j in 0..m[i] {
                // product of all factors except (i, j)
                let mut rest = self.inv_factorials[alpha];
                for (i2, (&mi2, li2)) in m.iter().zip(l).enumerate() {
                    for j2 in 0..mi2 {
                        if i2 == i && j2 == j {
                            continue;
                        }
                        rest *= p * li2 - j2 as f64;
                    }
                }
                grad[0] += p * grad_l[i][0] * rest;
                grad[1] += p * grad_l[i][1] * rest;
            }
        }
        grad
    }

    /// Evaluate all basis functions at u.
    pub fn eval_all(&self, u: [f64; 2]) -> Vec<f64> {
        (0..self.len()).map(|a| self.eval(a, u)).collect()
    }

    /// Tabulate values and gradients at a set of points: returns
    /// (values[point][basis], gradients[point][basis]).
    #[allow(clippy::type_complexity)]
    pub fn tabulate(&self, points: &[[f64; 2]]) -> (Vec<Vec<f64>>, Vec<Vec<[f64; 2]>>) {
        let values = points.iter().map(|&u| self.eval_all(u)).collect();
        let grads = points
            .iter()
            .map(|&u| (0..self.len()).map(|a| self.eval_gradient(a, u)).collect())
            .collect();
        (values, grads)
    }
}

/// Symmetric triangle quadrature rule. Barycentric points with weights that
/// sum to 1 and scale the element measure:
///   integral over tau of f  ~=  |tau| * sum_j w_j f(x_j).
#[derive(Debug, Clone)]
pub struct TriangleQuadratureRule {
    /// Exactness degree of the embedded table (>= the requested degree).
    pub degree: usize,
    /// Barycentric coordinates (l0, l1, l2) of each point.
    pub points: Vec<[f64; 3]>,
    /// Weights, summing to 1.
    pub weights: Vec<f64>,
}

impl TriangleQuadratureRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Quadrature points in reference coordinates (xi, eta) = (l1, l2).
    pub fn reference_points(&self) -> Vec<[f64; 2]> {
        self.points.iter().map(|l| [l[1], l[2]]).collect()
    }
}

/// Smallest embedded symmetric rule with exactness degree >= d (d <= 20).
/// All embedded rules have strictly positive weights and interior points.
pub fn gauss_rule(d: usize) -> TriangleQuadratureRule {
    assert!(d <= 20, "quadrature tables cover exactness degrees up to 20");
    let (degree, table) = LADDER
        .iter()
        .find(|(deg, _)| *deg >= d)
        .copied()
        .expect("quadrature ladder covers degrees 1..=20");
    TriangleQuadratureRule {
        degree,
        points: table.iter().map(|r| [r[0], r[1], r[2]]).collect(),
        weights: table.iter().map(|r| r[3]).collect(),
    }
}

/// Exact integral of the barycentric monomial l0^a l1^b l2^c over a triangle
/// of area `area`: a! b! c! * 2 |T| / (a+b+c+2)!.
pub fn barycentric_monomial_integral(a: usize, b: usize, c: usize, area: f64) -> f64 {
    factorial(a) * factorial(b) * factorial(c) * 2.0 * area / factorial(a + b + c + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-13;

    #[test]
    fn multi_index_enumeration_matches_canonical_order() {
        let idx = enumerate_multi_indices(2);
        let expect = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)];
        assert_eq!(idx.len(), 6);
        for (m, e) in idx.iter().zip(expect) {
            assert_eq!((m.m0, m.m1, m.m2), e);
        }
        // spot-check the generic pattern for p = 4
        let idx4 = enumerate_multi_indices(4);
        assert_eq!(idx4.len(), node_count(4));
        assert_eq!((idx4[0].m0, idx4[0].m1, idx4[0].m2), (4, 0, 0));
        assert_eq!((idx4[1].m0, idx4[1].m1, idx4[1].m2), (3, 1, 0));
        assert_eq!((idx4[2].m0, idx4[2].m1, idx4[2].m2), (3, 0, 1));
        assert_eq!((idx4[3].m0, idx4[3].m1, idx4[3].m2), (2, 2, 0));
        assert_eq!((idx4[4].m0, idx4[4].m1, idx4[4].m2), (2, 1, 1));
        let last = idx4.last().unwrap();
        assert_eq!((last.m0, last.m1, last.m2), (0, 0, 4));
    }

    #[test]
    fn multi_index_positions_invert_enumeration() {
        for p in 0..=6 {
            for (k, m) in enumerate_multi_indices(p).iter().enumerate() {
                assert_eq!(multi_index_position(p, m.m0, m.m1, m.m2), k);
            }
        }
    }

    #[test]
    fn vertex_and_edge_indices_hit_expected_lattice_points() {
        for p in 1..=4 {
            let basis = ShapeBasis::new(p);
            let [v0, v1, v2] = vertex_local_indices(p);
            assert_eq!(basis.indices()[v0].lattice_point(), [0.0, 0.0]);
            assert_eq!(basis.indices()[v1].lattice_point(), [1.0, 0.0]);
            assert_eq!(basis.indices()[v2].lattice_point(), [0.0, 1.0]);
            for k in 1..p {
                let t = k as f64 / p as f64;
                let u01 = basis.indices()[edge_local_index(p, 0, 1, k)].lattice_point();
                assert!((u01[0] - t).abs() < TOL && u01[1].abs() < TOL);
                let u12 = basis.indices()[edge_local_index(p, 1, 2, k)].lattice_point();
                assert!((u12[0] - (1.0 - t)).abs() < TOL && (u12[1] - t).abs() < TOL);
                let u02 = basis.indices()[edge_local_index(p, 0, 2, k)].lattice_point();
                assert!(u02[0].abs() < TOL && (u02[1] - t).abs() < TOL);
            }
        }
    }

    #[test]
    fn shape_functions_are_nodal() {
        // Kronecker property at lattice points for p = 1..4.
        for p in 1..=4 {
            let basis = ShapeBasis::new(p);
            let nodes = basis.lattice_points();
            for (a, &ua) in nodes.iter().enumerate() {
                for (b, _) in nodes.iter().enumerate() {
                    let v = basis.eval(b, ua);
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (v - expect).abs() < 1e-12,
                        "p={p} phi_{b}(u_{a}) = {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn quadratic_shape_value_at_centroid() {
        // phi_0 for p = 2 at the centroid: (1/2)(2/3)(2/3 - 1) = -1/9.
        let basis = ShapeBasis::new(2);
        let v = basis.eval(0, [1.0 / 3.0, 1.0 / 3.0]);
        assert!((v - (-1.0 / 9.0)).abs() < TOL, "got {v}");
    }

    #[test]
    fn quadratic_shape_gradient_at_origin() {
        let basis = ShapeBasis::new(2);
        let g = basis.eval_gradient(0, [0.0, 0.0]);
        assert!((g[0] + 3.0).abs() < TOL && (g[1] + 3.0).abs() < TOL, "got {g:?}");
    }

    #[test]
    fn gradients_match_finite_differences() {
        let h = 1e-6;
        for p in 1..=3 {
            let basis = ShapeBasis::new(p);
            for alpha in 0..basis.len() {
                for &u in &[[0.21, 0.33], [0.05, 0.51], [0.4, 0.4]] {
                    let g = basis.eval_gradient(alpha, u);
                    let fx = (basis.eval(alpha, [u[0] + h, u[1]])
                        - basis.eval(alpha, [u[0] - h, u[1]]))
                        / (2.0 * h);
                    let fy = (basis.eval(alpha, [u[0], u[1] + h])
                        - basis.eval(alpha, [u[0], u[1] - h]))
                        / (2.0 * h);
                    assert!((g[0] - fx).abs() < 1e-7, "p={p} a={alpha} {:?}", (g[0], fx));
                    assert!((g[1] - fy).abs() < 1e-7, "p={p} a={alpha} {:?}", (g[1], fy));
                }
            }
        }
    }

    #[test]
    fn partition_of_unity_and_gradient_sum() {
        for p in 1..=3 {
            let basis = ShapeBasis::new(p);
            for &u in &[[0.0, 0.0], [0.3, 0.2], [0.1, 0.85], [1.0 / 3.0, 1.0 / 3.0]] {
                let s: f64 = basis.eval_all(u).iter().sum();
                assert!((s - 1.0).abs() < 1e-12, "p={p} sum={s}");
                let mut gs = [0.0, 0.0];
                for a in 0..basis.len() {
                    let g = basis.eval_gradient(a, u);
                    gs[0] += g[0];
                    gs[1] += g[1];
                }
                assert!(gs[0].abs() < 1e-11 && gs[1].abs() < 1e-11, "p={p} {gs:?}");
            }
        }
    }

    #[test]
    fn basis_reproduces_polynomials() {
        // Interpolating xi^2 with the p = 2 basis must reproduce it exactly.
        let basis = ShapeBasis::new(2);
        let nodes = basis.lattice_points();
        let coeffs: Vec<f64> = nodes.iter().map(|u| u[0] * u[0]).collect();
        for &u in &[[0.17, 0.29], [0.6, 0.1], [0.25, 0.5]] {
            let v: f64 = (0..basis.len()).map(|a| coeffs[a] * basis.eval(a, u)).sum();
            assert!((v - u[0] * u[0]).abs() < 1e-13);
        }
    }

    #[test]
    fn quadrature_rules_integrate_monomials_exactly() {
        for d in 0..=20 {
            let rule = gauss_rule(d.max(1));
            assert!(rule.degree >= d.max(1));
            let wsum: f64 = rule.weights.iter().sum();
            assert!((wsum - 1.0).abs() < 1e-13, "d={d} weight sum {wsum}");
            assert!(rule.weights.iter().all(|&w| w > 0.0), "d={d} has nonpositive weight");
            assert!(
                rule.points.iter().all(|l| l.iter().all(|&c| c >= -1e-15)),
                "d={d} has exterior point"
            );
            for a in 0..=rule.degree {
                for b in 0..=(rule.degree - a) {
                    for c in 0..=(rule.degree - a - b) {
                        if a + b + c > rule.degree {
                            continue;
                        }
                        let got: f64 = 0.5
                            * rule
                                .points
                                .iter()
                                .zip(&rule.weights)
                                .map(|(l, w)| {
                                    w * l[0].powi(a as i32)
                                        * l[1].powi(b as i32)
                                        * l[2].powi(c as i32)
                                })
                                .sum::<f64>();
                        let exact = barycentric_monomial_integral(a, b, c, 0.5);
                        let rel = (got - exact).abs() / exact;
                        assert!(rel < TOL, "d={} ({a},{b},{c}): rel err {rel:e}", rule.degree);
                    }
                }
            }
        }
    }

    #[test]
    fn product_of_barycentrics_integrates_to_1_over_120() {
        let rule = gauss_rule(3);
        let got: f64 = 0.5
            * rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(l, w)| w * l[0] * l[1] * l[2])
                .sum::<f64>();
        assert!((got - 1.0 / 120.0).abs() < 1e-15, "got {got}");
    }

    #[test]
    fn linear_mass_diagonal_entry_is_one_twelfth() {
        // integral of phi_0^2 = l0^2 over the reference triangle for p = 1
        let rule = gauss_rule(2);
        let basis = ShapeBasis::new(1);
        let got: f64 = 0.5
            * rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(l, w)| {
                    let v = basis.eval(0, [l[1], l[2]]);
                    w * v * v
                })
                .sum::<f64>();
        assert!((got - 1.0 / 12.0).abs() < 1e-15, "got {got}");
    }
}
