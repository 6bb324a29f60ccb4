//! Polymer self-consistent field theory (SCFT) on curved surfaces.
//!
//! The crate solves the AB diblock copolymer mean-field equations on closed
//! level-set surfaces using high-order Lagrange surface finite elements in
//! space and Crank-Nicolson sweeps with spectral deferred correction on
//! Chebyshev contour grids for the chain propagators. Meshes adapt through
//! red-green refinement driven by a gradient-recovery error estimator with
//! logarithmic marking.
//!
//! Module map:
//! - [`element`]: degree-p Lagrange basis on the reference triangle plus
//!   symmetric Gaussian quadrature rules.
//! - [`surface`]: level-set surface descriptions and closest-point projection.
//! - [`mesh`]: high-order surface meshes (icosphere / parametric patch
//!   builders), element geometry, red-green refinement, coarsening, and field
//!   transfer.
//! - [`assembly`]: CSR matrices, mass/stiffness/field-weighted assembly,
//!   surface integration, and the symmetric Krylov solver.
//! - [`contour`]: Chebyshev panel grids, Crank-Nicolson sweeps, Clenshaw-Curtis
//!   integration, and spectral deferred correction for the modified diffusion
//!   equation.
//! - [`scft`]: SCFT state, observables, field updates, and the self-consistent
//!   iteration.
//! - [`adaptivity`]: gradient recovery, element error indicators, logarithmic
//!   marking, and the adapt cycle.
//! - [`harness`]: run configuration, benchmark drivers, convergence studies,
//!   and CSV reporting used by the command-line binary.
//! - [`vtk`]: legacy ASCII VTK export/import of meshes and nodal fields.

pub mod adaptivity;
pub mod assembly;
pub mod contour;
pub mod element;
pub mod harness;
pub mod mesh;
pub mod scft;
pub mod surface;
pub mod vtk;

mod quad_tables;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("surface projection failed: {0}")]
    ProjectionFailed(String),
    #[error("degenerate element geometry: {0}")]
    DegenerateElement(String),
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid mesh operation: {0}")]
    Mesh(String),
    #[error("non-positive partition function Q = {0}")]
    NonPositiveQ(f64),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
