//! Numerical lab for the local node models behind the curve counts:
//! triangle-curve node geometry and weight products, parallelogram
//! node grids, Chebyshev deformation patterns, and real node types.
//! Every check recomputes a closed-form claim by an independent route
//! (double-double arithmetic seeded from f64, exact rationals for the
//! targets) and reports a pass/fail line with the worst residual.

mod chebyshev;
mod dd;
mod deformation;
mod node;
mod parallelogram;
mod report;
mod sine;
mod triangle;

pub use chebyshev::{chebyshev_check, chebyshev_suite, ChebyshevData};
pub use dd::{root_of_unity, round_to_rational, Cdd, Dd};
pub use deformation::{deformation_pattern_check, deformation_suite, DeformationCheck};
pub use node::{classify_real_node, welschinger_sign, RealNodeType};
pub use parallelogram::{parallelogram_check, parallelogram_suite, GridNode, ParallelogramCheck};
pub use report::{batch, Check, Report};
pub use sine::{cyclotomic_product, sine_check, sine_suite};
pub use triangle::{
    falgebra_of, triangle_node_check, triangle_node_suite, triangle_nodes, triangle_weight_check,
    triangle_weight_suite, FAlgebra, NodeSolution, TriangleCurveInstance, TriangleWeightCheck,
};

use thiserror::Error;

/// Default tolerance for weight and Hessian comparisons.
pub const WEIGHT_TOL: f64 = 1e-6;
/// Default tolerance for the parallelogram node grid.
pub const GRID_TOL: f64 = 1e-6;
/// Default tolerance for the Chebyshev identities.
pub const CHEBYSHEV_TOL: f64 = 1e-9;
/// Default tolerance for the deformation patterns.
pub const DEFORMATION_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("zero Hessian determinant: not a node")]
    NotANode,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Gw(#[from] gw_core::GwError),
}
