//! Tropical plane curves and their dual subdivisions.
//!
//! A tropical polynomial max(i·x + j·y + a_ij) induces a regular
//! subdivision of its Newton polygon, dual to the locus where the max is
//! attained twice. This crate computes that subdivision exactly, embeds
//! the dual curve, and evaluates the complex, real, and quadratic
//! multiplicities of nodal curves.

mod curve;
mod hull;
mod marked;
mod multiplicity;
mod polynomial;
mod scene;
mod subdivision;

pub use curve::{curve_of, CurveEdge, CurveRay, TropicalCurve};
pub use hull::convex_hull;
pub use marked::MarkedSubdivision;
pub use multiplicity::{curve_multiplicities, vertex_multiplicities, Multiplicities};
pub use polynomial::TropicalPolynomial;
pub use scene::{Scene, SceneRay, SceneSegment};
pub use subdivision::{dual_subdivision, CellKind, DualSubdivision, Edge, ExtendedClass};

use lattice::{LatticeError, Point};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TropicalError {
    #[error("support is empty")]
    EmptySupport,
    #[error("support does not span the plane")]
    FlatSupport,
    #[error("not nodal: cell {0} is neither a triangle nor a parallelogram")]
    NotNodal(usize),
    #[error("cells do not tile the polygon: {0}")]
    BadCover(String),
    #[error("cannot parse tropical polynomial: {0}")]
    Parse(String),
    #[error("marked edge {0:?}-{1:?} is not an edge of the subdivision")]
    UnknownEdge(Point, Point),
    #[error("marks share the extended edge class of {0:?}-{1:?}")]
    SharedClass(Point, Point),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
