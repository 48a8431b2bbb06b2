//! Lattice polygons in the plane: convexity validation, lattice point
//! counts (with Pick's identity asserted on every construction), lattice
//! lengths, and the unimodular normal form of a triangle with a
//! distinguished edge.

mod normal_form;
mod polygon;
mod roots;

pub use normal_form::{normal_form, NormalTriangle, UnimodularMap};
pub use polygon::{
    lattice_length, parse_polygon_text, parse_preset, LatticePolygon, Location, Point,
};
pub use roots::sine_identity_check;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices must wind counterclockwise")]
    NotCounterClockwise,
    #[error("polygon is not strictly convex at vertex {0:?}")]
    NotConvex(Point),
    #[error("edge endpoints coincide at {0:?}")]
    DegenerateEdge(Point),
    #[error("not a triangle: {0} vertices")]
    NotATriangle(usize),
    #[error("edge index {0} out of range")]
    BadEdgeIndex(usize),
    #[error("a linear map with determinant {0} is not unimodular")]
    NotUnimodular(i64),
    #[error("cannot parse polygon spec: {0}")]
    Parse(String),
}
