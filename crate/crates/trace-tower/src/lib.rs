//! Re-derivation of the quadratic curve multiplicity through the field
//! extensions a curve's reconstruction from its marks walks through.
//!
//! A marked curve through enough generic points can be rebuilt one
//! vertex at a time: each vertex with two known edges determines its
//! third by balancing. Following that order, the choices made along the
//! way assemble into a chain of monogenic field extensions in three
//! bands (vertex coefficients, deformation patterns, point conditions).
//! The curve's quadratic weight lives at the top of the chain; tracing
//! it down to the ground field must reproduce the product of quadratic
//! vertex multiplicities. This crate builds the chain symbolically and
//! performs that trace.

mod graph;
mod sequence;
mod tower;
mod weight;

pub use sequence::{build_graph_sequence, Completion, MarkedGraphSequence};
pub use tower::{build_tower, Band, ExtensionTower, TowerStep};
pub use weight::{global_weight, trace_report, trace_to_base, TraceReport};

use thiserror::Error;

/// Why a marked curve admits no tower.
#[derive(Debug, Error)]
pub enum TowerError {
    #[error(
        "not a simple curve: a cell is neither a triangle nor a parallelogram, \
         or a boundary point of the polygon is hidden inside an edge"
    )]
    NotSimple,
    #[error("reducible curve: {0} components")]
    Reducible(usize),
    /// The marks do not determine the curve the way a generic point
    /// configuration would.
    #[error("non-generic marking: {0}")]
    NonGenericMarking(String),
    /// A dimension count came out non-integral.
    #[error("inconsistent marking: {0}")]
    InconsistentMarking(String),
    /// A symbolic atom survived the full trace.
    #[error("trace residue: {0}")]
    TraceResidue(String),
}
