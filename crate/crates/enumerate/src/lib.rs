//! Exhaustive enumeration of the marked nodal subdivisions dual to
//! genus-g tropical curves of a given Newton polygon through
//! n = |∂Δ∩ℤ²| − 1 + g generic points, by the lattice-path method:
//! sweep-monotone paths through n + 1 lattice points, completed on both
//! sides by corner cuts and parallelogram mirrors. Per-curve complex,
//! real, and quadratic multiplicities are aggregated into the three
//! counts N, W, and their common quadratic refinement.

mod complete;
mod path;
mod report;

pub use complete::complete_path;
pub use path::{enumerate_paths, enumerate_paths_ordered, LatticePath, SweepOrder};
pub use report::{
    invariants, invariants_ordered, invariants_seq, CurveRecord, EnumerateError, InvariantReport,
};
