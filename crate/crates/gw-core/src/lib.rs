//! Exact arithmetic in the Grothendieck-Witt ring GW(k) of a field of
//! characteristic zero, presented by generators `<a>` for square classes of
//! units and the hyperbolic form `h = <1> + <-1>`.
//!
//! Square classes carry an exact sign, a squarefree integer magnitude, and an
//! optional set of opaque symbolic unit atoms (each mod squares), so the same
//! type serves both rational computations and towers of field extensions whose
//! radicands are only known symbolically. Equality of reduced forms is sound:
//! equal canonical forms are equal in GW(k). It is not complete for symbolic
//! atoms (two atom spellings may denote the same unit); callers that need
//! completeness must eliminate atoms first.

mod form;
mod oracle;
mod square_class;
mod trace;

pub use form::GWForm;
pub use oracle::{trace_gram, trace_oracle};
pub use square_class::SquareClass;
pub use trace::{trace_form, trace_h, trace_step, ExtensionStep};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GwError {
    /// A square class of zero does not exist.
    #[error("zero has no square class")]
    ZeroClass,
    /// Signature requires every class to have a known real sign.
    #[error("indeterminate-signature: form contains symbolic atoms")]
    IndeterminateSignature,
    /// The trace form of the requested algebra is degenerate.
    #[error("non-étale input: {0}")]
    NonEtale(String),
    /// Squarefree reduction exceeded the supported magnitude range.
    #[error("magnitude out of range for exact squarefree reduction")]
    MagnitudeOverflow,
}
