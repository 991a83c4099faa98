//! Knot projections ("shadows") on the sphere as combinatorial maps.
//!
//! The crate implements half-twisted splices `A` and `A^-1`, the composite
//! moves `B` and `C`, connected sums and Reidemeister moves on shadows, and
//! uses them to connect every nontrivial reduced shadow to the trefoil
//! projection through reduced shadows only.

pub mod canonical;
pub mod cli;
pub mod codes;
pub mod enumerate;
pub mod export;
pub mod macros;
pub mod search;
pub mod moves;
pub mod pipeline;
pub mod shadow;
pub mod standard;

pub use canonical::{canonical_code, is_isomorphic, CanonicalCode};
pub use export::{export_dot, export_svg};
pub use codes::{emit_gauss, emit_mapcode, parse_gauss, parse_mapcode, CodeError};
pub use moves::{MoveError, MoveStep};
pub use shadow::{Dart, FaceRef, Shadow, ShadowError};

/// Variant name of a validation error.
pub fn error_name(e: &ShadowError) -> String {
    match e {
        ShadowError::WrongLength { .. } => "WrongLength",
        ShadowError::NotInvolution(_) => "NotInvolution",
        ShadowError::FixedPointDart(_) => "FixedPointDart",
        ShadowError::Disconnected => "Disconnected",
        ShadowError::MultiCircuit(_) => "MultiCircuit",
        ShadowError::NotSphere { .. } => "NotSphere",
    }
    .to_string()
}
