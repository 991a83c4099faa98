//! Local moves on shadows.

mod composite;
mod reidemeister;
pub(crate) mod rewire;
mod splice;

use std::fmt;

use thiserror::Error;

use crate::shadow::{Dart, Shadow};

pub use composite::{
    apply_b_all, apply_b_all_tracked, connected_sum, move_b, move_b_tracked, move_c,
    move_c_inverse, trefoil_sites, BImage, TrefoilSite,
};
pub use reidemeister::{
    reidemeister_applicable, reidemeister_apply, reidemeister_decreasing, OrientationTag,
    ReidemeisterKind, ReidemeisterStep,
};
pub use splice::{
    arcs_parallel, smoothing_components, splice_anchors, splice_half, splice_half_inverse,
    splice_half_inverse_with_anchor, twisted_splice,
};
pub(crate) use splice::insert_braid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("darts are not in the same face")]
    NotSameFace,
    #[error("arcs are parallel; a single crossing would split the curve")]
    OrientationMismatch,
    #[error("twist count parity does not match the arcs' relative orientation")]
    ParityMismatch,
    #[error("no crossing {0}")]
    BadCrossing(usize),
    #[error("no dart {0}")]
    BadDart(Dart),
    #[error("move is not applicable at this anchor")]
    NotApplicable,
    #[error("move requires a nontrivial shadow")]
    TrivialShadow,
    #[error("no separable trefoil factor at this site")]
    NoTrefoilFactor,
}

impl MoveError {
    pub fn name(&self) -> &'static str {
        match self {
            MoveError::NotSameFace => "NotSameFace",
            MoveError::OrientationMismatch => "OrientationMismatch",
            MoveError::ParityMismatch => "ParityMismatch",
            MoveError::BadCrossing(_) => "BadCrossing",
            MoveError::BadDart(_) => "BadDart",
            MoveError::NotApplicable => "NotApplicable",
            MoveError::TrivialShadow => "TrivialShadow",
            MoveError::NoTrefoilFactor => "NoTrefoilFactor",
        }
    }
}

/// A primitive step: a half-twisted splice or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveStep {
    A { d1: Dart, d2: Dart },
    AInv { k: usize },
}

impl MoveStep {
    pub fn apply(&self, s: &Shadow) -> Result<Shadow, MoveError> {
        match *self {
            MoveStep::A { d1, d2 } => splice_half(s, d1, d2),
            MoveStep::AInv { k } => splice_half_inverse(s, k),
        }
    }

    /// Crossing-count change.
    pub fn delta(&self) -> isize {
        match self {
            MoveStep::A { .. } => 1,
            MoveStep::AInv { .. } => -1,
        }
    }
}

impl fmt::Display for MoveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveStep::A { d1, d2 } => write!(f, "A d1={d1} d2={d2}"),
            MoveStep::AInv { k } => write!(f, "A- k={k}"),
        }
    }
}

impl std::str::FromStr for MoveStep {
    type Err = String;

    /// Parses `A d1=<int> d2=<int>` or `A- k=<int>`.
    fn from_str(text: &str) -> Result<Self, String> {
        let num = |field: Option<&str>, name: &str| -> Result<usize, String> {
            field
                .and_then(|f| f.strip_prefix(name))
                .and_then(|v| v.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected `{name}=<int>`"))
        };
        let mut parts = text.split_whitespace();
        match parts.next() {
            Some("A") => {
                let d1 = num(parts.next(), "d1")?;
                let d2 = num(parts.next(), "d2")?;
                if parts.next().is_some() {
                    return Err("trailing input".into());
                }
                Ok(MoveStep::A { d1, d2 })
            }
            Some("A-") => {
                let k = num(parts.next(), "k")?;
                if parts.next().is_some() {
                    return Err("trailing input".into());
                }
                Ok(MoveStep::AInv { k })
            }
            _ => Err("expected `A` or `A-`".into()),
        }
    }
}
