//! From any reduced shadow to the trefoil through reduced shadows.
//!
//! The shadow is simplified to `O` by Reidemeister moves; `B` is applied at
//! every crossing; each simplification step except the last is then lifted
//! through `P_B` by a case macro, or by a bounded search where no macro
//! transplants. Every emitted step is a single `A` or `A^-1`.

mod lift;
mod sequence;
mod simplify;

use thiserror::Error;

pub use lift::{
    expand_all, lift_on, lift_step, reaches_trefoil, to_trefoil, to_trefoil_with, LiftRecord, LiftSource, PipelineOptions,
    TrefoilRoute,
};
pub use sequence::{verify_sequence, MoveSequence, VerifyReport};
pub use simplify::{normalize_tail, simplify_to_trivial, SimplificationTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("no simplification within slack {0}")]
    NotFound(usize),
    #[error("no macro or bounded search realizes a {0} step")]
    MacroMissing(String),
    #[error("host does not match the expected image at step {0}")]
    RegionCollision(usize),
    #[error("input is not reduced")]
    NotReduced,
    #[error("input is the trivial projection")]
    TrivialInput,
    #[error("replay failed at step {step}: {cause}")]
    ReplayFailure { step: usize, cause: String },
    #[error("sequence line {line}: {message}")]
    Format { line: usize, message: String },
}

impl PipelineError {
    pub fn name(&self) -> &'static str {
        match self {
            PipelineError::NotFound(_) => "NotFound",
            PipelineError::MacroMissing(_) => "MacroMissing",
            PipelineError::RegionCollision(_) => "RegionCollision",
            PipelineError::NotReduced => "NotReduced",
            PipelineError::TrivialInput => "TrivialInput",
            PipelineError::ReplayFailure { .. } => "ReplayFailure",
            PipelineError::Format { .. } => "SyntaxError",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_code;
    use crate::moves::splice_half;
    use crate::standard::{figure_eight, trefoil};

    #[test]
    fn three_splices_from_trivial() {
        let o = Shadow::trivial();
        let f = splice_half(&o, 0, 0).unwrap();
        let mut steps = vec![MoveStep::A { d1: 0, d2: 0 }];
        let mut cur = f;
        'find: for _ in 0..2 {
            for (a, b) in crate::moves::splice_anchors(&cur) {
                let next = splice_half(&cur, a, b).unwrap();
                if next.crossings() == 3 && canonical_code(&next) != canonical_code(&trefoil()) {
                    continue;
                }
                steps.push(MoveStep::A { d1: a, d2: b });
                cur = next;
                continue 'find;
            }
        }
        let seq = MoveSequence::replay(o, steps).unwrap();
        assert_eq!(canonical_code(&seq.end), canonical_code(&trefoil()));
        assert!(verify_sequence(&seq, false).is_ok());
        assert_eq!(
            verify_sequence(&seq, true),
            Err(PipelineError::ReplayFailure { step: 1, cause: "NotReduced".into() })
        );
        let back = MoveSequence::from_seqfile(&seq.to_seqfile()).unwrap();
        assert_eq!(back, seq);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(to_trefoil(&figure_eight()), Err(PipelineError::NotReduced));
        assert_eq!(to_trefoil(&Shadow::trivial()), Err(PipelineError::TrivialInput));
    }

    use crate::moves::MoveStep;
    use crate::shadow::Shadow;
}
