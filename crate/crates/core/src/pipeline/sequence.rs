//! Move sequences, their `seqfile v1` text and the replay verifier.

use std::fmt::Write as _;

use super::PipelineError;
use crate::canonical::canonical_code;
use crate::codes::{emit_mapcode, parse_mapcode};
use crate::moves::MoveStep;
use crate::shadow::Shadow;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub start: Shadow,
    pub steps: Vec<MoveStep>,
    pub end: Shadow,
}

impl MoveSequence {
    /// Replays `steps` from `start` to fill in `end`.
    pub fn replay(start: Shadow, steps: Vec<MoveStep>) -> Result<Self, PipelineError> {
        let mut cur = start.clone();
        for (i, s) in steps.iter().enumerate() {
            cur = s.apply(&cur).map_err(|e| PipelineError::ReplayFailure {
                step: i + 1,
                cause: e.name().to_string(),
            })?;
        }
        Ok(MoveSequence { start, steps, end: cur })
    }

    /// `#A - #A^-1`.
    pub fn delta(&self) -> isize {
        self.steps.iter().map(MoveStep::delta).sum()
    }

    pub fn to_seqfile(&self) -> String {
        let mut out = String::from("seqfile v1\n");
        writeln!(out, "start {}", emit_mapcode(&self.start)).unwrap();
        writeln!(out, "end {}", emit_mapcode(&self.end)).unwrap();
        for s in &self.steps {
            writeln!(out, "step {s}").unwrap();
        }
        out
    }

    pub fn from_seqfile(text: &str) -> Result<Self, PipelineError> {
        let err = |line: usize, message: String| PipelineError::Format { line, message };
        let mut start = None;
        let mut end = None;
        let mut steps = Vec::new();
        let mut header = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if !header {
                if line != "seqfile v1" {
                    return Err(err(i + 1, "expected `seqfile v1`".into()));
                }
                header = true;
                continue;
            }
            if let Some(code) = line.strip_prefix("start ") {
                let s = parse_mapcode(code).map_err(|e| err(i + 1, e.to_string()))?;
                if start.replace(s).is_some() {
                    return Err(err(i + 1, "second `start`".into()));
                }
            } else if let Some(code) = line.strip_prefix("end ") {
                let s = parse_mapcode(code).map_err(|e| err(i + 1, e.to_string()))?;
                if end.replace(s).is_some() {
                    return Err(err(i + 1, "second `end`".into()));
                }
            } else if let Some(step) = line.strip_prefix("step ") {
                steps.push(step.parse().map_err(|m| err(i + 1, m))?);
            } else {
                return Err(err(i + 1, format!("unexpected `{line}`")));
            }
        }
        Ok(MoveSequence {
            start: start.ok_or_else(|| err(0, "missing `start`".into()))?,
            steps,
            end: end.ok_or_else(|| err(0, "missing `end`".into()))?,
        })
    }
}

/// Crossing count and reducedness after each step, starting with `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub trace: Vec<(usize, bool)>,
}

impl VerifyReport {
    pub fn max_crossings(&self) -> usize {
        self.trace.iter().map(|t| t.0).max().unwrap_or(0)
    }
}

/// Replays `seq`. Steps are numbered from 1; a failure at the end itself
/// is reported as step `steps.len() + 1`.
pub fn verify_sequence(seq: &MoveSequence, require_reduced: bool) -> Result<VerifyReport, PipelineError> {
    let mut cur = seq.start.clone();
    let mut trace = vec![(cur.crossings(), cur.is_reduced())];
    for (i, s) in seq.steps.iter().enumerate() {
        let fail = |cause: String| PipelineError::ReplayFailure { step: i + 1, cause };
        cur = s.apply(&cur).map_err(|e| fail(e.name().to_string()))?;
        let reduced = cur.is_reduced();
        if require_reduced && !reduced {
            return Err(fail("NotReduced".into()));
        }
        trace.push((cur.crossings(), reduced));
    }
    if cur != seq.end {
        let cause = if canonical_code(&cur) == canonical_code(&seq.end) {
            "EndLabelMismatch"
        } else {
            "EndMismatch"
        };
        return Err(PipelineError::ReplayFailure {
            step: seq.steps.len() + 1,
            cause: cause.into(),
        });
    }
    Ok(VerifyReport { trace })
}
