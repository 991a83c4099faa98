//! Lifting Reidemeister steps through `P_B` and the route to the trefoil.

use super::{normalize_tail, simplify_to_trivial, MoveSequence, PipelineError};
use crate::canonical::oriented_isomorphism;
use crate::macros::library::{case_tangles, kind_name, MacroLibrary};
use crate::macros::{apply_first, oriented_code, Tangle};
use crate::moves::{apply_b_all, move_b, MoveStep, ReidemeisterStep};
use crate::search::{bidirectional, region_of, SearchLimits};
use crate::shadow::{vertex, Shadow};

#[derive(Debug, Clone)]
pub struct PipelineOptions<'a> {
    /// Extra crossings allowed while simplifying.
    pub slack: usize,
    /// Extra crossings allowed in fallback searches.
    pub bound: usize,
    pub library: &'a MacroLibrary,
}

impl Default for PipelineOptions<'static> {
    fn default() -> Self {
        PipelineOptions {
            slack: 2,
            bound: 4,
            library: MacroLibrary::builtin(),
        }
    }
}

/// How one composite rewrite was realized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftSource {
    Macro(String),
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftRecord {
    /// `B-expand` or the Reidemeister kind.
    pub kind: String,
    pub source: LiftSource,
    pub steps: usize,
}

/// Rewrites `host` into a shadow with the oriented code of `target` using
/// macros of `kind` seeded in `area`, or a bounded search from `area` to
/// `target_region`.
fn rewrite(
    host: &Shadow,
    kind: &str,
    area: &[usize],
    target: &Tangle,
    opts: &PipelineOptions,
) -> Result<(Shadow, Vec<MoveStep>, LiftRecord), PipelineError> {
    let want = oriented_code(&target.closure);
    if let Some((t, s, steps)) = apply_first(host, opts.library.of_kind(kind), area, |s| oriented_code(s) == want) {
        let rec = LiftRecord {
            kind: kind.to_string(),
            source: LiftSource::Macro(t.name.clone()),
            steps: steps.len(),
        };
        return Ok((s, steps, rec));
    }
    let limits = SearchLimits {
        max_crossings: host.crossings().max(target.closure.crossings()) + opts.bound,
        reduced: true,
        max_states: 200_000,
        max_depth: 4 * opts.bound + 8,
    };
    let steps = bidirectional(
        host,
        region_of(host.crossings(), area),
        &target.closure,
        target.flags(),
        &limits,
    )
    .ok_or_else(|| PipelineError::MacroMissing(kind.to_string()))?;
    let mut cur = host.clone();
    for s in &steps {
        cur = s.apply(&cur).expect("search result replays");
    }
    let rec = LiftRecord {
        kind: kind.to_string(),
        source: LiftSource::Search,
        steps: steps.len(),
    };
    Ok((cur, steps, rec))
}

/// Lifts `step` on `prev` to steps on `host`, a shadow isomorphic to
/// `P_B` of `prev` (preserving orientation).
pub fn lift_on(
    host: &Shadow,
    prev: &Shadow,
    step: &ReidemeisterStep,
    opts: &PipelineOptions,
) -> Result<(Shadow, Vec<MoveStep>, LiftRecord), PipelineError> {
    let kind = kind_name(step.kind);
    let (lhs, rhs) = case_tangles(prev, step).ok_or_else(|| PipelineError::MacroMissing(kind.to_string()))?;
    let psi = oriented_isomorphism(&lhs.closure, host).ok_or(PipelineError::RegionCollision(0))?;
    let area: Vec<usize> = lhs.region.iter().map(|&k| vertex(psi[4 * k])).collect();
    rewrite(host, kind, &area, &rhs, opts)
}

/// Steps from `P_B` of `prev` to a shadow isomorphic to `P_B` of the result
/// of `step`.
pub fn lift_step(prev: &Shadow, step: &ReidemeisterStep) -> Result<Vec<MoveStep>, PipelineError> {
    let host = apply_b_all(prev);
    lift_on(&host, prev, step, &PipelineOptions::default()).map(|r| r.1)
}

/// Steps from `s` to a shadow isomorphic to `P_B` of `s`, one `B-expand` per
/// crossing in ascending order.
pub fn expand_all(s: &Shadow, opts: &PipelineOptions) -> Result<(Shadow, Vec<MoveStep>, Vec<LiftRecord>), PipelineError> {
    let n = s.crossings();
    let mut reference = s.clone();
    let mut host = s.clone();
    let mut steps = Vec::new();
    let mut records = Vec::new();
    for k in 0..n {
        let psi = oriented_isomorphism(&reference, &host).ok_or(PipelineError::RegionCollision(0))?;
        let hk = vertex(psi[4 * k]);
        let m = host.crossings();
        let target = Tangle {
            closure: move_b(&host, hk).expect("crossing exists"),
            region: vec![hk, m, m + 1],
        };
        let (next, st, rec) = rewrite(&host, "B-expand", &[hk], &target, opts)?;
        host = next;
        steps.extend(st);
        records.push(rec);
        reference = move_b(&reference, k).expect("original crossing keeps its index");
    }
    Ok((host, steps, records))
}

/// The full route together with how each composite move was realized.
#[derive(Debug, Clone)]
pub struct TrefoilRoute {
    pub sequence: MoveSequence,
    pub records: Vec<LiftRecord>,
    /// Reidemeister steps used, after normalization.
    pub reidemeister: Vec<ReidemeisterStep>,
}

impl TrefoilRoute {
    pub fn searches(&self) -> usize {
        self.records.iter().filter(|r| r.source == LiftSource::Search).count()
    }
}

pub fn to_trefoil(p: &Shadow) -> Result<MoveSequence, PipelineError> {
    to_trefoil_with(p, &PipelineOptions::default()).map(|r| r.sequence)
}

/// `B` at every crossing, then every simplification step lifted through
/// `P_B`, ending at `P_B` of the one-crossing shadow, the trefoil.
pub fn to_trefoil_with(p: &Shadow, opts: &PipelineOptions) -> Result<TrefoilRoute, PipelineError> {
    if p.is_trivial() {
        return Err(PipelineError::TrivialInput);
    }
    if !p.is_reduced() {
        return Err(PipelineError::NotReduced);
    }
    let trace = normalize_tail(&simplify_to_trivial(p, opts.slack)?);
    let (mut host, mut steps, mut records) = expand_all(p, opts)?;
    let m = trace.steps.len();
    for i in 0..m - 1 {
        let (next, st, rec) = lift_on(&host, &trace.shadows[i], &trace.steps[i], opts)?;
        host = next;
        steps.extend(st);
        records.push(rec);
    }
    Ok(TrefoilRoute {
        sequence: MoveSequence {
            start: p.clone(),
            steps,
            end: host,
        },
        records,
        reidemeister: trace.steps,
    })
}

/// Whether `to_trefoil_with` yields a route that replays through reduced
/// shadows and ends at the trefoil.
pub fn reaches_trefoil(p: &Shadow, opts: &PipelineOptions) -> bool {
    to_trefoil_with(p, opts).is_ok_and(|r| {
        super::verify_sequence(&r.sequence, true).is_ok()
            && crate::canonical_code(&r.sequence.end) == crate::canonical_code(&crate::standard::trefoil())
    })
}
