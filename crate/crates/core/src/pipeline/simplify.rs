//! Reduction of a shadow to the trivial projection by Reidemeister moves.

use std::collections::{HashMap, VecDeque};

use super::PipelineError;
use crate::canonical::{canonical_code, CanonicalCode};
use crate::moves::{
    reidemeister_applicable, reidemeister_apply, reidemeister_decreasing, OrientationTag, ReidemeisterKind,
    ReidemeisterStep,
};
use crate::shadow::Shadow;

/// `shadows[i]` goes to `shadows[i + 1]` by `steps[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplificationTrace {
    pub shadows: Vec<Shadow>,
    pub steps: Vec<ReidemeisterStep>,
}

impl SimplificationTrace {
    /// Largest crossing count along the trace.
    pub fn peak(&self) -> usize {
        self.shadows.iter().map(Shadow::crossings).max().unwrap_or(0)
    }

    /// Replays every step at its recorded anchor.
    pub fn check(&self) -> bool {
        self.steps.len() + 1 == self.shadows.len()
            && self.shadows.last().is_some_and(Shadow::is_trivial)
            && self
                .steps
                .iter()
                .enumerate()
                .all(|(i, st)| reidemeister_apply(&self.shadows[i], st).as_ref() == Ok(&self.shadows[i + 1]))
    }
}

/// Breadth-first search to `O`. With `cap == None` only decreasing moves and
/// `R3` are used; otherwise increasing moves too, up to `cap` crossings.
fn bfs(s: &Shadow, cap: Option<usize>) -> Option<SimplificationTrace> {
    let mut parent: HashMap<CanonicalCode, Option<(CanonicalCode, ReidemeisterStep)>> = HashMap::new();
    let mut shadow_of: HashMap<CanonicalCode, Shadow> = HashMap::new();
    let k0 = canonical_code(s);
    parent.insert(k0.clone(), None);
    shadow_of.insert(k0.clone(), s.clone());
    let mut queue = VecDeque::from([k0]);
    let mut found = None;
    'outer: while let Some(k) = queue.pop_front() {
        let cur = shadow_of[&k].clone();
        if cur.is_trivial() {
            found = Some(k);
            break;
        }
        let steps = match cap {
            None => reidemeister_decreasing(&cur),
            Some(c) => reidemeister_applicable(&cur)
                .into_iter()
                .filter(|st| (cur.crossings() as isize + st.kind.delta()) as usize <= c)
                .collect(),
        };
        for st in steps {
            let Ok(next) = reidemeister_apply(&cur, &st) else { continue };
            let kn = canonical_code(&next);
            if parent.contains_key(&kn) {
                continue;
            }
            parent.insert(kn.clone(), Some((k.clone(), st)));
            shadow_of.insert(kn.clone(), next);
            if kn.crossings() == 0 {
                found = Some(kn);
                break 'outer;
            }
            queue.push_back(kn);
        }
    }
    let mut k = found?;
    let mut shadows = vec![shadow_of[&k].clone()];
    let mut steps = Vec::new();
    while let Some((p, st)) = parent[&k].clone() {
        shadows.push(shadow_of[&p].clone());
        steps.push(st);
        k = p;
    }
    shadows.reverse();
    steps.reverse();
    Some(SimplificationTrace { shadows, steps })
}

/// A shortest trace to `O`, preferring traces that never add crossings.
/// Increasing moves may go up to `n + slack` crossings.
pub fn simplify_to_trivial(s: &Shadow, slack: usize) -> Result<SimplificationTrace, PipelineError> {
    if let Some(t) = bfs(s, None) {
        return Ok(t);
    }
    for extra in 1..=slack {
        if let Some(t) = bfs(s, Some(s.crossings() + extra)) {
            return Ok(t);
        }
    }
    Err(PipelineError::NotFound(slack))
}

/// Makes the next-to-last shadow a one-crossing shadow: a final `R2-` from
/// two crossings becomes two `R1-`.
pub fn normalize_tail(t: &SimplificationTrace) -> SimplificationTrace {
    let m = t.steps.len();
    if m == 0 || t.steps[m - 1].kind != ReidemeisterKind::R2Minus {
        return t.clone();
    }
    let two = &t.shadows[m - 1];
    let mut out = SimplificationTrace {
        shadows: t.shadows[..m].to_vec(),
        steps: t.steps[..m - 1].to_vec(),
    };
    let kink = reidemeister_decreasing(two)
        .into_iter()
        .find(|st| st.kind == ReidemeisterKind::R1Minus)
        .expect("a two-crossing shadow has a monogon");
    let one = reidemeister_apply(two, &kink).expect("listed move applies");
    let last = reidemeister_decreasing(&one)
        .into_iter()
        .find(|st| st.kind == ReidemeisterKind::R1Minus)
        .expect("the one-crossing shadow has a monogon");
    let o = reidemeister_apply(&one, &last).expect("listed move applies");
    debug_assert!(o.is_trivial());
    debug_assert_eq!(kink.tag, OrientationTag::Omega1);
    out.steps.push(kink);
    out.shadows.push(one);
    out.steps.push(last);
    out.shadows.push(o);
    out
}
