//! Bounded bidirectional search over `A` and `A^-1` between two shadows.
//!
//! Moves are restricted to a region: `A^-1` only at region crossings, `A`
//! only at anchors on edges that touch a region crossing. Crossings created
//! by `A` join the region. Both ends carry their own region and the two
//! frontiers grow alternately until an oriented canonical code is shared.

use std::collections::HashMap;

use crate::canonical::{oriented_canonical, oriented_isomorphism, CanonicalCode};
use crate::moves::{splice_half, splice_half_inverse, splice_half_inverse_with_anchor, MoveStep};
use crate::shadow::{vertex, Dart, Shadow};

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Largest crossing count of an intermediate.
    pub max_crossings: usize,
    /// Intermediates must be reduced.
    pub reduced: bool,
    /// Total number of states kept on both sides before giving up.
    pub max_states: usize,
    /// Longest path explored from either side.
    pub max_depth: usize,
}

#[derive(Clone)]
struct Node {
    shadow: Shadow,
    region: Vec<bool>,
    /// Key of the predecessor and the step taken from it.
    parent: Option<(CanonicalCode, MoveStep)>,
    depth: usize,
}

fn key(s: &Shadow) -> CanonicalCode {
    oriented_canonical(s).0
}

/// Region after `step`; `None` when `step` leaves the region.
fn next_region(region: &[bool], step: &MoveStep) -> Vec<bool> {
    match *step {
        MoveStep::A { .. } => {
            let mut r = region.to_vec();
            r.push(true);
            r
        }
        MoveStep::AInv { k } => {
            let mut r = region.to_vec();
            r.remove(k);
            r
        }
    }
}

/// Candidate steps from `s` touching `region`, in a fixed order.
fn region_steps(s: &Shadow, region: &[bool]) -> Vec<MoveStep> {
    let mut out = Vec::new();
    if s.is_trivial() {
        out.push(MoveStep::A { d1: 0, d2: 0 });
        return out;
    }
    for (k, &inside) in region.iter().enumerate() {
        if inside {
            out.push(MoveStep::AInv { k });
        }
    }
    let mut darts: Vec<Dart> = Vec::new();
    for (k, &inside) in region.iter().enumerate() {
        if inside {
            for d in 4 * k..4 * k + 4 {
                darts.push(d);
                darts.push(s.alpha(d));
            }
        }
    }
    darts.sort_unstable();
    darts.dedup();
    let faces = s.face_index();
    let dep = s.departures();
    for (i, &d1) in darts.iter().enumerate() {
        for &d2 in &darts[i..] {
            if faces[d1] == faces[d2] && dep[d1] == dep[d2] {
                out.push(MoveStep::A { d1, d2 });
            }
        }
    }
    out
}

fn expand(
    frontier: &[CanonicalCode],
    seen: &mut HashMap<CanonicalCode, Node>,
    limits: &SearchLimits,
    budget: usize,
) -> Vec<CanonicalCode> {
    let mut next = Vec::new();
    for k in frontier {
        if seen.len() > budget {
            break;
        }
        let node = seen[k].clone();
        if node.depth >= limits.max_depth {
            continue;
        }
        for step in region_steps(&node.shadow, &node.region) {
            let t = match step {
                MoveStep::A { d1, d2 } => {
                    if node.shadow.crossings() + 1 > limits.max_crossings {
                        continue;
                    }
                    splice_half(&node.shadow, d1, d2)
                }
                MoveStep::AInv { k } => splice_half_inverse(&node.shadow, k),
            };
            let Ok(t) = t else { continue };
            if limits.reduced && !t.is_reduced() {
                continue;
            }
            let kt = key(&t);
            if seen.contains_key(&kt) {
                continue;
            }
            let region = next_region(&node.region, &step);
            seen.insert(
                kt.clone(),
                Node {
                    shadow: t,
                    region,
                    parent: Some((k.clone(), step)),
                    depth: node.depth + 1,
                },
            );
            next.push(kt);
        }
    }
    next
}

/// Steps along the tree from the root to `k`, with the shadows visited.
fn path_to(seen: &HashMap<CanonicalCode, Node>, k: &CanonicalCode) -> Vec<(Shadow, MoveStep)> {
    let mut out = Vec::new();
    let mut cur = k.clone();
    while let Some((p, step)) = seen[&cur].parent.clone() {
        out.push((seen[&p].shadow.clone(), step));
        cur = p;
    }
    out.reverse();
    out
}

/// Replays `step`, written for `reference`, on `cur`, an oriented copy of
/// it.
pub(crate) fn transfer(reference: &Shadow, cur: &Shadow, step: &MoveStep) -> Option<MoveStep> {
    if reference.is_trivial() {
        return Some(*step);
    }
    let pi = oriented_isomorphism(reference, cur)?;
    Some(match *step {
        MoveStep::A { d1, d2 } => MoveStep::A {
            d1: pi[d1],
            d2: pi[d2],
        },
        MoveStep::AInv { k } => MoveStep::AInv { k: vertex(pi[4 * k]) },
    })
}

/// Undo of `step` taken from `from`, as a step on its result.
fn reverse_step(from: &Shadow, step: &MoveStep) -> (Shadow, MoveStep) {
    let to = step.apply(from).expect("recorded step applies");
    let back = match *step {
        MoveStep::A { .. } => MoveStep::AInv {
            k: to.crossings() - 1,
        },
        MoveStep::AInv { k } => {
            let (_, (d1, d2)) = splice_half_inverse_with_anchor(from, k).expect("recorded step applies");
            MoveStep::A { d1, d2 }
        }
    };
    (to, back)
}

/// Searches for steps taking `start` to a shadow isomorphic (preserving
/// orientation) to `goal`. Returns the steps addressed on `start`'s
/// labeling.
pub fn bidirectional(
    start: &Shadow,
    start_region: Vec<bool>,
    goal: &Shadow,
    goal_region: Vec<bool>,
    limits: &SearchLimits,
) -> Option<Vec<MoveStep>> {
    let ks = key(start);
    let kg = key(goal);
    if ks == kg {
        return Some(Vec::new());
    }
    let mut fwd = HashMap::new();
    let mut bwd = HashMap::new();
    fwd.insert(
        ks.clone(),
        Node { shadow: start.clone(), region: start_region, parent: None, depth: 0 },
    );
    bwd.insert(
        kg.clone(),
        Node { shadow: goal.clone(), region: goal_region, parent: None, depth: 0 },
    );
    let mut ff = vec![ks];
    let mut bf = vec![kg];
    let meet = loop {
        if ff.is_empty() && bf.is_empty() {
            return None;
        }
        if fwd.len() + bwd.len() > limits.max_states {
            return None;
        }
        let forward = !ff.is_empty() && (bf.is_empty() || ff.len() <= bf.len());
        let (front, seen, other) = if forward {
            (&mut ff, &mut fwd, &bwd)
        } else {
            (&mut bf, &mut bwd, &fwd)
        };
        let budget = limits.max_states.saturating_sub(other.len());
        let mut next = expand(front, seen, limits, budget);
        next.sort();
        if let Some(m) = next.iter().find(|k| other.contains_key(*k)) {
            break m.clone();
        }
        *front = next;
    };

    // forward half, then the backward half reversed and carried over
    let mut steps: Vec<MoveStep> = path_to(&fwd, &meet).into_iter().map(|(_, s)| s).collect();
    let mut cur = start.clone();
    for s in &steps {
        cur = s.apply(&cur).ok()?;
    }
    let back = path_to(&bwd, &meet);
    for (from, step) in back.iter().rev() {
        let (to, undo) = reverse_step(from, step);
        let st = transfer(&to, &cur, &undo)?;
        cur = st.apply(&cur).ok()?;
        steps.push(st);
    }
    if key(&cur) != key(goal) {
        return None;
    }
    Some(steps)
}

/// Region flags with `crossings` marked.
pub fn region_of(n: usize, crossings: &[usize]) -> Vec<bool> {
    let mut r = vec![false; n];
    for &k in crossings {
        r[k] = true;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::moves::move_b;
    use crate::standard::trefoil;

    #[test]
    fn finds_b_on_trefoil() {
        let t = trefoil();
        let goal = move_b(&t, 0).unwrap();
        let limits = SearchLimits { max_crossings: 7, reduced: true, max_states: 200_000, max_depth: 6 };
        let steps = bidirectional(&t, region_of(3, &[0]), &goal, region_of(5, &[0, 3, 4]), &limits).unwrap();
        let mut cur = t.clone();
        for s in &steps {
            cur = s.apply(&cur).unwrap();
            assert!(cur.is_reduced());
        }
        assert!(is_isomorphic(&cur, &goal));
    }
}
