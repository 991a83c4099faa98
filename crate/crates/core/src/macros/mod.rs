//! Composite rewrites frozen as sequences of `A` and `A^-1`.
//!
//! A [`Tangle`] is a closed shadow with a marked set of region crossings; the
//! rest of the closure is context. A [`MacroTemplate`] rewrites the lhs
//! tangle into the rhs tangle by steps that only touch the region: `A^-1` at
//! region crossings and `A` on edges with at least one end in the region.
//! Such a sequence transplants into any host that contains the region with
//! the same surroundings, which [`apply_macro`] checks step by step.

mod format;
pub mod library;

use std::collections::VecDeque;

use thiserror::Error;

use crate::canonical::{canonical_code, oriented_canonical, CanonicalCode};
use crate::moves::{splice_half_inverse_with_anchor, MoveStep};
use crate::search::{bidirectional, SearchLimits};
use crate::shadow::{vertex, Dart, Shadow};

pub use format::{emit_macro, parse_macro};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error("boundary mismatch: lhs has {lhs} legs, rhs has {rhs}")]
    BoundaryMismatch { lhs: usize, rhs: usize },
    #[error("no expansion within {0} extra crossings")]
    NotFound(usize),
    #[error("certificate mismatch at step {step}: {message}")]
    CertificateMismatch { step: usize, message: String },
    #[error("no occurrence of the lhs tangle")]
    NoOccurrence,
    #[error("surroundings differ from the template at step {0}")]
    RegionCollision(usize),
    #[error("bad tangle: {0}")]
    BadTangle(String),
    #[error("fixture line {line}: {message}")]
    Format { line: usize, message: String },
}

impl MacroError {
    pub fn name(&self) -> &'static str {
        match self {
            MacroError::BoundaryMismatch { .. } => "BoundaryMismatch",
            MacroError::NotFound(_) => "NotFound",
            MacroError::CertificateMismatch { .. } => "CertificateMismatch",
            MacroError::NoOccurrence => "NoOccurrence",
            MacroError::RegionCollision(_) => "RegionCollision",
            MacroError::BadTangle(_) => "BadTangle",
            MacroError::Format { .. } => "FormatError",
        }
    }
}

/// A region of a closed shadow. Legs are the edges from the region to the
/// context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    pub closure: Shadow,
    /// Sorted crossing indices.
    pub region: Vec<usize>,
}

impl Tangle {
    /// Whether the region is connected through edges inside it.
    pub fn is_connected(&self) -> bool {
        let Some(&first) = self.region.first() else { return true };
        let mut seen = vec![first];
        let mut stack = vec![first];
        while let Some(k) = stack.pop() {
            for d in 4 * k..4 * k + 4 {
                let j = vertex(self.closure.alpha(d));
                if self.region.binary_search(&j).is_ok() && !seen.contains(&j) {
                    seen.push(j);
                    stack.push(j);
                }
            }
        }
        seen.len() == self.region.len()
    }

    pub fn new(closure: Shadow, mut region: Vec<usize>) -> Result<Self, MacroError> {
        region.sort_unstable();
        region.dedup();
        if let Some(&k) = region.iter().find(|&&k| k >= closure.crossings()) {
            return Err(MacroError::BadTangle(format!("crossing {k} out of range")));
        }
        if region.is_empty() && !closure.is_trivial() {
            return Err(MacroError::BadTangle("empty region".into()));
        }
        Ok(Tangle { closure, region })
    }

    pub fn flags(&self) -> Vec<bool> {
        let mut f = vec![false; self.closure.crossings()];
        for &k in &self.region {
            f[k] = true;
        }
        f
    }

    /// Number of region darts whose edge leaves the region.
    pub fn legs(&self) -> usize {
        let f = self.flags();
        self.region
            .iter()
            .flat_map(|&k| 4 * k..4 * k + 4)
            .filter(|&d| !f[vertex(self.closure.alpha(d))])
            .count()
    }
}

/// Crossing count, reducedness and code of one intermediate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertEntry {
    pub crossings: usize,
    pub reduced: bool,
    pub code: CanonicalCode,
}

impl CertEntry {
    fn of(s: &Shadow) -> Self {
        CertEntry {
            crossings: s.crossings(),
            reduced: s.is_reduced(),
            code: canonical_code(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroTemplate {
    pub name: String,
    /// What the macro realizes: `B-expand`, `C-create`, `csum-swap`, or a
    /// Reidemeister kind lifted through `P_B` (`R1-`, `R2+`, ...).
    pub kind: String,
    pub lhs: Tangle,
    /// The exact replay result, with the region carried along.
    pub rhs: Tangle,
    pub steps: Vec<MoveStep>,
    /// One entry per step, describing the shadow after it.
    pub certificate: Vec<CertEntry>,
}

impl MacroTemplate {
    pub fn delta(&self) -> isize {
        self.steps.iter().map(MoveStep::delta).sum()
    }
}

/// Region flags after `step`.
fn carry_region(region: &mut Vec<bool>, step: &MoveStep) {
    match *step {
        MoveStep::A { .. } => region.push(true),
        MoveStep::AInv { k } => {
            region.remove(k);
        }
    }
}

/// Replays `steps` from `lhs`, enlarging the region by every original
/// crossing a step reaches outside of it. Returns the enlarged lhs region
/// and the final shadow with its region.
fn close_region(lhs: &Shadow, start: &[bool], steps: &[MoveStep]) -> Option<(Vec<bool>, Shadow, Vec<bool>)> {
    let mut grown = start.to_vec();
    loop {
        let mut cur = lhs.clone();
        let mut region = grown.clone();
        // origin[k]: original crossing index, or None for created ones
        let mut origin: Vec<Option<usize>> = (0..lhs.crossings()).map(Some).collect();
        let mut missing = None;
        for step in steps {
            let needs: Vec<usize> = match *step {
                MoveStep::A { d1, d2 } if !cur.is_trivial() => [d1, d2]
                    .iter()
                    .filter(|&&d| !region[vertex(d)] && !region[vertex(cur.alpha(d))])
                    .map(|&d| vertex(d))
                    .collect(),
                MoveStep::AInv { k } if !region[k] => vec![k],
                _ => Vec::new(),
            };
            if let Some(&k) = needs.first() {
                missing = Some(origin[k].expect("created crossings are in the region"));
                break;
            }
            cur = step.apply(&cur).ok()?;
            carry_region(&mut region, step);
            match *step {
                MoveStep::A { .. } => origin.push(None),
                MoveStep::AInv { k } => {
                    origin.remove(k);
                }
            }
        }
        match missing {
            Some(k) => grown[k] = true,
            None => return Some((grown, cur, region)),
        }
    }
}

fn flags_to_list(f: &[bool]) -> Vec<usize> {
    (0..f.len()).filter(|&k| f[k]).collect()
}

/// Builds a template from known steps, recording the certificate.
pub fn template_from_steps(
    name: &str,
    kind: &str,
    lhs: &Tangle,
    steps: Vec<MoveStep>,
) -> Result<MacroTemplate, MacroError> {
    let (grown, end, end_region) = close_region(&lhs.closure, &lhs.flags(), &steps).ok_or(
        MacroError::CertificateMismatch {
            step: 0,
            message: "steps do not replay".into(),
        },
    )?;
    let mut certificate = Vec::with_capacity(steps.len());
    let mut cur = lhs.closure.clone();
    for step in &steps {
        cur = step.apply(&cur).expect("replayed above");
        certificate.push(CertEntry::of(&cur));
    }
    Ok(MacroTemplate {
        name: name.to_string(),
        kind: kind.to_string(),
        lhs: Tangle::new(lhs.closure.clone(), flags_to_list(&grown))?,
        rhs: Tangle {
            closure: end,
            region: flags_to_list(&end_region),
        },
        steps,
        certificate,
    })
}

/// Searches for an expansion of `lhs` into `rhs` through reduced shadows of
/// at most `max(lhs, rhs) + bound` crossings.
pub fn synthesize_macro(
    name: &str,
    kind: &str,
    lhs: &Tangle,
    rhs: &Tangle,
    bound: usize,
) -> Result<MacroTemplate, MacroError> {
    let (l, r) = (lhs.legs(), rhs.legs());
    if l != r {
        return Err(MacroError::BoundaryMismatch { lhs: l, rhs: r });
    }
    let limits = SearchLimits {
        max_crossings: lhs.closure.crossings().max(rhs.closure.crossings()) + bound,
        reduced: true,
        max_states: 300_000,
        max_depth: 4 * bound + 8,
    };
    let steps = bidirectional(&lhs.closure, lhs.flags(), &rhs.closure, rhs.flags(), &limits)
        .ok_or(MacroError::NotFound(bound))?;
    template_from_steps(name, kind, lhs, steps)
}

/// Per-step crossing counts and reduced flags of a verified template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroReport {
    pub trace: Vec<(usize, bool)>,
}

/// Replays the template and checks the certificate, reducedness of every
/// intermediate and both endpoints. Steps are numbered from 1; a wrong end
/// is reported as step `steps.len() + 1`.
pub fn verify_macro(t: &MacroTemplate) -> Result<MacroReport, MacroError> {
    let bad = |step: usize, message: String| MacroError::CertificateMismatch { step, message };
    if t.certificate.len() != t.steps.len() {
        return Err(bad(
            t.steps.len().min(t.certificate.len()),
            format!("{} steps but {} certificate entries", t.steps.len(), t.certificate.len()),
        ));
    }
    let mut cur = t.lhs.closure.clone();
    let mut region = t.lhs.flags();
    let mut trace = Vec::new();
    for (i, (step, cert)) in t.steps.iter().zip(&t.certificate).enumerate() {
        cur = step.apply(&cur).map_err(|e| bad(i + 1, format!("step does not apply: {}", e.name())))?;
        carry_region(&mut region, step);
        let got = CertEntry::of(&cur);
        if &got != cert {
            return Err(bad(i + 1, format!("recorded {} but replay gives {}", cert.code, got.code)));
        }
        if !got.reduced {
            return Err(bad(i + 1, "reducible intermediate".into()));
        }
        trace.push((got.crossings, got.reduced));
    }
    if cur != t.rhs.closure {
        return Err(bad(t.steps.len() + 1, "replay does not end at the rhs closure".into()));
    }
    if flags_to_list(&region) != t.rhs.region {
        return Err(bad(t.steps.len() + 1, "region does not end at the rhs region".into()));
    }
    Ok(MacroReport { trace })
}

/// The template read backwards: rhs to lhs.
pub fn invert_macro(t: &MacroTemplate, name: &str, kind: &str) -> MacroTemplate {
    let mut shadows = vec![t.lhs.closure.clone()];
    for step in &t.steps {
        let next = step.apply(shadows.last().unwrap()).expect("verified template replays");
        shadows.push(next);
    }
    // undo steps on the exact labels, then carried over by isomorphism
    let mut cur = t.rhs.closure.clone();
    let mut steps = Vec::with_capacity(t.steps.len());
    for (i, step) in t.steps.iter().enumerate().rev() {
        let from = &shadows[i];
        let to = &shadows[i + 1];
        let undo = match *step {
            MoveStep::A { .. } => MoveStep::AInv { k: to.crossings() - 1 },
            MoveStep::AInv { k } => {
                let (_, (d1, d2)) = splice_half_inverse_with_anchor(from, k).expect("replayed step");
                MoveStep::A { d1, d2 }
            }
        };
        let st = crate::search::transfer(to, &cur, &undo).expect("same shadow");
        cur = st.apply(&cur).expect("undo applies");
        steps.push(st);
    }
    let lhs = t.rhs.clone();
    template_from_steps(name, kind, &lhs, steps).expect("inverse replays")
}

/// Where the region crossings of a template sit in a host: region crossing
/// `t.lhs.region[i]` goes to host crossing `crossings[i].0`, dart `4r + j`
/// to `4h + (j + crossings[i].1) % 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub crossings: Vec<(usize, usize)>,
}

/// Dart map of an embedding on region darts and legs; `None` off the region.
fn dart_map(t: &Tangle, host: &Shadow, emb: &Embedding) -> Option<Vec<Option<Dart>>> {
    let l = &t.closure;
    let mut map = vec![None; l.dart_count()];
    let mut used = vec![false; host.dart_count()];
    for (i, &r) in t.region.iter().enumerate() {
        let (h, o) = emb.crossings[i];
        if h >= host.crossings() {
            return None;
        }
        for j in 0..4 {
            let hd = 4 * h + (j + o) % 4;
            if used[hd] {
                return None;
            }
            used[hd] = true;
            map[4 * r + j] = Some(hd);
        }
    }
    let flags = t.flags();
    for &r in &t.region {
        for d in 4 * r..4 * r + 4 {
            let e = l.alpha(d);
            let he = host.alpha(map[d].unwrap());
            if flags[vertex(e)] {
                if map[e] != Some(he) {
                    return None;
                }
            } else {
                if used[he] && map[e] != Some(he) {
                    return None;
                }
                used[he] = true;
                map[e] = Some(he);
            }
        }
    }
    Some(map)
}

/// Embeddings of the lhs region into `host` whose first region crossing
/// lands on one of `seeds`. Only orientation-preserving placements.
pub fn find_embeddings(host: &Shadow, t: &MacroTemplate, seeds: &[usize]) -> Vec<Embedding> {
    let tangle = &t.lhs;
    let l = &tangle.closure;
    let mut out = Vec::new();
    if host.is_trivial() || l.is_trivial() || tangle.region.is_empty() {
        return out;
    }
    let index: Vec<Option<usize>> = {
        let mut v = vec![None; l.crossings()];
        for (i, &r) in tangle.region.iter().enumerate() {
            v[r] = Some(i);
        }
        v
    };
    for &h0 in seeds {
        for o0 in 0..4 {
            let mut place: Vec<Option<(usize, usize)>> = vec![None; tangle.region.len()];
            place[0] = Some((h0, o0));
            let mut queue = VecDeque::from([0usize]);
            let mut ok = true;
            while let Some(i) = queue.pop_front() {
                let r = tangle.region[i];
                let (h, o) = place[i].unwrap();
                for j in 0..4 {
                    let e = l.alpha(4 * r + j);
                    let Some(ie) = index[vertex(e)] else { continue };
                    let he = host.alpha(4 * h + (j + o) % 4);
                    let want = (vertex(he), ((he & 3) + 4 - (e & 3)) % 4);
                    match place[ie] {
                        None => {
                            place[ie] = Some(want);
                            queue.push_back(ie);
                        }
                        Some(p) if p != want => {
                            ok = false;
                            break;
                        }
                        _ => {}
                    }
                }
                if !ok {
                    break;
                }
            }
            if !ok || place.iter().any(Option::is_none) {
                continue;
            }
            let emb = Embedding {
                crossings: place.into_iter().map(Option::unwrap).collect(),
            };
            if dart_map(tangle, host, &emb).is_some() && !out.contains(&emb) {
                out.push(emb);
            }
        }
    }
    out
}

/// Replays the template inside `host` at `emb`. Every step is checked
/// against the template: the touched edges must agree and, when
/// `require_reduced`, the host must stay reduced.
pub fn apply_macro(
    host: &Shadow,
    t: &MacroTemplate,
    emb: &Embedding,
    require_reduced: bool,
) -> Result<(Shadow, Vec<MoveStep>), MacroError> {
    if host.is_trivial() || emb.crossings.len() != t.lhs.region.len() {
        return Err(MacroError::NoOccurrence);
    }
    let mut map = dart_map(&t.lhs, host, emb).ok_or(MacroError::NoOccurrence)?;
    let mut cl = t.lhs.closure.clone();
    let mut ho = host.clone();
    let mut out = Vec::with_capacity(t.steps.len());
    for (i, step) in t.steps.iter().enumerate() {
        let collide = || MacroError::RegionCollision(i);
        let hstep = match *step {
            MoveStep::A { d1, d2 } => MoveStep::A {
                d1: map[d1].ok_or_else(collide)?,
                d2: map[d2].ok_or_else(collide)?,
            },
            MoveStep::AInv { k } => MoveStep::AInv {
                k: vertex(map[4 * k].ok_or_else(collide)?),
            },
        };
        let ncl = step.apply(&cl).map_err(|_| collide())?;
        let nho = hstep.apply(&ho).map_err(|_| collide())?;
        match (*step, hstep) {
            (MoveStep::A { .. }, _) => {
                let (c, h) = (cl.crossings(), ho.crossings());
                map.extend((0..4).map(|j| Some(4 * h + j)));
                debug_assert_eq!(map.len(), 4 * (c + 1));
            }
            (MoveStep::AInv { k }, MoveStep::AInv { k: hk }) => {
                map.drain(4 * k..4 * k + 4);
                for m in map.iter_mut().flatten() {
                    if vertex(*m) == hk {
                        return Err(collide());
                    }
                    if vertex(*m) > hk {
                        *m -= 4;
                    }
                }
            }
            _ => unreachable!(),
        }
        cl = ncl;
        ho = nho;
        for d in 0..cl.dart_count() {
            if let Some(h) = map[d] {
                if let Some(he) = map[cl.alpha(d)] {
                    if ho.alpha(h) != he {
                        return Err(collide());
                    }
                }
            }
        }
        if require_reduced && !ho.is_reduced() {
            return Err(collide());
        }
        out.push(hstep);
    }
    Ok((ho, out))
}

/// Tries every template of `templates` at every embedding seeded in `area`
/// and returns the first replay whose result `accept`s.
pub fn apply_first<'a>(
    host: &Shadow,
    templates: impl IntoIterator<Item = &'a MacroTemplate>,
    area: &[usize],
    accept: impl Fn(&Shadow) -> bool,
) -> Option<(&'a MacroTemplate, Shadow, Vec<MoveStep>)> {
    for t in templates {
        for emb in find_embeddings(host, t, area) {
            if let Ok((s, steps)) = apply_macro(host, t, &emb, true) {
                if accept(&s) {
                    return Some((t, s, steps));
                }
            }
        }
    }
    None
}

/// Oriented code used to compare lift results.
pub fn oriented_code(s: &Shadow) -> CanonicalCode {
    oriented_canonical(s).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::move_b;
    use crate::standard::trefoil;

    fn b_expand() -> MacroTemplate {
        let t = trefoil();
        let lhs = Tangle::new(t.clone(), vec![0]).unwrap();
        let rhs = Tangle::new(move_b(&t, 0).unwrap(), vec![0, 3, 4]).unwrap();
        synthesize_macro("b", "B-expand", &lhs, &rhs, 4).unwrap()
    }

    #[test]
    fn synthesized_b_verifies_and_inverts() {
        let m = b_expand();
        assert_eq!(m.delta(), 2);
        verify_macro(&m).unwrap();
        let inv = invert_macro(&m, "b-inv", "B-contract");
        verify_macro(&inv).unwrap();
        assert_eq!(canonical_code(&inv.rhs.closure), canonical_code(&trefoil()));
    }

    #[test]
    fn dropped_step_fails() {
        let mut m = b_expand();
        m.steps.remove(0);
        assert!(matches!(verify_macro(&m), Err(MacroError::CertificateMismatch { .. })));
    }

    #[test]
    fn transplant_matches_move_b() {
        let m = b_expand();
        let t = trefoil();
        for k in 0..3 {
            let want = oriented_code(&move_b(&t, k).unwrap());
            let hit = apply_first(&t, [&m], &[k], |s| oriented_code(s) == want);
            assert!(hit.is_some(), "crossing {k}");
        }
        assert!(find_embeddings(&Shadow::trivial(), &m, &[0]).is_empty());
    }

    #[test]
    fn boundary_mismatch() {
        let t = trefoil();
        let lhs = Tangle::new(t.clone(), vec![0]).unwrap();
        let rhs = Tangle::new(t, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            synthesize_macro("x", "x", &lhs, &rhs, 2),
            Err(MacroError::BoundaryMismatch { .. })
        ));
    }
}
