//! Canonical codes for shadows.
//!
//! A labeling is grown breadth-first from a root dart: the root's crossing
//! gets label 0, and every crossing reached for the first time through a dart
//! `p` gets the next label with `p` as its position 0. Reading `alpha` in the
//! new labels gives a word; the canonical code is the smallest word over all
//! roots and both rotation senses.

use std::cmp::Ordering;
use std::fmt;

use crate::shadow::{vertex, Dart, Shadow};

/// Labeling-independent, reflection-invariant code. Equal codes mean
/// isomorphic shadows on the sphere up to reflection.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    /// Code of the trivial projection.
    pub fn trivial() -> Self {
        CanonicalCode(vec![0])
    }

    pub fn crossings(&self) -> usize {
        self.0[0] as usize
    }

    pub fn words(&self) -> &[u32] {
        &self.0
    }

    /// Big-endian byte serialization.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_be_bytes()).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0[0])?;
        for w in &self.0[1..] {
            write!(f, ".{w}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CanonicalCode {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let body = text.strip_prefix('c').ok_or("expected `c<n>...`")?;
        let words: Vec<u32> = body
            .split('.')
            .map(|w| w.parse().map_err(|_| format!("bad word `{w}`")))
            .collect::<Result<_, _>>()?;
        let n = words[0] as usize;
        if words.len() != if n == 0 { 1 } else { 1 + 4 * n } {
            return Err("wrong code length".into());
        }
        Ok(CanonicalCode(words))
    }
}

/// Rotation sense used when reading positions around a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Sense {
    Ccw,
    Cw,
}

#[inline]
fn position(base: Dart, d: Dart, sense: Sense) -> usize {
    match sense {
        Sense::Ccw => (d + 4 - base) & 3,
        Sense::Cw => (base + 4 - d) & 3,
    }
}

#[inline]
fn step(base: Dart, pos: usize, sense: Sense) -> Dart {
    match sense {
        Sense::Ccw => (base & !3) | ((base + pos) & 3),
        Sense::Cw => (base & !3) | ((base + 4 - pos) & 3),
    }
}

/// Scratch buffers reused across roots.
struct Labeler {
    label: Vec<u32>,
    base: Vec<Dart>,
    order: Vec<usize>,
    word: Vec<u32>,
}

impl Labeler {
    fn new(n: usize) -> Self {
        Labeler {
            label: vec![u32::MAX; n],
            base: vec![0; n],
            order: Vec::with_capacity(n),
            word: Vec::with_capacity(4 * n),
        }
    }

    /// Labels from `root`. When `best` is given, stops as soon as the word is
    /// known to be larger and returns `Greater`.
    fn run(&mut self, s: &Shadow, root: Dart, sense: Sense, best: Option<&[u32]>) -> Ordering {
        self.label.iter_mut().for_each(|l| *l = u32::MAX);
        self.order.clear();
        self.word.clear();
        let r = vertex(root);
        self.label[r] = 0;
        self.base[r] = root;
        self.order.push(r);
        let mut ord = Ordering::Equal;
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            for pos in 0..4 {
                let d = step(self.base[v], pos, sense);
                let p = s.alpha(d);
                let w = vertex(p);
                if self.label[w] == u32::MAX {
                    self.label[w] = self.order.len() as u32;
                    self.base[w] = p;
                    self.order.push(w);
                }
                let entry = 4 * self.label[w] + position(self.base[w], p, sense) as u32;
                let i = self.word.len();
                self.word.push(entry);
                if ord == Ordering::Equal {
                    if let Some(b) = best {
                        ord = entry.cmp(&b[i]);
                        if ord == Ordering::Greater {
                            return ord;
                        }
                    }
                }
            }
        }
        if best.is_none() {
            Ordering::Less
        } else {
            ord
        }
    }

    /// Old dart -> new dart for the last run.
    fn perm(&self, sense: Sense, dart_count: usize) -> Vec<Dart> {
        let mut perm = vec![0; dart_count];
        for &v in &self.order {
            let l = self.label[v] as usize;
            for pos in 0..4 {
                perm[step(self.base[v], pos, sense)] = 4 * l + pos;
            }
        }
        perm
    }
}

/// Minimal word and the labeling achieving it.
fn minimize(s: &Shadow, senses: &[Sense]) -> (Vec<u32>, Sense, Vec<Dart>) {
    let mut lab = Labeler::new(s.crossings());
    let mut best: Option<(Vec<u32>, Sense, Dart)> = None;
    for &sense in senses {
        for root in 0..s.dart_count() {
            let ord = lab.run(s, root, sense, best.as_ref().map(|b| b.0.as_slice()));
            if ord == Ordering::Less {
                best = Some((lab.word.clone(), sense, root));
            }
        }
    }
    let (word, sense, root) = best.expect("nontrivial shadow has darts");
    lab.run(s, root, sense, None);
    let perm = lab.perm(sense, s.dart_count());
    (word, sense, perm)
}

fn code_from_word(n: usize, word: Vec<u32>) -> CanonicalCode {
    let mut v = Vec::with_capacity(word.len() + 1);
    v.push(n as u32);
    v.extend(word);
    CanonicalCode(v)
}

pub fn canonical_code(s: &Shadow) -> CanonicalCode {
    canonical_form(s).0
}

/// Canonical code and the canonically relabeled representative (which may be
/// the mirror image of `s`).
pub fn canonical_form(s: &Shadow) -> (CanonicalCode, Shadow) {
    if s.is_trivial() {
        return (CanonicalCode::trivial(), Shadow::trivial());
    }
    let (word, _, _) = minimize(s, &[Sense::Ccw, Sense::Cw]);
    let rep = Shadow::from_alpha_unchecked(word.iter().map(|&w| w as Dart).collect());
    (code_from_word(s.crossings(), word), rep)
}

/// Orientation-preserving canonical code with the relabeling that produces
/// it (old dart -> new dart).
pub fn oriented_canonical(s: &Shadow) -> (CanonicalCode, Vec<Dart>) {
    if s.is_trivial() {
        return (CanonicalCode::trivial(), Vec::new());
    }
    let (word, _, perm) = minimize(s, &[Sense::Ccw]);
    (code_from_word(s.crossings(), word), perm)
}

/// An orientation-preserving isomorphism `a -> b` as a dart map, if one
/// exists.
pub fn oriented_isomorphism(a: &Shadow, b: &Shadow) -> Option<Vec<Dart>> {
    if a.crossings() != b.crossings() {
        return None;
    }
    let (ca, pa) = oriented_canonical(a);
    let (cb, pb) = oriented_canonical(b);
    if ca != cb {
        return None;
    }
    let mut inv_b = vec![0; pb.len()];
    for (old, &new) in pb.iter().enumerate() {
        inv_b[new] = old;
    }
    Some(pa.iter().map(|&x| inv_b[x]).collect())
}

pub fn is_isomorphic(a: &Shadow, b: &Shadow) -> bool {
    a.crossings() == b.crossings() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_eight() -> Shadow {
        Shadow::validate(1, vec![3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn trivial_code_is_reserved() {
        assert_eq!(canonical_code(&Shadow::trivial()), CanonicalCode::trivial());
        assert_ne!(canonical_code(&figure_eight()), CanonicalCode::trivial());
    }

    #[test]
    fn relabeling_invariance_on_figure_eight() {
        let s = figure_eight();
        // rotate the crossing's darts by one position
        let perm = vec![1, 2, 3, 0];
        let t = s.relabel(&perm);
        assert_ne!(s, t);
        assert_eq!(canonical_code(&s), canonical_code(&t));
    }

    #[test]
    fn representative_has_the_same_code() {
        let s = figure_eight();
        let (code, rep) = canonical_form(&s);
        assert_eq!(canonical_code(&rep), code);
    }

    #[test]
    fn oriented_isomorphism_maps_alpha() {
        let s = figure_eight();
        let t = s.relabel(&[2, 3, 0, 1]);
        let iso = oriented_isomorphism(&s, &t).unwrap();
        for d in 0..4 {
            assert_eq!(iso[s.alpha(d)], t.alpha(iso[d]));
        }
    }
}
