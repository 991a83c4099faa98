//! Reidemeister moves on shadows.
//!
//! Decreasing moves are addressed by a face dart: a monogon for `R1-`, a
//! bigon with two distinct crossings for `R2-`, a triangle with three
//! distinct crossings for `R3`. Increasing moves reuse the splice anchors:
//! `R1+` is a kink on the edge side of a dart, `R2+` pushes the arc at `d1`
//! across the arc at `d2` through their common face.

use std::fmt;

use crate::moves::rewire::{straight, Rewire};
use crate::moves::{insert_braid, MoveError};
use crate::shadow::{sigma, vertex, Dart, Shadow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReidemeisterKind {
    R1Plus,
    R1Minus,
    R2Plus,
    R2Minus,
    R3,
}

impl ReidemeisterKind {
    pub fn delta(self) -> isize {
        match self {
            ReidemeisterKind::R1Plus => 1,
            ReidemeisterKind::R1Minus => -1,
            ReidemeisterKind::R2Plus => 2,
            ReidemeisterKind::R2Minus => -2,
            ReidemeisterKind::R3 => 0,
        }
    }
}

/// Which oriented move a step instantiates. Shadows carry no orientation, so
/// this is recorded for traceability only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrientationTag {
    Omega1,
    /// Both strands run the same way through the bigon.
    Omega2,
    /// The strands run opposite ways through the bigon.
    Omega2Prime,
    /// The triangle's sides are traversed cyclically.
    Omega3Cyclic,
    Omega3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReidemeisterStep {
    pub kind: ReidemeisterKind,
    /// `R1+`: `(d, d)`; `R2+`: `(d1, d2)`; decreasing moves and `R3`:
    /// `(face dart, face dart)`. On the trivial projection `(0, 0)`.
    pub anchor: (Dart, Dart),
    pub tag: OrientationTag,
}

impl fmt::Display for ReidemeisterStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ReidemeisterKind::R1Plus => "R1+",
            ReidemeisterKind::R1Minus => "R1-",
            ReidemeisterKind::R2Plus => "R2+",
            ReidemeisterKind::R2Minus => "R2-",
            ReidemeisterKind::R3 => "R3",
        };
        write!(f, "{} {} {} {:?}", name, self.anchor.0, self.anchor.1, self.tag)
    }
}

fn face_cycle(s: &Shadow, e: Dart) -> Vec<Dart> {
    let mut out = vec![e];
    let mut d = s.phi(e);
    while d != e {
        out.push(d);
        d = s.phi(d);
    }
    out
}

fn distinct_vertices(cycle: &[Dart]) -> bool {
    let mut v: Vec<usize> = cycle.iter().map(|&d| vertex(d)).collect();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

fn bigon_tag(s: &Shadow, e: Dart) -> OrientationTag {
    // The two bigon sides are the edges of `e` and of `phi(e)`; the strands
    // run the same way iff exactly one side is traversed along the face.
    let dep = s.departures();
    let f = s.phi(e);
    if dep[e] != dep[f] {
        OrientationTag::Omega2
    } else {
        OrientationTag::Omega2Prime
    }
}

fn triangle_tag(s: &Shadow, e: Dart) -> OrientationTag {
    let dep = s.departures();
    let c = face_cycle(s, e);
    if c.iter().all(|&d| dep[d] == dep[c[0]]) {
        OrientationTag::Omega3Cyclic
    } else {
        OrientationTag::Omega3
    }
}

/// Decreasing moves and `R3`, in dart order.
pub fn reidemeister_decreasing(s: &Shadow) -> Vec<ReidemeisterStep> {
    let mut out = Vec::new();
    for face in s.faces() {
        let e = match face.boundary.iter().min() {
            Some(&e) => e,
            None => continue,
        };
        let step = |kind, tag| ReidemeisterStep { kind, anchor: (e, e), tag };
        match face.degree() {
            1 => out.push(step(ReidemeisterKind::R1Minus, OrientationTag::Omega1)),
            2 if distinct_vertices(&face.boundary) => {
                out.push(step(ReidemeisterKind::R2Minus, bigon_tag(s, e)))
            }
            3 if distinct_vertices(&face.boundary) => {
                out.push(step(ReidemeisterKind::R3, triangle_tag(s, e)))
            }
            _ => {}
        }
    }
    out.sort();
    out
}

/// Every applicable step: decreasing moves, `R3`, then `R1+` at every dart
/// and `R2+` at every same-face pair `d1 <= d2`.
pub fn reidemeister_applicable(s: &Shadow) -> Vec<ReidemeisterStep> {
    let mut out = reidemeister_decreasing(s);
    if s.is_trivial() {
        out.push(ReidemeisterStep {
            kind: ReidemeisterKind::R1Plus,
            anchor: (0, 0),
            tag: OrientationTag::Omega1,
        });
        out.push(ReidemeisterStep {
            kind: ReidemeisterKind::R2Plus,
            anchor: (0, 0),
            tag: OrientationTag::Omega2Prime,
        });
        return out;
    }
    let dep = s.departures();
    for d in 0..s.dart_count() {
        out.push(ReidemeisterStep {
            kind: ReidemeisterKind::R1Plus,
            anchor: (d, d),
            tag: OrientationTag::Omega1,
        });
    }
    for face in s.faces() {
        let mut b = face.boundary.clone();
        b.sort_unstable();
        for (i, &d1) in b.iter().enumerate() {
            for &d2 in &b[i..] {
                let tag = if dep[d1] != dep[d2] {
                    OrientationTag::Omega2
                } else {
                    OrientationTag::Omega2Prime
                };
                out.push(ReidemeisterStep {
                    kind: ReidemeisterKind::R2Plus,
                    anchor: (d1, d2),
                    tag,
                });
            }
        }
    }
    out
}

fn dissolve_straight(s: &Shadow, crossings: &[usize]) -> Result<Shadow, MoveError> {
    let mut r = Rewire::from(s);
    let mut removed = vec![false; s.crossings()];
    for &k in crossings {
        removed[k] = true;
    }
    let loops = r.dissolve(&removed, straight);
    if r.crossings() == 0 {
        return if loops == 1 {
            Ok(Shadow::trivial())
        } else {
            Err(MoveError::NotApplicable)
        };
    }
    if loops != 0 {
        return Err(MoveError::NotApplicable);
    }
    r.finish().map_err(|_| MoveError::NotApplicable)
}

/// Flips the triangle whose corner darts are `t0 -> t1 -> t2` under `phi`.
/// The three crossings keep their indices.
fn flip_triangle(s: &Shadow, t0: Dart) -> Result<Shadow, MoveError> {
    let t1 = s.phi(t0);
    let t2 = s.phi(t1);
    if s.phi(t2) != t0 || !distinct_vertices(&[t0, t1, t2]) {
        return Err(MoveError::NotApplicable);
    }
    let legs = [
        sigma(t0),
        sigma(sigma(t0)),
        sigma(t2),
        sigma(sigma(t2)),
        sigma(t1),
        sigma(sigma(t1)),
    ];
    let bases = [4 * vertex(t0), 4 * vertex(t2), 4 * vertex(t1)];
    // leg 2k+1 -> position 1 of crossing k, leg 2k+2 -> position 2
    let new_leg = |i: usize| -> Dart {
        if i % 2 == 1 {
            bases[(i - 1) / 2] + 1
        } else {
            bases[(i + 4) % 6 / 2] + 2
        }
    };
    let mut alpha = s.alpha_slice().to_vec();
    let old_partner: Vec<Dart> = legs.iter().map(|&l| s.alpha(l)).collect();
    for i in 0..6 {
        let q = old_partner[i];
        let q_new = match legs.iter().position(|&l| l == q) {
            Some(j) => new_leg(j),
            None => q,
        };
        let d = new_leg(i);
        alpha[d] = q_new;
        alpha[q_new] = d;
    }
    for k in 0..3 {
        let a = bases[k] + 3;
        let b = bases[(k + 1) % 3];
        alpha[a] = b;
        alpha[b] = a;
    }
    Shadow::validate(s.crossings(), alpha).map_err(|_| MoveError::NotApplicable)
}

pub fn reidemeister_apply(s: &Shadow, step: &ReidemeisterStep) -> Result<Shadow, MoveError> {
    let (a, b) = step.anchor;
    if !s.is_trivial() && (a >= s.dart_count() || b >= s.dart_count()) {
        return Err(MoveError::NotApplicable);
    }
    match step.kind {
        ReidemeisterKind::R1Plus => {
            if a != b || (s.is_trivial() && a != 0) {
                return Err(MoveError::NotApplicable);
            }
            insert_braid(s, a, a, 1)
                .finish()
                .map_err(|_| MoveError::NotApplicable)
        }
        ReidemeisterKind::R2Plus => {
            if s.is_trivial() {
                if (a, b) != (0, 0) {
                    return Err(MoveError::NotApplicable);
                }
            } else {
                let faces = s.face_index();
                if faces[a] != faces[b] {
                    return Err(MoveError::NotApplicable);
                }
            }
            insert_braid(s, a, b, 2)
                .finish()
                .map_err(|_| MoveError::NotApplicable)
        }
        ReidemeisterKind::R1Minus => {
            if s.is_trivial() || s.phi(a) != a {
                return Err(MoveError::NotApplicable);
            }
            dissolve_straight(s, &[vertex(a)])
        }
        ReidemeisterKind::R2Minus => {
            if s.is_trivial() {
                return Err(MoveError::NotApplicable);
            }
            let f = s.phi(a);
            if s.phi(f) != a || f == a || vertex(f) == vertex(a) {
                return Err(MoveError::NotApplicable);
            }
            dissolve_straight(s, &[vertex(a), vertex(f)])
        }
        ReidemeisterKind::R3 => {
            if s.is_trivial() {
                return Err(MoveError::NotApplicable);
            }
            flip_triangle(s, a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::standard::{figure_eight, trefoil};

    #[test]
    fn figure_eight_unkinks() {
        let f = figure_eight();
        let steps: Vec<_> = reidemeister_decreasing(&f);
        assert_eq!(steps.len(), 2);
        for st in steps {
            assert_eq!(st.kind, ReidemeisterKind::R1Minus);
            assert!(reidemeister_apply(&f, &st).unwrap().is_trivial());
        }
    }

    #[test]
    fn trefoil_bigons_collapse_to_one_crossing() {
        let t = trefoil();
        let dec = reidemeister_decreasing(&t);
        let r2: Vec<_> = dec.iter().filter(|s| s.kind == ReidemeisterKind::R2Minus).collect();
        let r3: Vec<_> = dec.iter().filter(|s| s.kind == ReidemeisterKind::R3).collect();
        assert_eq!(r2.len(), 3);
        assert_eq!(r3.len(), 2);
        assert!(!dec.iter().any(|s| s.kind == ReidemeisterKind::R1Minus));
        for st in r2 {
            let u = reidemeister_apply(&t, st).unwrap();
            assert!(is_isomorphic(&u, &figure_eight()));
        }
    }

    #[test]
    fn r3_twice_is_identity() {
        let t = trefoil();
        for st in reidemeister_decreasing(&t)
            .into_iter()
            .filter(|s| s.kind == ReidemeisterKind::R3)
        {
            let u = reidemeister_apply(&t, &st).unwrap();
            assert_eq!(u.crossings(), 3);
            let back = reidemeister_decreasing(&u)
                .into_iter()
                .filter(|s| s.kind == ReidemeisterKind::R3)
                .map(|s| reidemeister_apply(&u, &s).unwrap())
                .any(|v| is_isomorphic(&v, &t));
            assert!(back);
        }
    }

    #[test]
    fn increasing_moves_on_trivial() {
        let o = Shadow::trivial();
        let steps = reidemeister_applicable(&o);
        let r1 = steps.iter().find(|s| s.kind == ReidemeisterKind::R1Plus).unwrap();
        assert!(is_isomorphic(&reidemeister_apply(&o, r1).unwrap(), &figure_eight()));
        let r2 = steps.iter().find(|s| s.kind == ReidemeisterKind::R2Plus).unwrap();
        assert_eq!(reidemeister_apply(&o, r2).unwrap().crossings(), 2);
    }

    #[test]
    fn not_applicable_anchor() {
        let t = trefoil();
        let bad = ReidemeisterStep {
            kind: ReidemeisterKind::R1Minus,
            anchor: (0, 0),
            tag: OrientationTag::Omega1,
        };
        assert_eq!(reidemeister_apply(&t, &bad), Err(MoveError::NotApplicable));
    }
}
