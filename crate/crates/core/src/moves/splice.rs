//! Half-twisted splices, their inverse, and twisted splices.
//!
//! A splice is addressed by two darts `d1`, `d2` of one face. The dart `d`
//! stands for a point on the edge `{d, alpha(d)}`, on the side of the face
//! of `d`. A chord through the face joins the two points, and the two arcs
//! crossed by the chord are replaced by a braid of `m` crossings.
//!
//! Each inserted crossing uses positions `0` (right-top), `1` (left-top),
//! `2` (left-bottom), `3` (right-bottom). With the chord drawn vertically,
//! `d1` enters the braid at the left-top and `alpha(d1)` at the right-top;
//! `d2` enters at the right-bottom and `alpha(d2)` at the left-bottom. When
//! `d1 == d2` the first point precedes the second along the face boundary.
//! New crossings get the next free indices, left to right.

use crate::moves::rewire::Rewire;
use crate::moves::MoveError;
use crate::shadow::{vertex, Dart, Shadow};

const RT: usize = 0;
const LT: usize = 1;
const LB: usize = 2;
const RB: usize = 3;

fn check_anchor(s: &Shadow, d1: Dart, d2: Dart) -> Result<(), MoveError> {
    if s.is_trivial() {
        return if d1 == 0 && d2 == 0 {
            Ok(())
        } else {
            Err(MoveError::NotSameFace)
        };
    }
    if d1 >= s.dart_count() || d2 >= s.dart_count() {
        return Err(MoveError::BadDart(d1.max(d2)));
    }
    let faces = s.face_index();
    if faces[d1] != faces[d2] {
        return Err(MoveError::NotSameFace);
    }
    Ok(())
}

/// True when the curve runs the same way along both chord-crossed arcs
/// as drawn in the braid picture, i.e. the two arcs are parallel.
pub fn arcs_parallel(s: &Shadow, d1: Dart, d2: Dart) -> bool {
    if s.is_trivial() {
        return false;
    }
    let dep = s.departures();
    dep[d1] != dep[d2]
}

/// Inserts an `m`-crossing braid with no orientation check.
pub(crate) fn insert_braid(s: &Shadow, d1: Dart, d2: Dart, m: usize) -> Rewire {
    assert!(m >= 1);
    let mut r = Rewire::from(s);
    let xs: Vec<usize> = (0..m).map(|_| r.add_crossing()).collect();
    for w in xs.windows(2) {
        r.link(4 * w[0] + RT, 4 * w[1] + LT);
        r.link(4 * w[0] + RB, 4 * w[1] + LB);
    }
    let first = 4 * xs[0];
    let last = 4 * xs[m - 1];
    if s.is_trivial() {
        r.link(first + LT, first + LB);
        r.link(last + RT, last + RB);
    } else if d1 == d2 {
        let e1 = s.alpha(d1);
        r.link(first + LT, d1);
        r.link(first + LB, e1);
        r.link(last + RT, last + RB);
    } else {
        let e1 = s.alpha(d1);
        let e2 = s.alpha(d2);
        r.link(first + LT, d1);
        r.link(last + RT, e1);
        r.link(last + RB, d2);
        r.link(first + LB, e2);
    }
    r
}

/// Half-twisted splice `A` at `(d1, d2)`. On the trivial projection the
/// reserved anchor is `(0, 0)`.
pub fn splice_half(s: &Shadow, d1: Dart, d2: Dart) -> Result<Shadow, MoveError> {
    check_anchor(s, d1, d2)?;
    if arcs_parallel(s, d1, d2) {
        return Err(MoveError::OrientationMismatch);
    }
    Ok(insert_braid(s, d1, d2, 1)
        .finish()
        .expect("antiparallel splice keeps a single circuit"))
}

/// Twisted splice with `m` crossings. Odd `m` needs antiparallel arcs; even
/// `m` keeps the strand connections and is accepted for either orientation.
pub fn twisted_splice(s: &Shadow, d1: Dart, d2: Dart, m: usize) -> Result<Shadow, MoveError> {
    if m == 0 {
        return Err(MoveError::ParityMismatch);
    }
    check_anchor(s, d1, d2)?;
    if m % 2 == 1 && arcs_parallel(s, d1, d2) {
        return Err(MoveError::ParityMismatch);
    }
    Ok(insert_braid(s, d1, d2, m)
        .finish()
        .expect("parity-checked braid keeps a single circuit"))
}

/// Every anchor at which `A` applies, with `d1 <= d2`.
pub fn splice_anchors(s: &Shadow) -> Vec<(Dart, Dart)> {
    if s.is_trivial() {
        return vec![(0, 0)];
    }
    let dep = s.departures();
    let mut out = Vec::new();
    for face in s.faces() {
        let mut b = face.boundary.clone();
        b.sort_unstable();
        for (i, &d1) in b.iter().enumerate() {
            for &d2 in &b[i..] {
                if dep[d1] == dep[d2] {
                    out.push((d1, d2));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn smoothing_pair(k: usize, which: usize) -> impl Fn(Dart) -> Dart {
    move |d: Dart| {
        debug_assert_eq!(vertex(d), k);
        let i = d & 3;
        let j = if which == 0 { i ^ 1 } else { [3, 2, 1, 0][i] };
        4 * k + j
    }
}

/// Smooths crossing `k`; `which == 0` joins positions (0,1),(2,3) and
/// `which == 1` joins (1,2),(3,0). Returns the pairing and the number of
/// curve components.
fn smooth(s: &Shadow, k: usize, which: usize) -> (Rewire, usize) {
    let mut r = Rewire::from(s);
    let mut removed = vec![false; s.crossings()];
    removed[k] = true;
    let loops = r.dissolve(&removed, smoothing_pair(k, which));
    let components = if r.crossings() == 0 {
        loops
    } else {
        let tmp = Shadow::from_raw(r.alpha.clone());
        tmp.tau_cycles().len() / 2 + loops
    };
    (r, components)
}

/// Component counts of the two smoothings at `k`.
pub fn smoothing_components(s: &Shadow, k: usize) -> Result<(usize, usize), MoveError> {
    if k >= s.crossings() {
        return Err(MoveError::BadCrossing(k));
    }
    Ok((smooth(s, k, 0).1, smooth(s, k, 1).1))
}

/// `A^-1` at crossing `k`: the smoothing that keeps one circuit.
pub fn splice_half_inverse(s: &Shadow, k: usize) -> Result<Shadow, MoveError> {
    if k >= s.crossings() {
        return Err(MoveError::BadCrossing(k));
    }
    for which in 0..2 {
        let (r, comps) = smooth(s, k, which);
        if comps == 1 {
            return Ok(r.finish().expect("single-circuit smoothing is a shadow"));
        }
    }
    unreachable!("one smoothing of a knot shadow crossing keeps a single circuit")
}

/// `A^-1` at `k` together with an anchor of the result at which `A`
/// restores a shadow isomorphic to `s`.
pub fn splice_half_inverse_with_anchor(
    s: &Shadow,
    k: usize,
) -> Result<(Shadow, (Dart, Dart)), MoveError> {
    let t = splice_half_inverse(s, k)?;
    if t.is_trivial() {
        return Ok((t, (0, 0)));
    }
    // Candidate darts: ends of the edges that were rejoined.
    let shift = |d: Dart| if vertex(d) > k { d - 4 } else { d };
    let mut cands: Vec<Dart> = (0..4)
        .map(|i| s.alpha(4 * k + i))
        .filter(|&q| vertex(q) != k)
        .map(shift)
        .collect();
    cands.extend(cands.clone().into_iter().map(|q| t.alpha(q)));
    cands.sort_unstable();
    cands.dedup();
    let target = crate::canonical::oriented_canonical(s).0;
    for &a in &cands {
        for &b in &cands {
            if a > b {
                continue;
            }
            if let Ok(u) = splice_half(&t, a, b) {
                if crate::canonical::oriented_canonical(&u).0 == target {
                    return Ok((t, (a, b)));
                }
            }
        }
    }
    unreachable!("the removed crossing is restored by a splice on its rejoined edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonical_code, is_isomorphic};
    use crate::standard::{figure_eight, trefoil};

    #[test]
    fn splice_on_trivial_gives_figure_eight() {
        let s = splice_half(&Shadow::trivial(), 0, 0).unwrap();
        assert_eq!(canonical_code(&s), canonical_code(&figure_eight()));
        assert_eq!(
            splice_half(&Shadow::trivial(), 0, 1),
            Err(MoveError::NotSameFace)
        );
    }

    #[test]
    fn different_faces_rejected() {
        let s = figure_eight();
        // darts 0 and 2 lie in the two monogons
        assert_eq!(splice_half(&s, 0, 2), Err(MoveError::NotSameFace));
    }

    #[test]
    fn figure_eight_inverse_is_trivial() {
        assert!(splice_half_inverse(&figure_eight(), 0).unwrap().is_trivial());
        assert_eq!(smoothing_components(&figure_eight(), 0).map(sorted), Ok((1, 2)));
        assert_eq!(
            splice_half_inverse(&figure_eight(), 1),
            Err(MoveError::BadCrossing(1))
        );
    }

    fn sorted(p: (usize, usize)) -> (usize, usize) {
        (p.0.min(p.1), p.0.max(p.1))
    }

    #[test]
    fn trefoil_inverses_agree() {
        let t = trefoil();
        let r: Vec<_> = (0..3).map(|k| splice_half_inverse(&t, k).unwrap()).collect();
        assert!(r.iter().all(|s| s.crossings() == 2 && !s.is_reduced()));
        assert!(is_isomorphic(&r[0], &r[1]) && is_isomorphic(&r[1], &r[2]));
        for k in 0..3 {
            assert_eq!(smoothing_components(&t, k).map(sorted), Ok((1, 2)));
        }
    }

    #[test]
    fn splice_then_unsplice() {
        let t = trefoil();
        for (d1, d2) in splice_anchors(&t) {
            let u = splice_half(&t, d1, d2).unwrap();
            assert_eq!(u.crossings(), 4);
            let back = splice_half_inverse(&u, 3).unwrap();
            assert!(is_isomorphic(&back, &t));
        }
    }

    #[test]
    fn parallel_arcs_need_even_twists() {
        let f = figure_eight();
        let mut saw_parallel = false;
        for face in f.faces() {
            for &d1 in &face.boundary {
                for &d2 in &face.boundary {
                    if arcs_parallel(&f, d1, d2) {
                        saw_parallel = true;
                        assert_eq!(splice_half(&f, d1, d2), Err(MoveError::OrientationMismatch));
                        assert_eq!(twisted_splice(&f, d1, d2, 1), Err(MoveError::ParityMismatch));
                        assert_eq!(twisted_splice(&f, d1, d2, 2).unwrap().crossings(), 3);
                    }
                }
            }
        }
        assert!(saw_parallel);
    }

    #[test]
    fn twisted_splice_one_is_splice_half() {
        let t = trefoil();
        for (d1, d2) in splice_anchors(&t) {
            assert_eq!(twisted_splice(&t, d1, d2, 1), splice_half(&t, d1, d2));
        }
    }

    #[test]
    fn inverse_with_anchor_restores() {
        let t = trefoil();
        for k in 0..3 {
            let (u, (a, b)) = splice_half_inverse_with_anchor(&t, k).unwrap();
            assert!(is_isomorphic(&splice_half(&u, a, b).unwrap(), &t));
        }
    }
}
