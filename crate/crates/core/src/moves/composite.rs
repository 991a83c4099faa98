//! Moves `B` and `C`, and connected sums.
//!
//! `B` replaces a crossing by three crossings of a two-strand twist. The
//! twist runs along the axis in which the two strands through the crossing
//! are parallel; the other axis would leave a reducible crossing behind.
//! The middle crossing of the twist keeps the index of the replaced crossing
//! and the outer two are appended.
//!
//! `C` is a connected sum with a trefoil: the face of the chosen dart is
//! merged with a triangle of the trefoil, the opposite face with a bigon.

use crate::canonical::canonical_code;
use crate::moves::rewire::Rewire;
use crate::moves::MoveError;
use crate::shadow::{vertex, Dart, Shadow};
use crate::standard::trefoil;

const RT: usize = 0;
const LT: usize = 1;
const LB: usize = 2;
const RB: usize = 3;

/// Result of `B` at one crossing with the darts that took over the
/// replaced crossing's edges: `ports[i]` continues the edge of `4k+i`.
#[derive(Debug, Clone)]
pub struct BTracked {
    pub shadow: Shadow,
    pub ports: [Dart; 4],
}

/// `B` at crossing `k`.
pub fn move_b(s: &Shadow, k: usize) -> Result<Shadow, MoveError> {
    move_b_tracked(s, k).map(|t| t.shadow)
}

pub fn move_b_tracked(s: &Shadow, k: usize) -> Result<BTracked, MoveError> {
    let n = s.crossings();
    if k >= n {
        return Err(MoveError::BadCrossing(k));
    }
    let dep = s.departures();
    let arm = |i: usize| 4 * k + (i & 3);
    // offset so that the twist's left ports are both entries or both exits
    let r = if dep[arm(1)] == dep[arm(2)] { 0 } else { 1 };

    let mut w = Rewire::from(s);
    let x1 = w.add_crossing();
    let x3 = w.add_crossing();
    let x2 = w.add_crossing(); // moved to slot k below
    w.link(4 * x1 + RT, 4 * x2 + LT);
    w.link(4 * x1 + RB, 4 * x2 + LB);
    w.link(4 * x2 + RT, 4 * x3 + LT);
    w.link(4 * x2 + RB, 4 * x3 + LB);
    let ports = [4 * x3 + RT, 4 * x1 + LT, 4 * x1 + LB, 4 * x3 + RB];
    let mut out = [0; 4];
    for j in 0..4 {
        w.reattach(arm(j + r), ports[j]);
        out[(j + r) & 3] = ports[j];
    }
    w.move_crossing(x2, k);
    w.truncate(n + 2);
    let shadow = w.finish().expect("B keeps a single circuit");
    Ok(BTracked { shadow, ports: out })
}

/// `P_B` with bookkeeping: `ports[d]` is the dart of the result that
/// continues the edge of dart `d` of the input, and `groups[k]` lists the
/// three crossings replacing crossing `k`.
#[derive(Debug, Clone)]
pub struct BImage {
    pub shadow: Shadow,
    pub ports: Vec<Dart>,
    pub groups: Vec<[usize; 3]>,
}

pub fn apply_b_all(s: &Shadow) -> Shadow {
    apply_b_all_tracked(s).shadow
}

/// Applies `B` at every original crossing in ascending order.
pub fn apply_b_all_tracked(s: &Shadow) -> BImage {
    let n = s.crossings();
    let mut cur = s.clone();
    let mut ports = vec![0; 4 * n];
    let mut groups = Vec::with_capacity(n);
    for k in 0..n {
        let t = move_b_tracked(&cur, k).expect("original crossing keeps its index");
        for i in 0..4 {
            ports[4 * k + i] = t.ports[i];
        }
        groups.push([k, n + 2 * k, n + 2 * k + 1]);
        cur = t.shadow;
    }
    BImage {
        shadow: cur,
        ports,
        groups,
    }
}

/// Connected sum cutting `p` at the edge of `ep` and `q` at the edge of
/// `eq`. The face of `ep` merges with the face of `eq`. The crossings of `q`
/// follow those of `p`.
pub fn connected_sum(p: &Shadow, q: &Shadow, ep: Dart, eq: Dart) -> Result<Shadow, MoveError> {
    if q.is_trivial() {
        return Ok(p.clone());
    }
    if p.is_trivial() {
        return Ok(q.clone());
    }
    if ep >= p.dart_count() {
        return Err(MoveError::BadDart(ep));
    }
    if eq >= q.dart_count() {
        return Err(MoveError::BadDart(eq));
    }
    let off = p.dart_count();
    let mut alpha: Vec<Dart> = p.alpha_slice().to_vec();
    alpha.extend(q.alpha_slice().iter().map(|&d| d + off));
    let fp = p.alpha(ep);
    let fq = q.alpha(eq) + off;
    let eq = eq + off;
    alpha[ep] = fq;
    alpha[fq] = ep;
    alpha[eq] = fp;
    alpha[fp] = eq;
    Ok(Shadow::validate(p.crossings() + q.crossings(), alpha).expect("connected sum is a shadow"))
}

/// A trefoil dart whose face is a triangle.
fn trefoil_triangle_dart() -> (Shadow, Dart) {
    let t = trefoil();
    let faces = t.faces();
    let d = faces
        .iter()
        .filter(|f| f.degree() == 3)
        .flat_map(|f| f.boundary.iter().copied())
        .min()
        .expect("trefoil has triangles");
    (t, d)
}

/// `C` at the edge side of `e`.
pub fn move_c(s: &Shadow, e: Dart) -> Result<Shadow, MoveError> {
    if s.is_trivial() {
        return Err(MoveError::TrivialShadow);
    }
    let (t, d) = trefoil_triangle_dart();
    connected_sum(s, &t, e, d)
}

/// A trefoil factor hanging on an edge: three crossings joined to the rest
/// by exactly two edges. `outer` are the two darts outside the factor whose
/// partners lie in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrefoilSite {
    pub crossings: [usize; 3],
    pub outer: [Dart; 2],
}

/// All trefoil factors of `s` whose removal leaves a nontrivial shadow.
pub fn trefoil_sites(s: &Shadow) -> Vec<TrefoilSite> {
    let n = s.crossings();
    if n < 4 {
        return Vec::new();
    }
    let tref = canonical_code(&trefoil());
    let mut out = Vec::new();
    let nbrs = |v: usize| -> Vec<usize> {
        let mut w: Vec<usize> = (0..4).map(|i| vertex(s.alpha(4 * v + i))).filter(|&w| w != v).collect();
        w.sort_unstable();
        w.dedup();
        w
    };
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..n {
        for b in nbrs(a) {
            let mut third: Vec<usize> = nbrs(a).into_iter().chain(nbrs(b)).collect();
            third.sort_unstable();
            third.dedup();
            for c in third {
                let mut tri = [a, b, c];
                tri.sort_unstable();
                if tri[0] == tri[1] || tri[1] == tri[2] || !seen.insert(tri) {
                    continue;
                }
                let inside = |d: Dart| tri.contains(&vertex(d));
                let exits: Vec<Dart> = tri
                    .iter()
                    .flat_map(|&v| 4 * v..4 * v + 4)
                    .filter(|&d| !inside(s.alpha(d)))
                    .collect();
                if exits.len() != 2 {
                    continue;
                }
                // close the factor on its own and compare with the trefoil
                let mut local = vec![0; 12];
                let idx = |d: Dart| 4 * tri.iter().position(|&v| v == vertex(d)).unwrap() + (d & 3);
                for &v in &tri {
                    for d in 4 * v..4 * v + 4 {
                        let p = s.alpha(d);
                        local[idx(d)] = if inside(p) { idx(p) } else { usize::MAX };
                    }
                }
                let (x, y) = (idx(exits[0]), idx(exits[1]));
                local[x] = y;
                local[y] = x;
                match Shadow::validate(3, local) {
                    Ok(f) if canonical_code(&f) == tref => {}
                    _ => continue,
                }
                let mut outer = [s.alpha(exits[0]), s.alpha(exits[1])];
                outer.sort_unstable();
                out.push(TrefoilSite { crossings: tri, outer });
            }
        }
    }
    out
}

/// `C^-1`: removes the trefoil factor and rejoins its two outer darts.
pub fn move_c_inverse(s: &Shadow, site: &TrefoilSite) -> Result<Shadow, MoveError> {
    if !trefoil_sites(s).contains(site) {
        return Err(MoveError::NoTrefoilFactor);
    }
    let mut w = Rewire::from(s);
    w.link(site.outer[0], site.outer[1]);
    let mut removed = vec![false; s.crossings()];
    for &v in &site.crossings {
        removed[v] = true;
    }
    w.compact(&removed);
    w.finish().map_err(|_| MoveError::NoTrefoilFactor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::standard::figure_eight;

    #[test]
    fn b_on_figure_eight_is_trefoil() {
        let t = move_b(&figure_eight(), 0).unwrap();
        assert!(is_isomorphic(&t, &trefoil()));
        assert!(is_isomorphic(&apply_b_all(&figure_eight()), &trefoil()));
    }

    #[test]
    fn b_on_trefoil_is_reduced() {
        let t = trefoil();
        for k in 0..3 {
            let u = move_b(&t, k).unwrap();
            assert_eq!(u.crossings(), 5);
            assert!(u.is_reduced());
        }
        assert_eq!(move_b(&t, 3).unwrap_err(), MoveError::BadCrossing(3));
    }

    #[test]
    fn b_all_keeps_labels() {
        let img = apply_b_all_tracked(&trefoil());
        assert_eq!(img.shadow.crossings(), 9);
        assert!(img.shadow.is_reduced());
        for d in 0..12 {
            assert!(img.ports[d] < 36);
        }
        assert!(apply_b_all(&Shadow::trivial()).is_trivial());
    }

    #[test]
    fn connected_sum_with_trivial_is_identity() {
        let t = trefoil();
        assert_eq!(connected_sum(&t, &Shadow::trivial(), 0, 0).unwrap(), t);
        assert_eq!(connected_sum(&Shadow::trivial(), &t, 0, 0).unwrap(), t);
    }

    #[test]
    fn c_and_inverse() {
        let t = trefoil();
        assert_eq!(move_c(&Shadow::trivial(), 0), Err(MoveError::TrivialShadow));
        for e in 0..12 {
            let u = move_c(&t, e).unwrap();
            assert_eq!(u.crossings(), 6);
            assert!(u.is_reduced());
            let sites = trefoil_sites(&u);
            assert!(!sites.is_empty());
            let site = sites.iter().find(|s| s.crossings == [3, 4, 5]).unwrap();
            assert_eq!(move_c_inverse(&u, site).unwrap(), t);
        }
        let bogus = TrefoilSite { crossings: [0, 1, 2], outer: [0, 1] };
        assert_eq!(move_c_inverse(&t, &bogus), Err(MoveError::NoTrefoilFactor));
    }
}
