//! DOT and SVG renderings.
//!
//! The SVG layout is a Tutte embedding of the barycentric subdivision: every
//! edge carries one point near each of its darts, every face but the outer
//! one gets a centre joined to its corners and edge points, the outer
//! boundary is pinned to a circle and the rest is relaxed by averaging.

use std::fmt::Write as _;

use crate::codes::emit_mapcode;
use crate::shadow::{opposite, vertex, Dart, Shadow};

/// Graphviz rendering: crossings are nodes `c<k>`, each `alpha` pair is an
/// edge whose tail and head labels are the rotation positions of its darts.
pub fn export_dot(s: &Shadow) -> String {
    let mut out = String::new();
    writeln!(out, "// {}", emit_mapcode(s)).unwrap();
    out.push_str("graph shadow {\n");
    for k in 0..s.crossings() {
        writeln!(out, "  c{k};").unwrap();
    }
    for d in 0..s.dart_count() {
        let e = s.alpha(d);
        if d < e {
            writeln!(
                out,
                "  c{} -- c{} [taillabel=\"{}\", headlabel=\"{}\", label=\"{}-{}\"];",
                vertex(d),
                vertex(e),
                d & 3,
                e & 3,
                d,
                e
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

const SIZE: f64 = 400.0;
const RADIUS: f64 = 180.0;

/// Node positions: crossings `0..n`, then dart points `n..n+4n`, then face
/// centres.
fn layout(s: &Shadow) -> Vec<(f64, f64)> {
    let n = s.crossings();
    let faces = s.faces();
    let dpt = |d: Dart| n + d;
    let total = n + 4 * n + faces.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let join = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for d in 0..4 * n {
        join(vertex(d), dpt(d), &mut adj);
        if d < s.alpha(d) {
            join(dpt(d), dpt(s.alpha(d)), &mut adj);
        }
    }
    // outer face: the largest one visiting distinct crossings
    let outer = (0..faces.len())
        .filter(|&i| {
            let mut vs: Vec<usize> = faces[i].boundary.iter().map(|&d| vertex(d)).collect();
            vs.sort_unstable();
            vs.windows(2).all(|w| w[0] != w[1])
        })
        .max_by_key(|&i| (faces[i].degree(), std::cmp::Reverse(i)))
        .unwrap_or(0);
    for (i, f) in faces.iter().enumerate() {
        if i == outer {
            continue;
        }
        for &d in &f.boundary {
            join(n + 4 * n + i, vertex(d), &mut adj);
            join(n + 4 * n + i, dpt(d), &mut adj);
            join(n + 4 * n + i, dpt(s.alpha(d)), &mut adj);
        }
    }
    // pinned outer cycle: corner, point of d, point of alpha(d), ...
    let mut ring = Vec::new();
    for &d in &faces[outer].boundary {
        ring.push(vertex(d));
        ring.push(dpt(d));
        ring.push(dpt(s.alpha(d)));
    }
    let mut pos = vec![(SIZE / 2.0, SIZE / 2.0); total];
    let mut pinned = vec![false; total];
    for (i, &v) in ring.iter().enumerate() {
        let t = std::f64::consts::TAU * i as f64 / ring.len() as f64;
        pos[v] = (SIZE / 2.0 + RADIUS * t.cos(), SIZE / 2.0 + RADIUS * t.sin());
        pinned[v] = true;
    }
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for v in 0..total {
            if pinned[v] || adj[v].is_empty() {
                continue;
            }
            let k = adj[v].len() as f64;
            let x = adj[v].iter().map(|&u| pos[u].0).sum::<f64>() / k;
            let y = adj[v].iter().map(|&u| pos[u].1).sum::<f64>() / k;
            moved = moved.max((x - pos[v].0).abs() + (y - pos[v].1).abs());
            pos[v] = (x, y);
        }
        if moved < 1e-6 {
            break;
        }
    }
    pos
}

/// SVG drawing of the curve as one closed path, with the map code in a
/// comment.
pub fn export_svg(s: &Shadow) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    writeln!(out, "<!-- {} -->", emit_mapcode(s)).unwrap();
    if s.is_trivial() {
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"black\"/>",
            SIZE / 2.0,
            SIZE / 2.0
        )
        .unwrap();
        out.push_str("</svg>\n");
        return out;
    }
    let n = s.crossings();
    let pos = layout(s);
    let mut path = String::new();
    let dep = s.departures();
    let start = (0..4 * n).find(|&d| dep[d]).unwrap();
    let mut d = start;
    let (x, y) = pos[vertex(d)];
    write!(path, "M {x:.2} {y:.2}").unwrap();
    loop {
        let e = s.alpha(d);
        for p in [n + d, n + e, vertex(e)] {
            write!(path, " L {:.2} {:.2}", pos[p].0, pos[p].1).unwrap();
        }
        d = opposite(e);
        if d == start {
            break;
        }
    }
    path.push_str(" Z");
    writeln!(out, "<path d=\"{path}\" fill=\"none\" stroke=\"black\"/>").unwrap();
    for k in 0..n {
        writeln!(
            out,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"black\"><title>c{k}</title></circle>",
            pos[k].0, pos[k].1
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Map code embedded in an SVG produced by [`export_svg`].
pub fn svg_mapcode(svg: &str) -> Option<&str> {
    let start = svg.find("<!-- ")? + 5;
    let end = start + svg[start..].find(" -->")?;
    Some(&svg[start..end])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::codes::parse_mapcode;
    use crate::standard::{figure_eight, trefoil};

    #[test]
    fn trefoil_dot_counts() {
        let dot = export_dot(&trefoil());
        assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with('c') && l.ends_with("];")).count(), 6);
        assert_eq!(dot.lines().filter(|l| l.trim().len() <= 4 && l.trim().ends_with(';')).count(), 3);
    }

    #[test]
    fn trivial_svg_is_one_circle() {
        let svg = export_svg(&Shadow::trivial());
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn svg_comment_reparses() {
        for s in [figure_eight(), trefoil()] {
            let svg = export_svg(&s);
            let back = parse_mapcode(svg_mapcode(&svg).unwrap()).unwrap();
            assert!(is_isomorphic(&back, &s));
            assert!(!svg.contains("NaN"));
        }
    }
}
