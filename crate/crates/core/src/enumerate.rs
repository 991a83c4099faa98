//! Exhaustive shadow catalogs and the graph of `A` moves between them.
//!
//! [`enumerate_shadows`] grows each stratum from the previous one by `A` at
//! every anchor. [`enumerate_oracle`] does not use splices at all: it walks
//! over every Gauss word in first-occurrence form with every choice of the
//! second-visit position, builds the map directly and keeps the ones that
//! validate. [`enumerate_involutions`] is the literal search over all
//! pairings, usable up to four crossings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::canonical::{canonical_code, canonical_form, CanonicalCode};
use crate::codes::{emit_mapcode, parse_mapcode, CodeError};
use crate::moves::{splice_anchors, splice_half, splice_half_inverse};
use crate::shadow::{opposite, Shadow};
use crate::standard::trefoil;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub rep: Shadow,
    pub reduced: bool,
}

/// Shadows by crossing count, one entry per isomorphism class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShadowCatalog {
    pub strata: Vec<BTreeMap<CanonicalCode, CatalogEntry>>,
}

impl ShadowCatalog {
    fn from_strata(strata: Vec<Vec<Shadow>>) -> Self {
        let strata = strata
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|s| {
                        let (code, rep) = canonical_form(&s);
                        let reduced = rep.is_reduced();
                        (code, CatalogEntry { rep, reduced })
                    })
                    .collect()
            })
            .collect();
        ShadowCatalog { strata }
    }

    pub fn max_n(&self) -> usize {
        self.strata.len().saturating_sub(1)
    }

    pub fn stratum(&self, n: usize) -> &BTreeMap<CanonicalCode, CatalogEntry> {
        &self.strata[n]
    }

    pub fn counts(&self) -> Vec<usize> {
        self.strata.iter().map(|s| s.len()).collect()
    }

    pub fn reduced_counts(&self) -> Vec<usize> {
        self.strata.iter().map(|s| s.values().filter(|e| e.reduced).count()).collect()
    }

    pub fn contains(&self, s: &Shadow) -> bool {
        self.strata
            .get(s.crossings())
            .is_some_and(|m| m.contains_key(&canonical_code(s)))
    }

    /// One stratum as file text: sorted map codes, reduced ones marked.
    pub fn stratum_text(&self, n: usize) -> String {
        let mut lines: Vec<String> = self.strata[n]
            .values()
            .map(|e| {
                let code = emit_mapcode(&e.rep);
                if e.reduced && n > 0 {
                    format!("{code} # reduced")
                } else {
                    code
                }
            })
            .collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            writeln!(out, "{l}").unwrap();
        }
        out
    }

    /// Writes `catalog-n<k>.mapcodes` for every stratum into `dir`.
    pub fn write_files(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        for n in 0..self.strata.len() {
            std::fs::write(dir.join(format!("catalog-n{n}.mapcodes")), self.stratum_text(n))?;
        }
        Ok(())
    }

    /// Reads strata `0..=max_n` written by [`ShadowCatalog::write_files`].
    pub fn read_files(dir: &Path, max_n: usize) -> Result<Self, CatalogFileError> {
        let mut strata = Vec::new();
        for n in 0..=max_n {
            let text = std::fs::read_to_string(dir.join(format!("catalog-n{n}.mapcodes")))?;
            let mut v = Vec::new();
            for line in text.lines() {
                let code = line.split('#').next().unwrap().trim();
                if !code.is_empty() {
                    v.push(parse_mapcode(code)?);
                }
            }
            strata.push(v);
        }
        Ok(Self::from_strata(strata))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Every shadow one `A` away from `s`.
pub fn splice_successors(s: &Shadow) -> Vec<Shadow> {
    splice_anchors(s)
        .into_iter()
        .map(|(a, b)| splice_half(s, a, b).expect("anchors admit A"))
        .collect()
}

/// Closure of `{O}` under `A`, stratified by crossing count.
pub fn enumerate_shadows(max_n: usize) -> ShadowCatalog {
    let mut strata: Vec<BTreeMap<CanonicalCode, Shadow>> = vec![BTreeMap::new(); max_n + 1];
    strata[0].insert(CanonicalCode::trivial(), Shadow::trivial());
    for n in 1..=max_n {
        let parents: Vec<&Shadow> = strata[n - 1].values().collect();
        let found: BTreeMap<CanonicalCode, Shadow> = parents
            .par_iter()
            .flat_map_iter(|p| splice_successors(p).into_iter().map(|t| (canonical_code(&t), t)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        strata[n] = found;
    }
    ShadowCatalog::from_strata(strata.into_iter().map(|m| m.into_values().collect()).collect())
}

/// Words over `n` labels, each used twice, labels in first-occurrence order.
fn normal_words(n: usize) -> Vec<Vec<usize>> {
    fn go(word: &mut Vec<usize>, used: &mut [u8], next: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        for l in 0..next {
            if used[l] == 1 {
                used[l] = 2;
                word.push(l);
                go(word, used, next, n, out);
                word.pop();
                used[l] = 1;
            }
        }
        if next < n {
            used[next] = 1;
            word.push(next);
            go(word, used, next + 1, n, out);
            word.pop();
            used[next] = 0;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![0; n], 0, n, &mut out);
    out
}

/// Ground truth by direct construction from Gauss words.
pub fn enumerate_oracle(max_n: usize) -> ShadowCatalog {
    let mut strata = vec![vec![Shadow::trivial()]];
    for n in 1..=max_n {
        let mut seen: BTreeMap<CanonicalCode, Shadow> = BTreeMap::new();
        for word in normal_words(n) {
            for mask in 0..1u32 << n {
                let mut visited = vec![false; n];
                let arrivals: Vec<usize> = word
                    .iter()
                    .map(|&k| {
                        if std::mem::replace(&mut visited[k], true) {
                            4 * k + if mask >> k & 1 == 1 { 3 } else { 1 }
                        } else {
                            4 * k
                        }
                    })
                    .collect();
                let mut alpha = vec![0; 4 * n];
                for i in 0..2 * n {
                    let dep = opposite(arrivals[i]);
                    let next = arrivals[(i + 1) % (2 * n)];
                    alpha[dep] = next;
                    alpha[next] = dep;
                }
                if let Ok(s) = Shadow::validate(n, alpha) {
                    seen.entry(canonical_code(&s)).or_insert(s);
                }
            }
        }
        strata.push(seen.into_values().collect());
    }
    ShadowCatalog::from_strata(strata)
}

/// All fixed-point-free involutions on `4n` darts that validate, for
/// `n <= max_n`. Exponential: meant for `max_n <= 4`.
pub fn enumerate_involutions(max_n: usize) -> ShadowCatalog {
    fn go(alpha: &mut Vec<usize>, n: usize, seen: &mut BTreeMap<CanonicalCode, Shadow>) {
        let Some(a) = alpha.iter().position(|&x| x == usize::MAX) else {
            if let Ok(s) = Shadow::validate(n, alpha.clone()) {
                seen.entry(canonical_code(&s)).or_insert(s);
            }
            return;
        };
        for b in a + 1..alpha.len() {
            if alpha[b] == usize::MAX {
                alpha[a] = b;
                alpha[b] = a;
                go(alpha, n, seen);
                alpha[a] = usize::MAX;
                alpha[b] = usize::MAX;
            }
        }
    }
    let mut strata = vec![vec![Shadow::trivial()]];
    for n in 1..=max_n {
        let mut seen = BTreeMap::new();
        go(&mut vec![usize::MAX; 4 * n], n, &mut seen);
        strata.push(seen.into_values().collect());
    }
    ShadowCatalog::from_strata(strata)
}

/// Shadows joined by single `A` moves.
#[derive(Debug, Clone)]
pub struct AMoveGraph {
    pub vertices: Vec<CanonicalCode>,
    pub edges: Vec<(usize, usize)>,
}

impl AMoveGraph {
    /// Builds the graph on the catalog up to its top stratum. With
    /// `reduced_only`, vertices are the nontrivial reduced shadows.
    pub fn build(cat: &ShadowCatalog, reduced_only: bool) -> Self {
        let mut index = BTreeMap::new();
        let mut vertices = Vec::new();
        for stratum in &cat.strata {
            for (code, e) in stratum {
                if !reduced_only || (e.reduced && e.rep.crossings() > 0) {
                    index.insert(code.clone(), vertices.len());
                    vertices.push(code.clone());
                }
            }
        }
        let top = cat.max_n();
        let mut edges: Vec<(usize, usize)> = cat
            .strata
            .par_iter()
            .take(top)
            .flat_map_iter(|stratum| stratum.iter())
            .filter_map(|(code, e)| index.get(code).map(|&i| (i, e)))
            .flat_map_iter(|(i, e)| {
                splice_successors(&e.rep)
                    .into_iter()
                    .filter_map(|t| index.get(&canonical_code(&t)).map(|&j| (i.min(j), i.max(j))))
                    .collect::<Vec<_>>()
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        AMoveGraph { vertices, edges }
    }

    /// Connected components as lists of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertices.len() {
            comps.entry(find(&mut parent, v)).or_default().push(v);
        }
        comps.into_values().collect()
    }
}

/// Outcome of [`reduced_connectivity`].
#[derive(Debug, Clone)]
pub struct ConnectivityReport {
    pub max_n: usize,
    pub reduced_counts: Vec<usize>,
    pub edges: usize,
    pub component_sizes: Vec<usize>,
    /// Reduced shadows outside the trefoil's component under the cap.
    pub outside_trefoil: Vec<CanonicalCode>,
    /// Reduced shadows without a verified route to the trefoil, when
    /// witnesses were requested.
    pub missing_witnesses: Vec<CanonicalCode>,
    pub witnesses_checked: usize,
}

impl ConnectivityReport {
    pub fn connected_under_cap(&self) -> bool {
        self.outside_trefoil.is_empty()
    }
}

impl std::fmt::Display for ConnectivityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "cap n<={}", self.max_n)?;
        writeln!(f, "reduced per n: {:?}", self.reduced_counts)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "components: {:?}", self.component_sizes)?;
        if self.connected_under_cap() {
            writeln!(f, "connected under cap")?;
        } else {
            writeln!(f, "requires cap raise: {} shadows outside the trefoil component", self.outside_trefoil.len())?;
        }
        if self.witnesses_checked > 0 {
            writeln!(
                f,
                "to_trefoil witnesses: {}/{} verified",
                self.witnesses_checked - self.missing_witnesses.len(),
                self.witnesses_checked
            )?;
        }
        Ok(())
    }
}

/// The reduced-only `A`-move graph up to `max_n` crossings, with its
/// components. With `witness`, every reduced shadow is also checked by the
/// given route finder.
pub fn reduced_connectivity(
    max_n: usize,
    witness: Option<&(dyn Fn(&Shadow) -> bool + Sync)>,
) -> ConnectivityReport {
    let cat = enumerate_shadows(max_n);
    let g = AMoveGraph::build(&cat, true);
    let comps = g.components();
    let tref = canonical_code(&trefoil());
    let home = comps.iter().find(|c| c.iter().any(|&v| g.vertices[v] == tref));
    let outside_trefoil = (0..g.vertices.len())
        .filter(|v| !home.is_some_and(|c| c.contains(v)))
        .map(|v| g.vertices[v].clone())
        .collect();
    let mut missing_witnesses = Vec::new();
    let mut witnesses_checked = 0;
    if let Some(w) = witness {
        let reps: Vec<&CatalogEntry> = cat.strata.iter().flat_map(|m| m.values()).filter(|e| e.reduced && e.rep.crossings() > 0).collect();
        witnesses_checked = reps.len();
        missing_witnesses = reps
            .par_iter()
            .filter(|e| !w(&e.rep))
            .map(|e| canonical_code(&e.rep))
            .collect();
    }
    let mut component_sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    ConnectivityReport {
        max_n,
        reduced_counts: cat.reduced_counts(),
        edges: g.edges.len(),
        component_sizes,
        outside_trefoil,
        missing_witnesses,
        witnesses_checked,
    }
}

/// Whether every shadow of stratum `n >= 1` has an `A^-1` predecessor in
/// stratum `n - 1`.
pub fn has_predecessors(cat: &ShadowCatalog, n: usize) -> bool {
    cat.strata[n].values().all(|e| {
        (0..n).any(|k| {
            splice_half_inverse(&e.rep, k)
                .map(|p| cat.strata[n - 1].contains_key(&canonical_code(&p)))
                .unwrap_or(false)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::figure_eight;

    #[test]
    fn small_strata() {
        let cat = enumerate_shadows(3);
        assert_eq!(cat.counts(), vec![1, 1, 2, 6]);
        assert_eq!(cat.reduced_counts(), vec![1, 0, 0, 1]);
        assert!(cat.contains(&figure_eight()));
        assert!(cat.contains(&trefoil()));
    }

    #[test]
    fn normal_word_count() {
        // (2n-1)!!
        assert_eq!(normal_words(3).len(), 15);
        assert_eq!(normal_words(4).len(), 105);
    }

    #[test]
    fn oracle_agrees_small() {
        assert_eq!(enumerate_oracle(3), enumerate_shadows(3));
        assert_eq!(enumerate_involutions(2), enumerate_shadows(2));
    }

    #[test]
    fn stratum_text_sorted() {
        let cat = enumerate_shadows(3);
        let text = cat.stratum_text(3);
        let lines: Vec<&str> = text.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert_eq!(text.matches("# reduced").count(), 1);
    }

    #[test]
    fn connectivity_at_three() {
        let r = reduced_connectivity(3, None);
        assert_eq!(r.component_sizes, vec![1]);
        assert!(r.connected_under_cap());
    }
}
