//! The shipped macro set and the routines that regenerate it.
//!
//! Fixtures live in `fixtures/macros/*.macro` and are compiled in. Loading
//! verifies every template and adds the reverse direction of each one:
//! `R1+` and `R2+` lifts are read backwards from `R1-` and `R2-` lifts,
//! `C-destroy` from `C-create`, and so on.

use std::path::Path;
use std::sync::OnceLock;

use super::{
    apply_first, invert_macro, template_from_steps, oriented_code, parse_macro, synthesize_macro, verify_macro, MacroError,
    MacroTemplate, Tangle,
};
use crate::canonical::canonical_form;
use crate::moves::{
    apply_b_all_tracked, move_b, move_c, reidemeister_apply, reidemeister_decreasing, ReidemeisterKind,
    ReidemeisterStep,
};
use crate::shadow::{vertex, Shadow};
use crate::standard::trefoil;

include!(concat!(env!("OUT_DIR"), "/builtin_fixtures.rs"));

#[derive(Debug, Clone, Default)]
pub struct MacroLibrary {
    pub templates: Vec<MacroTemplate>,
}

/// Kind of the reversed template.
pub fn inverse_kind(kind: &str) -> String {
    match kind {
        "B-expand" => "B-contract".into(),
        "B-contract" => "B-expand".into(),
        "C-create" => "C-destroy".into(),
        "C-destroy" => "C-create".into(),
        "R1-" => "R1+".into(),
        "R1+" => "R1-".into(),
        "R2-" => "R2+".into(),
        "R2+" => "R2-".into(),
        other => other.into(),
    }
}

impl MacroLibrary {
    /// Parses and verifies fixtures, then adds their inverses.
    pub fn from_texts<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self, MacroError> {
        let mut templates = Vec::new();
        for text in texts {
            let t = parse_macro(text)?;
            verify_macro(&t)?;
            templates.push(t);
        }
        let inverses: Vec<MacroTemplate> = templates
            .iter()
            .map(|t| invert_macro(t, &format!("{}~", t.name), &inverse_kind(&t.kind)))
            .collect();
        templates.extend(inverses);
        Ok(MacroLibrary { templates })
    }

    /// The compiled-in fixtures.
    pub fn builtin() -> &'static MacroLibrary {
        static LIB: OnceLock<MacroLibrary> = OnceLock::new();
        LIB.get_or_init(|| {
            MacroLibrary::from_texts(BUILTIN_FIXTURES.iter().map(|(_, t)| *t)).expect("shipped fixtures verify")
        })
    }

    /// Every `*.macro` file of `dir`, in name order.
    pub fn load_dir(dir: &Path) -> Result<Self, MacroError> {
        let io = |e: std::io::Error| MacroError::Format { line: 0, message: e.to_string() };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "macro"))
            .collect();
        paths.sort();
        let texts: Vec<String> = paths.iter().map(std::fs::read_to_string).collect::<Result<_, _>>().map_err(io)?;
        Self::from_texts(texts.iter().map(String::as_str))
    }

    pub fn of_kind<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a MacroTemplate> + 'a {
        self.templates.iter().filter(move |t| t.kind == kind)
    }

    pub fn get(&self, name: &str) -> Option<&MacroTemplate> {
        self.templates.iter().find(|t| t.name == name)
    }
}

/// Names and texts of the compiled-in fixtures.
pub fn builtin_fixture_texts() -> &'static [(&'static str, &'static str)] {
    BUILTIN_FIXTURES
}

pub fn kind_name(kind: ReidemeisterKind) -> &'static str {
    match kind {
        ReidemeisterKind::R1Plus => "R1+",
        ReidemeisterKind::R1Minus => "R1-",
        ReidemeisterKind::R2Plus => "R2+",
        ReidemeisterKind::R2Minus => "R2-",
        ReidemeisterKind::R3 => "R3",
    }
}

/// File-name form of a kind: `R2-` becomes `R2minus`.
pub fn file_stem(kind: &str) -> String {
    kind.replace('-', "minus").replace('+', "plus")
}

/// Crossings a Reidemeister step acts on, in `prev`.
pub fn step_site(prev: &Shadow, step: &ReidemeisterStep) -> Vec<usize> {
    let (a, b) = step.anchor;
    let mut v = match step.kind {
        ReidemeisterKind::R1Plus | ReidemeisterKind::R2Plus => {
            if prev.is_trivial() {
                Vec::new()
            } else {
                vec![vertex(a), vertex(b)]
            }
        }
        _ => {
            let mut v = Vec::new();
            let mut d = a;
            loop {
                v.push(vertex(d));
                d = prev.phi(d);
                if d == a {
                    break;
                }
            }
            v
        }
    };
    v.sort_unstable();
    v.dedup();
    v
}

/// The lhs and rhs tangles of a lifted Reidemeister step: `P_B` of `prev`
/// and of its result, with the region made of the triples replacing the
/// site crossings and their neighbours.
pub fn case_tangles(prev: &Shadow, step: &ReidemeisterStep) -> Option<(Tangle, Tangle)> {
    let next = reidemeister_apply(prev, step).ok()?;
    if prev.is_trivial() || next.is_trivial() {
        return None;
    }
    let site = step_site(prev, step);
    let mut near: Vec<usize> = site
        .iter()
        .flat_map(|&k| 4 * k..4 * k + 4)
        .map(|d| vertex(prev.alpha(d)))
        .chain(site.iter().copied())
        .collect();
    near.sort_unstable();
    near.dedup();
    let removed: Vec<usize> = match step.kind {
        ReidemeisterKind::R1Minus | ReidemeisterKind::R2Minus => site.clone(),
        _ => Vec::new(),
    };
    let mut image: Vec<usize> = near
        .iter()
        .filter(|k| !removed.contains(k))
        .map(|&k| k - removed.iter().filter(|&&r| r < k).count())
        .collect();
    image.extend(prev.crossings()..next.crossings());
    let bp = apply_b_all_tracked(prev);
    let bn = apply_b_all_tracked(&next);
    let lhs: Vec<usize> = near.iter().flat_map(|&k| bp.groups[k]).collect();
    let rhs: Vec<usize> = image.iter().flat_map(|&k| bn.groups[k]).collect();
    Some((
        Tangle::new(bp.shadow, lhs).ok()?,
        Tangle::new(bn.shadow, rhs).ok()?,
    ))
}

/// Whether some template of `kind` already rewrites `lhs` into a shadow
/// matching `rhs`.
pub fn covered(lib: &[MacroTemplate], kind: &str, lhs: &Tangle, rhs: &Tangle) -> bool {
    let want = oriented_code(&rhs.closure);
    apply_first(
        &lhs.closure,
        lib.iter().filter(|t| t.kind == kind),
        &lhs.region,
        |s| oriented_code(s) == want,
    )
    .is_some()
}

/// `B-expand` variants: `B` at every crossing of each model, kept when no
/// earlier variant transplants.
pub fn synthesize_b_expand(models: &[Shadow], lib: &mut Vec<MacroTemplate>, bound: usize) -> Result<(), MacroError> {
    for m in models {
        for k in 0..m.crossings() {
            let lhs = Tangle::new(m.clone(), vec![k])?;
            let out = move_b(m, k).expect("crossing exists");
            let n = m.crossings();
            let rhs = Tangle::new(out, vec![k, n, n + 1])?;
            if !covered(lib, "B-expand", &lhs, &rhs) {
                let name = format!("B-expand-{:02}", lib.iter().filter(|t| t.kind == "B-expand").count());
                lib.push(synthesize_macro(&name, "B-expand", &lhs, &rhs, bound)?);
            }
        }
    }
    Ok(())
}

/// `C-create` variants on the edges of each model.
pub fn synthesize_c_create(models: &[Shadow], lib: &mut Vec<MacroTemplate>, bound: usize) -> Result<(), MacroError> {
    for m in models {
        let n = m.crossings();
        for e in 0..m.dart_count() {
            let ends = vec![vertex(e), vertex(m.alpha(e))];
            let lhs = Tangle::new(m.clone(), ends.clone())?;
            let out = move_c(m, e).expect("nontrivial model");
            let rhs = Tangle::new(out, ends.into_iter().chain(n..n + 3).collect())?;
            if !covered(lib, "C-create", &lhs, &rhs) {
                let name = format!("C-create-{:02}", lib.iter().filter(|t| t.kind == "C-create").count());
                lib.push(synthesize_macro(&name, "C-create", &lhs, &rhs, bound)?);
            }
        }
    }
    Ok(())
}

/// The swap between the two ways of summing a trefoil onto the trefoil's
/// edge at dart `e`: the face of `e` meets a triangle, or a bigon.
pub fn synthesize_csum_swap(e: usize, bound: usize) -> Result<MacroTemplate, MacroError> {
    let t = trefoil();
    let region: Vec<usize> = vec![vertex(e), vertex(t.alpha(e)), 3, 4, 5];
    let lhs = Tangle::new(move_c(&t, e).expect("nontrivial"), region.clone())?;
    let rhs = Tangle::new(move_c(&t, t.alpha(e)).expect("nontrivial"), region)?;
    synthesize_macro("csum-swap", "csum-swap", &lhs, &rhs, bound)
}

/// The same steps over the smallest connected region that contains the
/// site triples and every crossing the steps touch.
fn shrink(t: MacroTemplate, prev: &Shadow, step: &ReidemeisterStep) -> MacroTemplate {
    let groups = apply_b_all_tracked(prev).groups;
    let core: Vec<usize> = step_site(prev, step).iter().flat_map(|&k| groups[k]).collect();
    let Ok(core) = Tangle::new(t.lhs.closure.clone(), core) else { return t };
    match template_from_steps(&t.name, &t.kind, &core, t.steps.clone()) {
        Ok(small)
            if small.lhs.is_connected()
                && !small.rhs.region.is_empty()
                && small.lhs.region.len() < t.lhs.region.len() =>
        {
            small
        }
        _ => t,
    }
}

/// Case macros for every decreasing step and `R3` of each model (and its
/// mirror), kept when nothing earlier covers them. Returns the number of
/// cases examined and the cases the search could not close, as
/// `(kind, model map code)`.
pub fn synthesize_cases(
    models: &[Shadow],
    lib: &mut Vec<MacroTemplate>,
    bound: usize,
) -> Result<(usize, Vec<(String, String)>), MacroError> {
    let mut cases = 0;
    let mut missed = Vec::new();
    for m in models {
        let mut variants = vec![m.clone()];
        let mirror = canonical_form(&m.mirror()).1;
        if !variants.contains(&mirror) {
            variants.push(mirror);
        }
        for v in &variants {
            for step in reidemeister_decreasing(v) {
                let Some((lhs, rhs)) = case_tangles(v, &step) else { continue };
                cases += 1;
                let kind = kind_name(step.kind);
                if covered(lib, kind, &lhs, &rhs) {
                    continue;
                }
                let name = format!("{}-{:02}", file_stem(kind), lib.iter().filter(|t| t.kind == kind).count());
                match synthesize_macro(&name, kind, &lhs, &rhs, bound) {
                    Ok(t) => lib.push(shrink(t, v, &step)),
                    Err(MacroError::NotFound(_)) => missed.push((kind.to_string(), crate::codes::emit_mapcode(v))),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok((cases, missed))
}
