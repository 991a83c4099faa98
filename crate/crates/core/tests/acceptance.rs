//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use knot_shadow::canonical_code;
use knot_shadow::enumerate::{enumerate_oracle, enumerate_shadows, ShadowCatalog};
use knot_shadow::macros::library::{builtin_fixture_texts, MacroLibrary};
use knot_shadow::macros::{apply_first, oriented_code, verify_macro};
use knot_shadow::moves::{
    apply_b_all, connected_sum, move_b, move_c, smoothing_components, splice_anchors, splice_half,
    splice_half_inverse,
};
use knot_shadow::pipeline::{normalize_tail, simplify_to_trivial, to_trefoil, verify_sequence, MoveSequence};
use knot_shadow::standard::{figure_eight, trefoil};
use knot_shadow::{emit_gauss, emit_mapcode, is_isomorphic, parse_gauss, parse_mapcode, MoveStep, Shadow};

type Check = fn(&ShadowCatalog) -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn reduced(cat: &ShadowCatalog, lo: usize, hi: usize) -> Vec<Shadow> {
    (lo..=hi)
        .flat_map(|n| cat.stratum(n).values().filter(|e| e.reduced).map(|e| e.rep.clone()).collect::<Vec<_>>())
        .collect()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    ensure(start.elapsed() <= limit, || format!("{what} took {:?}, limit {limit:?}", start.elapsed()))
}

fn c1(_: &ShadowCatalog) -> Result<String, String> {
    let t = Instant::now();
    let cat = enumerate_shadows(5);
    let oracle = enumerate_oracle(5);
    for n in 0..=5 {
        let a: Vec<_> = cat.stratum(n).keys().collect();
        let b: Vec<_> = oracle.stratum(n).keys().collect();
        ensure(a == b, || format!("stratum {n}: {} vs {} classes", a.len(), b.len()))?;
    }
    within(t, Duration::from_secs(120), "enumeration")?;
    Ok(format!("counts {:?} in {:?}", cat.counts(), t.elapsed()))
}

fn c2(cat: &ShadowCatalog) -> Result<String, String> {
    ensure(cat.stratum(1).values().chain(cat.stratum(2).values()).all(|e| !e.reduced), || {
        "reduced shadow with 1 or 2 crossings".into()
    })?;
    let r3 = reduced(cat, 3, 3);
    ensure(r3.len() == 1, || format!("{} reduced 3-crossing shadows", r3.len()))?;
    ensure(canonical_code(&r3[0]) == canonical_code(&trefoil()), || "the reduced 3-crossing shadow is not the trefoil".into())?;
    Ok("n=1,2: none; n=3: trefoil only".into())
}

fn c3(cat: &ShadowCatalog) -> Result<String, String> {
    let t = Instant::now();
    let inputs = reduced(cat, 3, 6);
    let code = canonical_code(&trefoil());
    for p in &inputs {
        let seq = to_trefoil(p).map_err(|e| format!("{p}: {}", e.name()))?;
        verify_sequence(&seq, true).map_err(|e| format!("{p}: {e}"))?;
        ensure(canonical_code(&seq.end) == code, || format!("{p}: does not end at the trefoil"))?;
        let text = seq.to_seqfile();
        let only_a = text
            .lines()
            .filter(|l| l.starts_with("step "))
            .all(|l| matches!(l[5..].parse::<MoveStep>(), Ok(MoveStep::A { .. } | MoveStep::AInv { .. })));
        ensure(only_a && text.lines().skip(3).all(|l| l.starts_with("step A")), || format!("{p}: non-A step"))?;
    }
    within(t, Duration::from_secs(600), "to_trefoil")?;
    Ok(format!("{} reduced shadows, n<=6, in {:?}", inputs.len(), t.elapsed()))
}

fn c4(cat: &ShadowCatalog) -> Result<String, String> {
    let lib = MacroLibrary::builtin();
    let mut checked = 0;
    for s in reduced(cat, 3, 5) {
        for k in 0..s.crossings() {
            let b = move_b(&s, k).map_err(|e| e.to_string())?;
            ensure(b.is_reduced() && b.crossings() == s.crossings() + 2, || format!("B at {k} on {s}"))?;
            let want = oriented_code(&b);
            let (t, out, steps) = apply_first(&s, lib.of_kind("B-expand"), &[k], |x| oriented_code(x) == want)
                .ok_or_else(|| format!("no B-expand macro at {k} on {s}"))?;
            ensure(is_isomorphic(&out, &b), || "macro result differs from B".into())?;
            let report = verify_macro(t).map_err(|e| e.to_string())?;
            ensure(report.trace.iter().all(|x| x.1), || format!("{}: reducible certificate entry", t.name))?;
            let seq = MoveSequence::replay(s.clone(), steps).map_err(|e| e.to_string())?;
            verify_sequence(&seq, true).map_err(|e| e.to_string())?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sites"))
}

fn c5(cat: &ShadowCatalog) -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=5 {
        for e in cat.stratum(n).values() {
            let b = apply_b_all(&e.rep);
            ensure(b.is_reduced() && b.crossings() == 3 * n, || format!("B everywhere on {}", e.rep))?;
            checked += 1;
        }
    }
    ensure(is_isomorphic(&apply_b_all(&figure_eight()), &trefoil()), || "B(figure-eight) is not the trefoil".into())?;
    Ok(format!("{checked} shadows; B(figure-eight) = trefoil"))
}

fn c6(cat: &ShadowCatalog) -> Result<String, String> {
    let mut checked = 0;
    for s in reduced(cat, 3, 5) {
        for e in 0..s.dart_count() {
            let c = move_c(&s, e).map_err(|x| x.to_string())?;
            ensure(c.is_reduced() && c.crossings() == s.crossings() + 3, || format!("C at {e} on {s}"))?;
            checked += 1;
        }
    }
    let lib = MacroLibrary::builtin();
    let swap = lib.get("csum-swap").ok_or("no csum-swap macro")?;
    verify_macro(swap).map_err(|e| e.to_string())?;
    let t = trefoil();
    let t2 = connected_sum(&t, &t, 0, 0).map_err(|e| e.to_string())?;
    let t3 = connected_sum(&t2, &t, 0, 0).map_err(|e| e.to_string())?;
    for p in [&t2, &t3] {
        let seq = to_trefoil(p).map_err(|e| e.to_string())?;
        verify_sequence(&seq, true).map_err(|e| e.to_string())?;
        ensure(canonical_code(&seq.end) == canonical_code(&t), || "sum route misses the trefoil".into())?;
    }
    Ok(format!("{checked} edge sites; csum-swap verified; T#T and T#T#T routed"))
}

fn c7(cat: &ShadowCatalog) -> Result<String, String> {
    let mut trips = 0;
    for n in 0..=4 {
        for e in cat.stratum(n).values() {
            for (d1, d2) in splice_anchors(&e.rep) {
                let s = splice_half(&e.rep, d1, d2).map_err(|x| x.to_string())?;
                let back = splice_half_inverse(&s, n).map_err(|x| x.to_string())?;
                ensure(back == e.rep, || format!("A^-1 after A at ({d1},{d2}) on {}", e.rep))?;
                trips += 1;
            }
        }
    }
    for n in 1..=5 {
        for e in cat.stratum(n).values() {
            for k in 0..n {
                let (a, b) = smoothing_components(&e.rep, k).map_err(|x| x.to_string())?;
                ensure(a.min(b) == 1 && a.max(b) == 2, || format!("smoothing at {k} on {}", e.rep))?;
            }
        }
    }
    Ok(format!("{trips} round trips; smoothings {{1,2}} for n<=5"))
}

fn c8(cat: &ShadowCatalog) -> Result<String, String> {
    let all: Vec<&Shadow> = (1..=7).flat_map(|n| cat.stratum(n).values().map(|e| &e.rep)).collect();
    let worst = all
        .par_iter()
        .map(|s| {
            let t = normalize_tail(&simplify_to_trivial(s, 2).map_err(|e| format!("{s}: {e}"))?);
            ensure(t.check(), || format!("{s}: trace does not replay"))?;
            ensure(t.shadows[t.shadows.len() - 2].crossings() == 1, || format!("{s}: next-to-last is not one crossing"))?;
            Ok(t.peak() - s.crossings())
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    Ok(format!("{} shadows, n<=7, crossings added at most {worst}", all.len()))
}

fn c9(cat: &ShadowCatalog) -> Result<String, String> {
    let mut codes = 0;
    for n in 0..=7 {
        for e in cat.stratum(n).values() {
            let back = parse_mapcode(&emit_mapcode(&e.rep)).map_err(|x| x.to_string())?;
            ensure(back == e.rep, || format!("mapcode round trip on {}", e.rep))?;
            codes += 1;
        }
    }
    for n in 0..=4 {
        for (code, e) in cat.stratum(n) {
            let back = parse_gauss(&emit_gauss(&e.rep)).map_err(|x| x.to_string())?;
            ensure(&canonical_code(&back) == code, || format!("Gauss round trip on {}", e.rep))?;
        }
    }
    let texts = builtin_fixture_texts();
    let lib = MacroLibrary::from_texts(texts.iter().map(|t| t.1)).map_err(|e| e.to_string())?;
    Ok(format!("{codes} map codes; {} fixtures ({} templates) verify", texts.len(), lib.templates.len()))
}

fn main() {
    let cat = enumerate_shadows(7);
    let checks: [(&str, Check); 9] = [
        ("enumeration matches oracle n<=5", c1),
        ("reduced strata n<=3", c2),
        ("to_trefoil on reduced n<=6", c3),
        ("move B and B-expand macro", c4),
        ("B everywhere", c5),
        ("move C, csum-swap, trefoil sums", c6),
        ("splice round trips and smoothings", c7),
        ("simplification n<=7", c8),
        ("codes and fixtures", c9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&cat))).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
