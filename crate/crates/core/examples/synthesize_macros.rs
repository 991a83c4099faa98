//! Regenerates the shipped macro fixtures by bounded search.
//!
//! ```text
//! cargo run --release --example synthesize_macros -- [out_dir] [max_model_n] [bound] [max_trace_n]
//! ```

use std::collections::HashSet;
use std::path::PathBuf;
use std::time::Instant;

use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::macros::library::{synthesize_b_expand, synthesize_c_create, synthesize_cases, synthesize_csum_swap};
use knot_shadow::macros::{emit_macro, verify_macro, MacroTemplate};
use knot_shadow::pipeline::{normalize_tail, simplify_to_trivial};
use knot_shadow::{canonical_code, CanonicalCode, Shadow};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = PathBuf::from(args.first().map(String::as_str).unwrap_or("crates/core/fixtures/macros"));
    let max_n: usize = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let bound: usize = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(4);

    let trace_n: usize = args.get(3).and_then(|a| a.parse().ok()).unwrap_or(6);
    let cat = enumerate_shadows(max_n.max(5).max(trace_n));
    let reduced: Vec<Shadow> = (3..=5)
        .flat_map(|n| cat.stratum(n).values().filter(|e| e.reduced).map(|e| e.rep.clone()))
        .collect();
    let mut models: Vec<Shadow> = (1..=max_n).flat_map(|n| cat.stratum(n).values().map(|e| e.rep.clone())).collect();
    // shadows met while simplifying reduced inputs, largest first
    let mut seen: HashSet<CanonicalCode> = models.iter().map(canonical_code).collect();
    for n in (max_n + 1..=trace_n).rev() {
        for e in cat.stratum(n).values().filter(|e| e.reduced) {
            let trace = normalize_tail(&simplify_to_trivial(&e.rep, 2).expect("simplifies"));
            for s in &trace.shadows {
                if seen.insert(canonical_code(s)) {
                    models.push(s.clone());
                }
            }
        }
    }

    let mut lib: Vec<MacroTemplate> = Vec::new();
    let t = Instant::now();
    synthesize_b_expand(&reduced, &mut lib, bound).expect("B-expand");
    synthesize_c_create(&reduced, &mut lib, bound).expect("C-create");
    lib.push(synthesize_csum_swap(0, bound).expect("csum-swap"));
    let (cases, missed) = synthesize_cases(&models, &mut lib, bound).expect("case macros");
    println!("{} templates from {cases} cases in {:?}", lib.len(), t.elapsed());
    for (kind, model) in &missed {
        println!("not found within bound {bound}: {kind} on {model}");
    }

    std::fs::create_dir_all(&out).expect("output directory");
    for m in &lib {
        let report = verify_macro(m).expect("fresh template verifies");
        let path = out.join(format!("{}.macro", m.name));
        let mut text = format!("# {} steps, crossings {:?}\n", m.steps.len(), report.trace.iter().map(|x| x.0).collect::<Vec<_>>());
        text.push_str(&emit_macro(m));
        std::fs::write(&path, text).expect("write fixture");
        println!("{:<14} {:>2} steps  delta {:+}", m.name, m.steps.len(), m.delta());
    }
}
