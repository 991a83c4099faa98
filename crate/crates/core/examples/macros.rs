//! The built-in macro library: loading, verification and transplanting.
//!
//! ```text
//! cargo run --example macros
//! ```

use std::collections::BTreeMap;

use knot_shadow::macros::library::MacroLibrary;
use knot_shadow::macros::{apply_first, oriented_code, verify_macro};
use knot_shadow::moves::{move_b, move_c};
use knot_shadow::standard::trefoil;

fn main() {
    let lib = MacroLibrary::builtin();
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    for t in &lib.templates {
        verify_macro(t).expect("library templates verify");
        *kinds.entry(t.kind.as_str()).or_default() += 1;
    }
    for (k, c) in &kinds {
        println!("{k:<11} {c}");
    }

    let host = move_c(&trefoil(), 0).unwrap();
    let want = oriented_code(&move_b(&host, 0).unwrap());
    match apply_first(&host, lib.of_kind("B-expand"), &[0], |s| oriented_code(s) == want) {
        Some((t, s, steps)) => println!("{} realizes B at crossing 0 in {} steps ({} crossings)", t.name, steps.len(), s.crossings()),
        None => println!("no B-expand template applies at crossing 0"),
    }
}
