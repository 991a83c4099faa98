//! Graphviz and SVG drawings of shadows.
//!
//! ```text
//! cargo run --example export -- [out_dir]
//! ```

use std::path::PathBuf;

use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::export::svg_mapcode;
use knot_shadow::{emit_mapcode, export_dot, export_svg};

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/drawings".into()));
    std::fs::create_dir_all(&out).expect("output directory");
    let cat = enumerate_shadows(6);
    for n in 3..=6 {
        for (i, e) in cat.stratum(n).values().filter(|e| e.reduced).enumerate() {
            let svg = export_svg(&e.rep);
            assert_eq!(svg_mapcode(&svg), Some(emit_mapcode(&e.rep).as_str()));
            std::fs::write(out.join(format!("reduced-{n}-{i}.svg")), svg).unwrap();
            std::fs::write(out.join(format!("reduced-{n}-{i}.dot")), export_dot(&e.rep)).unwrap();
        }
    }
    println!("drawings in {}", out.display());
}
