//! Parsing, validating and re-emitting shadows.
//!
//! ```text
//! cargo run --example codes -- "1+ 2+ 3+ 1+ 2+ 3+"
//! ```

use knot_shadow::{canonical_code, emit_gauss, emit_mapcode, parse_gauss, parse_mapcode};

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "1+ 2+ 3+ 1+ 2+ 3+".into());
    let s = match parse_gauss(&format!("gauss: {word}")) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            std::process::exit(1);
        }
    };
    println!("crossings  {}", s.crossings());
    println!("mapcode    {}", emit_mapcode(&s));
    println!("gauss      {}", emit_gauss(&s));
    println!("canonical  {}", canonical_code(&s));
    println!("reduced    {}", s.is_reduced());
    for f in s.faces() {
        println!("face {} degree {} darts {:?}", f.id, f.degree(), f.boundary);
    }
    let back = parse_mapcode(&emit_mapcode(&s)).expect("round trip");
    assert_eq!(back, s);
}
