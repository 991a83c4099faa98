//! Reidemeister simplification of a shadow to the trivial projection.
//!
//! ```text
//! cargo run --example simplify -- [slack]
//! ```

use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::pipeline::{normalize_tail, simplify_to_trivial};

fn main() {
    let slack: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let cat = enumerate_shadows(5);
    for n in 1..=5 {
        let mut longest = 0;
        let mut peak_over = 0;
        for e in cat.stratum(n).values() {
            let t = normalize_tail(&simplify_to_trivial(&e.rep, slack).expect("simplifies"));
            assert!(t.check());
            longest = longest.max(t.steps.len());
            peak_over = peak_over.max(t.peak() - n);
        }
        println!("n={n}: {} shadows, longest trace {longest}, crossings added at most {peak_over}", cat.stratum(n).len());
    }
    let e = cat.stratum(5).values().find(|e| e.reduced).unwrap();
    let t = normalize_tail(&simplify_to_trivial(&e.rep, slack).unwrap());
    for (st, s) in t.steps.iter().zip(&t.shadows[1..]) {
        println!("  {st} -> {} crossings", s.crossings());
    }
}
