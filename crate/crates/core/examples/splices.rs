//! Half-twisted splices, their inverses and twisted splices.
//!
//! ```text
//! cargo run --example splices
//! ```

use knot_shadow::canonical_code;
use knot_shadow::moves::{smoothing_components, splice_anchors, splice_half, splice_half_inverse, twisted_splice};
use knot_shadow::standard::trefoil;

fn main() {
    let t = trefoil();
    println!("trefoil {}", canonical_code(&t));
    for k in 0..t.crossings() {
        let (a, b) = smoothing_components(&t, k).unwrap();
        println!("crossing {k}: smoothings give {a} and {b} components");
    }
    for (d1, d2) in splice_anchors(&t) {
        let s = splice_half(&t, d1, d2).unwrap();
        let back = splice_half_inverse(&s, s.crossings() - 1).unwrap();
        println!(
            "A d1={d1} d2={d2}: {} crossings, reduced {}, A^-1 returns {}",
            s.crossings(),
            s.is_reduced(),
            canonical_code(&back) == canonical_code(&t)
        );
    }
    let (d1, d2) = splice_anchors(&t)[0];
    for m in 1..=3 {
        let s = twisted_splice(&t, d1, d2, m).unwrap();
        println!("twisted splice m={m}: {} crossings", s.crossings());
    }
}
