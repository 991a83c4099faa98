//! The composite moves `B` and `C` and connected sums.
//!
//! ```text
//! cargo run --example composite_moves
//! ```

use knot_shadow::moves::{apply_b_all, connected_sum, move_b, move_c, move_c_inverse, trefoil_sites};
use knot_shadow::standard::{figure_eight, trefoil};
use knot_shadow::{canonical_code, is_isomorphic};

fn main() {
    let t = trefoil();
    let b = move_b(&t, 0).unwrap();
    println!("B at 0: {} crossings, reduced {}", b.crossings(), b.is_reduced());
    let all = apply_b_all(&t);
    println!("B everywhere: {} crossings, reduced {}", all.crossings(), all.is_reduced());
    println!("B everywhere on the figure-eight is the trefoil: {}", is_isomorphic(&apply_b_all(&figure_eight()), &t));

    let c = move_c(&t, 0).unwrap();
    println!("C at dart 0: {} crossings, reduced {}", c.crossings(), c.is_reduced());
    for (i, site) in trefoil_sites(&c).iter().enumerate() {
        let back = move_c_inverse(&c, site).unwrap();
        println!("C^-1 at site {i} {:?}: back to trefoil {}", site.crossings, canonical_code(&back) == canonical_code(&t));
    }

    let t2 = connected_sum(&t, &t, 0, 0).unwrap();
    let t3 = connected_sum(&t2, &t, 0, 0).unwrap();
    println!("trefoil#trefoil: {} crossings; three-fold sum: {}", t2.crossings(), t3.crossings());
}
