//! A-move routes from reduced shadows to the trefoil, verified by replay.
//!
//! ```text
//! cargo run --release --example to_trefoil -- [max_n]
//! ```

use std::time::Instant;

use knot_shadow::canonical_code;
use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::moves::connected_sum;
use knot_shadow::pipeline::{to_trefoil_with, verify_sequence, PipelineOptions};
use knot_shadow::standard::trefoil;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let cat = enumerate_shadows(max_n);
    let t = trefoil();
    let t2 = connected_sum(&t, &t, 0, 0).unwrap();
    let mut inputs: Vec<_> = (3..=max_n)
        .flat_map(|n| cat.stratum(n).values().filter(|e| e.reduced).map(|e| e.rep.clone()))
        .collect();
    inputs.push(t2.clone());
    inputs.push(connected_sum(&t2, &t, 0, 0).unwrap());

    let opts = PipelineOptions::default();
    for p in &inputs {
        let clock = Instant::now();
        match to_trefoil_with(p, &opts) {
            Ok(route) => {
                let report = verify_sequence(&route.sequence, true).expect("route replays through reduced shadows");
                println!(
                    "{} crossings: {} steps, peak {}, searches {}, trefoil {}, {:?}",
                    p.crossings(),
                    route.sequence.steps.len(),
                    report.max_crossings(),
                    route.searches(),
                    canonical_code(&route.sequence.end) == canonical_code(&t),
                    clock.elapsed()
                );
            }
            Err(e) => println!("{} crossings: {}: {e}", p.crossings(), e.name()),
        }
    }
}
