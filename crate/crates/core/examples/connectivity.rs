//! The reduced A-move graph under a crossing cap, with trefoil routes as
//! witnesses for the shadows it leaves disconnected.
//!
//! ```text
//! cargo run --release --example connectivity -- [max_n]
//! ```

use knot_shadow::enumerate::reduced_connectivity;
use knot_shadow::pipeline::{reaches_trefoil, PipelineOptions};
use knot_shadow::Shadow;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let opts = PipelineOptions::default();
    let witness = |s: &Shadow| reaches_trefoil(s, &opts);
    let report = reduced_connectivity(max_n, Some(&witness));
    print!("{report}");
    for c in &report.outside_trefoil {
        println!("outside under cap: {c}");
    }
}
