//! The catalog of shadows by crossing count, checked against the oracle.
//!
//! ```text
//! cargo run --release --example enumerate -- [max_n] [out_dir]
//! ```

use std::time::Instant;

use knot_shadow::enumerate::{enumerate_oracle, enumerate_shadows};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(5);
    let t = Instant::now();
    let cat = enumerate_shadows(max_n);
    println!("A-closure in {:?}", t.elapsed());
    let t = Instant::now();
    let oracle = enumerate_oracle(max_n);
    println!("oracle in {:?}", t.elapsed());
    for n in 0..=max_n {
        let same = cat.stratum(n).keys().eq(oracle.stratum(n).keys());
        println!(
            "n={n}: {:>5} shadows, {:>3} reduced, oracle agrees {same}",
            cat.stratum(n).len(),
            cat.reduced_counts()[n]
        );
    }
    if let Some(dir) = args.get(1) {
        cat.write_files(dir.as_ref()).expect("write catalog");
        println!("wrote {dir}");
    }
}
