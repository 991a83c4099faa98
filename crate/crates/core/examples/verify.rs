//! Writing a route as a seqfile, reading it back and replaying it.
//!
//! ```text
//! cargo run --example verify -- [seqfile]
//! ```

use knot_shadow::moves::move_c;
use knot_shadow::pipeline::{to_trefoil, verify_sequence, MoveSequence};
use knot_shadow::standard::trefoil;

fn main() {
    let seq = match std::env::args().nth(1) {
        Some(path) => MoveSequence::from_seqfile(&std::fs::read_to_string(path).expect("read seqfile")).expect("parse seqfile"),
        None => {
            let text = to_trefoil(&move_c(&trefoil(), 0).unwrap()).unwrap().to_seqfile();
            print!("{text}");
            MoveSequence::from_seqfile(&text).unwrap()
        }
    };
    match verify_sequence(&seq, true) {
        Ok(r) => println!("ok: {} steps, delta {:+}, peak {} crossings", seq.steps.len(), seq.delta(), r.max_crossings()),
        Err(e) => println!("{}: {e}", e.name()),
    }

    let mut broken = seq.clone();
    broken.steps.truncate(broken.steps.len() / 2);
    println!("truncated: {}", verify_sequence(&broken, true).unwrap_err());
}
