#![allow(dead_code)]

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use knot_shadow::moves::{splice_anchors, splice_half};
use knot_shadow::Shadow;

/// A shadow grown from `O` by splicing at the chosen anchors.
pub fn grown(choices: &[usize]) -> Shadow {
    let mut s = Shadow::trivial();
    for &c in choices {
        let anchors = splice_anchors(&s);
        let (d1, d2) = anchors[c % anchors.len()];
        s = splice_half(&s, d1, d2).unwrap();
    }
    s
}

pub fn shadows(max_n: usize) -> impl Strategy<Value = Shadow> {
    proptest::collection::vec(any::<usize>(), 1..=max_n).prop_map(|c| grown(&c))
}

/// A random relabeling that permutes crossings and rotates each one.
pub fn random_relabel(s: &Shadow, seed: u64) -> Shadow {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = s.crossings();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut perm = vec![0; 4 * n];
    for k in 0..n {
        let rot: usize = rng.gen_range(0..4);
        for i in 0..4 {
            perm[4 * k + i] = 4 * order[k] + (i + rot) % 4;
        }
    }
    s.relabel(&perm)
}
