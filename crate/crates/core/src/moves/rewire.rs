//! Mutable pairing used while a move is being built.

use crate::shadow::{opposite, vertex, Dart, Shadow, ShadowError};

const UNSET: Dart = usize::MAX;

pub(crate) struct Rewire {
    pub alpha: Vec<Dart>,
}

impl Rewire {
    pub fn from(s: &Shadow) -> Self {
        Rewire {
            alpha: s.alpha_slice().to_vec(),
        }
    }

    pub fn crossings(&self) -> usize {
        self.alpha.len() / 4
    }

    /// Appends a crossing with unset darts and returns its index.
    pub fn add_crossing(&mut self) -> usize {
        let k = self.crossings();
        self.alpha.extend([UNSET; 4]);
        k
    }

    pub fn link(&mut self, a: Dart, b: Dart) {
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    /// Moves the edge end at `old` to `new`. Calling this on both ends of a
    /// loop in sequence keeps the loop intact.
    pub fn reattach(&mut self, old: Dart, new: Dart) {
        let p = self.alpha[old];
        self.alpha[old] = UNSET;
        self.link(new, p);
    }

    /// Moves every dart of crossing `from` to crossing `to` (same positions).
    pub fn move_crossing(&mut self, from: usize, to: usize) {
        for i in 0..4 {
            self.reattach(4 * from + i, 4 * to + i);
        }
    }

    pub fn truncate(&mut self, crossings: usize) {
        self.alpha.truncate(4 * crossings);
    }

    /// Removes the marked crossings, joining each external dart to the end
    /// reached by walking through removed crossings with `through`.
    /// Returns the number of closed loops that were left without crossings.
    pub fn dissolve(&mut self, removed: &[bool], through: impl Fn(Dart) -> Dart) -> usize {
        let total = self.alpha.len();
        let mut used = vec![false; total];
        for d in 0..total {
            if removed[vertex(d)] || used[d] {
                continue;
            }
            let a = self.alpha[d];
            if !removed[vertex(a)] {
                continue;
            }
            let mut cur = a;
            let end = loop {
                used[cur] = true;
                let b = through(cur);
                used[b] = true;
                let q = self.alpha[b];
                if !removed[vertex(q)] {
                    break q;
                }
                cur = q;
            };
            used[d] = true;
            used[end] = true;
            self.alpha[d] = end;
            self.alpha[end] = d;
        }
        // loops that never touch a kept crossing
        let mut loops = 0;
        for d in 0..total {
            if !removed[vertex(d)] || used[d] {
                continue;
            }
            loops += 1;
            let mut cur = d;
            while !used[cur] {
                used[cur] = true;
                let b = through(cur);
                used[b] = true;
                cur = self.alpha[b];
            }
        }
        self.compact(removed);
        loops
    }

    /// Drops removed crossings and shifts later ones down.
    pub fn compact(&mut self, removed: &[bool]) {
        let n = self.crossings();
        let mut new_index = vec![usize::MAX; n];
        let mut next = 0;
        for k in 0..n {
            if !removed[k] {
                new_index[k] = next;
                next += 1;
            }
        }
        let map = |d: Dart| 4 * new_index[vertex(d)] + (d & 3);
        let mut alpha = vec![UNSET; 4 * next];
        for d in 0..4 * n {
            if removed[vertex(d)] {
                continue;
            }
            alpha[map(d)] = map(self.alpha[d]);
        }
        self.alpha = alpha;
    }

    pub fn finish(self) -> Result<Shadow, ShadowError> {
        let n = self.crossings();
        Shadow::validate(n, self.alpha)
    }
}

/// Straight-ahead walk used by [`Rewire::dissolve`] for Reidemeister moves.
pub(crate) fn straight(d: Dart) -> Dart {
    opposite(d)
}
