//! The shadow data model.
//!
//! A shadow with `n` crossings is stored as a fixed-point-free involution
//! `alpha` on the darts `0..4n`. The rotation is implicit: crossing `k` owns
//! darts `4k..4k+3` in counterclockwise order, so `sigma(4k+i) = 4k+(i+1)%4`.
//!
//! Derived permutations:
//!
//! * `phi = sigma . alpha` enumerates faces. The dart `e` labels the corner
//!   between `sigma^-1(e)` and `e`, and the face cycle through `e` keeps the
//!   face on the right-hand side.
//! * `tau = alpha . sigma^2` follows the curve straight ahead through each
//!   crossing. A knot shadow has exactly two `tau` cycles (one per direction).

use std::fmt;

use thiserror::Error;

/// A dart (edge end) index.
pub type Dart = usize;

/// Crossing that owns a dart.
#[inline]
pub fn vertex(d: Dart) -> usize {
    d / 4
}

/// Counterclockwise successor of a dart around its crossing.
#[inline]
pub fn sigma(d: Dart) -> Dart {
    (d & !3) | ((d + 1) & 3)
}

/// Clockwise successor of a dart around its crossing.
#[inline]
pub fn sigma_inv(d: Dart) -> Dart {
    (d & !3) | ((d + 3) & 3)
}

/// The dart straight across the crossing.
#[inline]
pub fn opposite(d: Dart) -> Dart {
    (d & !3) | ((d + 2) & 3)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("alpha has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("alpha is not an involution at dart {0}")]
    NotInvolution(Dart),
    #[error("dart {0} is fixed by alpha")]
    FixedPointDart(Dart),
    #[error("the map is disconnected")]
    Disconnected,
    #[error("straight-ahead traversal has {0} cycles, expected 2")]
    MultiCircuit(usize),
    #[error("face count is {faces}, expected {expected}")]
    NotSphere { faces: usize, expected: usize },
}

/// A knot projection on the sphere.
///
/// The value with `n == 0` is the trivial projection.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shadow {
    alpha: Vec<Dart>,
}

/// A face: one cycle of `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRef {
    pub id: usize,
    pub boundary: Vec<Dart>,
}

impl FaceRef {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }
}

impl Shadow {
    /// The trivial projection.
    pub fn trivial() -> Self {
        Shadow { alpha: Vec::new() }
    }

    /// Validates raw pairing data. Checks run in the order involution,
    /// connectivity, single circuit, sphere; the first failure is reported.
    pub fn validate(n: usize, alpha: Vec<Dart>) -> Result<Self, ShadowError> {
        if alpha.len() != 4 * n {
            return Err(ShadowError::WrongLength {
                expected: 4 * n,
                got: alpha.len(),
            });
        }
        for (d, &a) in alpha.iter().enumerate() {
            if a == d {
                return Err(ShadowError::FixedPointDart(d));
            }
            if a >= alpha.len() || alpha[a] != d {
                return Err(ShadowError::NotInvolution(d));
            }
        }
        let s = Shadow { alpha };
        if n == 0 {
            return Ok(s);
        }
        if !s.is_connected() {
            return Err(ShadowError::Disconnected);
        }
        let circuits = s.tau_cycles().len();
        if circuits != 2 {
            return Err(ShadowError::MultiCircuit(circuits));
        }
        let faces = s.face_count();
        if faces != n + 2 {
            return Err(ShadowError::NotSphere {
                faces,
                expected: n + 2,
            });
        }
        Ok(s)
    }

    /// Builds a shadow from a pairing that the caller guarantees is valid.
    pub(crate) fn from_alpha_unchecked(alpha: Vec<Dart>) -> Self {
        debug_assert!(Shadow::validate(alpha.len() / 4, alpha.clone()).is_ok());
        Shadow { alpha }
    }

    /// Wraps a pairing without any checks; for intermediate computations.
    pub(crate) fn from_raw(alpha: Vec<Dart>) -> Self {
        Shadow { alpha }
    }

    pub fn crossings(&self) -> usize {
        self.alpha.len() / 4
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn alpha_slice(&self) -> &[Dart] {
        &self.alpha
    }

    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        sigma(self.alpha[d])
    }

    #[inline]
    pub fn tau(&self, d: Dart) -> Dart {
        self.alpha[opposite(d)]
    }

    fn is_connected(&self) -> bool {
        let n = self.crossings();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for i in 0..4 {
                let w = vertex(self.alpha[4 * v + i]);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn cycles_of(&self, f: impl Fn(Dart) -> Dart) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.alpha.len()];
        let mut out = Vec::new();
        for start in 0..self.alpha.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cyc.push(d);
                d = f(d);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycles of the straight-ahead permutation.
    pub fn tau_cycles(&self) -> Vec<Vec<Dart>> {
        self.cycles_of(|d| self.tau(d))
    }

    fn face_count(&self) -> usize {
        self.cycles_of(|d| self.phi(d)).len()
    }

    /// Faces of the shadow. The trivial projection has two faces with empty
    /// boundaries (the two sides of the circle).
    pub fn faces(&self) -> Vec<FaceRef> {
        if self.is_trivial() {
            return vec![
                FaceRef { id: 0, boundary: Vec::new() },
                FaceRef { id: 1, boundary: Vec::new() },
            ];
        }
        self.cycles_of(|d| self.phi(d))
            .into_iter()
            .enumerate()
            .map(|(id, boundary)| FaceRef { id, boundary })
            .collect()
    }

    /// Face index of every dart, numbered as in [`Shadow::faces`].
    pub fn face_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.alpha.len()];
        let mut next = 0;
        for start in 0..self.alpha.len() {
            if idx[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while idx[d] == usize::MAX {
                idx[d] = next;
                d = self.phi(d);
            }
            next += 1;
        }
        idx
    }

    /// Number of distinct faces among the four corners of crossing `k`.
    pub fn corner_face_count(&self, k: usize, faces: &[usize]) -> usize {
        let mut f = [faces[4 * k], faces[4 * k + 1], faces[4 * k + 2], faces[4 * k + 3]];
        f.sort_unstable();
        1 + f.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Crossings whose four corners meet only three distinct faces.
    pub fn reducible_crossings(&self) -> Vec<usize> {
        let faces = self.face_index();
        (0..self.crossings())
            .filter(|&k| self.corner_face_count(k, &faces) < 4)
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        let faces = self.face_index();
        (0..self.crossings()).all(|k| self.corner_face_count(k, &faces) == 4)
    }

    /// Marks the darts the curve leaves a crossing through, for the direction
    /// of travel that leaves crossing 0 through dart 0.
    pub fn departures(&self) -> Vec<bool> {
        let mut out = vec![false; self.alpha.len()];
        if self.is_trivial() {
            return out;
        }
        let mut d = 0;
        loop {
            out[d] = true;
            d = opposite(self.alpha[d]);
            if d == 0 {
                break;
            }
        }
        out
    }

    /// The mirror image: reverses the rotation at every crossing.
    pub fn mirror(&self) -> Shadow {
        let m = |d: Dart| (d & !3) | ((4 - (d & 3)) & 3);
        let mut alpha = vec![0; self.alpha.len()];
        for d in 0..self.alpha.len() {
            alpha[m(d)] = m(self.alpha[d]);
        }
        Shadow { alpha }
    }

    /// Applies a dart relabeling `perm` (old dart -> new dart). The
    /// permutation must map each crossing's darts onto one crossing,
    /// preserving cyclic order.
    pub fn relabel(&self, perm: &[Dart]) -> Shadow {
        let mut alpha = vec![0; self.alpha.len()];
        for d in 0..self.alpha.len() {
            alpha[perm[d]] = perm[self.alpha[d]];
        }
        Shadow { alpha }
    }
}

impl fmt::Debug for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::codes::emit_mapcode(self))
    }
}

impl fmt::Display for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::codes::emit_mapcode(self))
    }
}
