//! An algebraic mirror of the breakpoint graph.
//!
//! Every permutation `p` of `{1, ..., n}` has an image under the mapping
//! implemented by [`cycle_image`]: a permutation of `{0, ..., n}` whose
//! disjoint cycles correspond one-to-one (lengths included) to the
//! alternating cycles of the breakpoint graph of `p`.  Since the image is
//! computed purely by group arithmetic while the graph is built by edge
//! chasing, agreement between the two is a strong cross-check, and the
//! image of a block-interchange (a product of two 2-cycles, see
//! [`block_interchange_image`]) explains why one move changes the cycle
//! count by at most 2.
//!
//! Composition convention is right-to-left throughout: `(x · y)` applies
//! `y` first.

use std::fmt;

use serde::Serialize;

use crate::bounds;
use crate::error::Error;
use crate::graph::{self, BreakpointGraph};
use crate::perm::{BlockInterchange, Permutation};

/// A permutation of `{0, ..., n}`, the codomain of [`cycle_image`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedPermutation {
    // map[x] = image of x; domain {0, ..., n} = {0, ..., map.len()-1}.
    map: Vec<usize>,
}

impl ExtendedPermutation {
    /// Identity on `{0, ..., n}`.
    pub fn identity(n: usize) -> ExtendedPermutation {
        ExtendedPermutation {
            map: (0..=n).collect(),
        }
    }

    /// Builds from an image table over `{0, ..., n}`, validating bijectivity.
    pub fn from_map(map: Vec<usize>) -> Result<ExtendedPermutation, Error> {
        if map.is_empty() {
            return Err(Error::Empty);
        }
        let len = map.len();
        let mut seen = vec![false; len];
        for &v in &map {
            if v >= len {
                return Err(Error::ValueOutOfRange {
                    value: v,
                    n: len - 1,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(ExtendedPermutation { map })
    }

    /// Builds the single cycle `a_0 -> a_1 -> ... -> a_k -> a_0` on
    /// `{0, ..., n}`; elements not listed are fixed.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> ExtendedPermutation {
        let mut map: Vec<usize> = (0..=n).collect();
        for w in 0..cycle.len() {
            map[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        ExtendedPermutation { map }
    }

    /// Largest domain element `n`.
    pub fn n(&self) -> usize {
        self.map.len() - 1
    }

    pub fn image_of(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &v)| v == x)
    }

    /// Right-to-left composition: `(self · other)(x) = self(other(x))`.
    pub fn compose(&self, other: &ExtendedPermutation) -> ExtendedPermutation {
        assert_eq!(self.n(), other.n(), "cannot compose over different domains");
        ExtendedPermutation {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> ExtendedPermutation {
        let mut inv = vec![0; self.map.len()];
        for (x, &v) in self.map.iter().enumerate() {
            inv[v] = x;
        }
        ExtendedPermutation { map: inv }
    }

    /// Conjugation `s · self · s^{-1}`.
    pub fn conjugate(&self, s: &ExtendedPermutation) -> ExtendedPermutation {
        s.compose(self).compose(&s.inverse())
    }

    /// Lengths of all disjoint cycles including fixed points, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let len = self.map.len();
        let mut seen = vec![false; len];
        let mut lengths = Vec::new();
        for start in 0..len {
            if seen[start] {
                continue;
            }
            let mut count = 0;
            let mut x = start;
            loop {
                seen[x] = true;
                count += 1;
                x = self.map[x];
                if x == start {
                    break;
                }
            }
            lengths.push(count);
        }
        lengths.sort_unstable();
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.map
            .iter()
            .enumerate()
            .filter(|&(x, &v)| v == x)
            .count()
    }

    /// A permutation is even iff it has an even number of even-length cycles.
    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Display for ExtendedPermutation {
    /// Cycle notation over `{0, ..., n}`, fixed points elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.map.len();
        let mut seen = vec![false; len];
        let mut wrote = false;
        for start in 0..len {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            loop {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.map[x];
                if x == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The image of `p`: the composition `(0,1,...,n) · (0, p(n), ..., p(1))`
/// on `{0, ..., n}` (right cycle applied first).
///
/// Its disjoint cycles mirror the alternating cycles of the breakpoint
/// graph of `p`, length for length; in particular fixed points correspond
/// to trivial cycles, and the image is always even.
pub fn cycle_image(p: &Permutation) -> ExtendedPermutation {
    let n = p.n();
    let rotate: Vec<usize> = (0..=n).collect();
    let mut reversed = Vec::with_capacity(n + 1);
    reversed.push(0);
    for m in (1..=n).rev() {
        reversed.push(p.image(m));
    }
    ExtendedPermutation::from_cycle(n, &rotate)
        .compose(&ExtendedPermutation::from_cycle(n, &reversed))
}

/// Embeds `p` into the permutations of `{0, ..., n}`, fixing 0.
pub fn embed(p: &Permutation) -> ExtendedPermutation {
    let mut map = Vec::with_capacity(p.n() + 1);
    map.push(0);
    map.extend((1..=p.n()).map(|x| p.image(x)));
    ExtendedPermutation { map }
}

/// The image of a block-interchange under [`cycle_image`]'s composition
/// rule: the product of the two 2-cycles `(j, l)(i, k)` on `{0, ..., n}`,
/// where the symbol `n+1` wraps to `0`.
///
/// For a transposition (`j = k`) the shared symbol makes this a 3-cycle;
/// otherwise the two 2-cycles are disjoint.  Either way the image moves at
/// most 4 symbols, which is why a single move changes the graph's cycle
/// count by at most 2.
pub fn block_interchange_image(b: &BlockInterchange, n: usize) -> ExtendedPermutation {
    assert!(b.fits(n), "move {b} does not fit size {n}");
    let wrap = |x: usize| if x == n + 1 { 0 } else { x };
    let first = ExtendedPermutation::from_cycle(n, &[b.i(), b.k()]);
    let second = ExtendedPermutation::from_cycle(n, &[b.j(), wrap(b.l())]);
    second.compose(&first)
}

/// How one move changes the graph statistics of a permutation.
///
/// Every field is `after - before`.  Construction asserts the arithmetic
/// identity `potential = cycles/2 - trivial_cycles - first_penalty`, which
/// ties the potential's definition to its parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoveDeltas {
    /// Change in the number of alternating cycles.
    pub cycles: i64,
    /// Change in the number of trivial cycles.
    pub trivial_cycles: i64,
    /// Change in the first-element penalty (1 when `p(1) != 1`, else 0).
    pub first_penalty: i64,
    /// Change in the sorting potential.
    pub potential: i64,
    /// Change in the breakpoint count.
    pub breakpoints: i64,
}

/// Computes the deltas realised by applying `b` to `p`, brute force from
/// both breakpoint graphs.
pub fn move_deltas(p: &Permutation, b: &BlockInterchange) -> MoveDeltas {
    let q = p.apply(b);
    let gp = BreakpointGraph::new(p);
    let gq = BreakpointGraph::new(&q);
    let (cp, cq) = (gp.cycle_counts(), gq.cycle_counts());

    let cycles = cq.total as i64 - cp.total as i64;
    let trivial_cycles = cq.trivial as i64 - cp.trivial as i64;
    let first_penalty = i64::from(!q.fixes_first()) - i64::from(!p.fixes_first());
    let potential = bounds::potential_of(&gq) - bounds::potential_of(&gp);
    let breakpoints = graph::breakpoints(&q) as i64 - graph::breakpoints(p) as i64;

    assert!(cycles % 2 == 0, "cycle delta must be even, got {cycles}");
    assert_eq!(
        potential,
        cycles / 2 - trivial_cycles - first_penalty,
        "potential delta identity violated for p={p} b={b}"
    );

    MoveDeltas {
        cycles,
        trivial_cycles,
        first_penalty,
        potential,
        breakpoints,
    }
}
