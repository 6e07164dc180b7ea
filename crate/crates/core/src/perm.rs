//! Permutations and block-interchange moves.
//!
//! A [`Permutation`] of size `n` is written as its image sequence
//! `p(1) p(2) ... p(n)`.  A [`BlockInterchange`] `bi(i,j,k,l)` exchanges the
//! (possibly adjacent, never overlapping) intervals `[i, j-1]` and
//! `[k, l-1]`; when `j = k` the intervals are adjacent and the move is a
//! transposition, and when `i = 1` the move is a *prefix* block-interchange.
//!
//! All values are immutable: operations return new permutations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// A permutation of `{1, ..., n}`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = p(i+1); values are 1-based.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of size `n`.
    ///
    /// Panics if `n == 0`; the empty permutation is rejected everywhere.
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1, "permutation size must be at least 1");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image sequence, validating that it is
    /// a bijection on `{1, ..., n}`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, Error> {
        if images.is_empty() {
            return Err(Error::Empty);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The image `p(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n(), "index {i} out of range");
        self.images[i - 1]
    }

    /// The 1-based position of `value`, i.e. `p^{-1}(value)`.
    pub fn position_of(&self, value: usize) -> usize {
        assert!(
            value >= 1 && value <= self.n(),
            "value {value} out of range"
        );
        self.images.iter().position(|&v| v == value).unwrap() + 1
    }

    /// The raw image sequence; `as_slice()[i]` is `p(i+1)`.
    pub fn as_slice(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Whether the first element is already in place (`p(1) = 1`).
    pub fn fixes_first(&self) -> bool {
        self.images[0] == 1
    }

    /// Functional composition: `(p ∘ q)(i) = p(q(i))`.
    ///
    /// Panics if the sizes differ.
    pub fn compose(&self, q: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            q.n(),
            "cannot compose permutations of different sizes"
        );
        Permutation {
            images: q.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Conjugation `s p s^{-1}`.
    pub fn conjugate(&self, s: &Permutation) -> Permutation {
        s.compose(self).compose(&s.inverse())
    }

    /// Applies a block-interchange, rearranging positions:
    /// the result is `p[1..i-1] p[k..l-1] p[j..k-1] p[i..j-1] p[l..n]`.
    ///
    /// Panics if the move does not fit (`l > n+1`).
    pub fn apply(&self, b: &BlockInterchange) -> Permutation {
        let n = self.n();
        assert!(
            b.l() <= n + 1,
            "move {b} does not fit a permutation of size {n}"
        );
        let v = &self.images;
        // 0-based cut points: segments [0,i) [i,j) [j,k) [k,l) [l,n).
        let (i, j, k, l) = (b.i() - 1, b.j() - 1, b.k() - 1, b.l() - 1);
        let mut out = Vec::with_capacity(n);
        out.extend_from_slice(&v[..i]);
        out.extend_from_slice(&v[k..l]);
        out.extend_from_slice(&v[j..k]);
        out.extend_from_slice(&v[i..j]);
        out.extend_from_slice(&v[l..]);
        Permutation { images: out }
    }

    /// The disjoint-cycle decomposition, fixed points elided.
    pub fn disjoint_cycles(&self) -> CycleNotation {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.images[x - 1];
                if x == start {
                    break;
                }
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        CycleNotation { n, cycles }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses an image sequence, space- or comma-separated: `"7 1 4 5 3 2 6"`
    /// or `"7,1,4,5,3,2,6"`.
    fn from_str(s: &str) -> Result<Permutation, Error> {
        let mut images = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                what: "permutation",
                input: s.to_string(),
            })?;
            images.push(v);
        }
        Permutation::from_images(images)
    }
}

/// A block-interchange `bi(i,j,k,l)` with `1 <= i < j <= k < l`.
///
/// Applied to a permutation of size `n` it requires `l <= n+1` and exchanges
/// the intervals `[i, j-1]` and `[k, l-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockInterchange {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
}

impl BlockInterchange {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Result<BlockInterchange, Error> {
        if i >= 1 && i < j && j <= k && k < l {
            Ok(BlockInterchange { i, j, k, l })
        } else {
            Err(Error::InvalidIndices { i, j, k, l })
        }
    }

    /// Convenience constructor for a prefix move `bi(1,j,k,l)`.
    pub fn prefix(j: usize, k: usize, l: usize) -> Result<BlockInterchange, Error> {
        BlockInterchange::new(1, j, k, l)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn is_prefix(&self) -> bool {
        self.i == 1
    }

    /// Adjacent intervals: the move is an ordinary transposition of blocks.
    pub fn is_transposition(&self) -> bool {
        self.j == self.k
    }

    /// Both intervals have length 1.
    pub fn is_exchange(&self) -> bool {
        self.j == self.i + 1 && self.l == self.k + 1
    }

    pub fn fits(&self, n: usize) -> bool {
        self.l <= n + 1
    }

    /// The permutation `s` of size `n` with `p.apply(b) = p.compose(s)`.
    pub fn permutation(&self, n: usize) -> Permutation {
        Permutation::identity(n).apply(self)
    }

    /// The inverse of a prefix block-interchange, itself a prefix
    /// block-interchange: `bi(1,j,k,l)` is undone by
    /// `bi(1, 1+(l-k), 1+(l-k)+(k-j), l)`.
    ///
    /// Panics if the move is not prefix.
    pub fn prefix_inverse(&self) -> BlockInterchange {
        assert!(
            self.is_prefix(),
            "prefix_inverse requires a prefix move, got {self}"
        );
        let c_len = self.l - self.k;
        let b_len = self.k - self.j;
        BlockInterchange {
            i: 1,
            j: 1 + c_len,
            k: 1 + c_len + b_len,
            l: self.l,
        }
    }
}

impl fmt::Display for BlockInterchange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bi({},{},{},{})", self.i, self.j, self.k, self.l)
    }
}

impl FromStr for BlockInterchange {
    type Err = Error;

    /// Parses the display form `bi(i,j,k,l)`.
    fn from_str(s: &str) -> Result<BlockInterchange, Error> {
        let err = || Error::Parse {
            what: "block-interchange",
            input: s.to_string(),
        };
        let t = s.trim();
        let inner = t
            .strip_prefix("bi(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        if parts.len() != 4 {
            return Err(err());
        }
        BlockInterchange::new(parts[0], parts[1], parts[2], parts[3])
    }
}

/// Disjoint-cycle notation for a permutation, fixed points elided.
///
/// Each cycle is rotated to start at its smallest element and cycles are
/// ordered by that element, so the notation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleNotation {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleNotation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Rebuilds the permutation the notation was derived from.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for cycle in &self.cycles {
            for w in 0..cycle.len() {
                images[cycle[w] - 1] = cycle[(w + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn bi(i: usize, j: usize, k: usize, l: usize) -> BlockInterchange {
        BlockInterchange::new(i, j, k, l).unwrap()
    }

    #[test]
    fn identity_basics() {
        assert_eq!(Permutation::identity(3).as_slice(), &[1, 2, 3]);
        assert_eq!(Permutation::identity(1).as_slice(), &[1]);
        assert!(Permutation::identity(7).is_identity());
    }

    #[test]
    #[should_panic]
    fn identity_rejects_zero() {
        Permutation::identity(0);
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(Permutation::from_images(vec![]), Err(Error::Empty));
        assert_eq!(
            Permutation::from_images(vec![1, 3, 3]),
            Err(Error::DuplicateValue(3))
        );
        assert_eq!(
            Permutation::from_images(vec![1, 4, 2]),
            Err(Error::ValueOutOfRange { value: 4, n: 3 })
        );
        assert_eq!(
            Permutation::from_images(vec![0, 1, 2]),
            Err(Error::ValueOutOfRange { value: 0, n: 3 })
        );
    }

    #[test]
    fn compose_example() {
        assert_eq!(p("2 1 3").compose(&p("3 2 1")), p("3 1 2"));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let q = p("7 1 4 5 3 2 6");
        assert!(q.compose(&q.inverse()).is_identity());
        assert!(q.inverse().compose(&q).is_identity());
    }

    #[test]
    fn inverse_example() {
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
    }

    #[test]
    fn block_interchange_validation() {
        assert!(BlockInterchange::new(1, 2, 2, 3).is_ok());
        assert!(BlockInterchange::new(1, 1, 2, 3).is_err());
        assert!(BlockInterchange::new(2, 2, 3, 4).is_err());
        assert!(BlockInterchange::new(1, 3, 2, 4).is_err());
        assert!(BlockInterchange::new(1, 2, 4, 4).is_err());
        assert!(BlockInterchange::new(0, 1, 2, 3).is_err());
    }

    #[test]
    fn move_classification() {
        assert!(bi(1, 2, 2, 4).is_prefix());
        assert!(bi(1, 2, 2, 4).is_transposition());
        assert!(!bi(2, 3, 4, 5).is_prefix());
        assert!(bi(2, 3, 4, 5).is_exchange());
        assert!(!bi(1, 3, 3, 5).is_exchange());
        assert!(!bi(1, 2, 3, 5).is_transposition());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(p("3 2 1").apply(&bi(1, 2, 3, 4)), p("1 2 3"));
        assert_eq!(Permutation::identity(3).apply(&bi(1, 2, 2, 3)), p("2 1 3"));
        assert_eq!(Permutation::identity(3).apply(&bi(1, 2, 2, 4)), p("2 3 1"));
        assert_eq!(Permutation::identity(3).apply(&bi(1, 3, 3, 4)), p("3 1 2"));
        // Interior move on a larger permutation.
        assert_eq!(p("1 2 3 4 5 6").apply(&bi(2, 4, 5, 7)), p("1 5 6 4 2 3"));
    }

    #[test]
    #[should_panic]
    fn apply_rejects_oversized_move() {
        p("2 1").apply(&bi(1, 2, 3, 4));
    }

    #[test]
    fn apply_agrees_with_compose() {
        // p.apply(b) == p.compose(b.permutation(n)) for every move on n <= 5.
        for n in 1..=5 {
            let perms: Vec<Permutation> = crate::oracle::permutations(n).collect();
            for b in crate::oracle::all_block_interchanges(n) {
                let s = b.permutation(n);
                for q in &perms {
                    assert_eq!(q.apply(&b), q.compose(&s), "q={q} b={b}");
                }
            }
        }
    }

    #[test]
    fn prefix_inverse_examples() {
        assert_eq!(bi(1, 2, 2, 4).prefix_inverse(), bi(1, 3, 3, 4));
        assert_eq!(bi(1, 2, 3, 4).prefix_inverse(), bi(1, 2, 3, 4));
        assert_eq!(bi(1, 3, 3, 4).prefix_inverse(), bi(1, 2, 2, 4));
    }

    #[test]
    fn prefix_inverse_round_trips() {
        for n in 2..=6 {
            let id = Permutation::identity(n);
            for b in crate::oracle::enumerate_generators(n).moves() {
                let undo = b.prefix_inverse();
                assert_eq!(id.apply(b).apply(&undo), id, "b={b}");
                assert_eq!(undo.prefix_inverse(), *b, "b={b}");
            }
        }
    }

    #[test]
    #[should_panic]
    fn prefix_inverse_rejects_non_prefix() {
        bi(2, 3, 3, 4).prefix_inverse();
    }

    #[test]
    fn disjoint_cycles_example() {
        let c = p("7 1 4 5 3 2 6").disjoint_cycles();
        assert_eq!(c.cycles(), &[vec![1, 7, 6, 2], vec![3, 4, 5]]);
        assert_eq!(c.to_string(), "(1,7,6,2)(3,4,5)");
        assert_eq!(c.to_permutation(), p("7 1 4 5 3 2 6"));
    }

    #[test]
    fn disjoint_cycles_identity_has_only_fixed_points() {
        let c = Permutation::identity(4).disjoint_cycles();
        assert!(c.cycles().is_empty());
        assert_eq!(c.to_string(), "()");
        assert!(c.to_permutation().is_identity());
    }

    #[test]
    fn conjugate_example() {
        // (1,2) conjugated by (1,3) is (3,2).
        let q = p("2 1 3");
        let s = p("3 2 1");
        assert_eq!(q.conjugate(&s), p("1 3 2"));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(p("7 1 4 5 3 2 6").to_string(), "7 1 4 5 3 2 6");
        assert_eq!(p("7,1,4,5,3,2,6"), p("7 1 4 5 3 2 6"));
        assert_eq!(p("  3   2 1 "), p("3 2 1"));
        assert!("".parse::<Permutation>().is_err());
        assert!("1 2 x".parse::<Permutation>().is_err());
        assert!("1 2 2".parse::<Permutation>().is_err());
        assert!("0 1 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn parse_and_format_moves() {
        let b = bi(1, 2, 3, 4);
        assert_eq!(b.to_string(), "bi(1,2,3,4)");
        assert_eq!("bi(1,2,3,4)".parse::<BlockInterchange>().unwrap(), b);
        assert_eq!("bi( 1, 2, 3, 4 )".parse::<BlockInterchange>().unwrap(), b);
        assert!("bi(1,2,3)".parse::<BlockInterchange>().is_err());
        assert!("(1,2,3,4)".parse::<BlockInterchange>().is_err());
        assert!("bi(1,3,2,4)".parse::<BlockInterchange>().is_err());
    }
}
