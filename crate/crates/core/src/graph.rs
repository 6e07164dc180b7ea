//! The breakpoint graph of a permutation and its alternating-cycle
//! decomposition.
//!
//! For a permutation `p` of size `n`, each element `v` is doubled into the
//! pair `(2v-1, 2v)` and the sequence is framed by `0` and `2n+1`, giving the
//! extended sequence `p'` of length `2n+2` (positions `0..=2n+1`):
//!
//! ```text
//! p'[0] = 0,   (p'[2i-1], p'[2i]) = (2 p(i) - 1, 2 p(i)),   p'[2n+1] = 2n+1
//! ```
//!
//! *Black* edges join consecutive positions `(2m-2, 2m-1)` for
//! `m = 1..=n+1`; *grey* edges join the values `2v` and `2v+1` for
//! `v = 0..=n`.  Every vertex has exactly one black and one grey edge, so
//! the graph decomposes uniquely into alternating cycles.  The cycle length
//! is its number of black edges; a 1-cycle ("trivial") corresponds exactly
//! to an adjacency `p(m) = p(m-1) + 1` (with `p(0) = 0` and `p(n+1) = n+1`
//! implied).  The cycle through vertex `0` is called the *leftmost* cycle.

use std::fmt::Write as _;

use crate::perm::Permutation;

/// Breakpoint graph with its cached cycle decomposition.
///
/// The decomposition is computed eagerly at construction; a graph is an
/// immutable snapshot of one permutation.
#[derive(Debug, Clone)]
pub struct BreakpointGraph {
    n: usize,
    extended: Vec<usize>,
    position: Vec<usize>,
    cycles: Vec<AlternatingCycle>,
    cycle_of_black: Vec<usize>,
    leftmost: usize,
}

/// One alternating cycle, identified by its black-edge indices (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    black_edges: Vec<usize>,
}

impl AlternatingCycle {
    /// Black-edge indices on this cycle, 1-based and ascending.
    pub fn black_edges(&self) -> &[usize] {
        &self.black_edges
    }

    /// Cycle length = number of black edges.
    pub fn len(&self) -> usize {
        self.black_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.black_edges.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.black_edges.len() == 1
    }

    /// Whether black edge `m` lies strictly between the cycle's extreme
    /// black edges (`min < m < max`); `m` itself need not be on the cycle.
    pub fn spans_black_edge(&self, m: usize) -> bool {
        let lo = *self.black_edges.first().unwrap();
        let hi = *self.black_edges.last().unwrap();
        lo < m && m < hi
    }
}

/// Counts of cycles by class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleCounts {
    /// Total number of alternating cycles.
    pub total: usize,
    /// Number of trivial (length-1) cycles.
    pub trivial: usize,
    /// Number of 2-cycles, excluding the leftmost cycle even when it has
    /// length 2.
    pub two_excl_leftmost: usize,
}

/// A grey edge given by the positions of its two endpoints in the extended
/// sequence, `0 <= lo < hi <= 2n+1`, together with the value pair it joins
/// (`{2*value, 2*value + 1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreyEdgeSpan {
    value: usize,
    lo: usize,
    hi: usize,
}

impl GreyEdgeSpan {
    /// `v` for the grey edge joining values `2v` and `2v+1`.
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Strict interleaving of spans: one edge has exactly one endpoint
    /// strictly inside the other's span.  Nested or disjoint spans do not
    /// intersect.
    pub fn intersects(&self, other: &GreyEdgeSpan) -> bool {
        (self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi)
    }
}

/// Grouping of the nontrivial cycles into connected components of the
/// grey-edge intersection relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStructure {
    components: Vec<Vec<usize>>,
}

impl ComponentStructure {
    /// Components as sorted lists of cycle ids, ordered by smallest member.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }
}

impl BreakpointGraph {
    pub fn new(p: &Permutation) -> BreakpointGraph {
        let n = p.n();
        let mut extended = Vec::with_capacity(2 * n + 2);
        extended.push(0);
        for i in 1..=n {
            let v = p.image(i);
            extended.push(2 * v - 1);
            extended.push(2 * v);
        }
        extended.push(2 * n + 1);

        let mut position = vec![0; 2 * n + 2];
        for (pos, &v) in extended.iter().enumerate() {
            position[v] = pos;
        }

        // Walk each cycle: from black edge m exit through the odd-position
        // endpoint p'[2m-1] (always an odd value), follow its grey edge to
        // the value one less (always at an even position 2m'-2) and enter
        // black edge m'.
        let blacks = n + 1;
        let mut cycle_of_black = vec![usize::MAX; blacks];
        let mut cycles = Vec::new();
        for start in 1..=blacks {
            if cycle_of_black[start - 1] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut members = Vec::new();
            let mut m = start;
            loop {
                cycle_of_black[m - 1] = id;
                members.push(m);
                let odd_value = extended[2 * m - 1];
                debug_assert!(odd_value % 2 == 1);
                let partner_pos = position[odd_value - 1];
                debug_assert!(partner_pos.is_multiple_of(2));
                m = partner_pos / 2 + 1;
                if m == start {
                    break;
                }
            }
            members.sort_unstable();
            cycles.push(AlternatingCycle {
                black_edges: members,
            });
        }
        let leftmost = cycle_of_black[0];

        BreakpointGraph {
            n,
            extended,
            position,
            cycles,
            cycle_of_black,
            leftmost,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The extended sequence `p'`, indexed by position `0..=2n+1`.
    pub fn extended_sequence(&self) -> &[usize] {
        &self.extended
    }

    /// Position of a value in the extended sequence.
    pub fn position_of_value(&self, value: usize) -> usize {
        assert!(value <= 2 * self.n + 1, "value {value} out of range");
        self.position[value]
    }

    pub fn black_edge_count(&self) -> usize {
        self.n + 1
    }

    /// Endpoint values of black edge `m` (1-based), i.e.
    /// `(p'[2m-2], p'[2m-1])`.
    pub fn black_edge(&self, m: usize) -> (usize, usize) {
        assert!(m >= 1 && m <= self.n + 1, "black edge {m} out of range");
        (self.extended[2 * m - 2], self.extended[2 * m - 1])
    }

    /// Whether black edge `m` forms a trivial cycle, equivalently whether
    /// the permutation has the adjacency `p(m) = p(m-1) + 1`.
    pub fn black_edge_is_trivial(&self, m: usize) -> bool {
        self.cycles[self.cycle_of_black_edge(m)].is_trivial()
    }

    /// The cycles in discovery order (by smallest black-edge index).
    pub fn cycles(&self) -> &[AlternatingCycle] {
        &self.cycles
    }

    /// Id of the cycle containing black edge `m` (1-based).
    pub fn cycle_of_black_edge(&self, m: usize) -> usize {
        assert!(m >= 1 && m <= self.n + 1, "black edge {m} out of range");
        self.cycle_of_black[m - 1]
    }

    /// Id of the cycle containing vertex 0.
    pub fn leftmost_cycle_id(&self) -> usize {
        self.leftmost
    }

    pub fn cycle_counts(&self) -> CycleCounts {
        let mut counts = CycleCounts {
            total: self.cycles.len(),
            trivial: 0,
            two_excl_leftmost: 0,
        };
        for (id, c) in self.cycles.iter().enumerate() {
            if c.is_trivial() {
                counts.trivial += 1;
            }
            if c.len() == 2 && id != self.leftmost {
                counts.two_excl_leftmost += 1;
            }
        }
        counts
    }

    /// The span of the grey edge joining values `2v` and `2v+1`,
    /// for `v = 0..=n`.
    pub fn grey_edge_span(&self, v: usize) -> GreyEdgeSpan {
        assert!(v <= self.n, "grey edge value {v} out of range");
        let a = self.position[2 * v];
        let b = self.position[2 * v + 1];
        GreyEdgeSpan {
            value: v,
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// Id of the cycle the grey edge `v` lies on.
    pub fn cycle_of_grey_edge(&self, v: usize) -> usize {
        assert!(v <= self.n, "grey edge value {v} out of range");
        // The odd value 2v+1 sits at an odd position 2m-1; the edge belongs
        // to black edge m's cycle.
        let pos = self.position[2 * v + 1];
        debug_assert!(pos % 2 == 1);
        self.cycle_of_black[pos.div_ceil(2) - 1]
    }

    /// The grey edge incident to `p'[1]`, the doubled left end of the first
    /// element: the edge of value `p(1) - 1`, spanning position 1 and the
    /// position of the value `2(p(1) - 1)`.
    ///
    /// Exposed unconditionally; when `p(1) = 1` this is the edge `{0,1}` on
    /// a trivial cycle and is of no use for move selection, so callers that
    /// need a nontrivial first edge must check `p(1) != 1` themselves.
    pub fn first_grey_edge(&self) -> GreyEdgeSpan {
        let first = self.extended[1];
        debug_assert!(first % 2 == 1);
        self.grey_edge_span((first - 1) / 2)
    }

    /// Some grey edge intersecting `e`, scanning values in increasing
    /// order, or `None` if no edge intersects `e`.
    ///
    /// Whenever `e` lies on a nontrivial cycle an intersecting edge exists,
    /// so `None` signals a violated precondition.
    pub fn find_intersecting_grey_edge(&self, e: &GreyEdgeSpan) -> Option<GreyEdgeSpan> {
        for v in 0..=self.n {
            if v == e.value {
                continue;
            }
            let s = self.grey_edge_span(v);
            if s.intersects(e) {
                return Some(s);
            }
        }
        None
    }

    /// Connected components of the nontrivial cycles under pairwise
    /// grey-edge intersection.
    pub fn components(&self) -> ComponentStructure {
        let mut uf = UnionFind::new(self.cycles.len());
        for u in 0..=self.n {
            let su = self.grey_edge_span(u);
            for v in (u + 1)..=self.n {
                let sv = self.grey_edge_span(v);
                if su.intersects(&sv) {
                    uf.union(self.cycle_of_grey_edge(u), self.cycle_of_grey_edge(v));
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.cycles.len()];
        for (id, c) in self.cycles.iter().enumerate() {
            if !c.is_trivial() {
                groups[uf.find(id)].push(id);
            }
        }
        let mut components: Vec<Vec<usize>> =
            groups.into_iter().filter(|g| !g.is_empty()).collect();
        components.sort_by_key(|g| g[0]);
        ComponentStructure { components }
    }

    /// Number of components of nontrivial cycles.
    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    /// Deterministic text rendering of the cycle decomposition: one line
    /// per cycle ordered by smallest black-edge index, with leftmost and
    /// trivial cycles flagged.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (id, c) in self.cycles.iter().enumerate() {
            out.push_str("cycle:");
            for m in c.black_edges() {
                let _ = write!(out, " b{m}");
            }
            if id == self.leftmost {
                out.push_str(" (leftmost)");
            }
            if c.is_trivial() {
                out.push_str(" (trivial)");
            }
            out.push('\n');
        }
        out
    }
}

/// Number of breakpoints of `p` over the padded sequence
/// `0 p(1) ... p(n) n+1`: pairs of consecutive entries that are not an
/// ascent by exactly 1, with the leading pair `(0, p(1))` always counted.
pub fn breakpoints(p: &Permutation) -> usize {
    let n = p.n();
    let mut count = 1;
    for i in 1..=n {
        let next = if i == n { n + 1 } else { p.image(i + 1) };
        if next != p.image(i) + 1 {
            count += 1;
        }
    }
    count
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> UnionFind {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins, keeping component ids stable.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
