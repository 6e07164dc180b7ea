//! Lower and upper bounds on the prefix block-interchange distance.
//!
//! The central quantity is the *sorting potential*
//!
//! ```text
//! g(p) = (n + 1 + c)/2 - c1 - f
//! ```
//!
//! where `c` counts alternating cycles of the breakpoint graph, `c1` the
//! trivial ones, and `f` is 1 when `p(1) != 1` and 0 otherwise.  The
//! potential is zero exactly on the identity, no move decreases it by more
//! than 2, and the greedy sorter decreases it every move, which yields the
//! sandwich `ceil(g/2) <= distance <= g` and everything else in
//! [`bounds_report`].

use serde::Serialize;

use crate::graph::{breakpoints, BreakpointGraph};
use crate::perm::Permutation;

/// The sorting potential `g(p)`; see the module docs.
pub fn potential(p: &Permutation) -> i64 {
    potential_of(&BreakpointGraph::new(p))
}

/// The potential computed from an already-built graph.
pub fn potential_of(g: &BreakpointGraph) -> i64 {
    let counts = g.cycle_counts();
    let raw = (g.n() + 1 + counts.total) as i64;
    debug_assert!(raw % 2 == 0, "n+1+c is always even");
    let penalty = i64::from(g.extended_sequence()[1] != 1);
    raw / 2 - counts.trivial as i64 - penalty
}

/// The first-element penalty `f(p)`: 1 when `p(1) != 1`, else 0.
pub fn first_penalty(p: &Permutation) -> i64 {
    i64::from(!p.fixes_first())
}

/// The exact *unrestricted* block-interchange distance
/// `(n + 1 - c) / 2`, where any two blocks may be exchanged, not just a
/// prefix.  It lower-bounds the prefix distance.
pub fn block_interchange_distance(p: &Permutation) -> i64 {
    let g = BreakpointGraph::new(p);
    let raw = (g.n() + 1) as i64 - g.cycle_counts().total as i64;
    debug_assert!(raw >= 0 && raw % 2 == 0);
    raw / 2
}

/// Lower bounds on the prefix block-interchange distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    /// `ceil(g/2)`: no move gains more than 2 potential.
    pub half_potential: i64,
    /// `bid + CC - 1` (0 at the identity): unrestricted distance plus the
    /// component count of nontrivial cycles, less one.  Reaching a component
    /// costs a move on top of the unrestricted work it needs, except once:
    /// when the first element is out of place its own component is already
    /// reachable, and when it is in place a single move can both reach a
    /// component and split a cycle inside it.
    pub components: i64,
    /// `ceil((b-1)/3)`: a move removes at most 3 breakpoints.
    pub breakpoints: i64,
}

/// Upper bounds on the prefix block-interchange distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBounds {
    /// `g`: the greedy sorter decreases the potential every move.
    pub potential: i64,
    /// `g - ceil(c2_excl/2)`: the improved sorter converts 2-cycles
    /// outside the leftmost cycle into double-gain moves.
    pub two_cycles: i64,
    /// `2 * ceil((b-1)/3)`: 2-approximation via breakpoints.
    pub breakpoints: i64,
    /// `floor(2n/3)`: the diameter of the whole group.
    pub two_thirds: i64,
}

/// Everything [`bounds_report`] computes, as a flat record.
///
/// Serialises to one key per statistic, so the CLI's JSON output is a flat
/// object with a stable key order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub g: i64,
    pub f: i64,
    pub bid: i64,
    pub breakpoint_count: i64,
    pub lb_g_half: i64,
    pub lb_components: i64,
    pub lb_breakpoints: i64,
    pub ub_g: i64,
    pub ub_two_cycles: i64,
    pub ub_breakpoints: i64,
    pub ub_two_thirds: i64,
    pub best_lower: i64,
    pub best_upper: i64,
}

fn ceil_div(a: i64, d: i64) -> i64 {
    debug_assert!(a >= 0 && d > 0);
    (a + d - 1) / d
}

/// All lower bounds.
///
/// The half-potential bound is reported rounded up: the distance is an
/// integer, so `distance >= g/2` implies `distance >= ceil(g/2)`.
pub fn lower_bounds(p: &Permutation) -> LowerBounds {
    let g = BreakpointGraph::new(p);
    let pot = potential_of(&g);
    let bid = block_interchange_distance(p);
    let cc = g.component_count() as i64;
    let b = breakpoints(p) as i64;
    let components = if p.is_identity() { 0 } else { bid + cc - 1 };
    LowerBounds {
        half_potential: ceil_div(pot, 2),
        components,
        breakpoints: ceil_div(b - 1, 3),
    }
}

/// All upper bounds.
pub fn upper_bounds(p: &Permutation) -> UpperBounds {
    let g = BreakpointGraph::new(p);
    let pot = potential_of(&g);
    let two = g.cycle_counts().two_excl_leftmost as i64;
    let b = breakpoints(p) as i64;
    UpperBounds {
        potential: pot,
        two_cycles: pot - ceil_div(two, 2),
        breakpoints: 2 * ceil_div(b - 1, 3),
        two_thirds: 2 * p.n() as i64 / 3,
    }
}

/// Aggregates every bound and the best of each side.
///
/// Panics if any lower bound exceeds any upper bound: that would falsify a
/// theorem, so it is an internal invariant, not an input error.
pub fn bounds_report(p: &Permutation) -> BoundsReport {
    let lb = lower_bounds(p);
    let ub = upper_bounds(p);
    let best_lower = lb.half_potential.max(lb.components).max(lb.breakpoints);
    let best_upper = ub
        .potential
        .min(ub.two_cycles)
        .min(ub.breakpoints)
        .min(ub.two_thirds);
    assert!(
        best_lower <= best_upper,
        "bound inversion for p={p}: lower {best_lower} > upper {best_upper}"
    );
    BoundsReport {
        n: p.n(),
        g: potential(p),
        f: first_penalty(p),
        bid: block_interchange_distance(p),
        breakpoint_count: breakpoints(p) as i64,
        lb_g_half: lb.half_potential,
        lb_components: lb.components,
        lb_breakpoints: lb.breakpoints,
        ub_g: ub.potential,
        ub_two_cycles: ub.two_cycles,
        ub_breakpoints: ub.breakpoints,
        ub_two_thirds: ub.two_thirds,
        best_lower,
        best_upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn potential_examples() {
        assert_eq!(potential(&p("3 2 1")), 2);
        assert_eq!(potential(&p("2 1")), 1);
        assert_eq!(potential(&p("1 3 2")), 2);
        assert_eq!(potential(&p("7 1 4 5 3 2 6")), 4);
        for n in 1..=7 {
            assert_eq!(potential(&Permutation::identity(n)), 0);
        }
    }

    #[test]
    fn potential_zero_only_on_identity() {
        for n in 1..=6 {
            for q in crate::oracle::permutations(n) {
                assert_eq!(potential(&q) == 0, q.is_identity(), "q={q}");
                assert!(potential(&q) >= 0, "q={q}");
            }
        }
    }

    #[test]
    fn unrestricted_distance_examples() {
        assert_eq!(block_interchange_distance(&p("3 2 1")), 1);
        assert_eq!(block_interchange_distance(&p("1 3 2")), 1);
        assert_eq!(block_interchange_distance(&p("1 3 2 5 4")), 2);
        assert_eq!(block_interchange_distance(&p("7 1 4 5 3 2 6")), 2);
        assert_eq!(block_interchange_distance(&Permutation::identity(5)), 0);
    }

    #[test]
    fn lower_bound_examples() {
        let lb = lower_bounds(&p("1 4 3 2"));
        assert_eq!(lb.components, 1);
        assert_eq!(lb.half_potential, 2);
        let lb = lower_bounds(&p("1 3 2 5 4"));
        assert_eq!(lb.components, 2);
        let lb = lower_bounds(&p("3 1 4 2"));
        assert_eq!(lb.components, 2);
        let lb = lower_bounds(&Permutation::identity(4));
        assert_eq!(
            (lb.half_potential, lb.components, lb.breakpoints),
            (0, 0, 0)
        );
    }

    #[test]
    fn upper_bound_examples() {
        let ub = upper_bounds(&p("1 4 3 2"));
        assert_eq!(ub.potential, 3);
        assert_eq!(ub.two_cycles, 2);
        let ub = upper_bounds(&p("3 2 1"));
        assert_eq!(ub.potential, 2);
        assert_eq!(ub.two_cycles, 1);
        let ub = upper_bounds(&Permutation::identity(6));
        assert_eq!(
            (ub.potential, ub.two_cycles, ub.breakpoints, ub.two_thirds),
            (0, 0, 0, 4)
        );
    }

    #[test]
    fn report_pins_distance_when_bounds_meet() {
        let r = bounds_report(&p("3 2 1"));
        assert_eq!((r.best_lower, r.best_upper), (1, 1));
        let r = bounds_report(&p("1 4 3 2"));
        assert_eq!((r.best_lower, r.best_upper), (2, 2));
        let r = bounds_report(&Permutation::identity(3));
        assert_eq!((r.best_lower, r.best_upper), (0, 0));
        // Not every distance is pinned: here the true distance is 3, the
        // gap between the certificates is genuine.
        let r = bounds_report(&p("1 3 2 5 4"));
        assert_eq!((r.best_lower, r.best_upper), (2, 3));
    }

    #[test]
    fn report_is_internally_ordered() {
        for n in 1..=6 {
            for q in crate::oracle::permutations(n) {
                let r = bounds_report(&q);
                assert!(r.best_lower <= r.best_upper, "q={q}");
                // The improved upper bound sits between half and full
                // potential.
                assert!(
                    r.lb_g_half <= r.ub_two_cycles && r.ub_two_cycles <= r.ub_g,
                    "q={q}"
                );
            }
        }
    }

    #[test]
    fn report_serialises_flat() {
        let r = bounds_report(&p("1 3 2 5 4"));
        let json = serde_json::to_value(r).unwrap();
        let obj = json.as_object().unwrap();
        assert_eq!(obj.len(), 14);
        assert!(obj.values().all(|v| v.is_number()));
        assert_eq!(obj["best_lower"], 2);
        assert_eq!(obj["best_upper"], 3);
        assert_eq!(obj["g"], 3);
    }
}
