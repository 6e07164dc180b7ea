//! Exhaustive cross-checks of the structural claims behind the bounds and
//! sorters.
//!
//! Every closed formula in this crate rests on a small set of graph lemmas:
//! how cycle counts move under a block-interchange, when components merge,
//! what the group-theoretic mirror preserves, and what the greedy sorters
//! guarantee per step.  Each check here restates one of those claims and
//! verifies it against brute force over every permutation up to some size,
//! using the breadth-first tables as ground truth for distances.
//!
//! [`run_full_audit`] runs the whole battery and returns one record per
//! check; the CLI's `verify` subcommand prints them as pass/fail lines.
//! Per-move checks enumerate all states times all moves and are capped at a
//! smaller size than the per-permutation checks; each record's detail names
//! the range it actually covered.

use serde::Serialize;

use crate::algebra::{block_interchange_image, cycle_image, embed, move_deltas};
use crate::bounds;
use crate::error::Error;
use crate::graph::BreakpointGraph;
use crate::oracle::{
    self, all_block_interchanges, enumerate_generators, permutations, DistanceTable,
};
use crate::perm::Permutation;
use crate::solver;

/// Cap for checks that enumerate all permutations times all moves.
pub const LEMMA_MAX_N: usize = 6;

/// Cap for checks that enumerate all permutations of a size.
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// Cap for the composition-rule check, which multiplies out three group
/// elements per state/move pair.
pub const COMPOSITION_MAX_N: usize = 5;

/// Largest size whose tight-family member is pinned without a table.
pub const TIGHT_FAMILY_PIN_MAX_N: usize = 30;

/// Outcome of a single named check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: String) -> Check {
        Check {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Check {
        Check {
            name,
            passed: false,
            detail,
        }
    }
}

/// Results of the full battery at one requested size.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

struct Ctx {
    n: usize,
    tables: Vec<DistanceTable>,
}

impl Ctx {
    fn table(&self, m: usize) -> &DistanceTable {
        &self.tables[m - 1]
    }

    fn sizes_to(&self, cap: usize) -> std::ops::RangeInclusive<usize> {
        1..=self.n.min(cap)
    }
}

/// Runs every check with tables up to size `n`.
///
/// Builds one breadth-first table per size, so the budget cap on the table
/// builder applies here too.
pub fn run_full_audit(n: usize) -> Result<AuditReport, Error> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n: 0, min: 1 });
    }
    let mut tables = Vec::with_capacity(n);
    for m in 1..=n {
        tables.push(oracle::bfs_distances(m)?);
    }
    let ctx = Ctx { n, tables };

    let mut checks = vec![
        cycle_structure_identities(&ctx),
        adjacency_matches_trivial_cycles(&ctx),
        first_grey_edge_on_leftmost_cycle(&ctx),
        nontrivial_grey_edges_are_crossed(&ctx),
        two_cycles_span_a_nontrivial_edge(&ctx),
        potential_zero_only_at_identity(&ctx),
        move_cycle_delta_range(&ctx),
    ];
    checks.extend(per_prefix_move_lemmas(&ctx));
    checks.extend([
        cycle_image_matches_graph(&ctx),
        cycle_image_composition_rule(&ctx),
        bounds_sandwich_against_tables(&ctx),
        sorter_basic_guarantees(&ctx),
        sorter_improved_guarantees(&ctx),
        generator_set_inverse_closed(&ctx),
        diameter_matches_formula(&ctx),
        unrestricted_distance_formula(&ctx),
        tight_family_certificates(&ctx),
        tightness_witnesses(&ctx),
        diameter_witness_census(&ctx),
    ]);
    Ok(AuditReport { n, checks })
}

/// Cycle lengths partition the black edges; the potential decomposes as
/// `(n+1+c)/2 - c1 - f` with `n+1+c` always even; the breakpoint scan
/// agrees with the trivial-cycle count.
fn cycle_structure_identities(ctx: &Ctx) -> Check {
    const NAME: &str = "cycle-structure-identities";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = BreakpointGraph::new(&p);
            let counts = g.cycle_counts();
            let black_total: usize = g.cycles().iter().map(|c| c.len()).sum();
            if black_total != m + 1 || counts.total != g.cycles().len() {
                return Check::fail(NAME, format!("cycle decomposition is off for {p}"));
            }
            let f = if p.fixes_first() { 0 } else { 1 };
            let sum = m as i64 + 1 + counts.total as i64;
            if sum % 2 != 0 {
                return Check::fail(NAME, format!("n+1+c is odd for {p}"));
            }
            if bounds::potential(&p) != sum / 2 - counts.trivial as i64 - f {
                return Check::fail(NAME, format!("potential decomposition is off for {p}"));
            }
            let lead = if p.fixes_first() { 1 } else { 0 };
            let expect = (m as i64 + 1) - counts.trivial as i64 + lead;
            if crate::graph::breakpoints(&p) as i64 != expect {
                return Check::fail(NAME, format!("breakpoint count is off for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// A black edge is a trivial cycle exactly when the corresponding pair of
/// the padded sequence is an adjacency (the leading pair wants `p(1) = 1`).
fn adjacency_matches_trivial_cycles(ctx: &Ctx) -> Check {
    const NAME: &str = "adjacency-matches-trivial-cycles";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = BreakpointGraph::new(&p);
            let mut padded = Vec::with_capacity(m + 2);
            padded.push(0);
            padded.extend((1..=m).map(|i| p.image(i)));
            padded.push(m + 1);
            for e in 1..=m + 1 {
                let adjacent = if e == 1 {
                    p.image(1) == 1
                } else {
                    padded[e] == padded[e - 1] + 1
                };
                if g.black_edge_is_trivial(e) != adjacent {
                    return Check::fail(NAME, format!("edge {e} disagrees for {p}"));
                }
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// The first grey edge always lives on the leftmost cycle, and so does the
/// black edge at its far endpoint.
fn first_grey_edge_on_leftmost_cycle(ctx: &Ctx) -> Check {
    const NAME: &str = "first-grey-edge-on-leftmost-cycle";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = BreakpointGraph::new(&p);
            let e = g.first_grey_edge();
            let leftmost = g.leftmost_cycle_id();
            if g.cycle_of_grey_edge(e.value()) != leftmost {
                return Check::fail(NAME, format!("first grey edge off-cycle for {p}"));
            }
            if !p.fixes_first() {
                let companion = e.hi() / 2 + 1;
                if g.cycle_of_black_edge(companion) != leftmost {
                    return Check::fail(NAME, format!("companion edge off-cycle for {p}"));
                }
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// Every grey edge on a nontrivial cycle is crossed by some other grey
/// edge.
fn nontrivial_grey_edges_are_crossed(ctx: &Ctx) -> Check {
    const NAME: &str = "nontrivial-grey-edges-are-crossed";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut edges = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = BreakpointGraph::new(&p);
            for v in 0..=m {
                let owner = g.cycle_of_grey_edge(v);
                if g.cycles()[owner].is_trivial() {
                    continue;
                }
                let span = g.grey_edge_span(v);
                if g.find_intersecting_grey_edge(&span).is_none() {
                    return Check::fail(NAME, format!("grey edge {v} uncrossed in {p}"));
                }
                edges += 1;
            }
        }
    }
    Check::pass(
        NAME,
        format!("{edges} nontrivial grey edges, sizes 1..={cap}"),
    )
}

/// A 2-cycle's black edges are at least two indices apart, and at least one
/// strictly spanned black edge is itself nontrivial.
fn two_cycles_span_a_nontrivial_edge(ctx: &Ctx) -> Check {
    const NAME: &str = "two-cycles-span-a-nontrivial-edge";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut cycles = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = BreakpointGraph::new(&p);
            for c in g.cycles().iter().filter(|c| c.len() == 2) {
                let lo = *c.black_edges().iter().min().unwrap();
                let hi = *c.black_edges().iter().max().unwrap();
                if hi < lo + 2 {
                    return Check::fail(NAME, format!("adjacent 2-cycle edges in {p}"));
                }
                if (lo + 1..hi).all(|e| g.black_edge_is_trivial(e)) {
                    return Check::fail(NAME, format!("2-cycle over adjacencies only in {p}"));
                }
                cycles += 1;
            }
        }
    }
    Check::pass(NAME, format!("{cycles} 2-cycles, sizes 1..={cap}"))
}

/// The potential is nonnegative and vanishes exactly at the identity.
fn potential_zero_only_at_identity(ctx: &Ctx) -> Check {
    const NAME: &str = "potential-zero-only-at-identity";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let g = bounds::potential(&p);
            if g < 0 || (g == 0) != p.is_identity() {
                return Check::fail(NAME, format!("potential {g} for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// Any block-interchange, prefix or not, changes the cycle count by -2, 0,
/// or +2.
fn move_cycle_delta_range(ctx: &Ctx) -> Check {
    const NAME: &str = "move-cycle-delta-range";
    let cap = *ctx.sizes_to(LEMMA_MAX_N).end();
    let mut pairs = 0u64;
    for m in ctx.sizes_to(LEMMA_MAX_N) {
        let moves = all_block_interchanges(m);
        for p in permutations(m) {
            for b in &moves {
                let d = move_deltas(&p, b);
                if ![-2, 0, 2].contains(&d.cycles) {
                    return Check::fail(NAME, format!("cycle delta {} for {p} {b}", d.cycles));
                }
                pairs += 1;
            }
        }
    }
    Check::pass(NAME, format!("{pairs} state/move pairs, sizes 1..={cap}"))
}

/// One sweep over every permutation times every prefix move, feeding the
/// three per-move lemmas: a gain of two trivial cycles never also gains the
/// first-element penalty, breakpoints move by at most 3, and component
/// merges force the cycle delta into {-2, 0}.
///
/// The component count can also drop without any merge when a move sorts a
/// whole component out of existence.  In that case the cycle delta is +2,
/// exactly one component disappears, and the move puts the first element
/// in place; the merge-delta check accepts that shape explicitly.
fn per_prefix_move_lemmas(ctx: &Ctx) -> Vec<Check> {
    const TRIVIAL_GAIN: &str = "trivial-gain-blocks-penalty-gain";
    const BREAKPOINT_RANGE: &str = "breakpoint-delta-range";
    const MERGE_DELTA: &str = "component-merge-cycle-delta";
    let cap = *ctx.sizes_to(LEMMA_MAX_N).end();

    let names = [TRIVIAL_GAIN, BREAKPOINT_RANGE, MERGE_DELTA];
    let mut first: [Option<String>; 3] = [None, None, None];
    let mut note = |slot: usize, what: String| {
        if first[slot].is_none() {
            first[slot] = Some(what);
        }
    };

    let mut pairs = 0u64;
    let mut merges = 0u64;
    for m in ctx.sizes_to(LEMMA_MAX_N) {
        let gens = enumerate_generators(m);
        for p in permutations(m) {
            let before = BreakpointGraph::new(&p);
            let cc_before = before.component_count();
            for b in gens.moves() {
                let d = move_deltas(&p, b);
                if d.trivial_cycles >= 2 && d.first_penalty == 1 {
                    note(0, format!("{p} {b}"));
                }
                if d.breakpoints.abs() > 3 {
                    note(1, format!("{p} {b}"));
                }
                let q = p.apply(b);
                let after = BreakpointGraph::new(&q);
                let cc_after = after.component_count();
                if cc_after < cc_before {
                    merges += 1;
                    let merged = [-2, 0].contains(&d.cycles);
                    let destroyed =
                        d.cycles == 2 && cc_after + 1 == cc_before && d.first_penalty == -1;
                    if !merged && !destroyed {
                        note(2, format!("{p} {b}"));
                    }
                }
                pairs += 1;
            }
        }
    }

    names
        .into_iter()
        .zip(first)
        .map(|(name, found)| match found {
            Some(what) => Check::fail(name, format!("counterexample {what}")),
            None => {
                let scope = if name == MERGE_DELTA {
                    format!("{merges} merging moves of {pairs} pairs")
                } else {
                    format!("{pairs} state/move pairs")
                };
                Check::pass(name, format!("{scope}, sizes 1..={cap}"))
            }
        })
        .collect()
}

/// The group-theoretic image has the same cycle-length multiset as the
/// graph decomposition and is always even.
fn cycle_image_matches_graph(ctx: &Ctx) -> Check {
    const NAME: &str = "cycle-image-matches-graph";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let image = cycle_image(&p);
            let mut from_image = image.cycle_lengths();
            from_image.sort_unstable();
            let g = BreakpointGraph::new(&p);
            let mut from_graph: Vec<usize> = g.cycles().iter().map(|c| c.len()).collect();
            from_graph.sort_unstable();
            if from_image != from_graph {
                return Check::fail(NAME, format!("cycle lengths disagree for {p}"));
            }
            if !image.is_even() {
                return Check::fail(NAME, format!("odd image for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// Applying a move multiplies the image by the move's image conjugated
/// through the embedding.
fn cycle_image_composition_rule(ctx: &Ctx) -> Check {
    const NAME: &str = "cycle-image-composition-rule";
    let cap = *ctx.sizes_to(COMPOSITION_MAX_N).end();
    let mut pairs = 0u64;
    for m in ctx.sizes_to(COMPOSITION_MAX_N) {
        let moves = all_block_interchanges(m);
        for p in permutations(m) {
            let image = cycle_image(&p);
            let em = embed(&p);
            for b in &moves {
                let lhs = cycle_image(&p.apply(b));
                let rhs = image.compose(&block_interchange_image(b, m).conjugate(&em));
                if lhs != rhs {
                    return Check::fail(NAME, format!("composition fails for {p} {b}"));
                }
                pairs += 1;
            }
        }
    }
    Check::pass(NAME, format!("{pairs} state/move pairs, sizes 1..={cap}"))
}

/// Every reported lower bound sits at or below the table distance and every
/// upper bound at or above it.
fn bounds_sandwich_against_tables(ctx: &Ctx) -> Check {
    const NAME: &str = "bounds-sandwich-against-tables";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        let table = ctx.table(m);
        for p in permutations(m) {
            let d = table.distance(&p) as i64;
            let r = bounds::bounds_report(&p);
            let lows = [r.lb_g_half, r.lb_components, r.lb_breakpoints];
            let highs = [r.ub_g, r.ub_two_cycles, r.ub_breakpoints, r.ub_two_thirds];
            if lows.iter().any(|&lb| lb > d) || highs.iter().any(|&ub| ub < d) {
                return Check::fail(NAME, format!("distance {d} escapes bounds for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// The basic sorter sorts, never exceeds its certificates or twice the
/// exact distance, and gains potential every move.
fn sorter_basic_guarantees(ctx: &Ctx) -> Check {
    const NAME: &str = "sorter-basic-guarantees";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        let table = ctx.table(m);
        for p in permutations(m) {
            let res = solver::sort_basic(&p);
            if !solver::verify_sorting_sequence(&p, &res.moves()).unwrap_or(false) {
                return Check::fail(NAME, format!("does not sort {p}"));
            }
            let ub = bounds::upper_bounds(&p);
            let len = res.len() as i64;
            if len > ub.potential || len > ub.breakpoints {
                return Check::fail(NAME, format!("length {len} over certificate for {p}"));
            }
            if len > 2 * table.distance(&p) as i64 {
                return Check::fail(NAME, format!("length {len} over twice optimal for {p}"));
            }
            if res.steps().iter().any(|s| s.deltas.potential > -1) {
                return Check::fail(NAME, format!("non-improving step for {p}"));
            }
            let total: i64 = res.steps().iter().map(|s| s.deltas.potential).sum();
            if total != -res.initial_potential() {
                return Check::fail(NAME, format!("potential ledger off for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// The improved sorter sorts, meets the tighter certificate, never does
/// worse than the basic sorter, and its harvested moves gain two.
fn sorter_improved_guarantees(ctx: &Ctx) -> Check {
    const NAME: &str = "sorter-improved-guarantees";
    let cap = *ctx.sizes_to(EXHAUSTIVE_MAX_N).end();
    let mut seen = 0u64;
    for m in ctx.sizes_to(EXHAUSTIVE_MAX_N) {
        for p in permutations(m) {
            let res = solver::sort_improved(&p);
            if !solver::verify_sorting_sequence(&p, &res.moves()).unwrap_or(false) {
                return Check::fail(NAME, format!("does not sort {p}"));
            }
            let len = res.len() as i64;
            if len > bounds::upper_bounds(&p).two_cycles {
                return Check::fail(NAME, format!("length {len} over certificate for {p}"));
            }
            if len > solver::sort_basic(&p).len() as i64 {
                return Check::fail(NAME, format!("worse than basic sorter for {p}"));
            }
            for s in res.steps() {
                let harvested = matches!(
                    s.case,
                    solver::MoveCase::TwoCycleIntersectFirst
                        | solver::MoveCase::TwoCycleSpansOutside
                );
                if harvested && s.deltas.potential != -2 {
                    return Check::fail(
                        NAME,
                        format!("harvest gained {} for {p}", s.deltas.potential),
                    );
                }
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// The generator set has the closed-form size and contains the inverse of
/// each of its moves.
fn generator_set_inverse_closed(ctx: &Ctx) -> Check {
    const NAME: &str = "generator-set-inverse-closed";
    for m in 1..=ctx.n {
        let gens = enumerate_generators(m);
        let choose3 = m * m.saturating_sub(1) * m.saturating_sub(2) / 6;
        let choose2 = m * m.saturating_sub(1) / 2;
        if gens.len() != choose3 + choose2 {
            return Check::fail(NAME, format!("size {} wrong at n={m}", gens.len()));
        }
        for b in gens.moves() {
            if !gens.contains(&b.prefix_inverse()) {
                return Check::fail(NAME, format!("inverse of {b} missing at n={m}"));
            }
        }
    }
    Check::pass(NAME, format!("sizes 1..={}", ctx.n))
}

/// Measured diameters agree with `floor(2n/3)`.
fn diameter_matches_formula(ctx: &Ctx) -> Check {
    const NAME: &str = "diameter-matches-formula";
    for m in 1..=ctx.n {
        let measured = ctx.table(m).diameter();
        if measured != 2 * m / 3 {
            return Check::fail(NAME, format!("diameter {measured} at n={m}"));
        }
    }
    Check::pass(NAME, format!("sizes 1..={}", ctx.n))
}

/// Unrestricted table distances agree with the closed cycle formula.
fn unrestricted_distance_formula(ctx: &Ctx) -> Check {
    const NAME: &str = "unrestricted-distance-formula";
    let cap = ctx.n.min(oracle::UNRESTRICTED_MAX_N);
    let mut seen = 0u64;
    for m in 1..=cap {
        let table = match oracle::unrestricted_bfs_distances(m) {
            Ok(t) => t,
            Err(e) => return Check::fail(NAME, format!("table build failed at n={m}: {e}")),
        };
        for p in permutations(m) {
            if table.distance(&p) as i64 != bounds::block_interchange_distance(&p) {
                return Check::fail(NAME, format!("formula misses for {p}"));
            }
            seen += 1;
        }
    }
    Check::pass(NAME, format!("{seen} permutations, sizes 1..={cap}"))
}

/// Each tight-family member hits the generic ceiling: the best upper bound
/// is exactly `floor(2n/3)`, the best lower bound sits one below it (except
/// at n = 4, where the potential certificate closes the gap), and where a
/// table exists the true distance equals the upper bound.
fn tight_family_certificates(ctx: &Ctx) -> Check {
    const NAME: &str = "tight-family-certificates";
    let top = ctx.n.max(TIGHT_FAMILY_PIN_MAX_N);
    for m in 3..=top {
        let p = match oracle::tight_family(m) {
            Ok(p) => p,
            Err(e) => return Check::fail(NAME, format!("construction failed at n={m}: {e}")),
        };
        let r = bounds::bounds_report(&p);
        let want = 2 * m as i64 / 3;
        let lower = want - i64::from(m != 4);
        if r.best_lower != lower || r.best_upper != want {
            return Check::fail(
                NAME,
                format!(
                    "bounds [{}, {}] at n={m}, expected [{lower}, {want}]",
                    r.best_lower, r.best_upper
                ),
            );
        }
        if m <= ctx.n && ctx.table(m).distance(&p) as i64 != want {
            return Check::fail(NAME, format!("table distance differs at n={m}"));
        }
    }
    let tables = if ctx.n >= 3 {
        format!("tables to {}", ctx.n)
    } else {
        "no table cross-check".to_string()
    };
    Check::pass(NAME, format!("sizes 3..={top}, {tables}"))
}

/// The potential bound is not the distance: some size-3 permutation beats
/// it, while the tighter certificate is exact on the canonical size-4
/// witness.
fn tightness_witnesses(ctx: &Ctx) -> Check {
    const NAME: &str = "tightness-witnesses";
    if ctx.n < 4 {
        return Check::pass(NAME, "skipped, needs size 4".to_string());
    }
    let table3 = ctx.table(3);
    let strict = permutations(3).find(|p| (table3.distance(p) as i64) < bounds::potential(p));
    let Some(strict) = strict else {
        return Check::fail(
            NAME,
            "no size-3 permutation beats the potential".to_string(),
        );
    };
    let witness = Permutation::from_images(vec![1, 4, 3, 2]).unwrap();
    let cert = bounds::upper_bounds(&witness).two_cycles;
    let exact = ctx.table(4).distance(&witness) as i64;
    if cert != exact {
        return Check::fail(NAME, format!("certificate {cert} vs distance {exact}"));
    }
    Check::pass(
        NAME,
        format!("{strict} beats its potential; tighter certificate exact at {exact}"),
    )
}

/// Counts diameter witnesses per size; where the count is known to be one,
/// the witness must be the tight-family member.
fn diameter_witness_census(ctx: &Ctx) -> Check {
    const NAME: &str = "diameter-witness-census";
    let mut counts = Vec::with_capacity(ctx.n);
    for m in 1..=ctx.n {
        let witnesses = ctx.table(m).witnesses();
        if [3, 6].contains(&m) {
            if witnesses.len() != 1 {
                return Check::fail(NAME, format!("{} witnesses at n={m}", witnesses.len()));
            }
            if witnesses[0] != oracle::tight_family(m).unwrap() {
                return Check::fail(NAME, format!("unexpected witness at n={m}"));
            }
        }
        counts.push(format!("n={m}:{}", witnesses.len()));
    }
    Check::pass(NAME, counts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_audit_passes_at_small_size() {
        let report = run_full_audit(4).unwrap();
        assert_eq!(report.n, 4);
        for check in &report.checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
        assert!(report.passed());
        assert!(report.failures().is_empty());
    }

    #[test]
    fn audit_covers_the_advertised_checks() {
        let report = run_full_audit(3).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
        for want in [
            "cycle-structure-identities",
            "move-cycle-delta-range",
            "component-merge-cycle-delta",
            "bounds-sandwich-against-tables",
            "sorter-basic-guarantees",
            "sorter-improved-guarantees",
            "diameter-matches-formula",
            "tight-family-certificates",
        ] {
            assert!(names.contains(&want), "missing {want}");
        }
        assert_eq!(names.len(), 21);
    }

    #[test]
    fn audit_rejects_size_zero() {
        assert!(matches!(
            run_full_audit(0),
            Err(Error::SizeTooSmall { n: 0, min: 1 })
        ));
    }

    #[test]
    fn audit_respects_the_table_budget() {
        assert!(matches!(
            run_full_audit(10),
            Err(Error::BudgetExceeded { n: 10, cap: 9 })
        ));
    }

    #[test]
    fn report_serialises_names_and_outcomes() {
        let report = run_full_audit(2).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["checks"][0]["name"], "cycle-structure-identities");
        assert_eq!(v["checks"][0]["passed"], true);
    }
}
