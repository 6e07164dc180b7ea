//! Sorting permutations by prefix block-interchanges.
//!
//! A block-interchange swaps two non-overlapping intervals of a permutation;
//! a *prefix* block-interchange requires the first interval to start at
//! position 1.  This crate provides:
//!
//! * immutable [`perm::Permutation`] values and [`perm::BlockInterchange`]
//!   moves,
//! * the breakpoint graph of a permutation with its alternating-cycle
//!   decomposition ([`graph::BreakpointGraph`]),
//! * an algebraic image of permutations whose disjoint cycles mirror the
//!   graph cycles ([`algebra::cycle_image`]), used to cross-validate the
//!   graph code,
//! * lower and upper bounds on the prefix block-interchange distance
//!   ([`bounds::bounds_report`]),
//! * a greedy sorter with a 2-approximation guarantee and an improved
//!   variant that harvests 2-cycles ([`solver::sort_basic`],
//!   [`solver::sort_improved`]),
//! * an exhaustive breadth-first oracle over whole symmetric groups for
//!   small sizes ([`oracle::bfs_distances`]), plus a self-audit suite
//!   ([`audit::run_full_audit`]) that checks every structural identity,
//!   delta lemma and bound against the oracle.
//!
//! Indexing is 1-based in the public model: a permutation of size `n` maps
//! `{1, ..., n}` onto itself, and a block-interchange `bi(i,j,k,l)` with
//! `1 <= i < j <= k < l <= n+1` exchanges the intervals `[i, j-1]` and
//! `[k, l-1]`.

pub mod algebra;
pub mod audit;
pub mod bounds;
mod error;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod solver;

pub use error::Error;
pub use graph::BreakpointGraph;
pub use perm::{BlockInterchange, Permutation};
