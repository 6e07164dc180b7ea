//! Browser bindings: each export takes plain strings and numbers and
//! returns one JSON document, so the page needs no generated glue types.
//! Bad input comes back as `{"error": "..."}` rather than an exception.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use pbi_core::bounds::{self, BoundsReport};
use pbi_core::graph::BreakpointGraph;
use pbi_core::oracle;
use pbi_core::perm::Permutation;
use pbi_core::solver::{self, SortReport};

/// Spectrum requests above this size would freeze the tab.
const SPECTRUM_MAX_N: usize = 8;

#[derive(Serialize)]
struct GreyEdge {
    value: usize,
    lo: usize,
    hi: usize,
    cycle: usize,
}

#[derive(Serialize)]
struct Analysis {
    permutation: String,
    n: usize,
    extended: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    leftmost: usize,
    grey_edges: Vec<GreyEdge>,
    components: Vec<Vec<usize>>,
    breakpoints: usize,
    bounds: BoundsReport,
}

#[derive(Serialize)]
struct SortRun {
    report: SortReport,
    states: Vec<String>,
}

#[derive(Serialize)]
struct Spectrum {
    n: usize,
    states: usize,
    diameter: usize,
    spectrum: std::collections::BTreeMap<usize, u64>,
}

fn err_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

fn ok_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_else(err_json)
}

/// Breakpoint graph, components and every bound for one permutation.
#[wasm_bindgen]
pub fn analyze(perm: &str) -> String {
    let p: Permutation = match perm.parse() {
        Ok(p) => p,
        Err(e) => return err_json(e),
    };
    let g = BreakpointGraph::new(&p);
    let analysis = Analysis {
        permutation: p.to_string(),
        n: g.n(),
        extended: g.extended_sequence().to_vec(),
        cycles: g
            .cycles()
            .iter()
            .map(|c| c.black_edges().to_vec())
            .collect(),
        leftmost: g.leftmost_cycle_id(),
        grey_edges: (0..=g.n())
            .map(|v| {
                let s = g.grey_edge_span(v);
                GreyEdge {
                    value: v,
                    lo: s.lo(),
                    hi: s.hi(),
                    cycle: g.cycle_of_grey_edge(v),
                }
            })
            .collect(),
        components: g.components().components().to_vec(),
        breakpoints: pbi_core::graph::breakpoints(&p),
        bounds: bounds::bounds_report(&p),
    };
    ok_json(&analysis)
}

/// A full sorting run with every intermediate state, for stepping through.
#[wasm_bindgen]
pub fn sort_steps(perm: &str, improved: bool) -> String {
    let p: Permutation = match perm.parse() {
        Ok(p) => p,
        Err(e) => return err_json(e),
    };
    let (result, name) = if improved {
        (solver::sort_improved(&p), "improved")
    } else {
        (solver::sort_basic(&p), "basic")
    };
    let mut states = vec![p.to_string()];
    let mut cur = p;
    for step in result.steps() {
        cur = cur.apply(&step.mv);
        states.push(cur.to_string());
    }
    ok_json(&SortRun {
        report: result.report(name),
        states,
    })
}

/// Distance distribution over the whole group at one size.
#[wasm_bindgen]
pub fn spectrum(n: usize) -> String {
    let table = match oracle::bfs_distances_with_cap(n, SPECTRUM_MAX_N) {
        Ok(t) => t,
        Err(e) => return err_json(e),
    };
    ok_json(&Spectrum {
        n,
        states: table.len(),
        diameter: table.diameter(),
        spectrum: table.spectrum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyze_reports_graph_and_bounds() {
        let v = parse(&analyze("3 2 1"));
        assert_eq!(v["n"], 3);
        assert_eq!(v["extended"], serde_json::json!([0, 5, 6, 3, 4, 1, 2, 7]));
        assert_eq!(v["bounds"]["best_upper"], 1);
        assert_eq!(v["bounds"]["best_lower"], 1);
        assert_eq!(v["grey_edges"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn analyze_rejects_bad_input_in_band() {
        let v = parse(&analyze("1 1"));
        assert!(v["error"].as_str().unwrap().contains("more than once"));
    }

    #[test]
    fn sort_steps_walks_to_the_identity() {
        let v = parse(&sort_steps("1 4 3 2", true));
        assert_eq!(v["report"]["length"], 2);
        let states = v["states"].as_array().unwrap();
        assert_eq!(states.len(), 3);
        assert_eq!(states[0], "1 4 3 2");
        assert_eq!(states[2], "1 2 3 4");
    }

    #[test]
    fn spectrum_caps_the_size() {
        let v = parse(&spectrum(4));
        assert_eq!(v["states"], 24);
        assert_eq!(v["diameter"], 2);
        let v = parse(&spectrum(9));
        assert!(v["error"].as_str().unwrap().contains("maximum"));
    }
}
