//! Batch front-end for scripts and CI: sorting runs, bounds, graph
//! analytics and the exhaustive tables, one JSON document per invocation.
//!
//! Output is deterministic byte-for-byte for fixed inputs and flags; pass
//! `--pretty` for a human-oriented rendering instead.  Exit codes: 2 for a
//! malformed permutation, 3 when a requested size exceeds the search
//! budget, 1 when `verify` finds a failing check.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pbi_core::audit::run_full_audit;
use pbi_core::bounds;
use pbi_core::graph::BreakpointGraph;
use pbi_core::oracle::{self, DistanceTable};
use pbi_core::perm::Permutation;
use pbi_core::{solver, Error};

#[derive(Parser)]
#[command(name = "pbi", version, about = "Sorting by prefix block-interchanges")]
struct Cli {
    /// Render human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort a permutation and print the run.
    Sort {
        /// Permutation, space- or comma-separated, e.g. "3 2 1".
        perm: String,
        /// Harvest 2-cycles for the tighter length certificate.
        #[arg(long)]
        improved: bool,
    },
    /// Print every distance bound for a permutation.
    Bounds { perm: String },
    /// Print the cycle decomposition and component structure.
    Graph { perm: String },
    /// Build the exhaustive distance table for one size.
    Exact {
        #[arg(long)]
        n: usize,
        /// Also persist the table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Longest distance at one size, with its witnesses.
    Diameter {
        #[arg(long)]
        n: usize,
    },
    /// Distance distribution at one size.
    Spectrum {
        #[arg(long)]
        n: usize,
    },
    /// Run the exhaustive invariant audit, one pass/fail line per check.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Construct the permutation family that attains the worst case.
    TightFamily {
        #[arg(long)]
        n: usize,
    },
}

/// Size cap for the exhaustive subcommands, overridable via `PBI_MAX_N`.
fn oracle_cap() -> usize {
    std::env::var("PBI_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(oracle::DEFAULT_MAX_N)
}

fn build_table(n: usize) -> Result<DistanceTable, Error> {
    oracle::bfs_distances_with_cap(n, oracle_cap())
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Empty
        | Error::ValueOutOfRange { .. }
        | Error::DuplicateValue(_)
        | Error::Parse { .. } => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

#[derive(Serialize)]
struct GraphReport {
    n: usize,
    extended: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    leftmost: usize,
    trivial: usize,
    components: Vec<Vec<usize>>,
    component_count: usize,
    breakpoints: usize,
    dump: String,
}

#[derive(Serialize)]
struct TableReport {
    n: usize,
    states: usize,
    diameter: usize,
    spectrum: std::collections::BTreeMap<usize, u64>,
}

#[derive(Serialize)]
struct DiameterReport {
    n: usize,
    diameter: usize,
    witness_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<String>>,
}

#[derive(Serialize)]
struct FamilyReport {
    n: usize,
    permutation: String,
    distance_certificate: i64,
    best_lower: i64,
    best_upper: i64,
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("report serialises")
    );
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Sort { perm, improved } => {
            let p: Permutation = perm.parse()?;
            let (result, name) = if improved {
                (solver::sort_improved(&p), "improved")
            } else {
                (solver::sort_basic(&p), "basic")
            };
            let report = result.report(name);
            if cli.pretty {
                println!("input {} ({} moves, {})", report.input, report.length, name);
                for (i, step) in result.steps().iter().enumerate() {
                    println!("  {}. {} [{}]", i + 1, step.mv, step.case);
                }
                println!(
                    "certificates: potential {}, 2-cycles {}, breakpoints {}",
                    report.certificates.max_moves_g,
                    report.certificates.max_moves_two_cycles,
                    report.certificates.max_moves_breakpoints
                );
            } else {
                emit(&report);
            }
        }
        Command::Bounds { perm } => {
            let p: Permutation = perm.parse()?;
            let r = bounds::bounds_report(&p);
            if cli.pretty {
                println!("n {}", r.n);
                println!("potential g        {}", r.g);
                println!("breakpoints        {}", r.breakpoint_count);
                println!("unrestricted bid   {}", r.bid);
                println!("lower: half g      {}", r.lb_g_half);
                println!("lower: components  {}", r.lb_components);
                println!("lower: breakpoints {}", r.lb_breakpoints);
                println!("upper: g           {}", r.ub_g);
                println!("upper: 2-cycles    {}", r.ub_two_cycles);
                println!("upper: breakpoints {}", r.ub_breakpoints);
                println!("upper: two thirds  {}", r.ub_two_thirds);
                println!("best               [{}, {}]", r.best_lower, r.best_upper);
            } else {
                emit(&r);
            }
        }
        Command::Graph { perm } => {
            let p: Permutation = perm.parse()?;
            let g = BreakpointGraph::new(&p);
            let counts = g.cycle_counts();
            let report = GraphReport {
                n: g.n(),
                extended: g.extended_sequence().to_vec(),
                cycles: g
                    .cycles()
                    .iter()
                    .map(|c| c.black_edges().to_vec())
                    .collect(),
                leftmost: g.leftmost_cycle_id(),
                trivial: counts.trivial,
                components: g.components().components().to_vec(),
                component_count: g.component_count(),
                breakpoints: pbi_core::graph::breakpoints(&p),
                dump: g.dump(),
            };
            if cli.pretty {
                print!("{}", report.dump);
                for (i, comp) in report.components.iter().enumerate() {
                    println!("component {i}: cycles {comp:?}");
                }
                println!("breakpoints: {}", report.breakpoints);
            } else {
                emit(&report);
            }
        }
        Command::Exact { n, out } => {
            let table = build_table(n)?;
            if let Some(path) = out {
                table
                    .save(&path)
                    .map_err(|e| Error::BadTableFile(e.to_string()))?;
            }
            print_table(cli.pretty, &table);
        }
        Command::Spectrum { n } => {
            let table = build_table(n)?;
            print_table(cli.pretty, &table);
        }
        Command::Diameter { n } => {
            let table = build_table(n)?;
            let witnesses = table.witnesses();
            let report = DiameterReport {
                n,
                diameter: table.diameter(),
                witness_count: witnesses.len(),
                witnesses: (witnesses.len() <= 100)
                    .then(|| witnesses.iter().map(|p| p.to_string()).collect()),
            };
            if cli.pretty {
                println!(
                    "diameter {} at n={n}, {} witnesses",
                    report.diameter, report.witness_count
                );
                for w in report.witnesses.iter().flatten() {
                    println!("  {w}");
                }
            } else {
                emit(&report);
            }
        }
        Command::Verify { n } => {
            let cap = oracle_cap();
            if n > cap {
                return Err(Error::BudgetExceeded { n, cap });
            }
            let report = run_full_audit(n)?;
            for check in &report.checks {
                let verdict = if check.passed { "PASS" } else { "FAIL" };
                println!("{verdict} {} ({})", check.name, check.detail);
            }
            if !report.passed() {
                return Err(Error::Precondition {
                    op: "verify",
                    requires: "every audit check to pass",
                });
            }
        }
        Command::TightFamily { n } => {
            let p = oracle::tight_family(n)?;
            let r = bounds::bounds_report(&p);
            let report = FamilyReport {
                n,
                permutation: p.to_string(),
                distance_certificate: r.ub_two_thirds,
                best_lower: r.best_lower,
                best_upper: r.best_upper,
            };
            if cli.pretty {
                println!(
                    "{} (distance {}, certified [{}, {}])",
                    report.permutation,
                    report.distance_certificate,
                    report.best_lower,
                    report.best_upper
                );
            } else {
                emit(&report);
            }
        }
    }
    Ok(())
}

fn print_table(pretty: bool, table: &DistanceTable) {
    let report = TableReport {
        n: table.n(),
        states: table.len(),
        diameter: table.diameter(),
        spectrum: table.spectrum(),
    };
    if pretty {
        println!(
            "n={} states={} diameter={}",
            report.n, report.states, report.diameter
        );
        for (d, count) in &report.spectrum {
            println!("  {d}: {count}");
        }
    } else {
        emit(&report);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
