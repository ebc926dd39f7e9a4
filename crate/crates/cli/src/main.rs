//! `egc`: certificate engine for power-of-two cycles in graphs of minimum
//! degree three.
//!
//! Subcommands:
//!   check            structural summary plus witnesses for each input graph
//!   extract          run one witness extractor and print the certificate
//!   verify-theorems  exhaustive sweep over generated or streamed graphs
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition violated (degree
//! floor), 4 internal invariant (bug; includes a trace dump), 5 sweep
//! failures.

use clap::{Parser, Subcommand, ValueEnum};
use egc_core::cut::CutError;
use egc_core::sweep::{sweep, sweep_graph6, SweepConfig, SweepReport};
use egc_core::{
    cycle_spectrum, eg_witness, is_pk_free, min_vertex_cut, p5_witness, parse_edge_list,
    parse_graph6, ExtractError, ExtractionTrace, Graph, Witness,
};
use serde::Serialize;
use std::io::Read;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_SWEEP_FAILURES: u8 = 5;

#[derive(Parser)]
#[command(name = "egc", version, about = "cycle and induced-path certificates for graphs of minimum degree three")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Goal {
    P5,
    #[default]
    P8,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize each input graph and extract witnesses from both engines.
    Check {
        /// Input file, or "-" for standard input.
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Emit one JSON object per graph instead of text.
        #[arg(long)]
        json: bool,
        /// Include extraction traces in the output.
        #[arg(long)]
        trace: bool,
        /// Skip witness extraction (lifts the degree-floor requirement).
        #[arg(long)]
        no_witnesses: bool,
        /// Upper bound for the reported cycle spectrum (default min(n, 16)).
        #[arg(long)]
        max_cycle_len: Option<usize>,
    },
    /// Extract one witness per input graph.
    Extract {
        /// Input file, or "-" for standard input.
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Which theorem's extractor to run.
        #[arg(long, value_enum, default_value_t)]
        goal: Goal,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Run the exhaustive verification sweep and report per-order results.
    VerifyTheorems {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        /// Verify graphs from a graph6 stream (one record per line;
        /// "-" for standard input) instead of generating internally.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Check {
            path,
            format,
            json,
            trace,
            no_witnesses,
            max_cycle_len,
        } => cmd_check(&path, format, json, trace, !no_witnesses, max_cycle_len),
        Cmd::Extract {
            path,
            format,
            goal,
            json,
            trace,
        } => cmd_extract(&path, format, goal, json, trace),
        Cmd::VerifyTheorems {
            n_min,
            n_max,
            min_degree,
            input,
            jobs,
            json,
        } => cmd_verify_theorems(n_min, n_max, min_degree, input.as_deref(), jobs, json),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Parses the input into graphs. graph6 files hold one record per line;
/// edge-list files hold a single graph. Per-record errors are reported and
/// skipped so the remaining records still run.
fn load_graphs(path: &str, format: Format) -> Result<Vec<Result<Graph, String>>, ExitCode> {
    let content = read_input(path).map_err(|e| {
        eprintln!("error: cannot read {path}: {e}");
        ExitCode::from(EXIT_PARSE)
    })?;
    let parsed = match format {
        Format::Graph6 => content
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.as_bytes()).map_err(|e| format!("record {}: {e}", i + 1))
            })
            .collect(),
        Format::Edgelist => vec![parse_edge_list(&content).map_err(|e| e.to_string())],
    };
    Ok(parsed)
}

#[derive(Serialize)]
struct CheckOutput {
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    complete: bool,
    kappa: Option<usize>,
    p5_free: bool,
    p8_free: bool,
    spectrum_max: usize,
    cycle_spectrum: Vec<usize>,
    witness_p5: Option<Witness>,
    witness_p8: Option<Witness>,
    trace_p5: Option<ExtractionTrace>,
    trace_p8: Option<ExtractionTrace>,
}

fn extract_error_code(e: &ExtractError) -> u8 {
    match e {
        ExtractError::MinDegree { .. } => EXIT_PRECONDITION,
        ExtractError::Cut(_) | ExtractError::InternalInvariant { .. } => EXIT_INTERNAL,
    }
}

fn cmd_check(
    path: &str,
    format: Format,
    json: bool,
    with_trace: bool,
    witnesses: bool,
    max_cycle_len: Option<usize>,
) -> ExitCode {
    let graphs = match load_graphs(path, format) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if graphs.is_empty() {
        eprintln!("error: no graphs in input");
        return ExitCode::from(EXIT_PARSE);
    }
    let mut first_failure: Option<u8> = None;
    for (idx, parsed) in graphs.iter().enumerate() {
        let g = match parsed {
            Ok(g) => g,
            Err(msg) => {
                eprintln!("error: {msg}");
                first_failure.get_or_insert(EXIT_PARSE);
                continue;
            }
        };
        let stats = g.degree_stats();
        let spectrum_max = max_cycle_len.unwrap_or_else(|| g.n().min(16));
        let (complete, kappa) = match min_vertex_cut(g) {
            Ok(cut) => (false, Some(cut.cut_vertices.len())),
            Err(CutError::CompleteGraph) => (true, None),
            Err(CutError::Disconnected) => (false, Some(0)),
        };
        let mut out = CheckOutput {
            n: g.n(),
            m: g.edge_count(),
            min_degree: stats.min_deg,
            max_degree: stats.max_deg,
            complete,
            kappa,
            p5_free: is_pk_free(g, 5),
            p8_free: is_pk_free(g, 8),
            spectrum_max,
            cycle_spectrum: cycle_spectrum(g, spectrum_max).into_iter().collect(),
            witness_p5: None,
            witness_p8: None,
            trace_p5: None,
            trace_p8: None,
        };
        if witnesses {
            match p5_witness(g) {
                Ok((w, t)) => {
                    out.witness_p5 = Some(w);
                    out.trace_p5 = with_trace.then_some(t);
                }
                Err(e) => {
                    eprintln!("graph {}: p5 extraction: {e}", idx + 1);
                    first_failure.get_or_insert(extract_error_code(&e));
                }
            }
            match eg_witness(g) {
                Ok((w, t)) => {
                    out.witness_p8 = Some(w);
                    out.trace_p8 = with_trace.then_some(t);
                }
                Err(e) => {
                    eprintln!("graph {}: p8 extraction: {e}", idx + 1);
                    first_failure.get_or_insert(extract_error_code(&e));
                }
            }
        }
        if json {
            println!("{}", serde_json::to_string(&out).unwrap());
        } else {
            print_check_text(idx + 1, &out);
        }
    }
    first_failure.map_or(ExitCode::SUCCESS, ExitCode::from)
}

fn print_check_text(idx: usize, out: &CheckOutput) {
    println!("graph {idx}: n={} m={}", out.n, out.m);
    println!("  degrees: min {} max {}", out.min_degree, out.max_degree);
    match (out.complete, out.kappa) {
        (true, _) => println!("  connectivity: complete"),
        (false, Some(0)) => println!("  connectivity: 0 (disconnected)"),
        (false, Some(k)) => println!("  connectivity: {k}"),
        _ => {}
    }
    println!("  p5-free: {}  p8-free: {}", out.p5_free, out.p8_free);
    println!(
        "  cycle spectrum (<= {}): {:?}",
        out.spectrum_max, out.cycle_spectrum
    );
    for (name, w, t) in [
        ("p5", &out.witness_p5, &out.trace_p5),
        ("p8", &out.witness_p8, &out.trace_p8),
    ] {
        if let Some(w) = w {
            println!("  {name} witness: {} {:?}", w.kind, w.vertices);
            if let Some(t) = t {
                println!("  {name} trace: {}", t.to_json());
            }
        }
    }
}

#[derive(Serialize)]
struct ExtractOutput {
    goal: &'static str,
    witness: Witness,
    trace: Option<ExtractionTrace>,
}

fn cmd_extract(path: &str, format: Format, goal: Goal, json: bool, with_trace: bool) -> ExitCode {
    let graphs = match load_graphs(path, format) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if graphs.is_empty() {
        eprintln!("error: no graphs in input");
        return ExitCode::from(EXIT_PARSE);
    }
    let mut first_failure: Option<u8> = None;
    for (idx, parsed) in graphs.iter().enumerate() {
        let g = match parsed {
            Ok(g) => g,
            Err(msg) => {
                eprintln!("error: {msg}");
                first_failure.get_or_insert(EXIT_PARSE);
                continue;
            }
        };
        let result = match goal {
            Goal::P5 => p5_witness(g),
            Goal::P8 => eg_witness(g),
        };
        match result {
            Ok((w, t)) => {
                let out = ExtractOutput {
                    goal: if goal == Goal::P5 { "p5" } else { "p8" },
                    witness: w,
                    trace: with_trace.then_some(t),
                };
                if json {
                    println!("{}", serde_json::to_string(&out).unwrap());
                } else {
                    println!(
                        "graph {}: {} {:?}",
                        idx + 1,
                        out.witness.kind,
                        out.witness.vertices
                    );
                    if let Some(t) = &out.trace {
                        println!("  trace: {}", t.to_json());
                    }
                }
            }
            Err(e) => {
                eprintln!("graph {}: {e}", idx + 1);
                if let ExtractError::InternalInvariant { trace, .. } = &e {
                    eprintln!("  trace dump: {}", trace.to_json());
                }
                first_failure.get_or_insert(extract_error_code(&e));
            }
        }
    }
    first_failure.map_or(ExitCode::SUCCESS, ExitCode::from)
}

fn cmd_verify_theorems(
    n_min: usize,
    n_max: usize,
    min_degree: usize,
    input: Option<&str>,
    jobs: usize,
    json: bool,
) -> ExitCode {
    let cfg = SweepConfig {
        n_min,
        n_max,
        min_degree,
        jobs,
        ..SweepConfig::default()
    };
    let report: SweepReport = match input {
        None => match sweep(&cfg) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
        },
        Some(path) => {
            let content = match read_input(path) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: cannot read {path}: {e}");
                    return ExitCode::from(EXIT_PARSE);
                }
            };
            match sweep_graph6(&cfg, content.as_bytes()) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_PARSE);
                }
            }
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_table());
    }
    if report.has_failures() {
        for f in report.failures() {
            eprintln!("FAIL {} : {}", f.graph6, f.reason);
        }
        ExitCode::from(EXIT_SWEEP_FAILURES)
    } else {
        ExitCode::SUCCESS
    }
}
