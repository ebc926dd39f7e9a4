//! Exhaustive verification sweeps: run both extractors over every generated
//! (or streamed) graph, verify every witness, and check the theorem-level
//! guarantees against the independent freeness tests.

use crate::detect::{find_c4, is_pk_free, power_of_two_cycle, shortest_induced_cycle_at_least};
use crate::enumerate::{for_each_nonisomorphic, EnumerateError};
use crate::extract::{eg_witness, p5_witness};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::witness::{verify_witness, WitnessKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub theorem1: bool,
    pub theorem2: bool,
    pub lemma21: bool,
    pub eg_report: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            theorem1: true,
            theorem2: true,
            lemma21: true,
            eg_report: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub min_degree: usize,
    pub checks: Checks,
    /// Worker count; results are merged in generation order, so the report
    /// does not depend on it.
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 4,
            n_max: 8,
            min_degree: 3,
            checks: Checks::default(),
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub graph6: String,
    pub reason: String,
}

/// Per-order aggregate. `wall_time_ms` is informational only and excluded
/// from the JSON so that repeated runs serialize byte-identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub graphs_total: usize,
    pub graphs_connected_min_deg: usize,
    pub p5_free_count: usize,
    pub p8_free_count: usize,
    pub witnesses_p5: BTreeMap<String, usize>,
    pub witnesses_p8: BTreeMap<String, usize>,
    pub power_of_two_cycle_count: usize,
    pub failures: Vec<SweepFailure>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub min_degree: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn total_graphs(&self) -> usize {
        self.rows.iter().map(|r| r.graphs_total).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepFailure> {
        self.rows.iter().flat_map(|r| r.failures.iter())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(
            "    n     total  checked  p5-free  p8-free  pow2-cycle  failures   time\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>5} {:>9} {:>8} {:>8} {:>8} {:>11} {:>9} {:>5}ms\n",
                r.n,
                r.graphs_total,
                r.graphs_connected_min_deg,
                r.p5_free_count,
                r.p8_free_count,
                r.power_of_two_cycle_count,
                r.failures.len(),
                r.wall_time_ms,
            ));
        }
        let p5: BTreeMap<&String, usize> = merge_counts(self.rows.iter().map(|r| &r.witnesses_p5));
        let p8: BTreeMap<&String, usize> = merge_counts(self.rows.iter().map(|r| &r.witnesses_p8));
        out.push_str(&format!("p5 witnesses: {p5:?}\n"));
        out.push_str(&format!("p8 witnesses: {p8:?}\n"));
        out
    }
}

fn merge_counts<'a>(
    rows: impl Iterator<Item = &'a BTreeMap<String, usize>>,
) -> BTreeMap<&'a String, usize> {
    let mut out = BTreeMap::new();
    for m in rows {
        for (k, v) in m {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}

/// Outcome of checking one graph; field order mirrors aggregation.
#[derive(Clone, Debug, Default)]
struct GraphOutcome {
    p5_kind: Option<WitnessKind>,
    p8_kind: Option<WitnessKind>,
    p5_free: bool,
    p8_free: bool,
    has_pow2_cycle: bool,
    failures: Vec<String>,
}

fn check_graph(g: &Graph, checks: Checks) -> GraphOutcome {
    let mut out = GraphOutcome::default();

    if checks.theorem1 {
        out.p5_free = is_pk_free(g, 5);
        match p5_witness(g) {
            Ok((w, _trace)) => {
                out.p5_kind = Some(w.kind);
                if !verify_witness(g, &w) {
                    out.failures.push(format!("p5 witness failed verification: {w:?}"));
                }
                if out.p5_free && w.kind != WitnessKind::Cycle4 {
                    out.failures.push(format!(
                        "P5-free graph must yield Cycle4, got {}",
                        w.kind
                    ));
                }
                if w.kind == WitnessKind::InducedP5 && out.p5_free {
                    out.failures
                        .push("InducedP5 witness on a P5-free graph".into());
                }
            }
            Err(e) => out.failures.push(format!("p5_witness error: {e}")),
        }
    }

    if checks.theorem2 {
        out.p8_free = is_pk_free(g, 8);
        match eg_witness(g) {
            Ok((w, _trace)) => {
                out.p8_kind = Some(w.kind);
                if !verify_witness(g, &w) {
                    out.failures.push(format!("p8 witness failed verification: {w:?}"));
                }
                if out.p8_free && !w.kind.is_cycle() {
                    out.failures.push(format!(
                        "P8-free graph must yield Cycle4 or Cycle8, got {}",
                        w.kind
                    ));
                }
                if w.kind == WitnessKind::InducedP8 && out.p8_free {
                    out.failures
                        .push("InducedP8 witness on a P8-free graph".into());
                }
            }
            Err(e) => out.failures.push(format!("eg_witness error: {e}")),
        }
    }

    if checks.lemma21 && find_c4(g).is_none() {
        match shortest_induced_cycle_at_least(g, 5) {
            Some(c) => {
                if c.len() < 5 || !c.is_induced_cycle(g) {
                    out.failures
                        .push(format!("bad induced cycle {:?} on a C4-free graph", c.vertices));
                }
            }
            None => out
                .failures
                .push("no induced cycle of length >= 5 in a C4-free graph".into()),
        }
    }

    if checks.eg_report {
        out.has_pow2_cycle = power_of_two_cycle(g).is_some();
    }

    out
}

/// Runs `check_graph` over a slice with `jobs` workers; results come back
/// in input order.
fn check_all(graphs: &[Graph], checks: Checks, jobs: usize) -> Vec<GraphOutcome> {
    let jobs = jobs.max(1).min(graphs.len().max(1));
    if jobs == 1 || graphs.len() < 2 {
        return graphs.iter().map(|g| check_graph(g, checks)).collect();
    }
    let mut slots: Vec<Option<GraphOutcome>> = vec![None; graphs.len()];
    let chunk = graphs.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let mut pending: Vec<_> = Vec::new();
        for (w, (gs, dst)) in graphs
            .chunks(chunk)
            .zip(slots.chunks_mut(chunk))
            .enumerate()
        {
            let _ = w;
            pending.push(scope.spawn(move || {
                for (g, slot) in gs.iter().zip(dst.iter_mut()) {
                    *slot = Some(check_graph(g, checks));
                }
            }));
        }
        for h in pending {
            h.join().expect("sweep worker panicked");
        }
    });
    slots.into_iter().map(|s| s.expect("all slots filled")).collect()
}

fn aggregate(n: usize, graphs: &[Graph], outcomes: Vec<GraphOutcome>, started: Instant) -> SweepRow {
    let mut row = SweepRow {
        n,
        graphs_total: graphs.len(),
        graphs_connected_min_deg: graphs.len(),
        ..SweepRow::default()
    };
    for (g, o) in graphs.iter().zip(outcomes) {
        if o.p5_free {
            row.p5_free_count += 1;
        }
        if o.p8_free {
            row.p8_free_count += 1;
        }
        if o.has_pow2_cycle {
            row.power_of_two_cycle_count += 1;
        }
        if let Some(k) = o.p5_kind {
            *row.witnesses_p5.entry(k.to_string()).or_insert(0) += 1;
        }
        if let Some(k) = o.p8_kind {
            *row.witnesses_p8.entry(k.to_string()).or_insert(0) += 1;
        }
        for reason in o.failures {
            row.failures.push(SweepFailure {
                graph6: write_graph6(g),
                reason,
            });
        }
    }
    row.wall_time_ms = started.elapsed().as_millis();
    row
}

/// Sweep over internally generated graphs, one row per order.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, EnumerateError> {
    let mut rows = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let started = Instant::now();
        let mut graphs = Vec::new();
        for_each_nonisomorphic(n, cfg.min_degree, &mut |g| graphs.push(g.clone()))?;
        let outcomes = check_all(&graphs, cfg.checks, cfg.jobs);
        rows.push(aggregate(n, &graphs, outcomes, started));
    }
    Ok(SweepReport {
        min_degree: cfg.min_degree,
        rows,
    })
}

/// Sweep over a graph6 stream, one record per line. Records that are
/// disconnected or below the degree floor are counted but not checked; the
/// rows group by order, ascending.
pub fn sweep_graph6<R: std::io::BufRead>(
    cfg: &SweepConfig,
    reader: R,
) -> std::io::Result<SweepReport> {
    let started = Instant::now();
    let mut per_n: BTreeMap<usize, (Vec<Graph>, usize)> = BTreeMap::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line.as_bytes()).map_err(|e| {
            std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("line {}: {e}", lineno + 1),
            )
        })?;
        let entry = per_n.entry(g.n()).or_default();
        entry.1 += 1;
        if g.min_degree() >= cfg.min_degree && g.is_connected() {
            entry.0.push(g);
        }
    }
    let mut rows = Vec::new();
    for (n, (graphs, total)) in per_n {
        let outcomes = check_all(&graphs, cfg.checks, cfg.jobs);
        let mut row = aggregate(n, &graphs, outcomes, started);
        row.graphs_total = total;
        rows.push(row);
    }
    Ok(SweepReport {
        min_degree: cfg.min_degree,
        rows,
    })
}
