//! Witness certificates and their independent verifier.
//!
//! `verify_witness` is the in-repo oracle for everything the extractors
//! emit. It is written against the witness invariants alone: it builds a
//! plain boolean adjacency matrix from the edge list and checks the stated
//! conditions pair by pair, sharing no code path with the detectors or
//! extractors.

use crate::detect::VertexCycle;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessKind {
    Cycle4,
    Cycle8,
    InducedP8,
    InducedP5,
}

impl WitnessKind {
    pub fn expected_len(self) -> usize {
        match self {
            WitnessKind::Cycle4 => 4,
            WitnessKind::Cycle8 => 8,
            WitnessKind::InducedP8 => 8,
            WitnessKind::InducedP5 => 5,
        }
    }

    pub fn is_cycle(self) -> bool {
        matches!(self, WitnessKind::Cycle4 | WitnessKind::Cycle8)
    }
}

impl std::fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WitnessKind::Cycle4 => "Cycle4",
            WitnessKind::Cycle8 => "Cycle8",
            WitnessKind::InducedP8 => "InducedP8",
            WitnessKind::InducedP5 => "InducedP5",
        };
        f.write_str(s)
    }
}

/// A certificate: an ordered vertex sequence interpreted per `kind`.
/// Cycles close from last to first and may carry chords; induced paths must
/// have every non-consecutive pair non-adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn cycle4(vertices: [usize; 4]) -> Self {
        Witness { kind: WitnessKind::Cycle4, vertices: vertices.to_vec() }
    }

    pub fn cycle8(vertices: [usize; 8]) -> Self {
        Witness { kind: WitnessKind::Cycle8, vertices: vertices.to_vec() }
    }

    pub fn induced_p5(vertices: [usize; 5]) -> Self {
        Witness { kind: WitnessKind::InducedP5, vertices: vertices.to_vec() }
    }

    pub fn induced_p8(vertices: [usize; 8]) -> Self {
        Witness { kind: WitnessKind::InducedP8, vertices: vertices.to_vec() }
    }
}

/// Why a witness was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    WrongLength { expected: usize, found: usize },
    VertexOutOfRange(usize),
    RepeatedVertex(usize),
    MissingEdge(usize, usize),
    ForbiddenChord(usize, usize),
}

/// Detailed check of a witness against a graph.
pub fn check_witness(g: &Graph, w: &Witness) -> Result<(), WitnessViolation> {
    let n = g.n();
    let vs = &w.vertices;
    let expected = w.kind.expected_len();
    if vs.len() != expected {
        return Err(WitnessViolation::WrongLength { expected, found: vs.len() });
    }
    for &v in vs {
        if v >= n {
            return Err(WitnessViolation::VertexOutOfRange(v));
        }
    }
    // independent adjacency matrix, filled from the edge list
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut seen = vec![false; n];
    for &v in vs {
        if seen[v] {
            return Err(WitnessViolation::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    let k = vs.len();
    for i in 0..k - 1 {
        if !adj[vs[i]][vs[i + 1]] {
            return Err(WitnessViolation::MissingEdge(vs[i], vs[i + 1]));
        }
    }
    if w.kind.is_cycle() {
        if !adj[vs[k - 1]][vs[0]] {
            return Err(WitnessViolation::MissingEdge(vs[k - 1], vs[0]));
        }
    } else {
        // induced path: all non-consecutive pairs must be non-adjacent
        for i in 0..k {
            for j in i + 2..k {
                if adj[vs[i]][vs[j]] {
                    return Err(WitnessViolation::ForbiddenChord(vs[i], vs[j]));
                }
            }
        }
    }
    Ok(())
}

/// True iff the witness invariants hold against the graph.
pub fn verify_witness(g: &Graph, w: &Witness) -> bool {
    check_witness(g, w).is_ok()
}

/// Result of repeatedly splitting a cycle at its chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleReduction {
    FoundC4(Witness),
    Induced(VertexCycle),
}

/// Splits a cycle at chords until a 4-cycle appears or no chord remains.
///
/// A chord between positions i < j cuts the cycle into the side i..=j and
/// the complementary side; any side of exactly four vertices is returned at
/// once. A triangle side cannot contain a 4-cycle, so the reduction
/// continues in the other side; otherwise it follows the shorter side, with
/// ties broken toward the side whose sorted vertex list is smaller.
pub fn reduce_cycle(g: &Graph, c: &VertexCycle) -> CycleReduction {
    let mut cur = c.vertices.clone();
    loop {
        let k = cur.len();
        if k == 4 {
            return CycleReduction::FoundC4(Witness::cycle4([cur[0], cur[1], cur[2], cur[3]]));
        }
        let Some((i, j)) = first_chord(g, &cur) else {
            return CycleReduction::Induced(VertexCycle { vertices: cur });
        };
        let side_a: Vec<usize> = cur[i..=j].to_vec();
        let side_b: Vec<usize> = cur[j..].iter().chain(cur[..=i].iter()).copied().collect();
        for side in [&side_a, &side_b] {
            if side.len() == 4 {
                return CycleReduction::FoundC4(Witness::cycle4([
                    side[0], side[1], side[2], side[3],
                ]));
            }
        }
        cur = if side_a.len() == 3 {
            side_b
        } else if side_b.len() == 3 {
            side_a
        } else if side_a.len() != side_b.len() {
            if side_a.len() < side_b.len() { side_a } else { side_b }
        } else {
            let mut sa = side_a.clone();
            let mut sb = side_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa <= sb { side_a } else { side_b }
        };
    }
}

/// First chord of the cycle by position pair (i, j), i < j, lexicographic.
fn first_chord(g: &Graph, cycle: &[usize]) -> Option<(usize, usize)> {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue; // the closing edge
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return Some((i, j));
            }
        }
    }
    None
}
