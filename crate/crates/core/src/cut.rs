//! Minimum vertex cuts and the complete-neighborhood-component (CNC)
//! classification built on them.
//!
//! A component D of G - S is a CNC of a cut vertex x when x is adjacent to
//! every vertex of D. The witness extractors drive their case analysis off
//! this classification.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("complete graphs have no vertex cut")]
    CompleteGraph,
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CncLabel {
    Cnc,
    NonCnc,
}

/// A minimum vertex cut, the components it leaves, and the per-(cut vertex,
/// component) CNC labels.
#[derive(Clone, Debug)]
pub struct CutAnalysis {
    pub cut: VertexSet,
    /// Cut vertices in ascending order; row index into `cnc`.
    pub cut_vertices: Vec<usize>,
    /// Components of G - cut, ordered by smallest member.
    pub components: Vec<VertexSet>,
    /// `cnc[i][d]` labels component `d` relative to `cut_vertices[i]`.
    pub cnc: Vec<Vec<CncLabel>>,
}

impl CutAnalysis {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_cnc(&self, cut_idx: usize, comp_idx: usize) -> bool {
        self.cnc[cut_idx][comp_idx] == CncLabel::Cnc
    }

    /// Component indices that are non-CNCs of `cut_vertices[cut_idx]`.
    pub fn non_cncs_of(&self, cut_idx: usize) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&d| !self.is_cnc(cut_idx, d))
            .collect()
    }

    /// Component indices that are CNCs of both given cut vertices.
    pub fn common_cncs(&self, cut_idx_a: usize, cut_idx_b: usize) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&d| self.is_cnc(cut_idx_a, d) && self.is_cnc(cut_idx_b, d))
            .collect()
    }
}

/// Calls `f` on every `size`-subset of `0..n`, in lexicographic order of the
/// ascending vertex lists, until `f` returns true; returns that subset.
fn first_combination(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if size > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn disconnects(g: &Graph, cut: &[usize]) -> bool {
    let set = VertexSet::from_iter_n(g.n(), cut.iter().copied());
    g.components(&set).len() >= 2
}

/// The lexicographically first disconnecting vertex set of exactly `size`
/// vertices, if one exists.
fn first_disconnecting_subset(g: &Graph, size: usize) -> Option<Vec<usize>> {
    first_combination(g.n(), size, |cand| disconnects(g, cand))
}

/// Maximum number of internally vertex-disjoint s-t paths, via unit-capacity
/// flow on the vertex-split digraph. `s` and `t` must be non-adjacent.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let inf = n as i32 + 1;
    // node 2v = v_in, 2v+1 = v_out
    let mut cap = vec![vec![0i32; 2 * n]; 2 * n];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for (u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = inf;
        cap[2 * v + 1][2 * u] = inf;
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path
        let mut prev = vec![usize::MAX; 2 * n];
        let mut queue = std::collections::VecDeque::from([src]);
        prev[src] = src;
        while let Some(x) = queue.pop_front() {
            if x == dst {
                break;
            }
            for y in 0..2 * n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity of a connected non-complete graph, by maximum flow
/// over all non-adjacent pairs.
fn connectivity_by_flow(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n; // any non-adjacent pair gives at most n-2
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    best
}

fn analyze(g: &Graph, cut_vertices: Vec<usize>) -> CutAnalysis {
    let cut = VertexSet::from_iter_n(g.n(), cut_vertices.iter().copied());
    let components = g.components(&cut);
    let cnc = cut_vertices
        .iter()
        .map(|&x| {
            components
                .iter()
                .map(|d| {
                    if d.is_subset(g.neighbors(x)) {
                        CncLabel::Cnc
                    } else {
                        CncLabel::NonCnc
                    }
                })
                .collect()
        })
        .collect();
    CutAnalysis {
        cut,
        cut_vertices,
        components,
        cnc,
    }
}

/// Finds a minimum vertex cut of a connected, non-complete graph.
///
/// Cut sizes 1..=4 are searched by direct subset enumeration, which also
/// pins the tie-break: among all minimum cuts the lexicographically smallest
/// (as a sorted vertex list) is returned. Larger connectivities are first
/// measured by flow and then the same enumeration runs at exactly that size.
pub fn min_vertex_cut(g: &Graph) -> Result<CutAnalysis, CutError> {
    if !g.is_connected() {
        return Err(CutError::Disconnected);
    }
    if g.is_complete() {
        return Err(CutError::CompleteGraph);
    }
    let limit = (g.n() - 2).min(4);
    for size in 1..=limit {
        if let Some(cut) = first_disconnecting_subset(g, size) {
            return Ok(analyze(g, cut));
        }
    }
    let kappa = connectivity_by_flow(g);
    let cut = first_disconnecting_subset(g, kappa)
        .expect("a disconnecting set of size kappa exists");
    Ok(analyze(g, cut))
}
