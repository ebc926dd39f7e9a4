//! Detection primitives: 4-cycles, fixed-length cycles, induced paths,
//! shortest induced cycles, cycle spectra, and power-of-two cycles.
//!
//! "Contains a 4-cycle / 8-cycle" always means subgraph containment (chords
//! allowed). "Induced" is reserved for paths and for chordless cycles; an
//! induced cycle has no chords at all.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::BTreeSet;

/// A path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath {
    pub vertices: Vec<usize>,
}

impl VertexPath {
    /// Consecutive vertices adjacent, all vertices distinct.
    pub fn is_valid_path(&self, g: &Graph) -> bool {
        distinct_in_range(&self.vertices, g.n())
            && self
                .vertices
                .windows(2)
                .all(|w| g.has_edge(w[0], w[1]))
    }

    /// Valid path with every non-consecutive pair non-adjacent.
    pub fn is_induced_path(&self, g: &Graph) -> bool {
        if !self.is_valid_path(g) {
            return false;
        }
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 2..k {
                if g.has_edge(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A cycle given by its vertex sequence, closed from last back to first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCycle {
    pub vertices: Vec<usize>,
}

impl VertexCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices, cyclically consecutive-adjacent, length >= 3.
    pub fn is_valid_cycle(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        k >= 3
            && distinct_in_range(&self.vertices, g.n())
            && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Valid cycle with no chords.
    pub fn is_induced_cycle(&self, g: &Graph) -> bool {
        if !self.is_valid_cycle(g) {
            return false;
        }
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        true
    }
}

fn distinct_in_range(vs: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    vs.iter().all(|&v| {
        if v >= n || seen[v] {
            false
        } else {
            seen[v] = true;
            true
        }
    })
}

/// Finds a 4-cycle as `a-x-b-y` where `(a, b)` is the lexicographically
/// smallest pair with two common neighbors and `x < y` are the two smallest
/// of those. None exactly when no two vertices share two common neighbors.
pub fn find_c4(g: &Graph) -> Option<VertexCycle> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            let mut common = g.neighbors(a).intersection(g.neighbors(b));
            common.remove(a);
            common.remove(b);
            if common.len() >= 2 {
                let mut it = common.iter();
                let x = it.next().unwrap();
                let y = it.next().unwrap();
                return Some(VertexCycle {
                    vertices: vec![a, x, b, y],
                });
            }
        }
    }
    None
}

/// Depth-first search for a (not necessarily induced) cycle on exactly
/// `len` vertices, anchored at the smallest vertex of the candidate cycle.
/// Reachability pruning keeps the search cheap on sparse graphs.
pub fn find_cycle_of_length(g: &Graph, len: usize) -> Option<VertexCycle> {
    let n = g.n();
    if !(3..=n).contains(&len) {
        return None;
    }
    for anchor in 0..n {
        let mut path = vec![anchor];
        let mut used = VertexSet::new(n);
        used.insert(anchor);
        if extend_cycle(g, anchor, len, &mut path, &mut used) {
            return Some(VertexCycle { vertices: path });
        }
    }
    None
}

fn extend_cycle(
    g: &Graph,
    anchor: usize,
    len: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let tip = *path.last().unwrap();
    if path.len() == len {
        return g.has_edge(tip, anchor);
    }
    // Every remaining cycle vertex exceeds the anchor and is unused; the
    // anchor must stay reachable through them in the remaining edge budget
    // (one edge per new vertex plus the closing edge).
    if !anchor_reachable(g, anchor, tip, used, len - path.len() + 1) {
        return false;
    }
    for next in g.neighbors(tip).iter() {
        if next <= anchor || used.contains(next) {
            continue;
        }
        path.push(next);
        used.insert(next);
        if extend_cycle(g, anchor, len, path, used) {
            return true;
        }
        path.pop();
        used.remove(next);
    }
    false
}

/// BFS bound: can `anchor` be reached from `tip` in at most `steps` moves
/// through vertices above the anchor and outside the current path?
fn anchor_reachable(g: &Graph, anchor: usize, tip: usize, used: &VertexSet, steps: usize) -> bool {
    let mut frontier = VertexSet::new(g.n());
    frontier.insert(tip);
    let mut seen = frontier.clone();
    for _ in 0..steps {
        let mut next = VertexSet::new(g.n());
        for v in frontier.iter() {
            next.union_with(g.neighbors(v));
        }
        if next.contains(anchor) {
            return true;
        }
        // restrict to allowed midpoints
        next.difference_with(&seen);
        next.difference_with(used);
        let mut allowed = next.clone();
        for v in next.iter() {
            if v <= anchor {
                allowed.remove(v);
            }
        }
        if allowed.is_empty() {
            return false;
        }
        seen.union_with(&allowed);
        frontier = allowed;
    }
    false
}

/// Backtracking search over induced paths. Returns the first path reaching
/// `stop_at` vertices (early exit), otherwise a maximum-length induced path.
/// Lengths count vertices. Callers wanting the true maximum pass `stop_at = n`.
pub fn longest_induced_path(g: &Graph, stop_at: usize) -> (usize, VertexPath) {
    assert!(stop_at >= 1);
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    if n == 0 {
        return (0, VertexPath { vertices: best });
    }
    let mut path = Vec::new();
    for start in 0..n {
        path.push(start);
        if extend_induced_path(g, stop_at, &mut path, &mut best) {
            break;
        }
        path.pop();
    }
    (best.len(), VertexPath { vertices: best })
}

fn extend_induced_path(
    g: &Graph,
    stop_at: usize,
    path: &mut Vec<usize>,
    best: &mut Vec<usize>,
) -> bool {
    if path.len() > best.len() {
        *best = path.clone();
    }
    if path.len() >= stop_at {
        return true;
    }
    let tip = *path.last().unwrap();
    'next: for cand in g.neighbors(tip).iter() {
        // cand must see only the tip among path vertices
        for &p in path[..path.len() - 1].iter() {
            if cand == p || g.has_edge(cand, p) {
                continue 'next;
            }
        }
        path.push(cand);
        if extend_induced_path(g, stop_at, path, best) {
            return true;
        }
        path.pop();
    }
    false
}

/// True when the graph has no induced path on `k` vertices.
pub fn is_pk_free(g: &Graph, k: usize) -> bool {
    longest_induced_path(g, k).0 < k
}

/// Shortest induced (chordless) cycle of length at least `lo`; ties broken
/// by lexicographic vertex sequence. Searches each target length in turn,
/// so the first hit is minimum by construction.
pub fn shortest_induced_cycle_at_least(g: &Graph, lo: usize) -> Option<VertexCycle> {
    assert!(lo >= 3);
    for len in lo..=g.n() {
        for anchor in 0..g.n() {
            let mut path = vec![anchor];
            if extend_chordless(g, anchor, len, &mut path) {
                return Some(VertexCycle { vertices: path });
            }
        }
    }
    None
}

fn extend_chordless(g: &Graph, anchor: usize, len: usize, path: &mut Vec<usize>) -> bool {
    let pos = path.len();
    if pos == len {
        return true; // closing adjacency was enforced when placing the last vertex
    }
    let tip = *path.last().unwrap();
    'next: for cand in g.neighbors(tip).iter() {
        if cand <= anchor {
            continue;
        }
        // Anchor adjacency: automatic at position 1, required at the closing
        // position, and a forbidden chord everywhere in between.
        if pos >= 2 {
            let closing = pos == len - 1;
            if g.has_edge(cand, anchor) != closing {
                continue;
            }
        }
        // no chords to interior vertices, no repeats
        for &p in path[1..pos].iter() {
            if cand == p || (p != tip && g.has_edge(cand, p)) {
                continue 'next;
            }
        }
        path.push(cand);
        if extend_chordless(g, anchor, len, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// All cycle lengths present in the graph, up to `max_len`.
pub fn cycle_spectrum(g: &Graph, max_len: usize) -> BTreeSet<usize> {
    (3..=max_len.min(g.n()))
        .filter(|&len| find_cycle_of_length(g, len).is_some())
        .collect()
}

/// Smallest `m >= 2` such that the graph has a cycle on `2^m` vertices,
/// with a witness cycle.
pub fn power_of_two_cycle(g: &Graph) -> Option<(u32, VertexCycle)> {
    let mut m = 2u32;
    loop {
        let len = 1usize << m;
        if len > g.n() {
            return None;
        }
        if let Some(c) = find_cycle_of_length(g, len) {
            return Some((m, c));
        }
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, heawood, path_graph, petersen};

    /// Exhaustive oracle: does any cycle on exactly `len` vertices exist?
    /// All subsets, then all rotations-as-permutations of each subset.
    fn oracle_has_cycle(g: &Graph, len: usize) -> bool {
        let n = g.n();
        assert!(n <= 20);
        fn perm_search(g: &Graph, rest: &mut Vec<usize>, seq: &mut Vec<usize>) -> bool {
            if rest.is_empty() {
                return g.has_edge(*seq.last().unwrap(), seq[0]);
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                let ok = g.has_edge(*seq.last().unwrap(), v);
                seq.push(v);
                if ok && perm_search(g, rest, seq) {
                    return true;
                }
                seq.pop();
                rest.insert(i, v);
            }
            false
        }
        fn subset_search(g: &Graph, len: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == len {
                let mut rest = chosen[1..].to_vec();
                let mut seq = vec![chosen[0]];
                return perm_search(g, &mut rest, &mut seq);
            }
            for v in from..g.n() {
                chosen.push(v);
                if subset_search(g, len, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        subset_search(g, len, 0, &mut Vec::new())
    }

    #[test]
    fn c4_detection() {
        let c = find_c4(&Graph::complete(4)).unwrap();
        assert!(c.is_valid_cycle(&Graph::complete(4)));
        assert_eq!(c.vertices, vec![0, 2, 1, 3]);
        assert!(find_c4(&petersen()).is_none());
        assert!(find_c4(&cycle_graph(8)).is_none());
        // girth of the Petersen graph is 5 per the oracle
        assert!(!oracle_has_cycle(&petersen(), 3));
        assert!(!oracle_has_cycle(&petersen(), 4));
        assert!(oracle_has_cycle(&petersen(), 5));
    }

    #[test]
    fn c4_iff_two_common_neighbors() {
        for g in [petersen(), cycle_graph(8), Graph::complete(4), heawood()] {
            let pairwise = (0..g.n()).any(|a| {
                (a + 1..g.n()).any(|b| {
                    let mut c = g.neighbors(a).intersection(g.neighbors(b));
                    c.remove(a);
                    c.remove(b);
                    c.len() >= 2
                })
            });
            assert_eq!(find_c4(&g).is_some(), pairwise);
        }
    }

    #[test]
    fn fixed_length_cycles() {
        let c = find_cycle_of_length(&cycle_graph(8), 8).unwrap();
        assert_eq!(c.vertices, (0..8).collect::<Vec<_>>());

        let c = find_cycle_of_length(&petersen(), 8).unwrap();
        assert!(c.is_valid_cycle(&petersen()));
        assert_eq!(c.len(), 8);
        assert!(oracle_has_cycle(&petersen(), 8));

        assert!(find_cycle_of_length(&heawood(), 4).is_none());
        assert!(!oracle_has_cycle(&heawood(), 4));
        assert!(find_cycle_of_length(&heawood(), 6).is_some());
    }

    #[test]
    fn petersen_spectrum() {
        let spec = cycle_spectrum(&petersen(), 10);
        assert_eq!(spec.into_iter().collect::<Vec<_>>(), vec![5, 6, 8, 9]);
        for len in 3..=10 {
            assert_eq!(
                find_cycle_of_length(&petersen(), len).is_some(),
                oracle_has_cycle(&petersen(), len),
                "length {len}"
            );
        }
        assert_eq!(cycle_spectrum(&cycle_graph(8), 8).into_iter().collect::<Vec<_>>(), vec![8]);
        assert_eq!(cycle_spectrum(&Graph::complete(4), 4).into_iter().collect::<Vec<_>>(), vec![3, 4]);
    }

    #[test]
    fn induced_paths() {
        let (len, p) = longest_induced_path(&path_graph(8), 8);
        assert_eq!(len, 8);
        assert!(p.is_induced_path(&path_graph(8)));

        // C7: the 7-vertex traversal closes into the cycle, so 6 is the max.
        let (len, p) = longest_induced_path(&cycle_graph(7), 8);
        assert_eq!(len, 6);
        assert!(p.is_induced_path(&cycle_graph(7)));
        assert!(is_pk_free(&cycle_graph(7), 8));
        assert!(!is_pk_free(&cycle_graph(7), 6));
    }

    #[test]
    fn induced_path_early_exit() {
        let (len, p) = longest_induced_path(&path_graph(20), 5);
        assert_eq!(len, 5);
        assert_eq!(p.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn petersen_longest_induced_path_is_pinned() {
        // exhaustive value, frozen as a regression constant
        let (len, p) = longest_induced_path(&petersen(), 10);
        assert_eq!(len, 5);
        assert!(p.is_induced_path(&petersen()));
        assert!(is_pk_free(&petersen(), 6));
        assert!(!is_pk_free(&petersen(), 5));
    }

    #[test]
    fn shortest_induced_cycles() {
        let c = shortest_induced_cycle_at_least(&petersen(), 5).unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.is_induced_cycle(&petersen()));

        let c = shortest_induced_cycle_at_least(&heawood(), 5).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.is_induced_cycle(&heawood()));

        assert!(shortest_induced_cycle_at_least(&Graph::complete(4), 5).is_none());

        // monotone in the lower bound
        let l5 = shortest_induced_cycle_at_least(&petersen(), 5).unwrap().len();
        let l6 = shortest_induced_cycle_at_least(&petersen(), 6).unwrap().len();
        assert!(l6 >= l5);
    }

    #[test]
    fn power_of_two_cycles() {
        let (m, c) = power_of_two_cycle(&Graph::complete(4)).unwrap();
        assert_eq!(m, 2);
        assert!(c.is_valid_cycle(&Graph::complete(4)));

        let (m, c) = power_of_two_cycle(&petersen()).unwrap();
        assert_eq!(m, 3);
        assert_eq!(c.len(), 8);

        assert!(power_of_two_cycle(&cycle_graph(7)).is_none());
    }
}
