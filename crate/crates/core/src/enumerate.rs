//! Isomorph-free generation of small graphs with a minimum-degree floor.
//!
//! Canonical form: the lexicographically smallest upper-triangle adjacency
//! bit string, read in column order (0,1),(0,2),(1,2),(0,3),..., over all
//! vertex permutations. A key property of the column order is that every
//! prefix of a canonical string is the canonical string of the induced
//! prefix subgraph, so non-canonical partial graphs can be rejected as soon
//! as they appear. Degree feasibility (each placed vertex must still be able
//! to reach the floor through future vertices) prunes the rest.

use crate::graph::Graph;
use thiserror::Error;

/// Internal generation is exhaustive-search based and capped here; larger
/// orders are ingested from external graph6 streams.
pub const MAX_INTERNAL_ORDER: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("internal generation supports n <= {MAX_INTERNAL_ORDER}, got {0}; use a graph6 stream")]
    OrderTooLarge(usize),
}

/// Is the graph its own canonical form? Branch-and-bound over permutations:
/// explore assignments whose partial code stays equal to the graph's own,
/// answer no the moment any column comes out smaller.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    // reference columns of the identity labeling
    let ref_cols: Vec<u32> = (0..n)
        .map(|p| {
            let mut c = 0u32;
            for q in 0..p {
                c = (c << 1) | u32::from(g.has_edge(q, p));
            }
            c
        })
        .collect();
    let mut chosen = Vec::with_capacity(n);
    let mut used = vec![false; n];
    !smaller_perm_exists(g, &ref_cols, &mut chosen, &mut used)
}

fn smaller_perm_exists(
    g: &Graph,
    ref_cols: &[u32],
    chosen: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let p = chosen.len();
    if p == g.n() {
        return false; // a complete assignment equal to the reference
    }
    for u in 0..g.n() {
        if used[u] {
            continue;
        }
        let mut cand = 0u32;
        for &c in chosen.iter() {
            cand = (cand << 1) | u32::from(g.has_edge(c, u));
        }
        if cand < ref_cols[p] {
            return true;
        }
        if cand == ref_cols[p] {
            chosen.push(u);
            used[u] = true;
            let found = smaller_perm_exists(g, ref_cols, chosen, used);
            chosen.pop();
            used[u] = false;
            if found {
                return true;
            }
        }
    }
    false
}

/// Calls `f` once per isomorphism class of connected graphs on `n` vertices
/// with minimum degree >= `min_degree`, in ascending canonical-form order.
pub fn for_each_nonisomorphic(
    n: usize,
    min_degree: usize,
    f: &mut impl FnMut(&Graph),
) -> Result<(), EnumerateError> {
    if n > MAX_INTERNAL_ORDER {
        return Err(EnumerateError::OrderTooLarge(n));
    }
    if n == 0 {
        return Ok(());
    }
    let seed = Graph::empty(1);
    extend(&seed, n, min_degree, f);
    Ok(())
}

pub fn generate_nonisomorphic(n: usize, min_degree: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for_each_nonisomorphic(n, min_degree, &mut |g| out.push(g.clone()))?;
    Ok(out)
}

fn extend(prefix: &Graph, n_target: usize, min_degree: usize, f: &mut impl FnMut(&Graph)) {
    let j = prefix.n();
    if j == n_target {
        if prefix.min_degree() >= min_degree && prefix.is_connected() {
            f(prefix);
        }
        return;
    }
    // add vertex j; enumerate its backward neighborhoods in the code's
    // lexicographic order (bit for row 0 is the most significant)
    for col in 0u32..1 << j {
        let mut g = Graph::empty(j + 1);
        for (u, v) in prefix.edges() {
            g.add_edge(u, v);
        }
        for q in 0..j {
            if col >> (j - 1 - q) & 1 == 1 {
                g.add_edge(q, j);
            }
        }
        // every placed vertex must still be able to reach the degree floor
        let future = n_target - 1 - j;
        if (0..=j).any(|v| g.degree(v) + future < min_degree) {
            continue;
        }
        if !is_canonical(&g) {
            continue;
        }
        extend(&g, n_target, min_degree, f);
    }
}
