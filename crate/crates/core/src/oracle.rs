//! Independent brute-force existence oracle for the four witness kinds.
//!
//! Decides by plain sequence enumeration over a boolean adjacency matrix,
//! deliberately sharing nothing with the detectors or the extractors; the
//! acceptance tests play it against both.

use crate::graph::Graph;
use crate::witness::WitnessKind;
use thiserror::Error;

/// Exhaustive sequence enumeration is kept to desk scale: length-8 kinds
/// cap at 12 vertices, the short kinds at 16.
pub const MAX_ORACLE_ORDER_LONG: usize = 12;
pub const MAX_ORACLE_ORDER_SHORT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force oracle supports n <= {limit} for this witness kind, got {n}")]
    OrderTooLarge { n: usize, limit: usize },
}

/// Does the graph contain the structure certified by `kind`? Cycles allow
/// chords; induced paths forbid every non-consecutive adjacency.
pub fn brute_force_witness_exists(g: &Graph, kind: WitnessKind) -> Result<bool, OracleError> {
    let n = g.n();
    let limit = if kind.expected_len() >= 8 {
        MAX_ORACLE_ORDER_LONG
    } else {
        MAX_ORACLE_ORDER_SHORT
    };
    if n > limit {
        return Err(OracleError::OrderTooLarge { n, limit });
    }
    let len = kind.expected_len();
    if n < len {
        return Ok(false);
    }
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut seq = Vec::with_capacity(len);
    let mut used = vec![false; n];
    let found = if kind.is_cycle() {
        // anchor each candidate cycle at its smallest vertex
        (0..n).any(|start| {
            seq.clear();
            seq.push(start);
            used[start] = true;
            let hit = cycle_seq(&adj, start, len, &mut seq, &mut used);
            used[start] = false;
            hit
        })
    } else {
        (0..n).any(|start| {
            seq.clear();
            seq.push(start);
            used[start] = true;
            let hit = induced_path_seq(&adj, len, &mut seq, &mut used);
            used[start] = false;
            hit
        })
    };
    Ok(found)
}

fn cycle_seq(
    adj: &[Vec<bool>],
    anchor: usize,
    len: usize,
    seq: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let last = *seq.last().unwrap();
    if seq.len() == len {
        return adj[last][anchor];
    }
    for v in anchor + 1..adj.len() {
        if !used[v] && adj[last][v] {
            seq.push(v);
            used[v] = true;
            let hit = cycle_seq(adj, anchor, len, seq, used);
            seq.pop();
            used[v] = false;
            if hit {
                return true;
            }
        }
    }
    false
}

fn induced_path_seq(adj: &[Vec<bool>], len: usize, seq: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if seq.len() == len {
        return true;
    }
    let last = *seq.last().unwrap();
    'next: for v in 0..adj.len() {
        if used[v] || !adj[last][v] {
            continue;
        }
        for &p in &seq[..seq.len() - 1] {
            if adj[p][v] {
                continue 'next;
            }
        }
        seq.push(v);
        used[v] = true;
        let hit = induced_path_seq(adj, len, seq, used);
        seq.pop();
        used[v] = false;
        if hit {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, path_graph, petersen};

    #[test]
    fn validated_on_cycles_first() {
        let c8 = cycle_graph(8);
        assert_eq!(brute_force_witness_exists(&c8, WitnessKind::Cycle8), Ok(true));
        assert_eq!(brute_force_witness_exists(&c8, WitnessKind::Cycle4), Ok(false));
        let c7 = cycle_graph(7);
        assert_eq!(brute_force_witness_exists(&c7, WitnessKind::Cycle8), Ok(false));
        assert_eq!(brute_force_witness_exists(&c7, WitnessKind::Cycle4), Ok(false));
    }

    #[test]
    fn named_cases() {
        assert_eq!(
            brute_force_witness_exists(&petersen(), WitnessKind::Cycle8),
            Ok(true)
        );
        assert_eq!(
            brute_force_witness_exists(&path_graph(8), WitnessKind::InducedP8),
            Ok(true)
        );
        assert_eq!(
            brute_force_witness_exists(&petersen(), WitnessKind::Cycle4),
            Ok(false)
        );
        // the 8-vertex traversal of C8 is closed by the cycle edge
        assert_eq!(
            brute_force_witness_exists(&cycle_graph(8), WitnessKind::InducedP8),
            Ok(false)
        );
    }

    #[test]
    fn order_caps_by_kind() {
        let g = Graph::empty(13);
        assert_eq!(
            brute_force_witness_exists(&g, WitnessKind::Cycle8),
            Err(OracleError::OrderTooLarge { n: 13, limit: 12 })
        );
        assert_eq!(brute_force_witness_exists(&g, WitnessKind::Cycle4), Ok(false));
        let g = Graph::empty(17);
        assert_eq!(
            brute_force_witness_exists(&g, WitnessKind::InducedP5),
            Err(OracleError::OrderTooLarge { n: 17, limit: 16 })
        );
    }
}
