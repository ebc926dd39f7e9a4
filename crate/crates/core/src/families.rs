//! Constructors for the named graphs used in tests and examples.

use crate::graph::Graph;

/// Path on `n` vertices: `0-1-...-(n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `n >= 3` vertices: `0-1-...-(n-1)-0`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0);
    g
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// The Petersen graph as the Kneser graph K(5,2): vertices are the 2-element
/// subsets of {0..4} in lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::empty(10);
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The Heawood graph from its LCF notation [5,-5]^7: a 14-cycle plus the
/// chord `i -> i+5` at even `i` (equivalently `i -> i-5` at odd `i`).
pub fn heawood() -> Graph {
    let mut g = cycle_graph(14);
    for i in (0..14).step_by(2) {
        g.add_edge(i, (i + 5) % 14);
    }
    g
}

/// Cubic graph from LCF notation: an n-cycle plus the chord `i -> i + d`
/// for each position, where `d` cycles through `pattern` repeated `reps`
/// times.
pub fn lcf_graph(pattern: &[i64], reps: usize) -> Graph {
    let n = pattern.len() * reps;
    let mut g = cycle_graph(n);
    for i in 0..n {
        let d = pattern[i % pattern.len()];
        let j = (i as i64 + d).rem_euclid(n as i64) as usize;
        g.add_edge(i, j);
    }
    g
}

/// The McGee graph, the smallest cubic graph of girth 7 (24 vertices).
pub fn mcgee() -> Graph {
    lcf_graph(&[12, 7, -7], 8)
}

/// The Tutte-Coxeter graph (Levi graph of GQ(2,2)): cubic, girth 8,
/// 30 vertices.
pub fn tutte_coxeter() -> Graph {
    lcf_graph(&[-13, -9, 7, -7, 9, 13], 5)
}

/// The Foster graph: cubic, girth 10, 90 vertices. Also exercises the
/// multi-word bitset path.
pub fn foster() -> Graph {
    lcf_graph(&[17, -9, 37, -37, 9, -17], 15)
}

/// The dodecahedron graph: cubic, girth 5, 20 vertices.
pub fn dodecahedron() -> Graph {
    lcf_graph(&[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)
}

/// The Pappus graph: cubic, girth 6, 18 vertices.
pub fn pappus() -> Graph {
    lcf_graph(&[5, 7, -7, 7, -7, -5], 3)
}

/// Two K4 blocks glued at vertex 3: {0,1,2,3} and {3,4,5,6} both complete.
pub fn two_k4_sharing_a_vertex() -> Graph {
    let mut g = Graph::empty(7);
    for block in [[0, 1, 2, 3], [3, 4, 5, 6]] {
        for i in 0..4 {
            for j in i + 1..4 {
                g.add_edge(block[i], block[j]);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graph_shapes() {
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        let h = heawood();
        assert_eq!((h.n(), h.edge_count()), (14, 21));
        assert!(h.vertices().all(|v| h.degree(v) == 3));
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        let g = two_k4_sharing_a_vertex();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(3), 6);
        g.validate().unwrap();
    }

    #[test]
    fn cage_girths() {
        use crate::detect::cycle_spectrum;
        for (g, n, girth) in [
            (mcgee(), 24, 7),
            (tutte_coxeter(), 30, 8),
            (dodecahedron(), 20, 5),
            (pappus(), 18, 6),
        ] {
            g.validate().unwrap();
            assert_eq!(g.n(), n);
            assert!(g.vertices().all(|v| g.degree(v) == 3), "not cubic at n={n}");
            let spectrum = cycle_spectrum(&g, girth);
            assert_eq!(
                spectrum.iter().next(),
                Some(&girth),
                "girth mismatch for n={n}"
            );
        }
        // Foster is big; check shape and the shortest cycle length only
        let f = foster();
        f.validate().unwrap();
        assert_eq!((f.n(), f.edge_count()), (90, 135));
        assert!(crate::detect::find_cycle_of_length(&f, 10).is_some());
        for len in 3..10 {
            assert!(
                crate::detect::find_cycle_of_length(&f, len).is_none(),
                "unexpected {len}-cycle in the Foster graph"
            );
        }
    }
}
