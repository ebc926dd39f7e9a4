//! Stress batch for the deep extraction flows.
//!
//! Uniform random graphs almost surely contain a 4-cycle and exit the
//! extractors at the first scan, so this test grows random 4-cycle-free
//! graphs instead (adding only edges that close no 4-cycle until the
//! degree floor holds) and drives both extractors across them. These
//! inputs land in the shortest-induced-cycle case analyses with varied
//! girths, triangles included, which the exhaustive small-order sweep can
//! never reach.

use egc_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const STRESS_SEED: u64 = 0xC4F2EE;
const STRESS_BATCH: usize = 2_000;

/// Would adding u-v close a 4-cycle? Exactly when some neighbor of u and
/// some neighbor of v are adjacent (a 3-edge path from u to v), or u and v
/// already share two common neighbors through an existing C4 path.
fn edge_closes_c4(g: &Graph, u: usize, v: usize) -> bool {
    for y in g.neighbors(u).iter() {
        if y == v {
            continue;
        }
        for x in g.neighbors(v).iter() {
            if x == u || x == y {
                continue;
            }
            if g.has_edge(x, y) {
                return true;
            }
        }
    }
    false
}

fn random_c4_free_min3(rng: &mut ChaCha8Rng, n: usize) -> Option<Graph> {
    let mut g = Graph::empty(n);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    // greedy pass: take every pair that keeps the graph C4-free
    for &(u, v) in &pairs {
        if !edge_closes_c4(&g, u, v) {
            g.add_edge(u, v);
        }
    }
    (g.min_degree() >= 3 && g.is_connected() && find_c4(&g).is_none()).then_some(g)
}

/// Same greedy construction restricted to a bipartition: no odd cycles and
/// no 4-cycles, so the girth and the shortest induced cycle are at least 6.
fn random_bipartite_c4_free_min3(rng: &mut ChaCha8Rng, half: usize) -> Option<Graph> {
    let n = 2 * half;
    let mut g = Graph::empty(n);
    let mut pairs: Vec<(usize, usize)> = (0..half)
        .flat_map(|u| (half..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    for &(u, v) in &pairs {
        if !edge_closes_c4(&g, u, v) {
            g.add_edge(u, v);
        }
    }
    (g.min_degree() >= 3 && g.is_connected()).then_some(g)
}

/// Isomorphic copy under a random relabeling. The extractors are
/// deterministic in the labeling, so each copy walks its own path through
/// the case analysis.
fn shuffled_copy(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = Graph::empty(g.n());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

/// Runs both extractors, checks the witnesses, and accumulates which
/// claims the traces touched.
fn drive(
    g: &Graph,
    claims_seen: &mut BTreeMap<String, usize>,
    kinds: &mut BTreeMap<String, usize>,
) {
    let (w8, t8) =
        eg_witness(g).unwrap_or_else(|e| panic!("eg extraction failed on {}: {e}", write_graph6(g)));
    assert!(
        verify_witness(g, &w8),
        "bad p8 witness {w8:?} on {}",
        write_graph6(g)
    );
    assert_ne!(w8.kind, WitnessKind::Cycle4, "input was 4-cycle-free");
    if w8.kind == WitnessKind::InducedP8 {
        assert!(!is_pk_free(g, 8));
    }
    assert!(t8.binds_in_range(g.n()));
    for e in &t8.events {
        *claims_seen.entry(e.claim.clone()).or_insert(0) += 1;
    }
    *kinds.entry(w8.kind.to_string()).or_insert(0) += 1;

    let (w5, _) =
        p5_witness(g).unwrap_or_else(|e| panic!("p5 extraction failed on {}: {e}", write_graph6(g)));
    assert!(verify_witness(g, &w5));
    assert_eq!(
        w5.kind,
        WitnessKind::InducedP5,
        "a 4-cycle-free graph must certify through an induced P5"
    );
}

#[test]
fn random_c4_free_batch_extracts_verified_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(STRESS_SEED);
    let mut claims_seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();

    // dense 4-cycle-free graphs: induced 5-cycles abound, so these sit in
    // the k=5 analysis
    let mut produced = 0usize;
    while produced < STRESS_BATCH {
        let n = rng.gen_range(10..=24);
        if let Some(g) = random_c4_free_min3(&mut rng, n) {
            assert!(find_c4(&g).is_none());
            drive(&g, &mut claims_seen, &mut kinds);
            produced += 1;
        }
    }
    for claim in ["Lemma2.1", "Claim2.1", "Claim2.2"] {
        assert!(
            claims_seen.contains_key(claim),
            "{claim} never exercised; seen: {claims_seen:?}"
        );
    }

    // bipartite 4-cycle-free graphs have no odd cycles: shortest induced
    // cycle 6, the k=6 analysis
    let mut bip_claims: BTreeMap<String, usize> = BTreeMap::new();
    produced = 0;
    while produced < 400 {
        let half = rng.gen_range(7..=14);
        if let Some(g) = random_bipartite_c4_free_min3(&mut rng, half) {
            assert!(find_c4(&g).is_none());
            drive(&g, &mut bip_claims, &mut kinds);
            produced += 1;
        }
    }
    assert!(
        bip_claims.contains_key("Claim2.3"),
        "k=6 analysis never exercised; seen: {bip_claims:?}"
    );

    // random relabelings of the girth-7 cage reach the final k=7 argument
    // along many different deterministic paths
    let mut g7_claims: BTreeMap<String, usize> = BTreeMap::new();
    let mcgee = families::mcgee();
    for _ in 0..200 {
        let g = shuffled_copy(&mut rng, &mcgee);
        assert!(find_c4(&g).is_none());
        drive(&g, &mut g7_claims, &mut kinds);
    }
    assert!(
        g7_claims.contains_key("K7Final"),
        "k=7 analysis never exercised; seen: {g7_claims:?}"
    );

    println!("stress outcomes: {kinds:?}");
    println!("k=5 batch claims: {claims_seen:?}");
    println!("k=6 batch claims: {bip_claims:?}");
    println!("k=7 batch claims: {g7_claims:?}");
}
