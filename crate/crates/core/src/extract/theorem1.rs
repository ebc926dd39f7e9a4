//! Extractor for the five-vertex theorem: a connected graph with minimum
//! degree >= 3 yields a 4-cycle or an induced P5.
//!
//! The case analysis runs over a minimum cut-set S and the CNC
//! classification of its components. Each "this adjacency would close a
//! 4-cycle" step is tested and returns that cycle when it fires, so the
//! procedure covers all inputs, not just the 4-cycle-free ones the
//! contradiction argument assumes.

use super::{Ctx, Step};
use crate::cut::{min_vertex_cut, CutAnalysis};
use crate::detect::find_c4;

pub(super) fn extract_connected(ctx: &mut Ctx) -> Step {
    if let Some(c) = find_c4(ctx.g) {
        let v = &c.vertices;
        return ctx.cycle4([v[0], v[1], v[2], v[3]]);
    }
    if ctx.g.is_complete() {
        // K_n with n >= 4 contains a 4-cycle, so the scan above must fire.
        return Err("complete component with min degree >= 3 escaped the 4-cycle scan".into());
    }
    let cut = min_vertex_cut(ctx.g)
        .map_err(|e| format!("minimum cut failed on a connected non-complete component: {e}"))?;
    for (i, &x) in cut.cut_vertices.iter().enumerate() {
        for (d, comp) in cut.components.iter().enumerate() {
            if comp.intersection(ctx.g.neighbors(x)).is_empty() {
                return Err(format!(
                    "Claim1.i: cut vertex {x} has no neighbor in component {d}"
                ));
            }
        }
        let _ = i;
    }

    // Some cut vertex with two non-CNCs ends the argument immediately.
    for (xi, &x) in cut.cut_vertices.iter().enumerate() {
        let non = cut.non_cncs_of(xi);
        if non.len() >= 2 {
            return two_non_cncs(ctx, &cut, x, non[0], non[1]);
        }
    }

    // Every cut vertex now has at most one non-CNC. Locate a non-adjacent
    // pair inside S, or fall out with a 4-cycle on the way.
    let (x, y) = match nonadjacent_pair_in_cut(ctx, &cut)? {
        PairOrDone::Done(w) => return Ok(w),
        PairOrDone::Pair(x, y) => (x, y),
    };
    let xi = cut.cut_vertices.iter().position(|&v| v == x).unwrap();
    let yi = cut.cut_vertices.iter().position(|&v| v == y).unwrap();

    // Common CNCs of x and y: any of size two closes a 4-cycle, and so do
    // two distinct ones.
    let commons = cut.common_cncs(xi, yi);
    for &d in &commons {
        if cut.components[d].len() >= 2 {
            let mut it = cut.components[d].iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            ctx.trace.push(
                "Claim1.v",
                "CommonCncOfSizeTwo",
                &[("x", x), ("y", y), ("u", u), ("v", v)],
            );
            return ctx.cycle4([x, u, y, v]);
        }
    }
    if commons.len() >= 2 {
        let u1 = cut.components[commons[0]].min_elem().unwrap();
        let u2 = cut.components[commons[1]].min_elem().unwrap();
        ctx.trace.push(
            "Claim1.vi",
            "TwoCommonCncs",
            &[("x", x), ("y", y), ("u1", u1), ("u2", u2)],
        );
        return ctx.cycle4([x, u1, y, u2]);
    }

    match cut.component_count() {
        2 => two_components(ctx, &cut, x, y, xi, yi, commons.first().copied()),
        3 => three_components(ctx, &cut, x, y, xi, yi, &commons),
        c => Err(format!(
            "c(G-S)={c} >= 4 leaves x and y with at least two common CNCs, \
             but only {} were found",
            commons.len()
        )),
    }
}

/// Two non-CNCs D1, D2 of one cut vertex: shortest paths inside each from a
/// non-neighbor of x to the nearest neighbor of x meet at x in an induced
/// P5 window.
fn two_non_cncs(ctx: &mut Ctx, cut: &CutAnalysis, x: usize, d1: usize, d2: usize) -> Step {
    let (x1, p1) = path_to_nearest_neighbor(ctx, cut, x, d1)?;
    let (x2, p2) = path_to_nearest_neighbor(ctx, cut, x, d2)?;
    ctx.trace.push(
        "Claim1.ii",
        "TwoNonCncs",
        &[("x", x), ("u1", p1.0), ("x1", x1), ("u2", p2.0), ("x2", x2)],
    );
    // window (pred(x1), x1, x, x2, succ(x2)) of the concatenated path
    ctx.induced_p5([p1.1, x1, x, x2, p2.1])
}

/// Inside component `d`, finds the smallest non-neighbor u of x and walks a
/// shortest path to the nearest neighbor of x. Returns that endpoint and
/// (u, predecessor-of-endpoint); the predecessor is u itself at distance 1.
fn path_to_nearest_neighbor(
    ctx: &Ctx,
    cut: &CutAnalysis,
    x: usize,
    d: usize,
) -> Result<(usize, (usize, usize)), String> {
    let comp = &cut.components[d];
    let u = comp
        .iter()
        .find(|&v| !ctx.adj(x, v))
        .ok_or_else(|| format!("component {d} marked non-CNC of {x} but all vertices adjacent"))?;
    let targets: Vec<usize> = comp.iter().filter(|&v| ctx.adj(x, v)).collect();
    if targets.is_empty() {
        return Err(format!("Claim1.i: no neighbor of {x} in component {d}"));
    }
    // BFS from u within the component
    let n = ctx.g.n();
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        for w in ctx.g.neighbors(v).iter() {
            if comp.contains(w) && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let x1 = targets
        .iter()
        .copied()
        .filter(|&t| dist[t] != usize::MAX)
        .min_by_key(|&t| (dist[t], t))
        .ok_or_else(|| format!("no neighbor of {x} reachable from {u} inside component {d}"))?;
    let pred = if dist[x1] == 1 {
        u
    } else {
        ctx.g
            .neighbors(x1)
            .iter()
            .find(|&w| comp.contains(w) && dist[w] == dist[x1] - 1)
            .ok_or("BFS predecessor missing")?
    };
    Ok((x1, (u, pred)))
}

enum PairOrDone {
    Pair(usize, usize),
    Done(crate::witness::Witness),
}

/// Locates two non-adjacent vertices of the cut-set, or exits with one of
/// the 4-cycles the construction exhibits along the way.
fn nonadjacent_pair_in_cut(ctx: &mut Ctx, cut: &CutAnalysis) -> Result<PairOrDone, String> {
    let x = cut.cut_vertices[0];
    let cncs: Vec<usize> = (0..cut.components.len())
        .filter(|&d| cut.is_cnc(0, d))
        .collect();
    let &d = cncs
        .first()
        .ok_or("cut vertex with no CNC after the two-non-CNC scan")?;
    let comp = &cut.components[d];

    if comp.len() >= 3 {
        // A CNC on three or more vertices always closes a 4-cycle through x.
        let vs = comp.to_vec();
        let complete = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| ctx.adj(a, b)));
        if complete {
            let (a, b, c) = (vs[0], vs[1], vs[2]);
            ctx.trace.push(
                "Claim1.iii",
                "CompleteCnc",
                &[("x", x), ("u1", a), ("u2", b), ("u3", c)],
            );
            return ctx.cycle4([x, a, b, c]).map(PairOrDone::Done);
        }
        // otherwise the component holds an induced P3 a-b-c
        for (i, &a) in vs.iter().enumerate() {
            for &c in &vs[i + 1..] {
                if ctx.adj(a, c) {
                    continue;
                }
                let common = ctx
                    .g
                    .neighbors(a)
                    .intersection(ctx.g.neighbors(c))
                    .intersection(comp);
                if let Some(b) = common.min_elem() {
                    ctx.trace.push(
                        "Claim1.iii",
                        "InducedP3InCnc",
                        &[("x", x), ("u1", a), ("u2", b), ("u3", c)],
                    );
                    return ctx.cycle4([x, a, b, c]).map(PairOrDone::Done);
                }
            }
        }
        return Err("connected non-complete CNC without an induced P3".into());
    }

    let u = comp.min_elem().unwrap();
    let s_nbrs: Vec<usize> = cut
        .cut_vertices
        .iter()
        .copied()
        .filter(|&s| ctx.adj(u, s))
        .collect();

    if s_nbrs.len() >= 3 {
        // Either two of them are non-adjacent, or three of them close a
        // 4-cycle through u.
        for (i, &p) in s_nbrs.iter().enumerate() {
            for &q in &s_nbrs[i + 1..] {
                if !ctx.adj(p, q) {
                    ctx.trace.push(
                        "Claim1.viii",
                        "PairAmongCutNeighbors",
                        &[("u", u), ("x", p), ("y", q)],
                    );
                    return Ok(PairOrDone::Pair(p, q));
                }
            }
        }
        let (a, b, c) = (s_nbrs[0], s_nbrs[1], s_nbrs[2]);
        ctx.trace.push(
            "Claim1.viii",
            "CliqueAroundCncVertex",
            &[("u", u), ("x", a), ("y", b), ("z", c)],
        );
        return ctx.cycle4([u, a, b, c]).map(PairOrDone::Done);
    }

    if comp.len() == 2 {
        let v = comp.iter().find(|&w| w != u).unwrap();
        if !ctx.adj(u, v) {
            return Err("two-vertex component is disconnected".into());
        }
        let y = s_nbrs
            .iter()
            .copied()
            .find(|&s| s != x)
            .ok_or("CNC vertex with degree < 3: no second cut neighbor")?;
        if ctx.adj(x, y) {
            ctx.trace.push(
                "Claim1.viii",
                "AdjacentYClosesCycle",
                &[("x", x), ("y", y), ("u", u), ("v", v)],
            );
            return ctx.cycle4([y, u, v, x]).map(PairOrDone::Done);
        }
        ctx.trace.push(
            "Claim1.viii",
            "PairThroughCncEdge",
            &[("x", x), ("y", y), ("u", u), ("v", v)],
        );
        return Ok(PairOrDone::Pair(x, y));
    }

    Err(format!(
        "singleton CNC vertex {u} has at most two cut neighbors and no others, \
         violating the degree floor"
    ))
}

/// c(G-S) = 3: the unique common CNC of x and y plus one private CNC each
/// give the induced path u3-y-u1-x-u2.
fn three_components(
    ctx: &mut Ctx,
    cut: &CutAnalysis,
    x: usize,
    y: usize,
    xi: usize,
    yi: usize,
    commons: &[usize],
) -> Step {
    let &d1 = commons
        .first()
        .ok_or("c=3 but x and y share no CNC, contradicting the counting bound")?;
    let u1 = cut.components[d1].min_elem().unwrap();
    let d2 = (0..3)
        .find(|&d| d != d1 && cut.is_cnc(xi, d))
        .ok_or("x has fewer than two CNCs with c=3")?;
    let d3 = (0..3)
        .find(|&d| d != d1 && cut.is_cnc(yi, d))
        .ok_or("y has fewer than two CNCs with c=3")?;
    if d2 == d3 {
        return Err("second common CNC escaped the earlier scan".into());
    }
    let u2 = cut.components[d2].min_elem().unwrap();
    let u3 = cut.components[d3].min_elem().unwrap();
    if ctx.adj(u3, x) {
        ctx.trace.push(
            "Claim2",
            "U3AdjacentX",
            &[("x", x), ("y", y), ("u1", u1), ("u3", u3)],
        );
        return ctx.cycle4([x, u1, y, u3]);
    }
    if ctx.adj(u2, y) {
        ctx.trace.push(
            "Claim2",
            "U2AdjacentY",
            &[("x", x), ("y", y), ("u1", u1), ("u2", u2)],
        );
        return ctx.cycle4([x, u1, y, u2]);
    }
    ctx.trace.push(
        "Claim2",
        "ThreeComponents",
        &[("x", x), ("y", y), ("u1", u1), ("u2", u2), ("u3", u3)],
    );
    ctx.induced_p5([u3, y, u1, x, u2])
}

/// c(G-S) = 2: either no common CNC (immediate 4-cycle) or a singleton
/// common CNC whose neighborhood drives the final case split.
fn two_components(
    ctx: &mut Ctx,
    cut: &CutAnalysis,
    x: usize,
    y: usize,
    xi: usize,
    yi: usize,
    common: Option<usize>,
) -> Step {
    let Some(d) = common else {
        // x and y each have exactly one CNC and they differ
        let dx = (0..2)
            .find(|&d| cut.is_cnc(xi, d))
            .ok_or("x has no CNC with c=2")?;
        let dy = (0..2)
            .find(|&d| cut.is_cnc(yi, d))
            .ok_or("y has no CNC with c=2")?;
        if dx == dy {
            return Err("common CNC escaped the earlier scan".into());
        }
        let y1 = ctx
            .g
            .neighbors(y)
            .intersection(&cut.components[dx])
            .min_elem()
            .ok_or("Claim1.i: y has no neighbor in x's CNC")?;
        let x1 = ctx
            .g
            .neighbors(x)
            .intersection(&cut.components[dy])
            .min_elem()
            .ok_or("Claim1.i: x has no neighbor in y's CNC")?;
        ctx.trace.push(
            "T1.Case.NoCommonCNC",
            "CrossEdgesCloseCycle",
            &[("x", x), ("y", y), ("x1", x1), ("y1", y1)],
        );
        return ctx.cycle4([x, y1, y, x1]);
    };

    let u = cut.components[d].min_elem().unwrap();
    let other = &cut.components[1 - d];
    let nx = ctx.g.neighbors(x).intersection(other);
    let ny = ctx.g.neighbors(y).intersection(other);
    if let Some(w) = nx.intersection(&ny).min_elem() {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "SecondCommonNeighbor",
            &[("x", x), ("y", y), ("u", u), ("z", w)],
        );
        return ctx.cycle4([x, u, y, w]);
    }
    let x1 = nx
        .min_elem()
        .ok_or("Claim1.i: x has no neighbor in the second component")?;
    let y1 = ny
        .min_elem()
        .ok_or("Claim1.i: y has no neighbor in the second component")?;
    if !ctx.adj(x1, y1) {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "X1NotAdjacentY1",
            &[("x", x), ("y", y), ("u", u), ("x1", x1), ("y1", y1)],
        );
        return ctx.induced_p5([x1, x, u, y, y1]);
    }
    let z = cut
        .cut_vertices
        .iter()
        .copied()
        .find(|&s| s != x && s != y && ctx.adj(u, s))
        .ok_or("singleton common CNC vertex has no third cut neighbor despite degree >= 3")?;
    if ctx.adj(z, x1) {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "ZAdjacentX1",
            &[("x", x), ("y", y), ("u", u), ("x1", x1), ("z", z)],
        );
        return ctx.cycle4([z, x1, x, u]);
    }
    if ctx.adj(z, y1) {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "ZAdjacentY1",
            &[("x", x), ("y", y), ("u", u), ("y1", y1), ("z", z)],
        );
        return ctx.cycle4([z, y1, y, u]);
    }
    if !ctx.adj(z, x) {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "ZNotAdjacentX",
            &[("x", x), ("y", y), ("u", u), ("x1", x1), ("y1", y1), ("z", z)],
        );
        return ctx.induced_p5([z, u, x, x1, y1]);
    }
    if !ctx.adj(z, y) {
        ctx.trace.push(
            "T1.Case.CommonCNC",
            "ZNotAdjacentY",
            &[("x", x), ("y", y), ("u", u), ("x1", x1), ("y1", y1), ("z", z)],
        );
        return ctx.induced_p5([z, u, y, y1, x1]);
    }
    ctx.trace.push(
        "T1.Case.CommonCNC",
        "ZCommonNeighbor",
        &[("x", x), ("y", y), ("u", u), ("z", z)],
    );
    ctx.cycle4([x, z, y, u])
}
