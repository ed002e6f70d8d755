//! Canonical forms and explicit isomorphisms.
//!
//! An isomorphism of graphs `(H, iota, sigma)` is a bijection of half-edges
//! commuting with both permutations. On a connected graph it is determined by
//! the image of a single half-edge, so trying every seed of a breadth-first
//! relabeling and keeping the lexicographically least encoding yields a
//! canonical form: two graphs are isomorphic exactly when their canonical
//! forms agree. Intended for desk-scale graphs (tens of edges).

use crate::graph::BrauerGraph;
use crate::token::HalfEdgeId;
use std::collections::BTreeMap;

type Encoding = Vec<(u32, u32)>;

/// Breadth-first relabeling from one seed, restricted to the seed's component.
/// Returns the encoding and the visit order (discovery index per half-edge).
fn encode_from_seed(g: &BrauerGraph, seed: usize) -> (Encoding, Vec<usize>) {
    let n = g.ground().len();
    let mut number = vec![u32::MAX; n];
    let mut order = Vec::new();
    number[seed] = 0;
    order.push(seed);
    let mut next = 0usize;
    while next < order.len() {
        let x = order[next];
        next += 1;
        for y in [g.sigma().apply_idx(x), g.iota().apply_idx(x)] {
            if number[y] == u32::MAX {
                number[y] = order.len() as u32;
                order.push(y);
            }
        }
    }
    let encoding = order
        .iter()
        .map(|&x| {
            (
                number[g.sigma().apply_idx(x)],
                number[g.iota().apply_idx(x)],
            )
        })
        .collect();
    (encoding, order)
}

/// Least encoding over all seeds of one component, with a witnessing visit order.
fn component_canonical(g: &BrauerGraph, members: &[usize]) -> (Encoding, Vec<usize>) {
    let mut best: Option<(Encoding, Vec<usize>)> = None;
    for &seed in members {
        let cand = encode_from_seed(g, seed);
        match &best {
            Some((enc, _)) if *enc <= cand.0 => {}
            _ => best = Some(cand),
        }
    }
    best.expect("component has at least one half-edge")
}

fn component_index_sets(g: &BrauerGraph) -> Vec<Vec<usize>> {
    g.components()
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|h| g.ground().index_of(h).unwrap())
                .collect()
        })
        .collect()
}

fn render(enc: &Encoding) -> String {
    enc.iter()
        .map(|(s, i)| format!("{s},{i}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Canonical encoding of a graph. Components are canonicalized separately,
/// sorted, and joined with `|`; the empty graph encodes as the empty string.
pub fn canonical_form(g: &BrauerGraph) -> String {
    let mut encodings: Vec<Encoding> = component_index_sets(g)
        .iter()
        .map(|members| component_canonical(g, members).0)
        .collect();
    encodings.sort();
    encodings.iter().map(render).collect::<Vec<_>>().join("|")
}

/// Explicit isomorphism from `a` to `b`, if one exists: a bijection of
/// half-edges carrying orientation to orientation and pairing to pairing.
pub fn is_isomorphic(a: &BrauerGraph, b: &BrauerGraph) -> Option<BTreeMap<HalfEdgeId, HalfEdgeId>> {
    if a.ground().len() != b.ground().len() {
        return None;
    }
    let mut comps_a: Vec<(Encoding, Vec<usize>)> = component_index_sets(a)
        .iter()
        .map(|m| component_canonical(a, m))
        .collect();
    let mut comps_b: Vec<(Encoding, Vec<usize>)> = component_index_sets(b)
        .iter()
        .map(|m| component_canonical(b, m))
        .collect();
    if comps_a.len() != comps_b.len() {
        return None;
    }
    comps_a.sort();
    comps_b.sort();
    let mut map = BTreeMap::new();
    for ((enc_a, order_a), (enc_b, order_b)) in comps_a.iter().zip(comps_b.iter()) {
        if enc_a != enc_b {
            return None;
        }
        // Equal encodings mean the two visit orders relabel both components to
        // the same permutation pair, so matching positions defines the map.
        for (&ia, &ib) in order_a.iter().zip(order_b.iter()) {
            map.insert(a.ground().token(ia).clone(), b.ground().token(ib).clone());
        }
    }
    Some(map)
}
