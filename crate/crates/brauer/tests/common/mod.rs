//! Shared fixtures and generators for the integration suites.

#![allow(dead_code)]

use brauer::{quiver_of, BrauerGraph, Grading, GroundSet, HalfEdgeId, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

pub fn h(t: &str) -> HalfEdgeId {
    HalfEdgeId::new(t).unwrap()
}

pub fn subset(tokens: &[&str]) -> BTreeSet<HalfEdgeId> {
    tokens.iter().map(|t| h(t)).collect()
}

/// Graph over `1±..n±` with the default pairing and the given orientation.
pub fn graph(n: usize, sigma: &str) -> BrauerGraph {
    let tokens: Vec<HalfEdgeId> = (1..=n)
        .flat_map(|i| [h(&format!("{i}+")), h(&format!("{i}-"))])
        .collect();
    let ground = GroundSet::new(tokens).unwrap();
    let iota = brauer::graph::default_pairing(&ground).unwrap();
    let sigma = Permutation::from_cycle_str(&ground, sigma).unwrap();
    BrauerGraph::new(iota, sigma).unwrap()
}

pub fn three_edge() -> BrauerGraph {
    graph(3, "(1+ 2+ 3+ 3-)(1- 2-)")
}

pub fn four_parallel() -> BrauerGraph {
    graph(4, "(1+ 2+ 3+ 4+)(1- 2- 4- 3-)")
}

pub fn sheared_parallel() -> BrauerGraph {
    graph(4, "(1+ 2+ 3+ 4+)(1- 4- 3- 2-)")
}

pub fn final_example() -> BrauerGraph {
    graph(4, "(1+ 2+ 3+ 1- 3- 4+)")
}

pub fn antipov_pair() -> (BrauerGraph, BrauerGraph) {
    (
        graph(5, "(1+ 2+ 3+ 4+ 5+)(1- 2- 3- 4- 5-)"),
        graph(5, "(1+ 2+ 3+ 4+ 5+)(1- 4- 5- 2- 3-)"),
    )
}

/// Random orientation over `1±..n±` with the default pairing.
pub fn random_graph(rng: &mut impl Rng, max_edges: usize) -> BrauerGraph {
    let n = rng.random_range(1..=max_edges);
    let tokens: Vec<HalfEdgeId> = (1..=n)
        .flat_map(|i| [h(&format!("{i}+")), h(&format!("{i}-"))])
        .collect();
    let ground = GroundSet::new(tokens).unwrap();
    let iota = brauer::graph::default_pairing(&ground).unwrap();
    let mut images: Vec<HalfEdgeId> = ground.iter().cloned().collect();
    images.shuffle(rng);
    let map: BTreeMap<HalfEdgeId, HalfEdgeId> = ground.iter().cloned().zip(images).collect();
    let cycles = cycles_of_map(&ground, &map);
    let sigma = Permutation::from_cycles(&ground, &cycles).unwrap();
    BrauerGraph::new(iota, sigma).unwrap()
}

fn cycles_of_map(
    ground: &Arc<GroundSet>,
    map: &BTreeMap<HalfEdgeId, HalfEdgeId>,
) -> Vec<Vec<HalfEdgeId>> {
    let mut seen: BTreeSet<HalfEdgeId> = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in ground.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = vec![start.clone()];
        seen.insert(start.clone());
        let mut cur = map[start].clone();
        while &cur != start {
            seen.insert(cur.clone());
            cycle.push(cur.clone());
            cur = map[&cur].clone();
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    cycles
}

/// Uniformly random permutation of the ground set.
pub fn random_permutation(rng: &mut impl Rng, ground: &Arc<GroundSet>) -> Permutation {
    let mut images: Vec<HalfEdgeId> = ground.iter().cloned().collect();
    images.shuffle(rng);
    let map: BTreeMap<HalfEdgeId, HalfEdgeId> = ground.iter().cloned().zip(images).collect();
    let cycles = cycles_of_map(ground, &map);
    Permutation::from_cycles(ground, &cycles).unwrap()
}

/// Random pairing-stable subset chosen edge by edge. May be empty or full.
pub fn random_subset(rng: &mut impl Rng, g: &BrauerGraph) -> BTreeSet<HalfEdgeId> {
    let mut out = BTreeSet::new();
    for class in g.edges().classes() {
        if rng.random_bool(0.5) {
            out.extend(class.iter().cloned());
        }
    }
    out
}

/// Random one-homogeneous grading: arbitrary integers on each vertex cycle
/// except the last half-edge, which absorbs the difference to one.
pub fn random_grading(rng: &mut impl Rng, g: &BrauerGraph) -> Grading {
    let mut degrees: BTreeMap<HalfEdgeId, i64> = BTreeMap::new();
    for class in g.vertices().classes() {
        let mut sum = 0i64;
        for (i, half) in class.iter().enumerate() {
            if i + 1 == class.len() {
                degrees.insert(half.clone(), 1 - sum);
            } else {
                let d = rng.random_range(-2..=2);
                sum += d;
                degrees.insert(half.clone(), d);
            }
        }
    }
    Grading::new(g.ground(), &degrees).unwrap()
}

/// Dimension by enumeration: one basis element per quiver node, one per
/// proper run around a vertex, and one per edge whose full cycles exist. The
/// runs are walked arrow by arrow instead of counted by valence.
pub fn dimension_by_paths(g: &BrauerGraph) -> u64 {
    let q = quiver_of(g);
    let sigma = g.sigma();
    let mut total = q.nodes.len() as u64;
    let mut socle: BTreeSet<String> = BTreeSet::new();
    for arrow in &q.arrows {
        let start = &arrow.source_halfedge;
        let mut cur = sigma.apply(start);
        while &cur != start {
            // The path from `start` up to (not including) `cur` is a proper
            // subpath of the full cycle at this vertex.
            assert!(
                q.arrow_by_source(&cur).is_some(),
                "runs stay inside one vertex cycle"
            );
            total += 1;
            cur = sigma.apply(&cur);
        }
        socle.insert(g.edge_name(start));
    }
    total + socle.len() as u64
}
