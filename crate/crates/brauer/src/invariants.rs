//! Invariants preserved by generalized Kauer moves.
//!
//! The four-field fingerprint (vertex count, edge count, face perimeter
//! multiset, bipartiteness) is constant along moves. The face permutations of
//! a graph and its move are explicitly conjugate, and a two-coloring witness
//! transfers by flipping the colors on the moved subset. The commutation of
//! pairing and orientation is also preserved, which can separate graphs that
//! share a fingerprint.

use crate::graph::{BipartiteCheck, BrauerGraph};
use crate::moves::{kauer_move, move_data, MoveError};
use crate::perm::Permutation;
use crate::token::HalfEdgeId;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("conjugator construction failed")]
    ConjugatorFailed,
    #[error("coloring is not a bipartite witness")]
    NotAWitness,
    #[error("invariant not preserved: {0}")]
    NotPreserved(String),
    #[error(transparent)]
    Move(#[from] MoveError),
}

/// Derived-equivalence fingerprint of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub num_vertices: usize,
    pub num_edges: usize,
    /// Face sizes in ascending order.
    pub perimeters: Vec<usize>,
    pub bipartite: bool,
}

impl std::fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let perims: Vec<String> = self.perimeters.iter().map(usize::to_string).collect();
        write!(
            f,
            "vertices={} edges={} perimeters=[{}] bipartite={}",
            self.num_vertices,
            self.num_edges,
            perims.join(","),
            self.bipartite
        )
    }
}

pub fn invariant_report(g: &BrauerGraph) -> InvariantReport {
    InvariantReport {
        num_vertices: g.vertices().len(),
        num_edges: g.edges().len(),
        perimeters: g.perimeters(),
        bipartite: g.is_bipartite().is_bipartite(),
    }
}

pub fn iota_sigma_commutes(g: &BrauerGraph) -> bool {
    g.iota().compose(g.sigma()) == g.sigma().compose(g.iota())
}

/// Permutation conjugating the face permutation of `g` onto the face
/// permutation of the moved graph: equals the cut product preceded by the
/// inverse of (cut product . faces) on the subset and the identity outside.
/// The construction is verified before returning and fails loudly otherwise.
pub fn conjugator(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
) -> Result<Permutation, InvariantError> {
    let data = move_data(g, subset)?;
    let faces = g.sigma_iota();
    let q = data.tau_cut.compose(&faces);
    let q_inv = q.inverse();
    let ground = g.ground();
    let n = ground.len();
    let mut t_map: Vec<usize> = (0..n).collect();
    for h in subset {
        let i = ground.index_of(h).expect("subset validated by move_data");
        t_map[i] = q_inv.apply_idx(i);
    }
    let mut hit = vec![false; n];
    for &j in &t_map {
        if hit[j] {
            return Err(InvariantError::ConjugatorFailed);
        }
        hit[j] = true;
    }
    let cycles = index_map_cycles(ground, &t_map);
    let t = Permutation::from_cycles(ground, &cycles).expect("bijection checked above");
    let c = t.compose(&data.tau_cut);
    let (moved, _) = kauer_move(g, subset)?;
    if faces.conjugate_by(&c) != moved.sigma_iota() {
        return Err(InvariantError::ConjugatorFailed);
    }
    Ok(c)
}

fn index_map_cycles(
    ground: &std::sync::Arc<crate::perm::GroundSet>,
    map: &[usize],
) -> Vec<Vec<HalfEdgeId>> {
    let mut seen = vec![false; map.len()];
    let mut cycles = Vec::new();
    for start in 0..map.len() {
        if seen[start] || map[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(ground.token(cur).clone());
            cur = map[cur];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Transfers a bipartite witness along a move: colors flip exactly on the
/// subset. Both the input and the transferred coloring are verified.
pub fn transfer_coloring(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
    coloring: &BTreeMap<HalfEdgeId, u8>,
) -> Result<BTreeMap<HalfEdgeId, u8>, InvariantError> {
    verify_coloring(g, coloring)?;
    let (moved, _) = kauer_move(g, subset)?;
    let transferred: BTreeMap<HalfEdgeId, u8> = coloring
        .iter()
        .map(|(h, &c)| {
            let c = if subset.contains(h) { 1 - c } else { c };
            (h.clone(), c)
        })
        .collect();
    verify_coloring(&moved, &transferred)?;
    Ok(transferred)
}

fn verify_coloring(
    g: &BrauerGraph,
    coloring: &BTreeMap<HalfEdgeId, u8>,
) -> Result<(), InvariantError> {
    for h in g.ground().iter() {
        let c = *coloring.get(h).ok_or(InvariantError::NotAWitness)?;
        if c > 1 {
            return Err(InvariantError::NotAWitness);
        }
        if coloring.get(&g.sigma().apply(h)) != Some(&c) {
            return Err(InvariantError::NotAWitness);
        }
        if coloring.get(&g.iota().apply(h)) != Some(&(1 - c)) {
            return Err(InvariantError::NotAWitness);
        }
    }
    Ok(())
}

/// Checks the fingerprint and conjugator identities for one move; used by the
/// randomized suites. Returns the moved graph.
pub fn verify_move_invariance(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
) -> Result<BrauerGraph, InvariantError> {
    let (moved, _) = kauer_move(g, subset)?;
    if invariant_report(g) != invariant_report(&moved) {
        return Err(InvariantError::NotPreserved("fingerprint".into()));
    }
    conjugator(g, subset)?;
    if let BipartiteCheck::Bipartite { coloring } = g.is_bipartite() {
        transfer_coloring(g, subset, &coloring)?;
    }
    if iota_sigma_commutes(g) != iota_sigma_commutes(&moved) {
        return Err(InvariantError::NotPreserved(
            "pairing-orientation commutation".into(),
        ));
    }
    Ok(moved)
}
