//! Brauer graphs: a fixed-point-free pairing involution and an orientation
//! permutation over a common half-edge set.
//!
//! Vertices are the orbits of the orientation `sigma`, edges the orbits of the
//! pairing `iota`, faces the orbits of `sigma . iota` (pairing first).
//! Orientation fixed points are legal and encode truncated valence-one
//! vertices; pairing fixed points are not.

use crate::perm::{GroundSet, OrbitPartition, PermError, Permutation};
use crate::token::HalfEdgeId;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The pairing fixes a half-edge.
    PairingFixes(HalfEdgeId),
    /// The pairing is not an involution at this half-edge.
    PairingNotInvolution(HalfEdgeId),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::PairingFixes(h) => write!(f, "pairing fixes {h}"),
            Violation::PairingNotInvolution(h) => {
                write!(f, "pairing is not an involution at {h}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("pairing and orientation act on different half-edge sets")]
    GroundMismatch,
    #[error("invalid graph: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("no default partner for token {0}")]
    NoDefaultPartner(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Outcome of a bipartiteness test: either a two-coloring of the half-edges
/// that is constant on vertices and flips across every edge, or a closed walk
/// through an odd number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCheck {
    Bipartite { coloring: BTreeMap<HalfEdgeId, u8> },
    OddWalk { edges: Vec<String> },
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::Bipartite { .. })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BrauerGraph {
    ground: Arc<GroundSet>,
    iota: Permutation,
    sigma: Permutation,
}

impl std::fmt::Debug for BrauerGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BrauerGraph {{ iota: {}, sigma: {} }}",
            self.iota, self.sigma
        )
    }
}

impl BrauerGraph {
    /// Validates that the pairing is a fixed-point-free involution.
    pub fn new(iota: Permutation, sigma: Permutation) -> Result<Self, GraphError> {
        if !iota.same_ground(&sigma) {
            return Err(GraphError::GroundMismatch);
        }
        let g = BrauerGraph {
            ground: Arc::clone(iota.ground()),
            iota,
            sigma,
        };
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(GraphError::Invalid(violations))
        }
    }

    /// Skips validation; `validate` reports any problems afterwards.
    /// Panics if the two permutations live over different ground sets.
    pub fn new_unchecked(iota: Permutation, sigma: Permutation) -> Self {
        assert!(
            iota.same_ground(&sigma),
            "pairing and orientation act on different half-edge sets"
        );
        BrauerGraph {
            ground: Arc::clone(iota.ground()),
            iota,
            sigma,
        }
    }

    /// Checks the pairing axioms; an empty list means the graph is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, h) in self.ground.iter().enumerate() {
            let j = self.iota.apply_idx(i);
            if j == i {
                out.push(Violation::PairingFixes(h.clone()));
            } else if self.iota.apply_idx(j) != i {
                out.push(Violation::PairingNotInvolution(h.clone()));
            }
        }
        out
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn iota(&self) -> &Permutation {
        &self.iota
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// Replaces the orientation, keeping ground set and pairing.
    pub fn with_sigma(&self, sigma: Permutation) -> Self {
        assert!(sigma.same_ground(&self.iota));
        BrauerGraph {
            ground: Arc::clone(&self.ground),
            iota: self.iota.clone(),
            sigma,
        }
    }

    pub fn num_halfedges(&self) -> usize {
        self.ground.len()
    }

    pub fn vertices(&self) -> OrbitPartition {
        self.sigma.orbits()
    }

    pub fn edges(&self) -> OrbitPartition {
        self.iota.orbits()
    }

    /// Face permutation `sigma . iota` (pairing applied first).
    pub fn sigma_iota(&self) -> Permutation {
        self.sigma.compose(&self.iota)
    }

    pub fn faces(&self) -> OrbitPartition {
        self.sigma_iota().orbits()
    }

    /// Face sizes in ascending order.
    pub fn perimeters(&self) -> Vec<usize> {
        self.faces().sizes()
    }

    /// Display name of the edge containing `h`: the common base of a `x+`/`x-`
    /// pair, otherwise the lesser token.
    pub fn edge_name(&self, h: &HalfEdgeId) -> String {
        let partner = self.iota.apply(h);
        let (a, b) = if *h <= partner {
            (h.clone(), partner)
        } else {
            (partner, h.clone())
        };
        if a.suffix() == Some('+') && b.suffix() == Some('-') && a.base() == b.base() {
            a.base().to_owned()
        } else {
            a.as_str().to_owned()
        }
    }

    /// Edge names sorted by each edge's least half-edge.
    pub fn edge_names(&self) -> Vec<String> {
        self.edges()
            .classes()
            .iter()
            .map(|class| self.edge_name(&class[0]))
            .collect()
    }

    /// Resolves an edge given its display name or either half-edge token.
    pub fn resolve_edge(&self, name: &str) -> Option<(HalfEdgeId, HalfEdgeId)> {
        let pair = |h: &HalfEdgeId| {
            let p = self.iota.apply(h);
            if *h <= p {
                (h.clone(), p)
            } else {
                (p, h.clone())
            }
        };
        // Prefer the base-name reading: "3" names the edge {3+, 3-}.
        if let (Ok(plus), Ok(minus)) = (
            HalfEdgeId::new(format!("{name}+")),
            HalfEdgeId::new(format!("{name}-")),
        ) {
            if self.ground.contains(&plus)
                && self.ground.contains(&minus)
                && self.iota.apply(&plus) == minus
            {
                return Some((plus, minus));
            }
        }
        let h = HalfEdgeId::new(name).ok()?;
        if self.ground.contains(&h) {
            return Some(pair(&h));
        }
        None
    }

    /// Orbits of the group generated by orientation and pairing; each class is
    /// sorted, classes ordered by least member.
    pub fn components(&self) -> Vec<Vec<HalfEdgeId>> {
        let n = self.ground.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(i);
                for j in [self.sigma.apply_idx(i), self.iota.apply_idx(i)] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(
                comp.into_iter()
                    .map(|i| self.ground.token(i).clone())
                    .collect(),
            );
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colors the vertices if possible; otherwise returns a closed walk of
    /// odd length as a list of edge names.
    pub fn is_bipartite(&self) -> BipartiteCheck {
        let vertices = self.vertices();
        let nv = vertices.len();
        // One endpoint pair per edge, plus the edge's display name.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        let mut edge_ends = Vec::new();
        for class in self.edges().classes() {
            let h = &class[0];
            let u = vertices.class_index_of(h).unwrap();
            let v = vertices.class_index_of(&self.iota.apply(h)).unwrap();
            let e = edge_ends.len();
            edge_ends.push((u, v, self.edge_name(h)));
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        let mut color: Vec<Option<u8>> = vec![None; nv];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nv];
        let mut depth = vec![0usize; nv];
        for root in 0..nv {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, e) in &adj[u] {
                    if u == v {
                        // A loop is a closed walk of length one.
                        return BipartiteCheck::OddWalk {
                            edges: vec![edge_ends[e].2.clone()],
                        };
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(1 - color[u].unwrap());
                            parent[v] = Some((u, e));
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(c) if c == color[u].unwrap() => {
                            return BipartiteCheck::OddWalk {
                                edges: odd_walk(u, v, e, &parent, &depth, &edge_ends),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut coloring = BTreeMap::new();
        for h in self.ground.iter() {
            let c = color[vertices.class_index_of(h).unwrap()].unwrap();
            coloring.insert(h.clone(), c);
        }
        BipartiteCheck::Bipartite { coloring }
    }
}

fn odd_walk(
    mut u: usize,
    mut v: usize,
    closing_edge: usize,
    parent: &[Option<(usize, usize)>],
    depth: &[usize],
    edge_ends: &[(usize, usize, String)],
) -> Vec<String> {
    // Walk both endpoints up to their lowest common ancestor; the two chains
    // plus the closing edge form a closed walk of odd length.
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[u] > depth[v] {
        let (p, e) = parent[u].unwrap();
        left.push(edge_ends[e].2.clone());
        u = p;
    }
    while depth[v] > depth[u] {
        let (p, e) = parent[v].unwrap();
        right.push(edge_ends[e].2.clone());
        v = p;
    }
    while u != v {
        let (pu, eu) = parent[u].unwrap();
        let (pv, ev) = parent[v].unwrap();
        left.push(edge_ends[eu].2.clone());
        right.push(edge_ends[ev].2.clone());
        u = pu;
        v = pv;
    }
    let mut walk = vec![edge_ends[closing_edge].2.clone()];
    walk.extend(left);
    right.reverse();
    walk.extend(right);
    walk
}

/// The involution sending each suffixed token to its partner. Errors if some
/// token has no suffix or its partner is absent.
pub fn default_pairing(ground: &Arc<GroundSet>) -> Result<Permutation, GraphError> {
    let mut cycles = Vec::new();
    for h in ground.iter() {
        let partner = h
            .partner()
            .ok_or_else(|| GraphError::NoDefaultPartner(h.as_str().to_owned()))?;
        if !ground.contains(&partner) {
            return Err(GraphError::NoDefaultPartner(h.as_str().to_owned()));
        }
        if h.suffix() == Some('+') {
            cycles.push(vec![h.clone(), partner]);
        }
    }
    Ok(Permutation::from_cycles(ground, &cycles)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: &str) -> HalfEdgeId {
        HalfEdgeId::new(t).unwrap()
    }

    fn ground(tokens: &[&str]) -> Arc<GroundSet> {
        GroundSet::new(tokens.iter().map(|t| h(t)).collect()).unwrap()
    }

    /// Three edges: a loop at one vertex plus a double edge to another.
    fn three_edge() -> BrauerGraph {
        let g = ground(&["1+", "1-", "2+", "2-", "3+", "3-"]);
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::from_cycle_str(&g, "(1+ 2+ 3+ 3-)(1- 2-)").unwrap();
        BrauerGraph::new(iota, sigma).unwrap()
    }

    #[test]
    fn counts_vertices_edges_faces() {
        let g = three_edge();
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.faces().len(), 3);
        assert_eq!(g.perimeters(), vec![1, 2, 3]);
    }

    #[test]
    fn face_permutation_applies_pairing_first() {
        let g = three_edge();
        let si = g.sigma_iota();
        assert_eq!(si.apply(&h("1+")), h("2-"));
        assert_eq!(si.apply(&h("2-")), h("3+"));
        assert_eq!(si.apply(&h("3+")), h("1+"));
        assert_eq!(si.apply(&h("3-")), h("3-"));
        assert_eq!(si.to_string(), "(1+ 2- 3+)(1- 2+)");
    }

    #[test]
    fn euler_count_is_even() {
        let g = three_edge();
        let euler = g.vertices().len() as i64 - g.edges().len() as i64 + g.faces().len() as i64;
        assert_eq!(euler.rem_euclid(2), 0);
    }

    #[test]
    fn validation_flags_pairing_fixed_points() {
        let g = ground(&["1+", "1-", "2+"]);
        let iota = Permutation::from_cycle_str(&g, "(1+ 1-)").unwrap();
        let sigma = Permutation::identity(Arc::clone(&g));
        let err = BrauerGraph::new(iota.clone(), sigma.clone()).unwrap_err();
        match err {
            GraphError::Invalid(vs) => {
                assert_eq!(vs, vec![Violation::PairingFixes(h("2+"))]);
                assert_eq!(vs[0].to_string(), "pairing fixes 2+");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let g2 = BrauerGraph::new_unchecked(iota, sigma);
        assert_eq!(g2.validate().len(), 1);
    }

    #[test]
    fn validation_flags_non_involutions() {
        let g = ground(&["a", "b", "c"]);
        let iota = Permutation::from_cycle_str(&g, "(a b c)").unwrap();
        let sigma = Permutation::identity(Arc::clone(&g));
        let vs = BrauerGraph::new_unchecked(iota, sigma).validate();
        assert_eq!(vs.len(), 3);
        assert!(matches!(vs[0], Violation::PairingNotInvolution(_)));
    }

    #[test]
    fn default_pairing_needs_full_pairs() {
        assert!(default_pairing(&ground(&["1+", "1-"])).is_ok());
        assert!(matches!(
            default_pairing(&ground(&["1+", "2+"])),
            Err(GraphError::NoDefaultPartner(_))
        ));
        assert!(matches!(
            default_pairing(&ground(&["x", "y"])),
            Err(GraphError::NoDefaultPartner(_))
        ));
    }

    #[test]
    fn edge_names_prefer_common_base() {
        let g = three_edge();
        assert_eq!(g.edge_names(), vec!["1", "2", "3"]);
        assert_eq!(g.resolve_edge("3").unwrap(), (h("3+"), h("3-")));
        assert_eq!(g.resolve_edge("3-").unwrap(), (h("3+"), h("3-")));
        assert!(g.resolve_edge("4").is_none());
    }

    #[test]
    fn loop_breaks_bipartiteness() {
        let g = three_edge();
        match g.is_bipartite() {
            BipartiteCheck::OddWalk { edges } => assert_eq!(edges, vec!["3"]),
            other => panic!("expected odd walk, got {other:?}"),
        }
    }

    #[test]
    fn parallel_edges_are_bipartite() {
        let g = ground(&["1+", "1-", "2+", "2-"]);
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::from_cycle_str(&g, "(1+ 2+)(1- 2-)").unwrap();
        let graph = BrauerGraph::new(iota, sigma).unwrap();
        match graph.is_bipartite() {
            BipartiteCheck::Bipartite { coloring } => {
                assert_eq!(coloring[&h("1+")], coloring[&h("2+")]);
                assert_ne!(coloring[&h("1+")], coloring[&h("1-")]);
            }
            other => panic!("expected bipartite, got {other:?}"),
        }
    }

    #[test]
    fn triangle_gives_odd_walk_of_length_three() {
        // Three vertices joined pairwise.
        let g = ground(&["a+", "a-", "b+", "b-", "c+", "c-"]);
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::from_cycle_str(&g, "(a+ c-)(b+ a-)(c+ b-)").unwrap();
        let graph = BrauerGraph::new(iota, sigma).unwrap();
        match graph.is_bipartite() {
            BipartiteCheck::OddWalk { edges } => assert_eq!(edges.len() % 2, 1),
            other => panic!("expected odd walk, got {other:?}"),
        }
    }

    #[test]
    fn components_split_disjoint_pieces() {
        let g = ground(&["1+", "1-", "2+", "2-"]);
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::identity(Arc::clone(&g));
        let graph = BrauerGraph::new(iota, sigma).unwrap();
        let comps = graph.components();
        assert_eq!(comps.len(), 2);
        assert!(!graph.is_connected());
        assert_eq!(comps[0], vec![h("1+"), h("1-")]);
    }
}
