//! Bounded breadth-first search through move sequences.
//!
//! [`reach`] treats graphs up to isomorphism (deduplicated by canonical
//! form); [`reach_labeled`] compares labeled data on the nose, which is the
//! right notion for "no succession of moves yields this orientation" claims,
//! where the moved graph is often still abstractly isomorphic to the start.
//! From each graph, generalized moves try every pairing-stable union of
//! edges in binary counting order over the name-sorted edge list, and
//! standard moves try single edges in name order. The search stops at the
//! depth limit or when the number of distinct graphs reaches the budget;
//! hitting the budget is reported separately from an exhaustive miss.

use crate::canon::canonical_form;
use crate::graph::BrauerGraph;
use crate::io::serialize;
use crate::moves::{kauer_move, standard_kauer_move};
use crate::token::HalfEdgeId;
use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Generalized,
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MatchMode {
    UpToIsomorphism,
    Labeled,
}

/// One move along a found path: the edge names whose half-edges formed the
/// subset (a single name for standard moves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub edges: Vec<String>,
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.edges.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub found: bool,
    /// True when the distinct-graph budget stopped the search before the
    /// depth limit was exhausted; a miss is then inconclusive.
    pub budget_exhausted: bool,
    /// Number of distinct graphs seen, the start included.
    pub explored: usize,
    pub path: Option<Vec<Step>>,
}

/// Searches for a move sequence from `source` to `target` (up to
/// isomorphism), trying sequences of at most `max_depth` moves.
pub fn reach(
    source: &BrauerGraph,
    target: &BrauerGraph,
    max_depth: usize,
    kind: MoveKind,
    budget: usize,
) -> SearchResult {
    search(
        source,
        target,
        max_depth,
        kind,
        budget,
        MatchMode::UpToIsomorphism,
    )
}

/// Searches for a move sequence from `source` to `target` as labeled data:
/// the half-edge set, pairing, and orientation must match exactly, not up to
/// relabeling. Distinct labeled orientations count separately against the
/// budget even when they are isomorphic.
pub fn reach_labeled(
    source: &BrauerGraph,
    target: &BrauerGraph,
    max_depth: usize,
    kind: MoveKind,
    budget: usize,
) -> SearchResult {
    search(source, target, max_depth, kind, budget, MatchMode::Labeled)
}

fn search(
    source: &BrauerGraph,
    target: &BrauerGraph,
    max_depth: usize,
    kind: MoveKind,
    budget: usize,
    mode: MatchMode,
) -> SearchResult {
    let key_of = |g: &BrauerGraph| match mode {
        MatchMode::UpToIsomorphism => canonical_form(g),
        MatchMode::Labeled => serialize(g, None),
    };
    let target_canon = key_of(target);
    let start_canon = key_of(source);
    let mut explored: HashSet<String> = HashSet::new();
    explored.insert(start_canon.clone());
    if start_canon == target_canon {
        return SearchResult {
            found: true,
            budget_exhausted: false,
            explored: 1,
            path: Some(Vec::new()),
        };
    }
    // Moves never touch the pairing, so the edge list is computed once.
    let edge_classes = source.edges();
    let edge_halves: Vec<(String, [HalfEdgeId; 2])> = {
        let mut v: Vec<(String, [HalfEdgeId; 2])> = edge_classes
            .classes()
            .iter()
            .map(|class| {
                (
                    source.edge_name(&class[0]),
                    [class[0].clone(), class[1].clone()],
                )
            })
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    };
    let m = edge_halves.len();
    if kind == MoveKind::Generalized {
        assert!(
            m < 24,
            "generalized search enumerates 2^edges subsets per node"
        );
    }
    let mut queue: VecDeque<(BrauerGraph, usize, Vec<Step>)> = VecDeque::new();
    queue.push_back((source.clone(), 0, Vec::new()));
    let mut budget_exhausted = false;
    'outer: while let Some((g, depth, path)) = queue.pop_front() {
        if depth == max_depth {
            continue;
        }
        let children: Vec<(Step, BrauerGraph)> = match kind {
            MoveKind::Standard => (0..m)
                .map(|i| {
                    let (name, halves) = &edge_halves[i];
                    let step = Step {
                        edges: vec![name.clone()],
                    };
                    let (moved, _) =
                        standard_kauer_move(&g, &halves[0]).expect("edge from the graph");
                    (step, moved)
                })
                .collect(),
            MoveKind::Generalized => (1..(1u64 << m))
                .map(|mask| {
                    let mut names = Vec::new();
                    let mut subset = std::collections::BTreeSet::new();
                    for (i, (name, halves)) in edge_halves.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            names.push(name.clone());
                            subset.insert(halves[0].clone());
                            subset.insert(halves[1].clone());
                        }
                    }
                    let (moved, _) = kauer_move(&g, &subset).expect("pairing-stable subset");
                    (Step { edges: names }, moved)
                })
                .collect(),
        };
        for (step, child) in children {
            let canon = key_of(&child);
            if explored.contains(&canon) {
                continue;
            }
            if explored.len() >= budget {
                budget_exhausted = true;
                break 'outer;
            }
            explored.insert(canon.clone());
            let mut child_path = path.clone();
            child_path.push(step);
            if canon == target_canon {
                return SearchResult {
                    found: true,
                    budget_exhausted: false,
                    explored: explored.len(),
                    path: Some(child_path),
                };
            }
            queue.push_back((child, depth + 1, child_path));
        }
    }
    SearchResult {
        found: false,
        budget_exhausted,
        explored: explored.len(),
        path: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::default_pairing;
    use crate::perm::{GroundSet, Permutation};

    fn graph(tokens: &[&str], sigma: &str) -> BrauerGraph {
        let g = GroundSet::new(
            tokens
                .iter()
                .map(|t| HalfEdgeId::new(*t).unwrap())
                .collect(),
        )
        .unwrap();
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::from_cycle_str(&g, sigma).unwrap();
        BrauerGraph::new(iota, sigma).unwrap()
    }

    #[test]
    fn finds_the_identity_immediately() {
        let g = graph(&["1+", "1-"], "(1+ 1-)");
        let r = reach(&g, &g, 0, MoveKind::Generalized, 10);
        assert!(r.found);
        assert_eq!(r.path.unwrap().len(), 0);
        assert_eq!(r.explored, 1);
    }

    #[test]
    fn labeled_search_finds_one_generalized_move_at_depth_one() {
        let g = graph(
            &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
            "(1+ 2+ 3+ 4+)(1- 4- 3- 2-)",
        );
        let subset = ["1+", "1-", "2+", "2-"]
            .iter()
            .map(|t| HalfEdgeId::new(*t).unwrap())
            .collect();
        let (target, _) = kauer_move(&g, &subset).unwrap();
        let r = reach_labeled(&g, &target, 1, MoveKind::Generalized, 1000);
        assert!(r.found);
        assert_eq!(r.path.unwrap().len(), 1);
    }

    #[test]
    fn labeled_target_out_of_standard_move_reach_is_isomorphic_to_the_start() {
        // Moving the parallel pair {1,2} yields an orientation no sequence
        // of standard moves produces, yet the result is still isomorphic to
        // the start, so the labeled and isomorphism searches disagree.
        let g = graph(
            &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
            "(1+ 2+ 3+ 4+)(1- 4- 3- 2-)",
        );
        let subset = ["1+", "1-", "2+", "2-"]
            .iter()
            .map(|t| HalfEdgeId::new(*t).unwrap())
            .collect();
        let (target, _) = kauer_move(&g, &subset).unwrap();
        let labeled = reach_labeled(&g, &target, 4, MoveKind::Standard, 100_000);
        assert!(!labeled.found);
        assert!(!labeled.budget_exhausted);
        let up_to_iso = reach(&g, &target, 4, MoveKind::Standard, 100_000);
        assert!(up_to_iso.found);
        assert_eq!(up_to_iso.path.unwrap().len(), 0);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // The whole-subset move of {1,3} here changes the valence multiset,
        // so the search meets a second isomorphism class and must give up
        // with a budget of one.
        let g = graph(
            &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
            "(1+ 2+ 3+ 1- 3- 4+)",
        );
        let unreachable = graph(&["1+", "1-"], "(1+ 1-)");
        let r = reach(&g, &unreachable, 10, MoveKind::Generalized, 1);
        assert!(!r.found);
        assert!(r.budget_exhausted);
        assert_eq!(r.explored, 1);
    }

    #[test]
    fn miss_without_budget_pressure_is_conclusive() {
        let g = graph(&["1+", "1-"], "(1+ 1-)");
        let other = graph(&["1+", "1-"], "");
        let r = reach(&g, &other, 3, MoveKind::Standard, 100);
        assert!(!r.found);
        assert!(!r.budget_exhausted);
    }
}
