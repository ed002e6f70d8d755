//! Generalized Kauer moves.
//!
//! A move is driven by a pairing-stable subset `H'` of the half-edges. For
//! `h` in `H'`, the run of `h` follows the orientation while it stays inside
//! `H'`; a sector `(h, r)` records a finite run, and it is maximal when the
//! orientation predecessor of `h` lies outside `H'`. The move conjugation
//! pattern is `tau_cut . sigma . tau_paste` where the cut transpositions swap
//! each maximal run start with its exit and the paste transpositions swap each
//! run end with the pairing partner of its exit.

use crate::graph::BrauerGraph;
use crate::perm::Permutation;
use crate::token::HalfEdgeId;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("unknown half-edge {0}")]
    UnknownHalfEdge(String),
    #[error("subset must be stable under pairing")]
    NotIotaStable,
    #[error("not in subset: {0}")]
    NotInSubset(String),
    #[error("({0}, {1}) is not a sector of the subset")]
    NotASector(String, usize),
}

/// Run length of a half-edge inside a pairing-stable subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunLength {
    /// `sigma^i h` stays inside for `i = 0..=r` and exits at `r + 1`.
    Finite(usize),
    /// The whole orientation orbit lies inside the subset.
    Infinite,
}

/// A finite run `(h, r)`: the half-edge where it starts and its length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sector {
    pub halfedge: HalfEdgeId,
    pub run: usize,
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.halfedge, self.run)
    }
}

/// The two transposition products realizing a move, and the maximal sectors
/// that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveData {
    pub tau_cut: Permutation,
    pub tau_paste: Permutation,
    pub maximal_sectors: Vec<Sector>,
}

/// Pairing-stable subset as an index mask.
pub(crate) struct SubsetMask {
    mask: Vec<bool>,
}

impl SubsetMask {
    pub(crate) fn new(g: &BrauerGraph, subset: &BTreeSet<HalfEdgeId>) -> Result<Self, MoveError> {
        let mut mask = vec![false; g.ground().len()];
        for h in subset {
            let idx = g
                .ground()
                .index_of(h)
                .ok_or_else(|| MoveError::UnknownHalfEdge(h.as_str().to_owned()))?;
            mask[idx] = true;
        }
        for i in 0..mask.len() {
            if mask[i] != mask[g.iota().apply_idx(i)] {
                return Err(MoveError::NotIotaStable);
            }
        }
        Ok(SubsetMask { mask })
    }

    pub(crate) fn contains(&self, idx: usize) -> bool {
        self.mask[idx]
    }
}

fn run_length_idx(g: &BrauerGraph, mask: &SubsetMask, start: usize) -> RunLength {
    let mut cur = start;
    let mut steps = 0usize;
    loop {
        let next = g.sigma().apply_idx(cur);
        if !mask.contains(next) {
            return RunLength::Finite(steps);
        }
        if next == start {
            return RunLength::Infinite;
        }
        cur = next;
        steps += 1;
    }
}

/// Length of the run of `h` inside the subset.
pub fn run_length(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
    h: &HalfEdgeId,
) -> Result<RunLength, MoveError> {
    let mask = SubsetMask::new(g, subset)?;
    let idx = g
        .ground()
        .index_of(h)
        .ok_or_else(|| MoveError::UnknownHalfEdge(h.as_str().to_owned()))?;
    if !mask.contains(idx) {
        return Err(MoveError::NotInSubset(h.as_str().to_owned()));
    }
    Ok(run_length_idx(g, &mask, idx))
}

fn sectors_impl(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
    only_maximal: bool,
) -> Result<Vec<Sector>, MoveError> {
    let mask = SubsetMask::new(g, subset)?;
    let mut out = Vec::new();
    for idx in 0..g.ground().len() {
        if !mask.contains(idx) {
            continue;
        }
        if only_maximal && mask.contains(g.sigma().inverse().apply_idx(idx)) {
            continue;
        }
        if let RunLength::Finite(r) = run_length_idx(g, &mask, idx) {
            out.push(Sector {
                halfedge: g.ground().token(idx).clone(),
                run: r,
            });
        }
    }
    Ok(out)
}

/// Every sector of the subset, sorted by half-edge token.
pub fn sectors(g: &BrauerGraph, subset: &BTreeSet<HalfEdgeId>) -> Result<Vec<Sector>, MoveError> {
    sectors_impl(g, subset, false)
}

/// Sectors whose orientation predecessor lies outside the subset.
pub fn maximal_sectors(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
) -> Result<Vec<Sector>, MoveError> {
    sectors_impl(g, subset, true)
}

/// Transposition products for one set of sectors. The supports inside each
/// product are pairwise disjoint; that is asserted, not assumed.
fn transpositions(g: &BrauerGraph, sectors: &[Sector]) -> (Permutation, Permutation) {
    let n = g.ground().len();
    let mut cut: Vec<u32> = (0..n as u32).collect();
    let mut paste: Vec<u32> = (0..n as u32).collect();
    let mut used_cut = vec![false; n];
    let mut used_paste = vec![false; n];
    let swap = |map: &mut Vec<u32>, used: &mut Vec<bool>, a: usize, b: usize| {
        assert!(
            !used[a] && !used[b] && a != b,
            "transposition supports overlap"
        );
        used[a] = true;
        used[b] = true;
        map[a] = b as u32;
        map[b] = a as u32;
    };
    for s in sectors {
        let h = g.ground().index_of(&s.halfedge).unwrap();
        let mut exit = h;
        for _ in 0..=s.run {
            exit = g.sigma().apply_idx(exit);
        }
        let run_end = g.sigma().inverse().apply_idx(exit);
        swap(&mut cut, &mut used_cut, h, exit);
        swap(
            &mut paste,
            &mut used_paste,
            run_end,
            g.iota().apply_idx(exit),
        );
    }
    let ground = Arc::clone(g.ground());
    (
        permutation_from_map(Arc::clone(&ground), cut),
        permutation_from_map(ground, paste),
    )
}

fn permutation_from_map(ground: Arc<crate::perm::GroundSet>, map: Vec<u32>) -> Permutation {
    // Build via cycles of the index map to reuse the validated constructor.
    let id = Permutation::identity(Arc::clone(&ground));
    let mut cycles = Vec::new();
    let mut seen = vec![false; map.len()];
    for start in 0..map.len() {
        if seen[start] || map[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(ground.token(cur).clone());
            cur = map[cur] as usize;
        }
        cycles.push(cycle);
    }
    Permutation::from_cycles(id.ground(), &cycles).expect("index map is a permutation")
}

/// Move data for a pairing-stable subset: cut and paste products over the
/// maximal sectors.
pub fn move_data(g: &BrauerGraph, subset: &BTreeSet<HalfEdgeId>) -> Result<MoveData, MoveError> {
    let maximal = maximal_sectors(g, subset)?;
    let (tau_cut, tau_paste) = transpositions(g, &maximal);
    Ok(MoveData {
        tau_cut,
        tau_paste,
        maximal_sectors: maximal,
    })
}

/// Generalized Kauer move at a pairing-stable subset. The empty and full
/// subsets give the identity. Pairing and ground set are untouched.
pub fn kauer_move(
    g: &BrauerGraph,
    subset: &BTreeSet<HalfEdgeId>,
) -> Result<(BrauerGraph, MoveData), MoveError> {
    let data = move_data(g, subset)?;
    let sigma = data.tau_cut.compose(&g.sigma().compose(&data.tau_paste));
    Ok((g.with_sigma(sigma), data))
}

/// Kauer move of a single edge: the subset is the pairing orbit of `h`.
pub fn standard_kauer_move(
    g: &BrauerGraph,
    h: &HalfEdgeId,
) -> Result<(BrauerGraph, MoveData), MoveError> {
    if !g.ground().contains(h) {
        return Err(MoveError::UnknownHalfEdge(h.as_str().to_owned()));
    }
    let subset: BTreeSet<HalfEdgeId> = [h.clone(), g.iota().apply(h)].into();
    kauer_move(g, &subset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::default_pairing;
    use crate::perm::{GroundSet, Permutation};

    fn h(t: &str) -> HalfEdgeId {
        HalfEdgeId::new(t).unwrap()
    }

    fn graph(tokens: &[&str], sigma: &str) -> BrauerGraph {
        let g = GroundSet::new(tokens.iter().map(|t| h(t)).collect()).unwrap();
        let iota = default_pairing(&g).unwrap();
        let sigma = Permutation::from_cycle_str(&g, sigma).unwrap();
        BrauerGraph::new(iota, sigma).unwrap()
    }

    fn subset(tokens: &[&str]) -> BTreeSet<HalfEdgeId> {
        tokens.iter().map(|t| h(t)).collect()
    }

    /// Two vertices joined by four edges, subset = edges 3 and 4.
    fn four_parallel() -> (BrauerGraph, BTreeSet<HalfEdgeId>) {
        let g = graph(
            &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
            "(1+ 2+ 3+ 4+)(1- 2- 4- 3-)",
        );
        (g, subset(&["3+", "3-", "4+", "4-"]))
    }

    #[test]
    fn run_lengths_and_errors() {
        let (g, hp) = four_parallel();
        assert_eq!(run_length(&g, &hp, &h("3+")).unwrap(), RunLength::Finite(1));
        assert_eq!(run_length(&g, &hp, &h("4+")).unwrap(), RunLength::Finite(0));
        assert_eq!(run_length(&g, &hp, &h("4-")).unwrap(), RunLength::Finite(1));
        assert_eq!(
            run_length(&g, &hp, &h("1+")),
            Err(MoveError::NotInSubset("1+".into()))
        );
        assert_eq!(
            run_length(&g, &hp, &h("9+")),
            Err(MoveError::UnknownHalfEdge("9+".into()))
        );
        assert_eq!(
            run_length(&g, &subset(&["3+"]), &h("3+")),
            Err(MoveError::NotIotaStable)
        );
    }

    #[test]
    fn whole_orbit_inside_has_no_sector() {
        let g = graph(&["1+", "1-", "2+", "2-"], "(1+ 2+)(1- 2-)");
        let hp = subset(&["1+", "1-", "2+", "2-"]);
        assert_eq!(run_length(&g, &hp, &h("1+")).unwrap(), RunLength::Infinite);
        assert!(sectors(&g, &hp).unwrap().is_empty());
    }

    #[test]
    fn sectors_and_maximal_sectors() {
        let (g, hp) = four_parallel();
        let all = sectors(&g, &hp).unwrap();
        let as_pairs: Vec<(&str, usize)> =
            all.iter().map(|s| (s.halfedge.as_str(), s.run)).collect();
        assert_eq!(as_pairs, vec![("3+", 1), ("3-", 0), ("4+", 0), ("4-", 1)]);
        let max = maximal_sectors(&g, &hp).unwrap();
        let as_pairs: Vec<(&str, usize)> =
            max.iter().map(|s| (s.halfedge.as_str(), s.run)).collect();
        assert_eq!(as_pairs, vec![("3+", 1), ("4-", 1)]);
    }

    #[test]
    fn move_matches_hand_computation() {
        let (g, hp) = four_parallel();
        let (moved, data) = kauer_move(&g, &hp).unwrap();
        assert_eq!(data.tau_cut.to_string(), "(1+ 3+)(1- 4-)");
        assert_eq!(data.tau_paste.to_string(), "(1+ 3-)(1- 4+)");
        let expected =
            Permutation::from_cycle_str(g.sigma().ground(), "(3+ 4+ 2- 1-)(4- 3- 2+ 1+)").unwrap();
        assert_eq!(*moved.sigma(), expected);
        assert_eq!(*moved.iota(), *g.iota());
    }

    #[test]
    fn empty_and_full_subsets_are_identity_moves() {
        let (g, _) = four_parallel();
        let (same, data) = kauer_move(&g, &BTreeSet::new()).unwrap();
        assert_eq!(*same.sigma(), *g.sigma());
        assert!(data.maximal_sectors.is_empty());
        let full: BTreeSet<HalfEdgeId> = g.ground().iter().cloned().collect();
        let (same, _) = kauer_move(&g, &full).unwrap();
        assert_eq!(*same.sigma(), *g.sigma());
    }

    #[test]
    fn standard_move_uses_one_edge() {
        let (g, _) = four_parallel();
        let (via_standard, _) = standard_kauer_move(&g, &h("3+")).unwrap();
        let (via_subset, _) = kauer_move(&g, &subset(&["3+", "3-"])).unwrap();
        assert_eq!(*via_standard.sigma(), *via_subset.sigma());
        assert!(standard_kauer_move(&g, &h("7+")).is_err());
    }

    #[test]
    fn single_sector_subsets_match_hand_computation() {
        // Splitting the subset into one edge per move gives orientations that
        // depend on the order and differ from the whole-subset move.
        let (g, _) = four_parallel();
        let (then_4, _) = kauer_move(&g, &subset(&["3+", "3-"])).unwrap();
        let (then_4, _) = kauer_move(&then_4, &subset(&["4+", "4-"])).unwrap();
        let expected =
            Permutation::from_cycle_str(g.sigma().ground(), "(4+ 2- 3+ 1-)(4- 2+ 1+ 3-)").unwrap();
        assert_eq!(*then_4.sigma(), expected);

        let (then_3, _) = kauer_move(&g, &subset(&["4+", "4-"])).unwrap();
        let (then_3, _) = kauer_move(&then_3, &subset(&["3+", "3-"])).unwrap();
        let expected =
            Permutation::from_cycle_str(g.sigma().ground(), "(3+ 2- 1- 4+)(4- 1+ 3- 2+)").unwrap();
        assert_eq!(*then_3.sigma(), expected);

        let (whole, _) = kauer_move(&g, &subset(&["3+", "3-", "4+", "4-"])).unwrap();
        assert_ne!(*whole.sigma(), *then_4.sigma());
        assert_ne!(*whole.sigma(), *then_3.sigma());
        assert_ne!(*then_4.sigma(), *then_3.sigma());
    }
}
