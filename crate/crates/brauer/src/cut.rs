//! Admissible cuts and gentle quotients.
//!
//! An admissible cut selects exactly one arrow out of every cyclic vertex
//! walk, one per non-truncated vertex. Equivalently, in grading form: a
//! zero/one one-homogeneous grading, where each truncated vertex is forced to
//! carry its single one on its lone half-edge. Deleting the cut arrows and
//! keeping only the forbidden-pair relations among the survivors presents the
//! quotient algebra, which is gentle.

use crate::grading::Grading;
use crate::graph::BrauerGraph;
use crate::quiver::{quiver_of, relations_of, Arrow, QPath, Quiver, QuiverNode};
use crate::token::HalfEdgeId;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CutError {
    #[error("unknown half-edge {0}")]
    UnknownHalfEdge(String),
    #[error("inadmissible cut")]
    Inadmissible,
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("duplicate cut entry {0}")]
    DuplicateEntry(String),
    #[error("grading is not zero/one at {0}")]
    NotZeroOne(String),
    #[error("grading must be one-homogeneous, vertex at {0} sums to {1}")]
    NotOneHomogeneous(String, i64),
}

/// Validated admissible cut, stored as the arrows' source half-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleCut {
    sources: BTreeSet<HalfEdgeId>,
}

impl AdmissibleCut {
    pub fn sources(&self) -> &BTreeSet<HalfEdgeId> {
        &self.sources
    }

    pub fn contains(&self, h: &HalfEdgeId) -> bool {
        self.sources.contains(h)
    }
}

/// Per-vertex account of a candidate cut. `admissible` requires exactly one
/// selected arrow on every non-truncated vertex and no stray entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutDiagnostics {
    pub admissible: bool,
    /// (least half-edge of the vertex, number of selected arrows at it),
    /// for non-truncated vertices only.
    pub per_vertex: Vec<(HalfEdgeId, usize)>,
    /// Entries that name truncated half-edges and so select no arrow.
    pub not_arrows: Vec<HalfEdgeId>,
}

/// Counts the selected arrows on each non-truncated vertex.
pub fn check_cut(
    g: &BrauerGraph,
    sources: &BTreeSet<HalfEdgeId>,
) -> Result<CutDiagnostics, CutError> {
    for h in sources {
        if !g.ground().contains(h) {
            return Err(CutError::UnknownHalfEdge(h.as_str().to_owned()));
        }
    }
    let vertices = g.vertices();
    let mut per_vertex = Vec::new();
    let mut not_arrows = Vec::new();
    for h in sources {
        if vertices.class_of(h).unwrap().len() < 2 {
            not_arrows.push(h.clone());
        }
    }
    let mut admissible = not_arrows.is_empty();
    for class in vertices.classes() {
        if class.len() < 2 {
            continue;
        }
        let count = class.iter().filter(|h| sources.contains(h)).count();
        if count != 1 {
            admissible = false;
        }
        per_vertex.push((class[0].clone(), count));
    }
    Ok(CutDiagnostics {
        admissible,
        per_vertex,
        not_arrows,
    })
}

/// Validates a cut; errors with `inadmissible cut` unless every non-truncated
/// vertex holds exactly one selected arrow.
pub fn admissible_cut(
    g: &BrauerGraph,
    sources: &BTreeSet<HalfEdgeId>,
) -> Result<AdmissibleCut, CutError> {
    let diag = check_cut(g, sources)?;
    if !diag.admissible {
        return Err(CutError::Inadmissible);
    }
    Ok(AdmissibleCut {
        sources: sources.clone(),
    })
}

/// Resolves cut file entries against a quiver: each entry is an arrow label
/// or an arrow's source half-edge token.
pub fn resolve_cut_entries(
    q: &Quiver,
    entries: &[String],
) -> Result<BTreeSet<HalfEdgeId>, CutError> {
    let mut out = BTreeSet::new();
    for entry in entries {
        let idx = q.arrow_by_label(entry).or_else(|| {
            HalfEdgeId::new(entry.as_str())
                .ok()
                .and_then(|h| q.arrow_by_source(&h))
        });
        let idx = idx.ok_or_else(|| CutError::UnknownArrow(entry.clone()))?;
        if !out.insert(q.arrows[idx].source_halfedge.clone()) {
            return Err(CutError::DuplicateEntry(entry.clone()));
        }
    }
    Ok(out)
}

/// Grading view of a cut: degree one on cut arrows and on the lone half-edge
/// of every truncated vertex, zero elsewhere.
pub fn cut_to_grading(g: &BrauerGraph, cut: &AdmissibleCut) -> Grading {
    let mut ones: BTreeMap<HalfEdgeId, i64> = BTreeMap::new();
    for h in cut.sources() {
        ones.insert(h.clone(), 1);
    }
    for class in g.vertices().classes() {
        if class.len() == 1 {
            ones.insert(class[0].clone(), 1);
        }
    }
    Grading::new(g.ground(), &ones).expect("cut sources live in the ground set")
}

/// Cut view of a zero/one one-homogeneous grading; inverse to
/// [`cut_to_grading`].
pub fn grading_to_cut(g: &BrauerGraph, grading: &Grading) -> Result<AdmissibleCut, CutError> {
    for (h, d) in grading.entries() {
        if d != 0 && d != 1 {
            return Err(CutError::NotZeroOne(h.as_str().to_owned()));
        }
    }
    grading.check_one_homogeneous(g).map_err(|e| match e {
        crate::grading::GradingError::NotOneHomogeneous(rep, sum) => {
            CutError::NotOneHomogeneous(rep, sum)
        }
        crate::grading::GradingError::UnknownToken(t) => CutError::UnknownHalfEdge(t),
    })?;
    let vertices = g.vertices();
    let sources: BTreeSet<HalfEdgeId> = grading
        .entries()
        .filter(|(h, d)| *d == 1 && vertices.class_of(h).unwrap().len() >= 2)
        .map(|(h, _)| h.clone())
        .collect();
    admissible_cut(g, &sources)
}

/// Presentation of the quotient by an admissible cut: the quiver minus the
/// cut arrows, with the surviving forbidden pairs as relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentlePresentation {
    pub quiver: Quiver,
    /// Length-two relations over the reduced quiver, first factor first.
    pub relations: Vec<QPath>,
    pub cut: AdmissibleCut,
}

impl GentlePresentation {
    pub fn relation_lines(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|p| p.display(&self.quiver))
            .collect()
    }
}

/// Quotient presentation of the graph algebra by an admissible cut. Cyclic
/// and difference relations die because every cycle contains exactly one cut
/// arrow; only forbidden pairs among surviving arrows remain.
pub fn gentle_quotient(g: &BrauerGraph, cut: &AdmissibleCut) -> GentlePresentation {
    let q = quiver_of(g);
    gentle_quotient_of(g, &q, cut)
}

/// Same as [`gentle_quotient`] but keeps the labels of a caller-built quiver.
pub fn gentle_quotient_of(g: &BrauerGraph, q: &Quiver, cut: &AdmissibleCut) -> GentlePresentation {
    let keep: Vec<usize> = (0..q.arrows.len())
        .filter(|&i| !cut.contains(&q.arrows[i].source_halfedge))
        .collect();
    let new_index: BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(n, &old)| (old, n)).collect();
    let nodes: Vec<QuiverNode> = q.nodes.clone();
    let arrows: Vec<Arrow> = keep.iter().map(|&i| q.arrows[i].clone()).collect();
    let reduced = Quiver { nodes, arrows };
    let all = relations_of(g, q);
    let relations: Vec<QPath> = all
        .type_iii
        .iter()
        .filter_map(|r| {
            let xs: Option<Vec<usize>> = r
                .path
                .arrows
                .iter()
                .map(|i| new_index.get(i).copied())
                .collect();
            xs.map(|arrows| QPath { arrows })
        })
        .collect();
    GentlePresentation {
        quiver: reduced,
        relations,
        cut: cut.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleReport {
    pub gentle: bool,
    pub failures: Vec<String>,
}

/// Verifies the gentle axioms on a presentation: at most two arrows in and
/// out of each node, quadratic monomial relations, and for every arrow at
/// most one permitted and one forbidden composition on each side.
pub fn gentle_check(p: &GentlePresentation) -> GentleReport {
    let q = &p.quiver;
    let mut failures = Vec::new();
    let mut outs = vec![0usize; q.nodes.len()];
    let mut ins = vec![0usize; q.nodes.len()];
    for a in &q.arrows {
        outs[a.from] += 1;
        ins[a.to] += 1;
    }
    for (i, node) in q.nodes.iter().enumerate() {
        if outs[i] > 2 {
            failures.push(format!(
                "node {} has {} outgoing arrows",
                node.name, outs[i]
            ));
        }
        if ins[i] > 2 {
            failures.push(format!("node {} has {} incoming arrows", node.name, ins[i]));
        }
    }
    let forbidden: BTreeSet<(usize, usize)> = p
        .relations
        .iter()
        .filter_map(|r| {
            if r.arrows.len() != 2 {
                failures.push(format!("relation {} is not quadratic", r.display(q)));
                return None;
            }
            Some((r.arrows[0], r.arrows[1]))
        })
        .collect();
    for (x, ax) in q.arrows.iter().enumerate() {
        let mut permitted_after = 0;
        let mut forbidden_after = 0;
        let mut permitted_before = 0;
        let mut forbidden_before = 0;
        for (y, ay) in q.arrows.iter().enumerate() {
            if ay.from == ax.to {
                if forbidden.contains(&(x, y)) {
                    forbidden_after += 1;
                } else {
                    permitted_after += 1;
                }
            }
            if ay.to == ax.from {
                if forbidden.contains(&(y, x)) {
                    forbidden_before += 1;
                } else {
                    permitted_before += 1;
                }
            }
        }
        for (what, count) in [
            ("permitted successors", permitted_after),
            ("forbidden successors", forbidden_after),
            ("permitted predecessors", permitted_before),
            ("forbidden predecessors", forbidden_before),
        ] {
            if count > 1 {
                failures.push(format!("arrow {} has {} {}", ax.label, count, what));
            }
        }
    }
    GentleReport {
        gentle: failures.is_empty(),
        failures,
    }
}

/// All admissible cuts of a graph: one arrow choice per non-truncated vertex.
pub fn enumerate_admissible_cuts(g: &BrauerGraph) -> Vec<AdmissibleCut> {
    let vertices = g.vertices();
    let choices: Vec<&Vec<HalfEdgeId>> = vertices
        .classes()
        .iter()
        .filter(|class| class.len() >= 2)
        .collect();
    let mut cuts = vec![BTreeSet::new()];
    for class in choices {
        let mut next = Vec::new();
        for cut in &cuts {
            for h in class.iter() {
                let mut bigger: BTreeSet<HalfEdgeId> = cut.clone();
                bigger.insert(h.clone());
                next.push(bigger);
            }
        }
        cuts = next;
    }
    cuts.into_iter()
        .map(|sources| AdmissibleCut { sources })
        .collect()
}
