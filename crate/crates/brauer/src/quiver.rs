//! Quivers and relations of Brauer graph algebras.
//!
//! Nodes are the edges of the graph. Every half-edge whose orientation orbit
//! has size at least two contributes one arrow from its own edge to the edge
//! of its orientation successor; half-edges fixed by the orientation are
//! truncated and contribute none, while the two halves of a loop both do.
//!
//! Paths are stored in application order (first arrow first) and displayed in
//! written order (rightmost factor applied first).

use crate::grading::Grading;
use crate::graph::BrauerGraph;
use crate::token::HalfEdgeId;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("no arrow with source half-edge {0}")]
    UnknownArrowSource(String),
    #[error("duplicate arrow label {0}")]
    DuplicateLabel(String),
    #[error("invalid arrow label {0:?}")]
    BadLabel(String),
}

/// Node of the quiver: one edge of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverNode {
    pub name: String,
    /// Least half-edge of the pairing orbit; unique even if names collide.
    pub least_halfedge: HalfEdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source_halfedge: HalfEdgeId,
    pub from: usize,
    pub to: usize,
    pub degree: i64,
}

/// Quiver with degree-decorated arrows, sorted by source half-edge token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub nodes: Vec<QuiverNode>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn arrow_by_source(&self, h: &HalfEdgeId) -> Option<usize> {
        self.arrows
            .binary_search_by(|a| a.source_halfedge.cmp(h))
            .ok()
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn node_name(&self, idx: usize) -> &str {
        &self.nodes[idx].name
    }

    /// Replaces labels for the given source half-edges; untouched arrows keep
    /// their current label. The resulting labels must stay pairwise distinct.
    pub fn with_labels(&self, labels: &BTreeMap<String, String>) -> Result<Quiver, QuiverError> {
        let mut out = self.clone();
        for (source, label) in labels {
            let h = HalfEdgeId::new(source.as_str())
                .map_err(|_| QuiverError::UnknownArrowSource(source.clone()))?;
            let idx = self
                .arrow_by_source(&h)
                .ok_or_else(|| QuiverError::UnknownArrowSource(source.clone()))?;
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(QuiverError::BadLabel(label.clone()));
            }
            out.arrows[idx].label = label.clone();
        }
        let mut seen = std::collections::BTreeSet::new();
        for a in &out.arrows {
            if !seen.insert(a.label.clone()) {
                return Err(QuiverError::DuplicateLabel(a.label.clone()));
            }
        }
        Ok(out)
    }

    /// One line per arrow: `label: from -> to [degree]`.
    pub fn text_lines(&self) -> Vec<String> {
        self.arrows
            .iter()
            .map(|a| {
                format!(
                    "{}: {} -> {} [{}]",
                    a.label,
                    self.node_name(a.from),
                    self.node_name(a.to),
                    a.degree
                )
            })
            .collect()
    }

    /// DOT digraph with the degree as an edge attribute.
    pub fn dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for node in &self.nodes {
            out.push_str(&format!("  \"{}\";\n", node.name));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\", degree={}];\n",
                self.node_name(a.from),
                self.node_name(a.to),
                a.label,
                a.degree
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Path of composable arrows in application order (first factor first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QPath {
    pub arrows: Vec<usize>,
}

impl QPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Labels in written order: the first applied arrow is rightmost.
    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .rev()
            .map(|&i| q.arrows[i].label.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Labels in application order, used as a deterministic sort key.
    pub fn label_key(&self, q: &Quiver) -> Vec<String> {
        self.arrows
            .iter()
            .map(|&i| q.arrows[i].label.clone())
            .collect()
    }

    pub fn total_degree(&self, q: &Quiver) -> i64 {
        self.arrows.iter().map(|&i| q.arrows[i].degree).sum()
    }

    pub fn source(&self, q: &Quiver) -> usize {
        q.arrows[self.arrows[0]].from
    }

    pub fn target(&self, q: &Quiver) -> usize {
        q.arrows[*self.arrows.last().unwrap()].to
    }
}

/// Cyclic path around one vertex, recorded from a chosen start half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCycle {
    /// Least half-edge of the vertex orbit.
    pub vertex: HalfEdgeId,
    /// Half-edge whose arrow the cycle starts with.
    pub start: HalfEdgeId,
    /// Node index of the edge where the cycle starts and ends.
    pub base: usize,
    pub path: QPath,
}

/// Quiver of a graph; every arrow has degree zero.
pub fn quiver_of(g: &BrauerGraph) -> Quiver {
    quiver_with_degrees(g, None)
}

/// Quiver with arrow degrees read off a grading of the half-edges.
pub fn graded_quiver_of(g: &BrauerGraph, grading: &Grading) -> Quiver {
    quiver_with_degrees(g, Some(grading))
}

fn quiver_with_degrees(g: &BrauerGraph, grading: Option<&Grading>) -> Quiver {
    let edges = g.edges();
    let vertices = g.vertices();
    let nodes: Vec<QuiverNode> = edges
        .classes()
        .iter()
        .map(|class| QuiverNode {
            name: g.edge_name(&class[0]),
            least_halfedge: class[0].clone(),
        })
        .collect();
    let node_of = |h: &HalfEdgeId| -> usize {
        edges
            .class_index_of(h)
            .expect("half-edge belongs to an edge")
    };
    let mut arrows = Vec::new();
    for h in g.ground().iter() {
        if vertices.class_of(h).unwrap().len() < 2 {
            continue;
        }
        arrows.push(Arrow {
            label: String::new(),
            source_halfedge: h.clone(),
            from: node_of(h),
            to: node_of(&g.sigma().apply(h)),
            degree: grading.map_or(0, |d| d.degree(h)),
        });
    }
    for (k, a) in arrows.iter_mut().enumerate() {
        a.label = format!("a{}", k + 1);
    }
    Quiver { nodes, arrows }
}

/// The cyclic path at the vertex of `h` starting with the arrow of `h`, or
/// `None` when `h` is truncated.
pub fn special_cycle_at(g: &BrauerGraph, q: &Quiver, h: &HalfEdgeId) -> Option<SpecialCycle> {
    let orbit = g.vertices().class_of(h)?.to_vec();
    if orbit.len() < 2 {
        return None;
    }
    let mut arrows = Vec::with_capacity(orbit.len());
    let mut cur = h.clone();
    for _ in 0..orbit.len() {
        arrows.push(q.arrow_by_source(&cur).expect("arrow for orbit member"));
        cur = g.sigma().apply(&cur);
    }
    Some(SpecialCycle {
        vertex: orbit.iter().min().unwrap().clone(),
        start: h.clone(),
        base: q.arrows[arrows[0]].from,
        path: QPath { arrows },
    })
}

/// One cycle per non-truncated vertex, starting at the least half-edge of the
/// orbit; vertices in order of their least half-edge.
pub fn special_cycles(g: &BrauerGraph, q: &Quiver) -> Vec<SpecialCycle> {
    g.vertices()
        .classes()
        .iter()
        .filter_map(|class| special_cycle_at(g, q, &class[0]))
        .collect()
}

/// Cycle representatives based at the edge of `h`: one for each half of the
/// edge that is not truncated, in token order of the starting half-edge.
pub fn special_i_cycles(g: &BrauerGraph, q: &Quiver, h: &HalfEdgeId) -> Vec<SpecialCycle> {
    let mut halves = [h.clone(), g.iota().apply(h)];
    halves.sort();
    halves
        .iter()
        .filter_map(|half| special_cycle_at(g, q, half))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIRelation {
    pub base_edge: String,
    pub left: QPath,
    pub right: QPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIIRelation {
    pub base_edge: String,
    pub path: QPath,
}

/// A forbidden length-two path; `path.arrows[0]` is applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIIIRelation {
    pub base_edge: String,
    pub path: QPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub type_i: Vec<TypeIRelation>,
    pub type_ii: Vec<TypeIIRelation>,
    pub type_iii: Vec<TypeIIIRelation>,
}

impl RelationSet {
    /// Deterministic listing: kind, then base edge, then labels.
    pub fn lines(&self, q: &Quiver) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.type_i {
            out.push(format!(
                "I {}: {} - {}",
                r.base_edge,
                r.left.display(q),
                r.right.display(q)
            ));
        }
        for r in &self.type_ii {
            out.push(format!("II {}: {}", r.base_edge, r.path.display(q)));
        }
        for r in &self.type_iii {
            out.push(format!("III {}: {}", r.base_edge, r.path.display(q)));
        }
        out
    }
}

/// Relations of the Brauer graph algebra presented by `q = quiver_of(g)`.
///
/// Type I: for each edge whose two cycle representatives both exist, their
/// difference. Type II: each representative extended by its first arrow.
/// Type III: composable pairs that are not subpaths of a cycle, i.e. the
/// second arrow is not sourced at the orientation successor of the first.
pub fn relations_of(g: &BrauerGraph, q: &Quiver) -> RelationSet {
    let mut type_i = Vec::new();
    let mut type_ii = Vec::new();
    for class in g.edges().classes() {
        let reps = special_i_cycles(g, q, &class[0]);
        let name = g.edge_name(&class[0]);
        if reps.len() == 2 {
            type_i.push(TypeIRelation {
                base_edge: name.clone(),
                left: reps[0].path.clone(),
                right: reps[1].path.clone(),
            });
        }
        for rep in &reps {
            let mut arrows = rep.path.arrows.clone();
            arrows.push(rep.path.arrows[0]);
            type_ii.push(TypeIIRelation {
                base_edge: name.clone(),
                path: QPath { arrows },
            });
        }
    }
    let mut type_iii = Vec::new();
    for (x, arrow) in q.arrows.iter().enumerate() {
        let successor = g.sigma().apply(&arrow.source_halfedge);
        let forbidden = g.iota().apply(&successor);
        if let Some(y) = q.arrow_by_source(&forbidden) {
            type_iii.push(TypeIIIRelation {
                base_edge: q.node_name(arrow.from).to_owned(),
                path: QPath { arrows: vec![x, y] },
            });
        }
    }
    type_i.sort_by_key(|r| (r.base_edge.clone(), r.left.label_key(q)));
    type_ii.sort_by_key(|r| (r.base_edge.clone(), r.path.label_key(q)));
    type_iii.sort_by_key(|r| (r.base_edge.clone(), r.path.label_key(q)));
    RelationSet {
        type_i,
        type_ii,
        type_iii,
    }
}
