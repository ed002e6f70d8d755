//! Dimension of the Brauer graph algebra.
//!
//! A basis is given by the trivial path at each edge, the proper cyclic runs
//! (each non-truncated half-edge contributes the runs of length one up to one
//! less than its vertex valence), and one socle element per edge that meets a
//! non-truncated vertex (full turns around the two ends are identified).

use crate::graph::BrauerGraph;

pub fn algebra_dimension(g: &BrauerGraph) -> u64 {
    let vertices = g.vertices();
    let trivial = g.edges().len() as u64;
    let mut proper = 0u64;
    for h in g.ground().iter() {
        let valence = vertices.class_of(h).unwrap().len() as u64;
        if valence >= 2 {
            proper += valence - 1;
        }
    }
    let mut socle = 0u64;
    for class in g.edges().classes() {
        let has_cycle = class
            .iter()
            .any(|h| vertices.class_of(h).unwrap().len() >= 2);
        if has_cycle {
            socle += 1;
        }
    }
    trivial + proper + socle
}
