//! Brauer graphs as permutation triples on a finite set of half-edges.
//!
//! A Brauer graph is stored as a triple `(H, iota, sigma)` where `H` is a finite
//! set of half-edge tokens, `iota` is a fixed-point-free involution pairing the
//! two halves of each edge, and `sigma` is an arbitrary permutation whose orbits
//! are the cyclically ordered vertices. Faces are the orbits of `sigma . iota`
//! (pairing applied first).
//!
//! The crate provides:
//!
//! - core permutation and graph operations, validation, bipartiteness, and a
//!   canonical form giving isomorphism tests with explicit witnesses ([`graph`],
//!   [`perm`], [`canon`]);
//! - generalized Kauer moves driven by maximal sectors of an edge subset, plus
//!   their graded refinements acting on one-homogeneous gradings ([`moves`],
//!   [`grading`]);
//! - the quiver with relations of the Brauer graph algebra, admissible cuts,
//!   gentle quotients, and a closed dimension count ([`quiver`], [`cut`],
//!   [`dimension`]);
//! - the compatibility check between graded moves and admissible cuts
//!   ([`theorem`]);
//! - derived-equivalence invariants (vertex/edge counts, face perimeters,
//!   bipartiteness), an explicit face-permutation conjugator for moved graphs,
//!   and a bounded breadth-first search through move sequences ([`invariants`],
//!   [`search`]);
//! - a small text format for graphs, cuts, and arrow label maps ([`io`]).

pub mod canon;
pub mod cut;
pub mod dimension;
pub mod grading;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod moves;
pub mod perm;
pub mod quiver;
pub mod search;
pub mod theorem;
pub mod token;

pub use canon::{canonical_form, is_isomorphic};
pub use cut::{
    admissible_cut, check_cut, cut_to_grading, enumerate_admissible_cuts, gentle_check,
    gentle_quotient, gentle_quotient_of, grading_to_cut, resolve_cut_entries, AdmissibleCut,
    CutDiagnostics, CutError, GentlePresentation, GentleReport,
};
pub use dimension::algebra_dimension;
pub use grading::{
    graded_multi_move, graded_sector_move, GradedBrauerGraph, Grading, GradingError,
};
pub use graph::{BipartiteCheck, BrauerGraph, GraphError, Violation};
pub use invariants::{
    conjugator, invariant_report, iota_sigma_commutes, transfer_coloring, verify_move_invariance,
    InvariantError, InvariantReport,
};
pub use io::{parse, parse_cut_file, parse_labels_file, serialize, ParseError, ParsedGraph};
pub use moves::{
    kauer_move, maximal_sectors, move_data, run_length, sectors, standard_kauer_move, MoveData,
    MoveError, RunLength, Sector,
};
pub use perm::{GroundSet, OrbitPartition, PermError, Permutation};
pub use quiver::{
    graded_quiver_of, quiver_of, relations_of, special_cycle_at, special_cycles, special_i_cycles,
    Arrow, QPath, Quiver, QuiverError, RelationSet, SpecialCycle,
};
pub use search::{reach, reach_labeled, MoveKind, SearchResult, Step};
pub use theorem::{check_main_theorem, TheoremCheck};
pub use token::{HalfEdgeId, TokenError};
