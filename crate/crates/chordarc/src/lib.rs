//! Blocking quadruples, forbidden-subgraph certificates, and verified
//! circular-arc representations for chordal graphs of small independence
//! number.
//!
//! The library is organised around one pipeline:
//!
//! * [`graph`] — immutable simple graphs, edge-list parsing, and the
//!   restricted path search behind the miss/avoid predicates.
//! * [`chordal`] — chordality testing, maximal cliques, clique trees,
//!   independence number, and minimum clique covers.
//! * [`obstruction`] — avoid/miss predicates, asteroidal triples, blocking
//!   quadruples, and extraction of minimal forbidden-subgraph certificates.
//! * [`arcs`] — Euler tours of clique trees, the avoid-graph `H`, the
//!   star-condition checker, and the constructive circular-arc builder.
//! * [`oracle`] — independent brute-force oracles (circular-arc recognition,
//!   obstruction search, independence number) that ground every claim.
//! * [`gen`] — seeded random chordal graphs via subtree intersection.
//! * [`catalog`] — the named fixture graphs used throughout the test suites.
//! * [`suites`] — the property suites run by `chordarc selftest`.

pub mod arcs;
pub mod catalog;
pub mod chordal;
pub mod cli;
pub mod gen;
pub mod graph;
pub mod obstruction;
pub mod oracle;
pub mod render;
pub mod suites;


pub use arcs::{construct_representation, ArcRep};
pub use chordal::{build_clique_tree, is_chordal, CliqueTree};
pub use graph::{Graph, Path};
pub use obstruction::{find_blocking_quadruple, BlockingQuadruple, ObstructionCert};
pub use oracle::verify_representation;


