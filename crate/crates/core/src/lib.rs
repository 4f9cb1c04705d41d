//! minorkit: a toolkit for graph minors and free-planar graphs at desk scale.
//!
//! The library provides, for simple graphs on up to 32 vertices:
//!
//! - graph values with the minor operations (vertex/edge deletion, edge
//!   contraction, subdivision), canonical forms, exhaustive enumeration of
//!   small isomorphism classes, and graph6 I/O ([`graph`], [`canon`],
//!   [`enumerate`], [`graph6`], [`catalog`]);
//! - minor containment testing with verifiable branch-set certificates and
//!   obstruction-set utilities ([`minor`]);
//! - connectivity predicates, block decomposition, and decomposition of
//!   2-connected graphs into triconnected components ([`connectivity`],
//!   [`triconnected`]);
//! - planarity by two independent routes and free-planarity by three
//!   ([`planarity`], [`freeplanar`]);
//! - the obstruction-set operator for "free" classes ([`freeop`]);
//! - bridges of a cycle, their six-slot descriptors, and extraction of
//!   reduced-Kuratowski minor certificates ([`bridges`]).
//!
//! Everything is exact and exhaustively cross-validated on graphs with up
//! to 7-8 vertices; the algorithms favor being obviously correct over
//! asymptotics.

pub mod bridges;
pub mod canon;
pub mod catalog;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod freeop;
pub mod freeplanar;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod planarity;
pub mod set;
pub mod triconnected;

pub use error::{BridgeError, CertifyError, DecomposeError, GraphError, ParseError};
pub use graph::{Graph, MAX_VERTICES};
pub use set::GraphSet;
