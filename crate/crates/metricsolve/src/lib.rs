//! Exact solvers for three metric graph problems: metric dimension,
//! geodetic set and strong metric dimension.
//!
//! The crate provides
//! * a small dense graph type with BFS all-pairs distances ([`graph`]),
//! * polynomial-time verifiers and brute-force reference solvers ([`oracle`]),
//! * vertex-cover based kernelization and XP algorithms ([`vc`]),
//! * the strong resolving graph reduction `smd(G) = vc(G_SR)` ([`srg`]),
//! * tree decompositions, nice-form transformation and two dynamic
//!   programs over them ([`td`], [`dp`]),
//! * generators for SAT-based hardness instances together with
//!   machine-checkable witnesses ([`sat`], [`gadget`]),
//! * PACE/DIMACS file formats ([`io`]) and a thin CLI ([`cli`]).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod dp;
pub mod enumerate;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod sat;
pub mod sperner;
pub mod srg;
pub mod td;
pub mod vc;

pub use error::Error;
pub use graph::{DistanceMatrix, Graph, INFINITY};
pub use report::{Decision, Method, Problem, SolutionReport};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
