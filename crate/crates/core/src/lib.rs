//! Recognition of unmixed (well-covered) graphs.
//!
//! A graph is unmixed when all of its minimal vertex covers have the same
//! size, equivalently when all maximal independent sets have the same size.
//! This crate provides
//!
//! * an exhaustive census of minimal covers / maximal independent sets
//!   ([`covers`]), used as ground truth;
//! * r-partitions and clique-row structures ([`partition`]): a partition of
//!   the vertices into `r` independent columns of equal size `n` whose rows
//!   are `r`-cliques;
//! * a fast decision procedure for graphs carrying such a structure, and
//!   checkers for the classical bipartite and tripartite characterizations
//!   ([`theorems`], [`matching`]);
//! * instance generators and the embedded reference fixtures
//!   ([`generators`]);
//! * the line-based graph file format ([`format`]) and the `unmixed` CLI
//!   ([`cli`]).

pub mod cli;
pub mod covers;
pub mod format;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod partition;
pub mod theorems;

pub use covers::{enumerate_minimal_covers, enumerate_mis, is_unmixed_bruteforce, CoverCensus};
pub use format::{parse_graph, GraphFile, ParseError};
pub use graph::{Distance, Graph, GraphError, Vertex, VertexSet};
pub use partition::{RPartition, StarStructure};

/// Default cap on the number of sets, partitions or matchings an
/// enumeration may produce before giving up.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Default node budget for backtracking searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Size and budget failures shared by the exponential routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LimitError {
    #[error("graph has {vertex_count} vertices; enumeration supports at most 64")]
    TooLarge { vertex_count: usize },
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
}
