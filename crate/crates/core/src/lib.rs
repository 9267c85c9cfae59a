//! Census of three-hyperedge patterns.
//!
//! A triple of distinct hyperedges is summarized by which of its seven Venn
//! regions are non-empty. Up to relabelling the three edges, connected
//! triples without repeated edges fall into 26 patterns: 20 closed ones,
//! where every pair of edges meets, and 6 open ones, where exactly one pair
//! is disjoint.
//!
//! [`count_all`] counts all of them. Vertices are ordered by minimum-degree
//! peeling, which bounds the out-degree of every vertex by the hyperedge
//! degeneracy `κ`; only patterns with a triangle-like witness are enumerated
//! and the rest are derived from cheap aggregates. [`oracle`] holds the
//! brute-force definitions the pipeline is tested against.
//!
//! ```
//! use hypertri_core::{count_all, parse_str};
//!
//! let (g, _) = parse_str("1 2\n2 3\n1 3\n3 4\n").unwrap();
//! let census = count_all(&g).unwrap();
//! assert_eq!(census.counts.c(17), 1);
//! assert_eq!(census.counts.closed_total(), 2);
//! ```

pub mod counters;
pub mod edge_degrees;
pub mod error;
pub mod hypergraph;
pub mod oracle;
pub mod orientation;
pub mod pattern;
pub mod scratch;

pub use counters::{count_all, Census, ComplementCounts, PatternCounts, Phase, PhaseRecord, PhaseTimings, StarAggregates};
pub use edge_degrees::EdgeDegreeTable;
pub use error::{Error, Result};
pub use hypergraph::{parse_edge_list, parse_str, EdgeId, Hypergraph, IngestReport, ParseOptions, Stats, VertexId};
pub use orientation::{build_dah, hyper_matula_beck, peel, Ordering, OrientedHypergraph, Peeling, Rank};
pub use pattern::{
    classify, generate_pattern_table, Classification, Family, NotAPattern, PatternId, PatternTable,
    RegionSignature,
};
