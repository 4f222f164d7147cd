//! Exact vertex-cut sparsifiers for quasi-bipartite graphs.
//!
//! A vertex-cut sparsifier of a graph `G` with terminals `T` is a graph `G'`
//! containing `T` such that for all `A, B ⊆ T` the minimum `(A,B)` vertex
//! cut has the same weight in `G` and `G'`. This crate builds such
//! sparsifiers with `O(k²)` edges for quasi-bipartite graphs (every edge
//! touches a terminal) by matching terminal pairs to length-2 paths, extends
//! the construction to graphs with small non-terminal components and to
//! graphs with a small τ-separator, and checks results against exact
//! vertex-mincut oracles.
//!
//! ```
//! use vcsparse_core::{parse_graph, sparsify_qb_undirected, verify_sparsifier, VerifyMode};
//!
//! let g = parse_graph(
//!     "graph undirected\nnode a terminal=1\nnode b terminal=1\n\
//!      node u\nnode v\nnode w\nedge a u\nedge u b\nedge a v\nedge v b\nedge a w\nedge w b",
//! )?;
//! let result = sparsify_qb_undirected(&g)?;
//! assert!(result.stats.nonterminals <= 2);
//! let report = verify_sparsifier(&g, &result.sparsifier, VerifyMode::Full, Default::default())?;
//! assert!(report.passed());
//! # Ok::<(), vcsparse_core::Error>(())
//! ```

pub mod cut;
pub mod error;
pub mod flow;
pub mod graph;
pub mod link;
pub mod lower;
pub mod random;
pub mod sparsify;
pub mod verify;

pub use cut::{
    enumerate_min_cuts, mincut, mincut_bruteforce, mincut_vector, CutQuery, CutResult, MincutVector,
};
pub use error::{Error, GraphError, ParseErrorKind, Result};
pub use graph::{
    contract_nonterminal_components, expand_weighted, parse_graph, serialize_graph, subdivide_terminal_edges,
    ComponentQuotient, ExpandedGraph, GraphBuilder, Orientation, SubdivisionRecord, TerminalGraph, Vertex,
    VertexId,
};
pub use link::{build_link_graph, maximum_matching, LinkFlavor, LinkGraph, Matching};
pub use lower::{
    check_family_distinctness, check_forced_terminal, check_subgraph_necessity, check_vij_necessity,
    generate_gk, xij_partition, LowerBoundInstance,
};
pub use sparsify::{
    find_tau_separator, sparsify_qb_directed, sparsify_qb_undirected, sparsify_tau, sparsify_with_separator,
    SeparatorResult, SparsifierResult, SparsifierStats,
};
pub use verify::{verify_sparsifier, verify_subgraph, VerificationReport, VerifyMode, VerifyOptions};
