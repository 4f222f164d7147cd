//! Vertex-cut sparsifiers built from maximum matchings in link graphs.
//!
//! Every construction returns a subgraph `G'` of its input that keeps all
//! terminals and has the same minimum vertex cut between every pair of
//! terminal sets.

mod quasi;
mod separator;
mod tau;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::graph::{TerminalGraph, VertexId};
use crate::link::LinkFlavor;

pub use quasi::{sparsify_qb_directed, sparsify_qb_undirected};
pub use separator::{find_tau_separator, sparsify_with_separator, SeparatorResult};
pub use tau::sparsify_tau;

/// One matched couple that caused an edge to be kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProvenanceEntry {
    pub pair: (VertexId, VertexId),
    pub flavor: LinkFlavor,
}

/// Kept edge (as stored in the sparsifier) to the couples that selected it.
pub type Provenance = BTreeMap<(VertexId, VertexId), BTreeSet<ProvenanceEntry>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingSizes {
    Undirected(usize),
    Directed { out_link: usize, in_link: usize },
}

impl MatchingSizes {
    pub fn total(self) -> usize {
        match self {
            MatchingSizes::Undirected(m) => m,
            MatchingSizes::Directed { out_link, in_link } => out_link + in_link,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifierStats {
    /// `k`, the number of terminals of the input.
    pub terminals: usize,
    /// `|V'|`
    pub vertices: usize,
    /// `|E'|`
    pub edges: usize,
    /// `|V'∖T|`
    pub nonterminals: usize,
    pub matching: MatchingSizes,
    /// Number of components of G∖T (τ pipeline only).
    pub components: Option<usize>,
    /// Largest component of G∖T (τ pipeline only).
    pub max_component: Option<usize>,
    pub tau: Option<usize>,
    pub separator_size: Option<usize>,
    /// Terminal count after promoting the separator.
    pub extended_terminals: Option<usize>,
    /// Whether the size bounds of the construction held.
    pub bound_ok: bool,
}

impl SparsifierStats {
    /// `k=<k> V'=<n> E'=<m> bound_ok=<bool>`
    pub fn summary_line(&self) -> String {
        format!(
            "k={} V'={} E'={} bound_ok={}",
            self.terminals, self.vertices, self.edges, self.bound_ok
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifierResult {
    pub sparsifier: TerminalGraph,
    pub provenance: Provenance,
    pub stats: SparsifierStats,
}

impl SparsifierResult {
    /// Provenance as comment lines, one per (edge, couple):
    /// `# edge <u> <v> from pair (<a>,<b>) via <flavor>`.
    pub fn provenance_comments(&self) -> String {
        let mut out = String::new();
        for ((u, v), entries) in &self.provenance {
            for entry in entries {
                let _ = writeln!(
                    out,
                    "# edge {u} {v} from pair ({},{}) via {}",
                    entry.pair.0, entry.pair.1, entry.flavor
                );
            }
        }
        out
    }
}

/// Edge selection in index space of some graph: kept edge to the
/// `(a, b, flavor)` couples that selected it.
pub(crate) type Selection = BTreeMap<(usize, usize), BTreeSet<(usize, usize, LinkFlavor)>>;

/// Assemble the result graph from selected edges. Kept vertices are the
/// terminals and every endpoint of a kept edge.
pub(crate) fn assemble(g: &TerminalGraph, selection: &Selection) -> (TerminalGraph, Provenance) {
    let mut keep: Vec<bool> = g.vertices().iter().map(|v| v.terminal).collect();
    for &(u, v) in selection.keys() {
        keep[u] = true;
        keep[v] = true;
    }
    let sparsifier = g.subgraph(&keep, selection.keys().copied());
    let provenance = selection
        .iter()
        .map(|(&(u, v), couples)| {
            let entries = couples
                .iter()
                .map(|&(a, b, flavor)| ProvenanceEntry {
                    pair: (g.id(a).clone(), g.id(b).clone()),
                    flavor,
                })
                .collect();
            ((g.id(u).clone(), g.id(v).clone()), entries)
        })
        .collect();
    (sparsifier, provenance)
}

pub(crate) fn nonterminal_count(g: &TerminalGraph) -> usize {
    g.vertex_count() - g.terminal_count()
}
