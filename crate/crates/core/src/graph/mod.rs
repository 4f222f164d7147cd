//! Vertex-weighted (di)graphs with a designated terminal set.
//!
//! Vertices are kept sorted by id, so a vertex index doubles as its rank in
//! lexicographic id order. Edges are stored as sorted index pairs; undirected
//! edges are stored once with the smaller index first.

mod io;
mod transform;

use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, GraphError, Result};

pub use io::{parse_graph, serialize_graph};
pub use transform::{
    contract_nonterminal_components, expand_weighted, subdivide_terminal_edges, ComponentQuotient,
    ExpandedGraph, SubdivisionRecord,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Directed,
    Undirected,
}

impl Orientation {
    pub fn is_directed(self) -> bool {
        self == Orientation::Directed
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Directed => "directed",
            Orientation::Undirected => "undirected",
        })
    }
}

/// A vertex name: a nonempty token of ASCII letters, digits and underscores.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Result<Self, GraphError> {
        let id = id.into();
        if Self::is_valid(&id) {
            Ok(VertexId(id))
        } else {
            Err(GraphError::InvalidId(id))
        }
    }

    pub fn is_valid(id: &str) -> bool {
        !id.is_empty() && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub weight: u32,
    pub terminal: bool,
}

/// An immutable vertex-weighted graph with terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalGraph {
    orientation: Orientation,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl TerminalGraph {
    pub fn empty(orientation: Orientation) -> Self {
        GraphBuilder::new(orientation).build()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_directed(&self) -> bool {
        self.orientation.is_directed()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.vertices[v].id
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.vertices[v].weight
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.vertices[v].terminal
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.id.as_str().cmp(id)).ok()
    }

    pub(crate) fn require_index(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()).into())
    }

    /// Edges as index pairs, sorted; source first when directed.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.edges.iter().map(|&(u, v)| (self.id(u), self.id(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    /// Out-neighbours (all neighbours when undirected), ascending.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    /// In-neighbours (all neighbours when undirected), ascending.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    /// Neighbours ignoring direction, ascending and deduplicated.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        if !self.is_directed() {
            return self.succ[v].clone();
        }
        let mut all: Vec<usize> = self.succ[v].iter().chain(&self.pred[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn terminals(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_terminal(v))
            .collect()
    }

    pub fn terminal_ids(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| v.terminal)
            .map(|v| v.id.clone())
            .collect()
    }

    pub fn terminal_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.terminal).count()
    }

    pub fn total_weight(&self) -> u64 {
        self.vertices.iter().map(|v| u64::from(v.weight)).sum()
    }

    pub fn is_unit_weight(&self) -> bool {
        self.vertices.iter().all(|v| v.weight == 1)
    }

    /// Every edge touches a terminal.
    pub fn is_quasi_bipartite(&self) -> bool {
        self.first_nonterminal_edge().is_none()
    }

    pub(crate) fn first_nonterminal_edge(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| !self.is_terminal(u) && !self.is_terminal(v))
    }

    pub(crate) fn require_quasi_bipartite(&self) -> Result<()> {
        match self.first_nonterminal_edge() {
            Some((u, v)) => Err(Error::NotQuasiBipartite(
                self.id(u).to_string(),
                self.id(v).to_string(),
            )),
            None => Ok(()),
        }
    }

    pub(crate) fn require_unit_weight(&self) -> Result<()> {
        match self.vertices.iter().find(|v| v.weight != 1) {
            Some(v) => Err(Error::Weighted(v.id.to_string(), v.weight)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_orientation(&self, expected: Orientation) -> Result<()> {
        if self.orientation == expected {
            Ok(())
        } else {
            Err(Error::Orientation {
                expected,
                found: self.orientation,
            })
        }
    }

    /// Weakly connected components of the graph with `removed` vertices
    /// deleted. Each component is sorted; components are ordered by their
    /// smallest member.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        seen.resize(n, false);
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.succ[u].iter().chain(&self.pred[u]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of G∖T.
    pub fn nonterminal_components(&self) -> Vec<Vec<usize>> {
        let terminal: Vec<bool> = self.vertices.iter().map(|v| v.terminal).collect();
        self.components_without(&terminal)
    }

    /// Largest component of G∖T (0 when every vertex is a terminal).
    pub fn max_nonterminal_component(&self) -> usize {
        self.nonterminal_components()
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    /// The subgraph on the vertices flagged in `keep` with the given edges
    /// (index pairs of `self`, both endpoints kept).
    pub(crate) fn subgraph(
        &self,
        keep: &[bool],
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> TerminalGraph {
        let mut builder = GraphBuilder::new(self.orientation);
        for (v, vertex) in self.vertices.iter().enumerate() {
            if keep[v] {
                builder.push_vertex(vertex.clone());
            }
        }
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                remap[v] = next;
                next += 1;
            }
        }
        let mut edge_list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(keep[u] && keep[v]);
                (remap[u], remap[v])
            })
            .collect();
        edge_list.sort_unstable();
        edge_list.dedup();
        builder.finish_sorted(edge_list)
    }

    /// Delete the given vertices and their incident edges.
    pub fn without_vertices(&self, removed: &[usize]) -> TerminalGraph {
        let mut keep = vec![true; self.vertex_count()];
        for &v in removed {
            keep[v] = false;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep[u] && keep[v])
            .collect();
        self.subgraph(&keep, edges)
    }

    /// Same graph with the terminal flag replaced by `terminal[v]`.
    pub fn with_terminal_flags(&self, terminal: &[bool]) -> TerminalGraph {
        let mut g = self.clone();
        for (vertex, &t) in g.vertices.iter_mut().zip(terminal) {
            vertex.terminal = t;
        }
        g
    }
}

/// Incremental constructor for [`TerminalGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    orientation: Orientation,
    vertices: BTreeMap<VertexId, (u32, bool)>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(orientation: Orientation) -> Self {
        GraphBuilder {
            orientation,
            vertices: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, id: &str, weight: u32, terminal: bool) -> Result<(), GraphError> {
        let id = VertexId::new(id)?;
        if weight < 1 {
            return Err(GraphError::InvalidWeight(id.to_string()));
        }
        if self.vertices.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id.to_string()));
        }
        self.vertices.insert(id, (weight, terminal));
        Ok(())
    }

    pub fn contains(&self, id: &str) -> bool {
        self.vertices.contains_key(id)
    }

    /// Adds an edge; duplicate detection happens in [`GraphBuilder::try_build`].
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        let u = VertexId::new(u)?;
        let v = VertexId::new(v)?;
        self.edges.push((u, v));
        Ok(())
    }

    fn push_vertex(&mut self, vertex: Vertex) {
        self.vertices.insert(vertex.id, (vertex.weight, vertex.terminal));
    }

    /// Build, rejecting unknown endpoints and duplicate edges.
    pub fn try_build(self) -> Result<TerminalGraph, GraphError> {
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.keys().enumerate().map(|(i, id)| (id, i)).collect();
        let mut pairs = Vec::with_capacity(self.edges.len());
        for (u, v) in &self.edges {
            let &iu = index
                .get(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let &iv = index
                .get(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            pairs.push(self.canonical(iu, iv));
        }
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            let ids: Vec<&VertexId> = self.vertices.keys().collect();
            return Err(GraphError::DuplicateEdge(
                ids[w[0].0].to_string(),
                ids[w[0].1].to_string(),
            ));
        }
        Ok(self.finish_sorted(sorted))
    }

    /// Build, silently merging parallel edges.
    pub fn build(self) -> TerminalGraph {
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.keys().enumerate().map(|(i, id)| (id, i)).collect();
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(u, v)| self.canonical(index[u], index[v]))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        self.finish_sorted(pairs)
    }

    fn canonical(&self, u: usize, v: usize) -> (usize, usize) {
        if self.orientation.is_directed() || u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn finish_sorted(self, edges: Vec<(usize, usize)>) -> TerminalGraph {
        let vertices: Vec<Vertex> = self
            .vertices
            .into_iter()
            .map(|(id, (weight, terminal))| Vertex { id, weight, terminal })
            .collect();
        let n = vertices.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in &edges {
            succ[u].push(v);
            pred[v].push(u);
            if !self.orientation.is_directed() {
                succ[v].push(u);
                pred[u].push(v);
            }
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort_unstable();
        }
        TerminalGraph {
            orientation: self.orientation,
            vertices,
            edges,
            succ,
            pred,
        }
    }
}
