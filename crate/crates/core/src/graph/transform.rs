use std::collections::{BTreeMap, BTreeSet};

use super::{GraphBuilder, TerminalGraph, VertexId};
use crate::error::{Error, GraphError, Result};

const SUBDIVISION_PREFIX: &str = "__sub_";
const COMPONENT_PREFIX: &str = "__cmp_";

/// Fresh non-terminals introduced for terminal-terminal edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubdivisionRecord {
    by_edge: BTreeMap<(VertexId, VertexId), VertexId>,
    by_vertex: BTreeMap<VertexId, (VertexId, VertexId)>,
}

impl SubdivisionRecord {
    pub fn is_empty(&self) -> bool {
        self.by_edge.is_empty()
    }

    pub fn len(&self) -> usize {
        self.by_edge.len()
    }

    /// Subdivided edge (source first when directed) to its fresh vertex.
    pub fn iter(&self) -> impl Iterator<Item = (&(VertexId, VertexId), &VertexId)> {
        self.by_edge.iter()
    }

    pub fn vertex_for(&self, u: &str, v: &str) -> Option<&VertexId> {
        self.by_edge
            .iter()
            .find(|((a, b), _)| (a.as_str(), b.as_str()) == (u, v))
            .map(|(_, x)| x)
    }

    /// The original edge a fresh vertex stands for.
    pub fn original_edge(&self, fresh: &str) -> Option<&(VertexId, VertexId)> {
        self.by_vertex.get(fresh)
    }
}

/// Replace every terminal-terminal edge `{a,b}` (directed: `(a,b)`) by a path
/// through a fresh non-terminal `__sub_<a>_<b>` of weight `min(w(a), w(b))`,
/// so cutting it never beats cutting the lighter endpoint.
pub fn subdivide_terminal_edges(g: &TerminalGraph) -> Result<(TerminalGraph, SubdivisionRecord)> {
    g.require_quasi_bipartite()?;
    let mut record = SubdivisionRecord::default();
    let mut builder = GraphBuilder::new(g.orientation());
    for v in g.vertices() {
        builder.push_vertex(v.clone());
    }
    for &(u, v) in g.edges() {
        let (a, b) = (g.id(u), g.id(v));
        if !(g.is_terminal(u) && g.is_terminal(v)) {
            builder.add_edge(a.as_str(), b.as_str())?;
            continue;
        }
        let fresh = format!("{SUBDIVISION_PREFIX}{a}_{b}");
        builder
            .add_vertex(&fresh, g.weight(u).min(g.weight(v)), false)
            .map_err(|_| Error::IdCollision(fresh.clone()))?;
        builder.add_edge(a.as_str(), &fresh)?;
        builder.add_edge(&fresh, b.as_str())?;
        let fresh = VertexId(fresh);
        record.by_vertex.insert(fresh.clone(), (a.clone(), b.clone()));
        record.by_edge.insert((a.clone(), b.clone()), fresh);
    }
    Ok((builder.build(), record))
}

/// The quasi-bipartite graph obtained by shrinking each component of G∖T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentQuotient {
    pub quotient: TerminalGraph,
    /// Quotient non-terminal to the original vertices it stands for.
    pub component_map: BTreeMap<VertexId, Vec<VertexId>>,
    pub component_count: usize,
    pub max_component_size: usize,
}

impl ComponentQuotient {
    pub fn members(&self, component: &str) -> Option<&[VertexId]> {
        self.component_map.get(component).map(Vec::as_slice)
    }
}

/// Contract every (weakly) connected component `C` of G∖T into a single
/// non-terminal `__cmp_<min id of C>` whose weight is the total weight of `C`.
/// Terminals and terminal-terminal edges are kept as they are.
pub fn contract_nonterminal_components(g: &TerminalGraph) -> Result<ComponentQuotient> {
    let components = g.nonterminal_components();
    let mut owner = vec![usize::MAX; g.vertex_count()];
    let mut builder = GraphBuilder::new(g.orientation());
    for t in g.terminals() {
        builder.push_vertex(g.vertex(t).clone());
    }
    let mut names = Vec::with_capacity(components.len());
    let mut component_map = BTreeMap::new();
    for (c, members) in components.iter().enumerate() {
        let name = format!("{COMPONENT_PREFIX}{}", g.id(members[0]));
        let weight: u32 = members.iter().map(|&v| g.weight(v)).sum();
        builder
            .add_vertex(&name, weight, false)
            .map_err(|_| Error::IdCollision(name.clone()))?;
        for &v in members {
            owner[v] = c;
        }
        component_map.insert(
            VertexId(name.clone()),
            members.iter().map(|&v| g.id(v).clone()).collect(),
        );
        names.push(name);
    }
    let label = |v: usize| -> &str {
        if g.is_terminal(v) {
            g.id(v).as_str()
        } else {
            &names[owner[v]]
        }
    };
    for &(u, v) in g.edges() {
        if g.is_terminal(u) || g.is_terminal(v) {
            builder.add_edge(label(u), label(v))?;
        }
    }
    Ok(ComponentQuotient {
        quotient: builder.build(),
        component_count: components.len(),
        max_component_size: components.iter().map(Vec::len).max().unwrap_or(0),
        component_map,
    })
}

/// An unweighted graph in which every vertex of weight `w` became `w`
/// independent copies, together with the copy map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedGraph {
    pub graph: TerminalGraph,
    pub copies: BTreeMap<VertexId, Vec<VertexId>>,
}

impl ExpandedGraph {
    /// Union of the copy sets of `ids`.
    pub fn lift<'a, I>(&self, ids: I) -> BTreeSet<VertexId>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        ids.into_iter()
            .flat_map(|id| self.copies.get(id).into_iter().flatten().cloned())
            .collect()
    }
}

/// Replace each vertex `v` by `w(v)` unit-weight copies adjacent to all copies
/// of `v`'s neighbours. Unit-weight vertices keep their id; heavier ones become
/// `<id>__1 .. <id>__<w>`.
pub fn expand_weighted(g: &TerminalGraph) -> Result<ExpandedGraph> {
    let mut builder = GraphBuilder::new(g.orientation());
    let mut copies = BTreeMap::new();
    let mut copy_names: Vec<Vec<String>> = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let names: Vec<String> = if v.weight == 1 {
            vec![v.id.to_string()]
        } else {
            (1..=v.weight).map(|i| format!("{}__{i}", v.id)).collect()
        };
        for name in &names {
            builder.add_vertex(name, 1, v.terminal).map_err(|e| match e {
                GraphError::DuplicateVertex(id) => Error::IdCollision(id),
                other => other.into(),
            })?;
        }
        copies.insert(v.id.clone(), names.iter().map(|n| VertexId(n.clone())).collect());
        copy_names.push(names);
    }
    for &(u, v) in g.edges() {
        for cu in &copy_names[u] {
            for cv in &copy_names[v] {
                builder.add_edge(cu, cv)?;
            }
        }
    }
    Ok(ExpandedGraph {
        graph: builder.build(),
        copies,
    })
}
