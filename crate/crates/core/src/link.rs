//! Link graphs and their maximum matchings.
//!
//! For an ordered terminal pair `(a,b)` and a non-terminal `v` with a
//! length-2 path `a - v - b`, the link graph joins `(a,b)` to the first edge
//! `{a,v}` of that path. Digraphs get two link graphs: the out-link graph
//! joins `(a,b)` to the first arc `(a,v)`, the in-link graph joins it to the
//! last arc `(v,b)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Orientation, TerminalGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkFlavor {
    Undirected,
    Out,
    In,
}

impl LinkFlavor {
    pub fn orientation(self) -> Orientation {
        match self {
            LinkFlavor::Undirected => Orientation::Undirected,
            LinkFlavor::Out | LinkFlavor::In => Orientation::Directed,
        }
    }
}

impl fmt::Display for LinkFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkFlavor::Undirected => "undirected_link",
            LinkFlavor::Out => "out_link",
            LinkFlavor::In => "in_link",
        })
    }
}

/// Bipartite graph between ordered terminal pairs (left) and the edges of the
/// source graph (right). Indices refer to the graph it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    flavor: LinkFlavor,
    left: Vec<(usize, usize)>,
    right: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl LinkGraph {
    pub fn flavor(&self) -> LinkFlavor {
        self.flavor
    }

    /// Ordered terminal pairs `(a,b)`, `a != b`, sorted.
    pub fn left(&self) -> &[(usize, usize)] {
        &self.left
    }

    /// Edges of the source graph in canonical order.
    pub fn right(&self) -> &[(usize, usize)] {
        &self.right
    }

    /// Right nodes adjacent to left node `l`, ascending.
    pub fn adjacent(&self, l: usize) -> &[usize] {
        &self.adjacency[l]
    }

    pub fn adjacency_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn adjacencies(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }

    /// A link graph from explicit parts; adjacency lists are sorted.
    pub fn from_parts(
        flavor: LinkFlavor,
        left: Vec<(usize, usize)>,
        right: Vec<(usize, usize)>,
        mut adjacency: Vec<Vec<usize>>,
    ) -> Self {
        assert_eq!(left.len(), adjacency.len());
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            assert!(list.iter().all(|&r| r < right.len()));
        }
        LinkGraph {
            flavor,
            left,
            right,
            adjacency,
        }
    }
}

/// Build the link graph of a quasi-bipartite graph without terminal-terminal
/// edges.
pub fn build_link_graph(g: &TerminalGraph, flavor: LinkFlavor) -> Result<LinkGraph> {
    build_link_graph_filtered(g, flavor, |_, _, _| true)
}

/// [`build_link_graph`] keeping only the paths `a - v - b` accepted by `keep`.
pub(crate) fn build_link_graph_filtered(
    g: &TerminalGraph,
    flavor: LinkFlavor,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> Result<LinkGraph> {
    g.require_orientation(flavor.orientation())?;
    g.require_quasi_bipartite()?;
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| g.is_terminal(u) && g.is_terminal(v))
    {
        return Err(Error::TerminalEdge(g.id(u).to_string(), g.id(v).to_string()));
    }

    let terminals = g.terminals();
    let mut left = Vec::with_capacity(terminals.len() * terminals.len().saturating_sub(1));
    for &a in &terminals {
        for &b in &terminals {
            if a != b {
                left.push((a, b));
            }
        }
    }
    let right = g.edges().to_vec();
    let edge_index = |u: usize, v: usize| -> usize {
        let key = if g.is_directed() || u < v { (u, v) } else { (v, u) };
        right.binary_search(&key).expect("edge present")
    };
    let pair_index =
        |a: usize, b: usize| -> usize { left.binary_search(&(a, b)).expect("terminal pair present") };

    let mut adjacency = vec![Vec::new(); left.len()];
    for v in (0..g.vertex_count()).filter(|&v| !g.is_terminal(v)) {
        // every neighbour of a non-terminal is a terminal here
        for &a in g.predecessors(v) {
            for &b in g.successors(v) {
                if a == b || !keep(a, v, b) {
                    continue;
                }
                let e = match flavor {
                    LinkFlavor::Undirected | LinkFlavor::Out => edge_index(a, v),
                    LinkFlavor::In => edge_index(v, b),
                };
                adjacency[pair_index(a, b)].push(e);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(LinkGraph {
        flavor,
        left,
        right,
        adjacency,
    })
}

/// Matched `(left, right)` couples of a link graph, sorted by left node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    couples: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.couples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.couples.is_empty()
    }

    pub fn couples(&self) -> &[(usize, usize)] {
        &self.couples
    }

    /// No node repeated and every couple is an adjacency of `lg`.
    pub fn is_valid_for(&self, lg: &LinkGraph) -> bool {
        let mut left_used = vec![false; lg.left().len()];
        let mut right_used = vec![false; lg.right().len()];
        self.couples.iter().all(|&(l, r)| {
            l < left_used.len()
                && r < right_used.len()
                && !std::mem::replace(&mut left_used[l], true)
                && !std::mem::replace(&mut right_used[r], true)
                && lg.adjacent(l).binary_search(&r).is_ok()
        })
    }
}

/// Maximum-cardinality matching by repeated augmenting-path search. Left
/// nodes are tried in order and adjacency lists scanned in ascending order,
/// so the result is a deterministic function of the link graph.
pub fn maximum_matching(lg: &LinkGraph) -> Matching {
    let mut owner = vec![usize::MAX; lg.right().len()];
    let mut visited = vec![usize::MAX; lg.right().len()];
    for l in 0..lg.left().len() {
        augment(lg, l, l, &mut owner, &mut visited);
    }
    let mut couples: Vec<(usize, usize)> = owner
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l != usize::MAX)
        .map(|(r, &l)| (l, r))
        .collect();
    couples.sort_unstable();
    Matching { couples }
}

fn augment(lg: &LinkGraph, l: usize, round: usize, owner: &mut [usize], visited: &mut [usize]) -> bool {
    for &r in lg.adjacent(l) {
        if visited[r] == round {
            continue;
        }
        visited[r] = round;
        if owner[r] == usize::MAX || augment(lg, owner[r], round, owner, visited) {
            owner[r] = l;
            return true;
        }
    }
    false
}
