//! Minimum vertex cuts between vertex sets.
//!
//! A vertex set `C` is an `(A,B)`-vertex-cut of `G∖D` when no path leads from
//! `A∖C` to `B∖C` in `G∖(D∪C)`. `C` may contain vertices of `A` and `B`; a
//! vertex in `A∩B` is always in every cut.
//!
//! [`mincut`] solves this with max-flow on the vertex-split network, the
//! exhaustive routines ([`mincut_bruteforce`], [`enumerate_min_cuts`]) by
//! checking every vertex subset and serve as the independent oracle.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{TerminalGraph, VertexId};

/// Largest number of non-deleted vertices the exhaustive routines accept.
pub const BRUTEFORCE_LIMIT: usize = 20;
/// Largest terminal count [`mincut_vector`] accepts.
pub const VECTOR_TERMINAL_LIMIT: usize = 16;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutQuery {
    pub sources: BTreeSet<VertexId>,
    pub sinks: BTreeSet<VertexId>,
    pub deleted: BTreeSet<VertexId>,
}

impl CutQuery {
    pub fn new<I, J>(sources: I, sinks: J) -> Self
    where
        I: IntoIterator<Item = VertexId>,
        J: IntoIterator<Item = VertexId>,
    {
        CutQuery {
            sources: sources.into_iter().collect(),
            sinks: sinks.into_iter().collect(),
            deleted: BTreeSet::new(),
        }
    }

    pub fn with_deleted<I: IntoIterator<Item = VertexId>>(mut self, deleted: I) -> Self {
        self.deleted = deleted.into_iter().collect();
        self
    }

    /// Build a query from plain names, validating each id.
    pub fn from_names<S: AsRef<str>>(sources: &[S], sinks: &[S], deleted: &[S]) -> Result<Self> {
        let set = |names: &[S]| -> Result<BTreeSet<VertexId>> {
            names
                .iter()
                .map(|n| VertexId::new(n.as_ref()).map_err(Error::from))
                .collect()
        };
        Ok(CutQuery {
            sources: set(sources)?,
            sinks: set(sinks)?,
            deleted: set(deleted)?,
        })
    }

    pub(crate) fn resolve(&self, g: &TerminalGraph) -> Result<IndexQuery> {
        let lookup = |set: &BTreeSet<VertexId>| -> Result<Vec<usize>> {
            set.iter().map(|id| g.require_index(id.as_str())).collect()
        };
        let sources = lookup(&self.sources)?;
        let sinks = lookup(&self.sinks)?;
        let mut deleted = vec![false; g.vertex_count()];
        for v in lookup(&self.deleted)? {
            deleted[v] = true;
        }
        if let Some(&v) = sources.iter().chain(&sinks).find(|&&v| deleted[v]) {
            return Err(Error::InvalidQuery(format!(
                "deleted vertex {} is also a source or sink",
                g.id(v)
            )));
        }
        Ok(IndexQuery {
            sources,
            sinks,
            deleted,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: u64,
    pub witness: Option<BTreeSet<VertexId>>,
}

/// A query against vertex indices of one graph.
#[derive(Debug, Clone)]
pub(crate) struct IndexQuery {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub deleted: Vec<bool>,
}

/// Exact minimum `(A,B)` vertex cut of `g∖D` by max-flow.
pub fn mincut(g: &TerminalGraph, q: &CutQuery) -> Result<CutResult> {
    let iq = q.resolve(g)?;
    let (value, witness) = flow_mincut(g, &iq.sources, &iq.sinks, &iq.deleted);
    Ok(CutResult {
        value,
        witness: Some(witness.into_iter().map(|v| g.id(v).clone()).collect()),
    })
}

/// Split network: `v_in -> v_out` carries `w(v)`, every arc `u_out -> v_in`
/// and every source/sink attachment carries `W + 1`. Returns the flow value
/// and the source-side reachability cut.
pub(crate) fn flow_mincut(
    g: &TerminalGraph,
    sources: &[usize],
    sinks: &[usize],
    deleted: &[bool],
) -> (u64, Vec<usize>) {
    if sources.is_empty() || sinks.is_empty() {
        return (0, Vec::new());
    }
    let n = g.vertex_count();
    let alive = |v: usize| !deleted[v];
    let infinite = g.total_weight() + 1;
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in (0..n).filter(|&v| alive(v)) {
        net.add_arc(2 * v, 2 * v + 1, u64::from(g.weight(v)));
    }
    for &(u, v) in g.edges() {
        if alive(u) && alive(v) {
            net.add_arc(2 * u + 1, 2 * v, infinite);
            if !g.is_directed() {
                net.add_arc(2 * v + 1, 2 * u, infinite);
            }
        }
    }
    for &a in sources {
        net.add_arc(source, 2 * a, infinite);
    }
    for &b in sinks {
        net.add_arc(2 * b + 1, sink, infinite);
    }
    let value = net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let witness = (0..n)
        .filter(|&v| alive(v) && reach[2 * v] && !reach[2 * v + 1])
        .collect();
    (value, witness)
}

/// Same contract as [`mincut`], by checking every subset of `V∖D`. The
/// witness is the lexicographically first minimum cut.
pub fn mincut_bruteforce(g: &TerminalGraph, q: &CutQuery) -> Result<CutResult> {
    let iq = q.resolve(g)?;
    let (value, cuts) = exhaustive(g, &iq)?;
    Ok(CutResult {
        value,
        witness: cuts.into_iter().next().map(|c| ids(g, &c)),
    })
}

/// Every minimum `(A,B)` vertex cut of `g∖D`, in lexicographic order.
pub fn enumerate_min_cuts(g: &TerminalGraph, q: &CutQuery) -> Result<Vec<BTreeSet<VertexId>>> {
    let iq = q.resolve(g)?;
    let (_, cuts) = exhaustive(g, &iq)?;
    Ok(cuts.iter().map(|c| ids(g, c)).collect())
}

fn ids(g: &TerminalGraph, set: &[usize]) -> BTreeSet<VertexId> {
    set.iter().map(|&v| g.id(v).clone()).collect()
}

/// The minimum cut weight and all minimum cuts as ascending index lists,
/// sorted lexicographically.
pub(crate) fn exhaustive(g: &TerminalGraph, q: &IndexQuery) -> Result<(u64, Vec<Vec<usize>>)> {
    let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| !q.deleted[v]).collect();
    if active.len() > BRUTEFORCE_LIMIT {
        return Err(Error::Guard {
            what: "number of non-deleted vertices",
            limit: BRUTEFORCE_LIMIT,
            actual: active.len(),
        });
    }
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in active.iter().enumerate() {
        pos[v] = i;
    }
    let succ: Vec<u32> = active
        .iter()
        .map(|&v| {
            g.successors(v)
                .iter()
                .filter(|&&w| pos[w] != usize::MAX)
                .fold(0u32, |m, &w| m | 1 << pos[w])
        })
        .collect();
    let bits = |set: &[usize]| set.iter().fold(0u32, |m, &v| m | 1 << pos[v]);
    let (src, dst) = (bits(&q.sources), bits(&q.sinks));
    let weights: Vec<u64> = active.iter().map(|&v| u64::from(g.weight(v))).collect();
    let full: u32 = (1u32 << active.len()) - 1;

    let disconnects = |cut: u32| -> bool {
        let alive = full & !cut;
        let mut reach = src & alive;
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= succ[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= alive & !reach;
            reach |= next;
            frontier = next;
        }
        reach & dst == 0
    };

    let mut best = u64::MAX;
    let mut minima: Vec<u32> = Vec::new();
    for cut in 0..=full {
        let mut weight = 0;
        let mut c = cut;
        while c != 0 {
            weight += weights[c.trailing_zeros() as usize];
            c &= c - 1;
        }
        if weight > best || !disconnects(cut) {
            continue;
        }
        if weight < best {
            best = weight;
            minima.clear();
        }
        minima.push(cut);
    }
    let mut cuts: Vec<Vec<usize>> = minima
        .into_iter()
        .map(|m| {
            (0..active.len())
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| active[i])
                .collect()
        })
        .collect();
    cuts.sort();
    Ok((best, cuts))
}

/// Bipartition mincut values indexed by terminal bitmask over the sorted
/// terminal order: `entries[m] = mincut(A_m, T∖A_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MincutVector {
    pub terminals: Vec<VertexId>,
    pub entries: Vec<u64>,
}

impl MincutVector {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, mask: usize) -> u64 {
        self.entries[mask]
    }

    /// Bitmask of a terminal subset, `None` if some id is not a terminal.
    pub fn mask_of<'a, I>(&self, side: I) -> Option<usize>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        side.into_iter().try_fold(0usize, |m, id| {
            self.terminals.binary_search(id).ok().map(|i| m | 1 << i)
        })
    }

    /// Terminal subset encoded by `mask`.
    pub fn side(&self, mask: usize) -> BTreeSet<VertexId> {
        self.terminals
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, t)| t.clone())
            .collect()
    }
}

pub fn mincut_vector(g: &TerminalGraph) -> Result<MincutVector> {
    let terminals = g.terminals();
    let k = terminals.len();
    if k > VECTOR_TERMINAL_LIMIT {
        return Err(Error::Guard {
            what: "terminal count",
            limit: VECTOR_TERMINAL_LIMIT,
            actual: k,
        });
    }
    let deleted = vec![false; g.vertex_count()];
    let entries = (0..1usize << k)
        .into_par_iter()
        .map(|mask| {
            let (a, b): (Vec<usize>, Vec<usize>) = (0..k).partition(|&i| mask >> i & 1 == 1);
            let a: Vec<usize> = a.into_iter().map(|i| terminals[i]).collect();
            let b: Vec<usize> = b.into_iter().map(|i| terminals[i]).collect();
            flow_mincut(g, &a, &b, &deleted).0
        })
        .collect();
    Ok(MincutVector {
        terminals: terminals.iter().map(|&t| g.id(t).clone()).collect(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn q(a: &[&str], b: &[&str]) -> CutQuery {
        CutQuery::from_names(a, b, &[]).unwrap()
    }

    fn names(sets: &[BTreeSet<VertexId>]) -> Vec<Vec<&str>> {
        sets.iter()
            .map(|s| s.iter().map(|v| v.as_str()).collect())
            .collect()
    }

    fn path() -> TerminalGraph {
        parse_graph("graph undirected\nnode a terminal=1\nnode v\nnode b terminal=1\nedge a v\nedge v b")
            .unwrap()
    }

    #[test]
    fn single_edge() {
        let g = parse_graph("graph undirected\nnode a terminal=1\nnode b terminal=1\nedge a b").unwrap();
        let query = q(&["a"], &["b"]);
        assert_eq!(mincut(&g, &query).unwrap().value, 1);
        assert_eq!(mincut_bruteforce(&g, &query).unwrap().value, 1);
        assert_eq!(names(&enumerate_min_cuts(&g, &query).unwrap()), [["a"], ["b"]]);
    }

    #[test]
    fn path_cuts() {
        let g = path();
        let query = q(&["a"], &["b"]);
        let cuts = enumerate_min_cuts(&g, &query).unwrap();
        assert_eq!(names(&cuts), [["a"], ["b"], ["v"]]);
        let brute = mincut_bruteforce(&g, &query).unwrap();
        assert_eq!(brute.value, 1);
        assert!(cuts.contains(brute.witness.as_ref().unwrap()));
        let flow = mincut(&g, &query).unwrap();
        assert_eq!(flow.value, 1);
        assert!(cuts.contains(flow.witness.as_ref().unwrap()));
    }

    #[test]
    fn overlap_forces_vertex() {
        let g = parse_graph("graph undirected\nnode a terminal=1 weight=3\nnode b\nedge a b").unwrap();
        let query = q(&["a"], &["a"]);
        let r = mincut(&g, &query).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(names(&[r.witness.unwrap()]), [["a"]]);
        assert_eq!(mincut_bruteforce(&g, &query).unwrap().value, 3);
    }

    #[test]
    fn empty_side_is_free() {
        let g = path();
        assert_eq!(mincut(&g, &q(&[], &["b"])).unwrap().value, 0);
        assert_eq!(mincut_bruteforce(&g, &q(&["a"], &[])).unwrap().value, 0);
    }

    #[test]
    fn directed_paths_respect_direction() {
        let g =
            parse_graph("graph directed\nnode a terminal=1\nnode v\nnode b terminal=1\nedge a v\nedge v b")
                .unwrap();
        assert_eq!(mincut(&g, &q(&["a"], &["b"])).unwrap().value, 1);
        assert_eq!(mincut(&g, &q(&["b"], &["a"])).unwrap().value, 0);
        assert_eq!(mincut_bruteforce(&g, &q(&["b"], &["a"])).unwrap().value, 0);
    }

    #[test]
    fn deletion() {
        let g = path();
        let query = q(&["a"], &["b"]).with_deleted([VertexId::new("v").unwrap()]);
        assert_eq!(mincut(&g, &query).unwrap().value, 0);
        let bad = q(&["a"], &["b"]).with_deleted([VertexId::new("a").unwrap()]);
        assert!(matches!(mincut(&g, &bad), Err(Error::InvalidQuery(_))));
        assert!(matches!(mincut(&g, &q(&["zz"], &["b"])), Err(Error::Graph(_))));
    }

    #[test]
    fn mincut_vector_of_path() {
        let v = mincut_vector(&path()).unwrap();
        assert_eq!(v.entries, [0, 1, 1, 0]);
        let a = VertexId::new("a").unwrap();
        assert_eq!(v.mask_of([&a]), Some(1));
        assert_eq!(v.side(2).iter().map(|x| x.as_str()).collect::<Vec<_>>(), ["b"]);
    }

    #[test]
    fn mincut_vector_without_terminals() {
        let g = parse_graph("graph undirected\nnode x").unwrap();
        assert_eq!(mincut_vector(&g).unwrap().entries, [0]);
    }

    #[test]
    fn guards() {
        let mut text = String::from("graph undirected\n");
        for i in 0..21 {
            text.push_str(&format!("node x{i} terminal=1\n"));
        }
        let g = parse_graph(&text).unwrap();
        assert!(matches!(
            mincut_bruteforce(&g, &q(&["x1"], &["x2"])),
            Err(Error::Guard {
                limit: 20,
                actual: 21,
                ..
            })
        ));
        assert!(matches!(mincut_vector(&g), Err(Error::Guard { limit: 16, .. })));
    }
}
