//! The weighted lower-bound graphs `G_k` and the family `{G_k^B}`.
//!
//! `G_k` has terminals `a1..ak` (weight 2) and `d1..dk` (weight 4), edges
//! `{a_i, d_i}`, and for every `i < j` a unit-weight non-terminal `v_i_j`
//! adjacent to `a_i` and `a_j`. `G_k^B` drops the non-terminals indexed by
//! `B`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::cut::{enumerate_min_cuts, mincut, mincut_vector, CutQuery, MincutVector};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Orientation, TerminalGraph, VertexId};

/// Largest `k` accepted by the exhaustive family checks.
pub const FAMILY_K_LIMIT: usize = 4;

/// Pair `(i, j)` with `1 <= i < j <= k`.
pub type PairIndex = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundInstance {
    pub k: usize,
    pub graph: TerminalGraph,
    pub removed: BTreeSet<PairIndex>,
}

pub fn a_id(i: usize) -> VertexId {
    VertexId::new(format!("a{i}")).expect("valid id")
}

pub fn d_id(i: usize) -> VertexId {
    VertexId::new(format!("d{i}")).expect("valid id")
}

pub fn v_id(i: usize, j: usize) -> VertexId {
    VertexId::new(format!("v_{i}_{j}")).expect("valid id")
}

pub fn all_pairs(k: usize) -> Vec<PairIndex> {
    (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect()
}

fn check_pair(k: usize, (i, j): PairIndex) -> Result<()> {
    if 1 <= i && i < j && j <= k {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "pair ({i},{j}) is not of the form 1 <= i < j <= {k}"
        )))
    }
}

pub fn generate_gk(k: usize, removed: &[PairIndex]) -> Result<LowerBoundInstance> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    for &p in removed {
        check_pair(k, p)?;
    }
    let removed: BTreeSet<PairIndex> = removed.iter().copied().collect();
    let mut b = GraphBuilder::new(Orientation::Undirected);
    for i in 1..=k {
        b.add_vertex(a_id(i).as_str(), 2, true)?;
        b.add_vertex(d_id(i).as_str(), 4, true)?;
        b.add_edge(a_id(i).as_str(), d_id(i).as_str())?;
    }
    for (i, j) in all_pairs(k) {
        if removed.contains(&(i, j)) {
            continue;
        }
        let v = v_id(i, j);
        b.add_vertex(v.as_str(), 1, false)?;
        b.add_edge(a_id(i).as_str(), v.as_str())?;
        b.add_edge(v.as_str(), a_id(j).as_str())?;
    }
    Ok(LowerBoundInstance {
        k,
        graph: b.try_build()?,
        removed,
    })
}

/// `X_{i,j} = {a_i} ∪ (D ∖ {d_j})` against the remaining terminals.
pub fn xij_partition(inst: &LowerBoundInstance, i: usize, j: usize) -> Result<CutQuery> {
    check_pair(inst.k, (i, j))?;
    let mut sources: BTreeSet<VertexId> = (1..=inst.k).filter(|&x| x != j).map(d_id).collect();
    sources.insert(a_id(i));
    let sinks = inst
        .graph
        .terminal_ids()
        .into_iter()
        .filter(|t| !sources.contains(t))
        .collect::<Vec<_>>();
    Ok(CutQuery::new(sources, sinks))
}

/// Whether every minimum `(X, T∖X)` cut contains `a_i`. Requires `a_i` and
/// `d_i` on opposite sides; cuts are undirected, so either side may hold `a_i`.
pub fn check_forced_terminal(inst: &LowerBoundInstance, i: usize, side: &BTreeSet<VertexId>) -> Result<bool> {
    if i < 1 || i > inst.k {
        return Err(Error::InvalidArgument(format!(
            "index {i} out of range 1..={}",
            inst.k
        )));
    }
    let terminals: BTreeSet<VertexId> = inst.graph.terminal_ids().into_iter().collect();
    if let Some(t) = side.iter().find(|t| !terminals.contains(*t)) {
        return Err(Error::InvalidArgument(format!("{t} is not a terminal")));
    }
    let (a, d) = (a_id(i), d_id(i));
    if side.contains(&a) == side.contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "{a} and {d} must be on opposite sides"
        )));
    }
    let sinks = terminals.difference(side).cloned().collect::<Vec<_>>();
    let query = CutQuery::new(side.iter().cloned(), sinks);
    Ok(enumerate_min_cuts(&inst.graph, &query)?
        .iter()
        .all(|c| c.contains(&a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VijCheck {
    pub value: u64,
    /// Every minimum cut at `X_{i,j}` contains `v_i_j` (false when absent).
    pub forced: bool,
}

impl VijCheck {
    /// `2k-3` with `v_i_j` forced when present, `2k-4` when removed.
    pub fn holds(&self, inst: &LowerBoundInstance, pair: PairIndex) -> bool {
        let k = inst.k as u64;
        if inst.removed.contains(&pair) {
            self.value == 2 * k - 4
        } else {
            self.value == 2 * k - 3 && self.forced
        }
    }
}

pub fn check_vij_necessity(inst: &LowerBoundInstance, i: usize, j: usize) -> Result<VijCheck> {
    let query = xij_partition(inst, i, j)?;
    let value = mincut(&inst.graph, &query)?.value;
    let forced = if inst.removed.contains(&(i, j)) {
        false
    } else {
        let v = v_id(i, j);
        enumerate_min_cuts(&inst.graph, &query)?
            .iter()
            .all(|c| c.contains(&v))
    };
    Ok(VijCheck { value, forced })
}

/// Outcome of comparing the mincut vectors of the whole family at one `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub k: usize,
    pub instances: usize,
    pub vector_len: usize,
    pub distinct_vectors: usize,
    /// Pairs `(B1, B2)` for which some `X_{i,j}`, `(i,j) ∈ B1 △ B2`, separates
    /// the two vectors.
    pub witnessed_pairs: usize,
}

impl FamilyReport {
    pub fn all_distinct(&self) -> bool {
        let pairs = self.instances * (self.instances - 1) / 2;
        self.distinct_vectors == self.instances && self.witnessed_pairs == pairs
    }
}

fn family_guard(k: usize) -> Result<()> {
    if k > FAMILY_K_LIMIT {
        return Err(Error::Guard {
            what: "k",
            limit: FAMILY_K_LIMIT,
            actual: k,
        });
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// Mincut vectors of `G_k^B` for every `B`, the `B`s encoded as bitmasks over
/// [`all_pairs`].
pub fn family_vectors(k: usize) -> Result<Vec<(BTreeSet<PairIndex>, MincutVector)>> {
    family_guard(k)?;
    let pairs = all_pairs(k);
    (0..1usize << pairs.len())
        .into_par_iter()
        .map(|mask| {
            let removed: Vec<PairIndex> = pairs
                .iter()
                .enumerate()
                .filter(|&(p, _)| mask >> p & 1 == 1)
                .map(|(_, &pair)| pair)
                .collect();
            let inst = generate_gk(k, &removed)?;
            Ok((inst.removed, mincut_vector(&inst.graph)?))
        })
        .collect()
}

pub fn family_distinctness(k: usize) -> Result<FamilyReport> {
    let family = family_vectors(k)?;
    let base = generate_gk(k, &[])?;
    let index_of_x: HashMap<PairIndex, usize> = all_pairs(k)
        .into_iter()
        .map(|(i, j)| {
            let q = xij_partition(&base, i, j).expect("valid pair");
            let mask = family[0].1.mask_of(&q.sources).expect("terminal side");
            ((i, j), mask)
        })
        .collect();

    let distinct_vectors = family
        .iter()
        .map(|(_, v)| &v.entries)
        .collect::<BTreeSet<_>>()
        .len();
    let mut witnessed_pairs = 0;
    for (x, (b1, v1)) in family.iter().enumerate() {
        for (b2, v2) in &family[x + 1..] {
            if b1
                .symmetric_difference(b2)
                .any(|p| v1.get(index_of_x[p]) != v2.get(index_of_x[p]))
            {
                witnessed_pairs += 1;
            }
        }
    }
    Ok(FamilyReport {
        k,
        instances: family.len(),
        vector_len: family[0].1.len(),
        distinct_vectors,
        witnessed_pairs,
    })
}

/// All mincut vectors of `{G_k^B}` differ pairwise, each pair at some
/// `X_{i,j}` with `(i,j)` in the symmetric difference.
pub fn check_family_distinctness(k: usize) -> Result<bool> {
    Ok(family_distinctness(k)?.all_distinct())
}

/// Deleting any single `v_i_j` from `G_k` changes the mincut at `X_{i,j}`, so
/// every subgraph sparsifier of `G_k` keeps all `C(k,2)` non-terminals.
pub fn check_subgraph_necessity(k: usize) -> Result<bool> {
    family_guard(k)?;
    let full = generate_gk(k, &[])?;
    for (i, j) in all_pairs(k) {
        let q = xij_partition(&full, i, j)?;
        let before = mincut(&full.graph, &q)?.value;
        let v = full.graph.require_index(v_id(i, j).as_str())?;
        let after = mincut(&full.graph.without_vertices(&[v]), &q)?.value;
        if before == after {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph;

    fn names(q: &BTreeSet<VertexId>) -> Vec<&str> {
        q.iter().map(|v| v.as_str()).collect()
    }

    #[test]
    fn g4_shape() {
        let inst = generate_gk(4, &[]).unwrap();
        assert_eq!(inst.graph.terminal_count(), 8);
        assert_eq!(inst.graph.vertex_count(), 14);
        assert_eq!(inst.graph.edge_count(), 16);
    }

    #[test]
    fn g2_without_nonterminals() {
        let inst = generate_gk(2, &[(1, 2)]).unwrap();
        assert_eq!(
            serialize_graph(&inst.graph),
            "graph undirected\nnode a1 terminal=1 weight=2\nnode a2 terminal=1 weight=2\n\
             node d1 terminal=1 weight=4\nnode d2 terminal=1 weight=4\nedge a1 d1\nedge a2 d2\n"
        );
    }

    #[test]
    fn g3_weights() {
        let g = generate_gk(3, &[]).unwrap().graph;
        let mut w: Vec<u32> = g.vertices().iter().map(|v| v.weight).collect();
        w.sort();
        assert_eq!(w, [1, 1, 1, 2, 2, 2, 4, 4, 4]);
        assert_eq!(g.total_weight(), 21);
    }

    #[test]
    fn generator_errors() {
        assert!(generate_gk(1, &[]).is_err());
        assert!(generate_gk(3, &[(2, 2)]).is_err());
        assert!(generate_gk(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn partitions() {
        let inst = generate_gk(3, &[]).unwrap();
        let q = xij_partition(&inst, 1, 2).unwrap();
        assert_eq!(names(&q.sources), ["a1", "d1", "d3"]);
        assert_eq!(names(&q.sinks), ["a2", "a3", "d2"]);
        let inst2 = generate_gk(2, &[]).unwrap();
        let q = xij_partition(&inst2, 1, 2).unwrap();
        assert_eq!(names(&q.sources), ["a1", "d1"]);
        assert_eq!(names(&q.sinks), ["a2", "d2"]);
        for (i, j) in all_pairs(4) {
            let q = xij_partition(&generate_gk(4, &[]).unwrap(), i, j).unwrap();
            assert_eq!(q.sources.len() + q.sinks.len(), 8);
            assert!(q.sources.is_disjoint(&q.sinks));
        }
        assert!(xij_partition(&inst, 2, 2).is_err());
    }

    #[test]
    fn forced_terminal() {
        let inst = generate_gk(3, &[]).unwrap();
        let x = xij_partition(&inst, 1, 2).unwrap().sources;
        assert!(check_forced_terminal(&inst, 3, &x).unwrap());
        // a1 and d1 are both in X_{1,2}
        assert!(check_forced_terminal(&inst, 1, &x).is_err());
        let flipped: BTreeSet<VertexId> = [a_id(1), d_id(2)].into();
        assert!(check_forced_terminal(&inst, 1, &flipped).unwrap());
        let inst2 = generate_gk(2, &[]).unwrap();
        let x: BTreeSet<VertexId> = [a_id(1), d_id(1)].into();
        assert!(check_forced_terminal(&inst2, 1, &x).is_err());
    }

    #[test]
    fn vij_values() {
        let g4 = generate_gk(4, &[]).unwrap();
        assert_eq!(
            check_vij_necessity(&g4, 1, 2).unwrap(),
            VijCheck {
                value: 5,
                forced: true
            }
        );
        let g4b = generate_gk(4, &[(1, 2)]).unwrap();
        assert_eq!(check_vij_necessity(&g4b, 1, 2).unwrap().value, 4);
    }

    #[test]
    fn small_family() {
        let r = family_distinctness(2).unwrap();
        assert_eq!((r.instances, r.vector_len, r.distinct_vectors), (2, 16, 2));
        assert!(r.all_distinct());
        assert!(check_subgraph_necessity(2).unwrap());
        assert!(matches!(check_family_distinctness(5), Err(Error::Guard { .. })));
    }
}
