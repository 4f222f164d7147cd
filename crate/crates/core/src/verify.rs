//! Exhaustive certification that one graph is a vertex-cut sparsifier of
//! another.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::cut::{exhaustive, flow_mincut, IndexQuery};
use crate::error::{Error, Result};
use crate::graph::{TerminalGraph, VertexId};

pub const FULL_TERMINAL_LIMIT: usize = 8;
pub const BIPARTITION_TERMINAL_LIMIT: usize = 16;
pub const PARANOID_TERMINAL_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifyMode {
    /// `mincut(A, T∖A)` for every `A ⊆ T`.
    Bipartition,
    /// `mincut_{G∖D}(A, T∖(A∪D))` for every disjoint `A, D ⊆ T`.
    Full,
    /// `mincut(A, B)` for every `A, B ⊆ T`, overlaps included.
    Paranoid,
}

impl VerifyMode {
    fn limit(self) -> usize {
        match self {
            VerifyMode::Bipartition => BIPARTITION_TERMINAL_LIMIT,
            VerifyMode::Full => FULL_TERMINAL_LIMIT,
            VerifyMode::Paranoid => PARANOID_TERMINAL_LIMIT,
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMode::Bipartition => "bipartition",
            VerifyMode::Full => "full",
            VerifyMode::Paranoid => "paranoid",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    /// Confirm every disagreement with the exhaustive oracle before reporting.
    pub cross_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailWitness {
    pub sources: BTreeSet<VertexId>,
    pub sinks: BTreeSet<VertexId>,
    pub deleted: BTreeSet<VertexId>,
    pub value_in_graph: u64,
    pub value_in_sparsifier: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(FailWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    /// Queries evaluated, in query order, up to and including the witness.
    pub queries_checked: usize,
    pub outcome: Outcome,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn witness(&self) -> Option<&FailWitness> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail(w) => Some(w),
        }
    }
}

/// Terminal positions (into the sorted terminal list) of one query.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct TerminalQuery {
    sources: Vec<usize>,
    sinks: Vec<usize>,
    deleted: Vec<usize>,
}

/// All queries of a mode in lexicographic order of (sources, sinks, deleted),
/// each a sorted list of terminal positions.
fn queries(mode: VerifyMode, k: usize) -> Vec<TerminalQuery> {
    let members = |mask: usize| -> Vec<usize> { (0..k).filter(|&i| mask >> i & 1 == 1).collect() };
    let all = 1usize << k;
    let mut out: Vec<TerminalQuery> = Vec::new();
    match mode {
        VerifyMode::Bipartition => {
            for a in 0..all {
                let q = TerminalQuery {
                    sources: members(a),
                    sinks: members(!a & (all - 1)),
                    deleted: Vec::new(),
                };
                out.push(q);
            }
        }
        VerifyMode::Full => {
            for a in 0..all {
                let rest = !a & (all - 1);
                // every submask of the complement
                let mut d = rest;
                loop {
                    let q = TerminalQuery {
                        sources: members(a),
                        sinks: members(rest & !d),
                        deleted: members(d),
                    };
                    out.push(q);
                    if d == 0 {
                        break;
                    }
                    d = (d - 1) & rest;
                }
            }
        }
        VerifyMode::Paranoid => {
            for a in 0..all {
                for b in 0..all {
                    let q = TerminalQuery {
                        sources: members(a),
                        sinks: members(b),
                        deleted: Vec::new(),
                    };
                    out.push(q);
                }
            }
        }
    }
    out.sort();
    out
}

fn to_index(terminals: &[usize], n: usize, q: &TerminalQuery) -> IndexQuery {
    let mut deleted = vec![false; n];
    for &i in &q.deleted {
        deleted[terminals[i]] = true;
    }
    IndexQuery {
        sources: q.sources.iter().map(|&i| terminals[i]).collect(),
        sinks: q.sinks.iter().map(|&i| terminals[i]).collect(),
        deleted,
    }
}

/// Compare minimum cuts of `g` and `candidate` on every terminal query of
/// `mode`. Queries run in parallel on the current rayon pool; the reported
/// witness is always the first failing query in query order.
pub fn verify_sparsifier(
    g: &TerminalGraph,
    candidate: &TerminalGraph,
    mode: VerifyMode,
    options: VerifyOptions,
) -> Result<VerificationReport> {
    if g.orientation() != candidate.orientation() {
        return Err(Error::Orientation {
            expected: g.orientation(),
            found: candidate.orientation(),
        });
    }
    let terminal_ids = g.terminal_ids();
    let k = terminal_ids.len();
    if k > mode.limit() {
        return Err(Error::Guard {
            what: "terminal count",
            limit: mode.limit(),
            actual: k,
        });
    }
    let in_g = g.terminals();
    let in_candidate = terminal_ids
        .iter()
        .map(|id| {
            candidate
                .index_of(id.as_str())
                .ok_or_else(|| Error::TerminalMismatch(id.to_string()))
        })
        .collect::<Result<Vec<usize>>>()?;

    let queries = queries(mode, k);
    let evaluate = |q: &TerminalQuery| -> (u64, u64) {
        let a = to_index(&in_g, g.vertex_count(), q);
        let b = to_index(&in_candidate, candidate.vertex_count(), q);
        (
            flow_mincut(g, &a.sources, &a.sinks, &a.deleted).0,
            flow_mincut(candidate, &b.sources, &b.sinks, &b.deleted).0,
        )
    };
    let first_failure = queries
        .par_iter()
        .enumerate()
        .map(|(i, q)| (i, evaluate(q)))
        .find_first(|&(_, (x, y))| x != y);

    let Some((position, (value_in_graph, value_in_sparsifier))) = first_failure else {
        return Ok(VerificationReport {
            mode,
            queries_checked: queries.len(),
            outcome: Outcome::Pass,
        });
    };
    let q = &queries[position];
    if options.cross_check {
        let pairs = [
            (g, to_index(&in_g, g.vertex_count(), q), value_in_graph),
            (
                candidate,
                to_index(&in_candidate, candidate.vertex_count(), q),
                value_in_sparsifier,
            ),
        ];
        for (graph, iq, flow) in pairs {
            let (exact, _) = exhaustive(graph, &iq)?;
            if exact != flow {
                return Err(Error::OracleDisagreement {
                    flow,
                    exhaustive: exact,
                });
            }
        }
    }
    let pick = |set: &[usize]| set.iter().map(|&i| terminal_ids[i].clone()).collect();
    Ok(VerificationReport {
        mode,
        queries_checked: position + 1,
        outcome: Outcome::Fail(FailWitness {
            sources: pick(&q.sources),
            sinks: pick(&q.sinks),
            deleted: pick(&q.deleted),
            value_in_graph,
            value_in_sparsifier,
        }),
    })
}

/// `V(candidate) ⊆ V(g)`, `E(candidate) ⊆ E(g)`, and shared vertices agree
/// on weight and terminal flag.
pub fn verify_subgraph(g: &TerminalGraph, candidate: &TerminalGraph) -> bool {
    if g.orientation() != candidate.orientation() {
        return false;
    }
    let vertices_ok = candidate
        .vertices()
        .iter()
        .all(|v| g.index_of(v.id.as_str()).is_some_and(|i| g.vertex(i) == v));
    vertices_ok
        && candidate.edge_ids().all(|(u, v)| {
            let (iu, iv) = (g.index_of(u.as_str()).unwrap(), g.index_of(v.as_str()).unwrap());
            g.has_edge(iu, iv)
        })
}
