use std::collections::{BTreeSet, VecDeque};

use super::tau::sparsify_tau;
use super::SparsifierResult;
use crate::error::{Error, Result};
use crate::graph::{TerminalGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorResult {
    pub separator: BTreeSet<VertexId>,
    pub tau: usize,
    pub rounds: usize,
}

/// Greedy τ-separator. While some (weakly) connected component of G∖S has
/// more than τ vertices, take the oversized component with the smallest
/// vertex, grow a BFS tree of exactly τ+1 vertices from that vertex and add
/// it to S. Terminals get no special treatment.
///
/// Each picked set is connected and of size τ+1, so any τ-separator hits it;
/// hence `|S| <= (τ+1) * OPT`. For τ = 1 this is the maximal-matching
/// vertex cover.
pub fn find_tau_separator(g: &TerminalGraph, tau: usize) -> Result<SeparatorResult> {
    if tau < 1 {
        return Err(Error::InvalidArgument("tau must be at least 1".into()));
    }
    let mut removed = vec![false; g.vertex_count()];
    let mut rounds = 0;
    while let Some(start) = g
        .components_without(&removed)
        .into_iter()
        .find(|c| c.len() > tau)
        .map(|c| c[0])
    {
        let mut picked = vec![start];
        let mut seen = removed.clone();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        'grow: while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                picked.push(w);
                if picked.len() == tau + 1 {
                    break 'grow;
                }
                queue.push_back(w);
            }
        }
        debug_assert_eq!(picked.len(), tau + 1);
        for v in picked {
            removed[v] = true;
        }
        rounds += 1;
    }
    let separator = (0..g.vertex_count())
        .filter(|&v| removed[v])
        .map(|v| g.id(v).clone())
        .collect();
    Ok(SeparatorResult {
        separator,
        tau,
        rounds,
    })
}

/// Promote a greedy τ-separator to terminals, run [`sparsify_tau`] on the
/// extended terminal set and restore the original terminal flags. A
/// sparsifier for the larger terminal set is also one for the original set.
pub fn sparsify_with_separator(g: &TerminalGraph, tau: usize) -> Result<SparsifierResult> {
    g.require_unit_weight()?;
    let separator = find_tau_separator(g, tau)?;
    let promoted: Vec<bool> = g
        .vertices()
        .iter()
        .map(|v| v.terminal || separator.separator.contains(&v.id))
        .collect();
    let extended = g.with_terminal_flags(&promoted);
    let mut result = sparsify_tau(&extended)?;

    let original: Vec<bool> = result
        .sparsifier
        .vertices()
        .iter()
        .map(|v| g.is_terminal(g.index_of(v.id.as_str()).expect("subgraph vertex")))
        .collect();
    result.sparsifier = result.sparsifier.with_terminal_flags(&original);
    let stats = &mut result.stats;
    stats.extended_terminals = Some(stats.terminals);
    stats.terminals = g.terminal_count();
    stats.nonterminals = result.sparsifier.vertex_count() - stats.terminals;
    stats.tau = Some(tau);
    stats.separator_size = Some(separator.separator.len());
    Ok(result)
}
