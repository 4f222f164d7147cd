use std::collections::{BTreeMap, BTreeSet};

use super::quasi::{select_edges, select_edges_filtered, sparsify_quasi_bipartite};
use super::{assemble, nonterminal_count, Selection, SparsifierResult, SparsifierStats};
use crate::error::Result;
use crate::graph::{contract_nonterminal_components, ComponentQuotient, TerminalGraph};

/// Sparsifier for graphs whose non-terminal components are small: contract
/// every component of G∖T, sparsify the quasi-bipartite quotient, then expand
/// each kept component back into all of its vertices and internal edges.
///
/// A terminal-component edge is kept in exactly the directions whose quotient
/// arc was selected.
pub fn sparsify_tau(g: &TerminalGraph) -> Result<SparsifierResult> {
    g.require_unit_weight()?;
    let quotient = contract_nonterminal_components(g)?;
    let c = quotient.max_component_size;
    if c <= 1 {
        let mut result = sparsify_quasi_bipartite(g)?;
        result.stats.components = Some(quotient.component_count);
        result.stats.max_component = Some(c);
        return Ok(result);
    }

    let q = &quotient.quotient;
    let (q_selection, matching) = if g.is_directed() {
        let through = directed_links(g, &quotient);
        select_edges_filtered(q, |a, v, b| {
            through.contains(&(a.to_string(), v.to_string(), b.to_string()))
        })?
    } else {
        select_edges(q)?
    };

    let to_g = |x: usize| g.index_of(q.id(x).as_str()).expect("terminal of the quotient");
    let members = |x: usize| -> Vec<usize> {
        quotient.component_map[q.id(x)]
            .iter()
            .map(|id| g.index_of(id.as_str()).expect("component member"))
            .collect()
    };
    let canonical = |u: usize, v: usize| if g.is_directed() || u < v { (u, v) } else { (v, u) };

    let mut selection: Selection = BTreeMap::new();
    let mut kept: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
    for (&(x, y), couples) in &q_selection {
        let couples_g: BTreeSet<_> = couples.iter().map(|&(a, b, f)| (to_g(a), to_g(b), f)).collect();
        let expanded: Vec<(usize, usize)> = match (q.is_terminal(x), q.is_terminal(y)) {
            (true, true) => vec![(to_g(x), to_g(y))],
            (true, false) => {
                let t = to_g(x);
                kept.entry(y).or_default().extend(couples_g.iter().copied());
                members(y)
                    .into_iter()
                    .filter(|&m| g.has_edge(t, m))
                    .map(|m| canonical(t, m))
                    .collect()
            }
            (false, true) => {
                let t = to_g(y);
                kept.entry(x).or_default().extend(couples_g.iter().copied());
                members(x)
                    .into_iter()
                    .filter(|&m| g.has_edge(m, t))
                    .map(|m| canonical(m, t))
                    .collect()
            }
            (false, false) => unreachable!("quotient is quasi-bipartite"),
        };
        for e in expanded {
            selection.entry(e).or_default().extend(couples_g.iter().copied());
        }
    }

    let mut owner = vec![usize::MAX; g.vertex_count()];
    for &component in kept.keys() {
        for m in members(component) {
            owner[m] = component;
        }
    }
    for &(u, v) in g.edges() {
        if owner[u] != usize::MAX && owner[u] == owner[v] {
            selection
                .entry((u, v))
                .or_default()
                .extend(kept[&owner[u]].iter().copied());
        }
    }

    let (sparsifier, provenance) = assemble(g, &selection);
    let k = g.terminal_count();
    let pairs = k * k.saturating_sub(1);
    let couples = if g.is_directed() { 2 * pairs } else { pairs };
    let edges = sparsifier.edge_count();
    let nonterminals = nonterminal_count(&sparsifier);
    let bound_ok = nonterminals <= c * couples && edges <= couples * (2 * c + c * c);
    Ok(SparsifierResult {
        stats: SparsifierStats {
            terminals: k,
            vertices: sparsifier.vertex_count(),
            edges,
            nonterminals,
            matching,
            components: Some(quotient.component_count),
            max_component: Some(c),
            tau: None,
            separator_size: None,
            extended_terminals: None,
            bound_ok,
        },
        sparsifier,
        provenance,
    })
}

/// Triples `(a, C, b)` of quotient ids such that `g` has a directed path from
/// terminal `a` to terminal `b` whose inner vertices all lie in component `C`.
/// Weak connectivity alone does not give such a path, so the quotient's
/// length-2 paths are filtered by these triples.
fn directed_links(g: &TerminalGraph, quotient: &ComponentQuotient) -> BTreeSet<(String, String, String)> {
    let mut out = BTreeSet::new();
    let mut component = vec![usize::MAX; g.vertex_count()];
    for (c, (_, members)) in quotient.component_map.iter().enumerate() {
        for id in members {
            component[g.index_of(id.as_str()).expect("component member")] = c;
        }
    }
    for (c, (name, _)) in quotient.component_map.iter().enumerate() {
        for a in g.terminals() {
            let mut seen = vec![false; g.vertex_count()];
            let mut stack: Vec<usize> = g
                .successors(a)
                .iter()
                .copied()
                .filter(|&u| component[u] == c)
                .collect();
            for &u in &stack {
                seen[u] = true;
            }
            let mut reached = BTreeSet::new();
            while let Some(u) = stack.pop() {
                for &w in g.successors(u) {
                    if g.is_terminal(w) {
                        reached.insert(w);
                    } else if !seen[w] && component[w] == c {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            for b in reached.into_iter().filter(|&b| b != a) {
                out.insert((g.id(a).to_string(), name.to_string(), g.id(b).to_string()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{parse_graph, serialize_graph};
    use crate::sparsify::{sparsify_qb_directed, sparsify_qb_undirected};

    #[test]
    fn quasi_bipartite_reduces_to_matching_construction() {
        let g = parse_graph(
            "graph undirected\nnode a terminal=1\nnode b terminal=1\nnode c terminal=1\n\
             node u\nnode v\nnode w\nedge a u\nedge b u\nedge a v\nedge b v\nedge c w\nedge a w\nedge a b",
        )
        .unwrap();
        let tau = sparsify_tau(&g).unwrap();
        let qb = sparsify_qb_undirected(&g).unwrap();
        assert_eq!(tau.sparsifier, qb.sparsifier);
        assert_eq!(tau.stats.max_component, Some(1));

        let d =
            parse_graph("graph directed\nnode a terminal=1\nnode b terminal=1\nnode u\nedge a u\nedge u b")
                .unwrap();
        assert_eq!(
            sparsify_tau(&d).unwrap().sparsifier,
            sparsify_qb_directed(&d).unwrap().sparsifier
        );
    }

    #[test]
    fn component_expands_whole() {
        let g = parse_graph(
            "graph undirected\nnode a terminal=1\nnode b terminal=1\nnode u\nnode v\n\
             edge u v\nedge a u\nedge v b",
        )
        .unwrap();
        let r = sparsify_tau(&g).unwrap();
        assert_eq!(serialize_graph(&r.sparsifier), serialize_graph(&g));
        assert_eq!(r.stats.max_component, Some(2));
        assert_eq!(r.stats.components, Some(1));
        assert!(r.stats.bound_ok);
    }

    #[test]
    fn redundant_components_dropped() {
        let mut text = String::from("graph undirected\nnode a terminal=1\nnode b terminal=1\n");
        for i in 1..=4 {
            text.push_str(&format!(
                "node x{i}\nnode y{i}\nedge a x{i}\nedge x{i} y{i}\nedge y{i} b\n"
            ));
        }
        let g = parse_graph(&text).unwrap();
        let r = sparsify_tau(&g).unwrap();
        assert!(r.stats.nonterminals <= 4, "{:?}", r.stats);
        assert!(r.stats.bound_ok);
    }

    #[test]
    fn directed_component_respects_arc_directions() {
        let g = parse_graph(
            "graph directed\nnode a terminal=1\nnode b terminal=1\nnode u\nnode v\n\
             edge a u\nedge u v\nedge v b\nedge b u",
        )
        .unwrap();
        let r = sparsify_tau(&g).unwrap();
        assert!(r.sparsifier.has_edge(
            r.sparsifier.index_of("a").unwrap(),
            r.sparsifier.index_of("u").unwrap()
        ));
        assert!(r.stats.bound_ok);
    }

    #[test]
    fn rejects_weights() {
        let g = parse_graph("graph undirected\nnode a terminal=1\nnode u weight=3\nedge a u").unwrap();
        assert!(matches!(sparsify_tau(&g), Err(Error::Weighted(..))));
    }

    #[test]
    fn directed_component_without_through_path() {
        // {x, y} is weakly connected but carries no path from a to b
        let g = parse_graph(
            "graph directed\nnode a terminal=1\nnode b terminal=1\nnode x\nnode y\nnode z1\nnode z2\n\
             edge a x\nedge y x\nedge y b\nedge a z1\nedge z1 z2\nedge z2 b",
        )
        .unwrap();
        let r = sparsify_tau(&g).unwrap();
        let report =
            crate::verify_sparsifier(&g, &r.sparsifier, crate::VerifyMode::Full, Default::default()).unwrap();
        assert!(report.passed());
        assert!(r.sparsifier.index_of("z1").is_some());
        assert!(r.sparsifier.index_of("x").is_none());
    }
}
