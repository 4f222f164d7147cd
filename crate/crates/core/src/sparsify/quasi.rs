use std::collections::BTreeMap;

use super::{assemble, nonterminal_count, MatchingSizes, Selection, SparsifierResult, SparsifierStats};
use crate::error::Result;
use crate::graph::{subdivide_terminal_edges, Orientation, TerminalGraph};
use crate::link::{build_link_graph_filtered, maximum_matching, LinkFlavor};

/// Undirected quasi-bipartite sparsifier: keep both edges of every path
/// `a - v - b` whose first edge is matched to `(a,b)` in the link graph.
pub fn sparsify_qb_undirected(g: &TerminalGraph) -> Result<SparsifierResult> {
    g.require_orientation(Orientation::Undirected)?;
    g.require_unit_weight()?;
    sparsify_quasi_bipartite(g)
}

/// Directed quasi-bipartite sparsifier: keep `(a,v),(v,b)` whenever `(a,v)`
/// is matched to `(a,b)` in the out-link graph or `(v,b)` is matched to
/// `(a,b)` in the in-link graph.
pub fn sparsify_qb_directed(g: &TerminalGraph) -> Result<SparsifierResult> {
    g.require_orientation(Orientation::Directed)?;
    g.require_unit_weight()?;
    sparsify_quasi_bipartite(g)
}

pub(crate) fn sparsify_quasi_bipartite(g: &TerminalGraph) -> Result<SparsifierResult> {
    let (selection, matching) = select_edges(g)?;
    let (sparsifier, provenance) = assemble(g, &selection);
    let k = g.terminal_count();
    let pairs = k * k.saturating_sub(1);
    let edges = sparsifier.edge_count();
    let nonterminals = nonterminal_count(&sparsifier);
    let bound_ok = match matching {
        MatchingSizes::Undirected(m) => edges <= 2 * m && edges <= 2 * pairs && nonterminals <= pairs,
        MatchingSizes::Directed { out_link, in_link } => {
            edges <= 2 * (out_link + in_link) && edges <= 4 * pairs && nonterminals <= 2 * pairs
        }
    };
    Ok(SparsifierResult {
        stats: SparsifierStats {
            terminals: k,
            vertices: sparsifier.vertex_count(),
            edges,
            nonterminals,
            matching,
            components: None,
            max_component: None,
            tau: None,
            separator_size: None,
            extended_terminals: None,
            bound_ok,
        },
        sparsifier,
        provenance,
    })
}

/// Run the matching construction on a quasi-bipartite graph of either
/// orientation and any weights. Selected edges are edges of `g`: edges
/// through a subdivision vertex are folded back into the terminal-terminal
/// edge they replaced when both halves are selected, and dropped otherwise.
pub(crate) fn select_edges(g: &TerminalGraph) -> Result<(Selection, MatchingSizes)> {
    select_edges_filtered(g, |_, _, _| true)
}

/// [`select_edges`] with link adjacencies restricted to the paths
/// `a - v - b` (ids of `g`) accepted by `keep`. Subdivision vertices are
/// never filtered.
pub(crate) fn select_edges_filtered(
    g: &TerminalGraph,
    keep: impl Fn(&str, &str, &str) -> bool,
) -> Result<(Selection, MatchingSizes)> {
    let (sub, record) = subdivide_terminal_edges(g)?;
    let flavors: &[LinkFlavor] = if g.is_directed() {
        &[LinkFlavor::Out, LinkFlavor::In]
    } else {
        &[LinkFlavor::Undirected]
    };

    let canonical = |u: usize, v: usize| {
        if sub.is_directed() || u < v {
            (u, v)
        } else {
            (v, u)
        }
    };
    let mut in_sub: Selection = BTreeMap::new();
    let mut sizes = Vec::with_capacity(2);
    for &flavor in flavors {
        let lg = build_link_graph_filtered(&sub, flavor, |a, v, b| {
            record.original_edge(sub.id(v).as_str()).is_some()
                || keep(sub.id(a).as_str(), sub.id(v).as_str(), sub.id(b).as_str())
        })?;
        let matching = maximum_matching(&lg);
        sizes.push(matching.len());
        for &(l, r) in matching.couples() {
            let (a, b) = lg.left()[l];
            let (x, y) = lg.right()[r];
            let v = match flavor {
                LinkFlavor::Undirected => {
                    if x == a {
                        y
                    } else {
                        x
                    }
                }
                LinkFlavor::Out => y,
                LinkFlavor::In => x,
            };
            for e in [canonical(a, v), canonical(v, b)] {
                in_sub.entry(e).or_default().insert((a, b, flavor));
            }
        }
    }

    // translate from subdivided indices to indices of `g`
    let to_g = |x: usize| g.index_of(sub.id(x).as_str());
    let mut selection: Selection = BTreeMap::new();
    let mut halves: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (&(x, y), couples) in &in_sub {
        match (to_g(x), to_g(y)) {
            (Some(u), Some(v)) => {
                let couples = couples
                    .iter()
                    .map(|&(a, b, f)| (to_g(a).unwrap(), to_g(b).unwrap(), f));
                selection.entry((u, v)).or_default().extend(couples);
            }
            (None, _) => halves.entry(x).or_default().push((x, y)),
            (_, None) => halves.entry(y).or_default().push((x, y)),
        }
    }
    for (fresh, parts) in halves {
        if parts.len() < 2 {
            continue;
        }
        let (a, b) = record
            .original_edge(sub.id(fresh).as_str())
            .expect("subdivision vertex");
        let edge = (g.index_of(a.as_str()).unwrap(), g.index_of(b.as_str()).unwrap());
        let entry = selection.entry(edge).or_default();
        for part in parts {
            entry.extend(
                in_sub[&part]
                    .iter()
                    .map(|&(a, b, f)| (to_g(a).unwrap(), to_g(b).unwrap(), f)),
            );
        }
    }

    let sizes = if g.is_directed() {
        MatchingSizes::Directed {
            out_link: sizes[0],
            in_link: sizes[1],
        }
    } else {
        MatchingSizes::Undirected(sizes[0])
    };
    Ok((selection, sizes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{parse_graph, serialize_graph};

    const PATH: &str = "graph undirected\nnode a terminal=1\nnode v\nnode b terminal=1\nedge a v\nedge v b";

    #[test]
    fn path_is_its_own_sparsifier() {
        let g = parse_graph(PATH).unwrap();
        let r = sparsify_qb_undirected(&g).unwrap();
        assert_eq!(r.sparsifier, g);
        assert_eq!(r.stats.summary_line(), "k=2 V'=3 E'=2 bound_ok=true");
        assert_eq!(r.stats.matching, MatchingSizes::Undirected(2));
    }

    #[test]
    fn star_is_kept_whole() {
        let g = parse_graph(
            "graph undirected\nnode a terminal=1\nnode b terminal=1\nnode c terminal=1\nnode v\n\
             edge a v\nedge b v\nedge c v",
        )
        .unwrap();
        let r = sparsify_qb_undirected(&g).unwrap();
        assert_eq!(serialize_graph(&r.sparsifier), serialize_graph(&g));
    }

    #[test]
    fn parallel_paths_shrink() {
        let mut text = String::from("graph undirected\nnode a terminal=1\nnode b terminal=1\n");
        for i in 1..=5 {
            text.push_str(&format!("node v{i}\nedge a v{i}\nedge v{i} b\n"));
        }
        let g = parse_graph(&text).unwrap();
        let r = sparsify_qb_undirected(&g).unwrap();
        assert!(r.stats.nonterminals <= 2);
        assert!(r.stats.edges <= 4);
        assert!(r.stats.bound_ok);
    }

    #[test]
    fn terminal_edges_are_restored() {
        let g = parse_graph("graph undirected\nnode a terminal=1\nnode b terminal=1\nedge a b").unwrap();
        let r = sparsify_qb_undirected(&g).unwrap();
        assert_eq!(r.sparsifier, g);
        assert_eq!(
            r.provenance_comments(),
            "# edge a b from pair (a,b) via undirected_link\n\
             # edge a b from pair (b,a) via undirected_link\n"
        );
    }

    #[test]
    fn directed_path() {
        let g =
            parse_graph("graph directed\nnode a terminal=1\nnode v\nnode b terminal=1\nedge a v\nedge v b")
                .unwrap();
        let r = sparsify_qb_directed(&g).unwrap();
        assert_eq!(r.sparsifier, g);
        assert_eq!(
            r.stats.matching,
            MatchingSizes::Directed {
                out_link: 1,
                in_link: 1
            }
        );
        assert_eq!(
            r.provenance_comments(),
            "# edge a v from pair (a,b) via out_link\n# edge a v from pair (a,b) via in_link\n\
             # edge v b from pair (a,b) via out_link\n# edge v b from pair (a,b) via in_link\n"
        );
    }

    #[test]
    fn precondition_errors() {
        let g = parse_graph(PATH).unwrap();
        assert!(matches!(sparsify_qb_directed(&g), Err(Error::Orientation { .. })));
        let w = parse_graph("graph undirected\nnode a terminal=1 weight=2\nnode v\nedge a v").unwrap();
        assert!(matches!(sparsify_qb_undirected(&w), Err(Error::Weighted(..))));
        let nq = parse_graph("graph undirected\nnode u\nnode v\nedge u v").unwrap();
        assert!(matches!(
            sparsify_qb_undirected(&nq),
            Err(Error::NotQuasiBipartite(..))
        ));
    }
}
