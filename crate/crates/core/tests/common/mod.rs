#![allow(dead_code)]

use std::collections::BTreeSet;

use vcsparse_core::{LinkFlavor, LinkGraph, TerminalGraph};

/// Minimum vertex cut by scanning every subset of `V∖D`, written against the
/// public graph accessors only.
pub fn naive_mincut(g: &TerminalGraph, sources: &[usize], sinks: &[usize], deleted: &[usize]) -> u64 {
    let n = g.vertex_count();
    let free: Vec<usize> = (0..n).filter(|v| !deleted.contains(v)).collect();
    assert!(free.len() <= 16, "oracle is exponential");
    let mut best = u64::MAX;
    for mask in 0u32..(1 << free.len()) {
        let mut gone = vec![false; n];
        for &d in deleted {
            gone[d] = true;
        }
        let mut weight = 0u64;
        for (bit, &v) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                gone[v] = true;
                weight += u64::from(g.weight(v));
            }
        }
        if weight >= best {
            continue;
        }
        if !reaches(g, sources, sinks, &gone) {
            best = weight;
        }
    }
    best
}

/// Is some vertex of `sinks` reachable from `sources` avoiding `gone`?
pub fn reaches(g: &TerminalGraph, sources: &[usize], sinks: &[usize], gone: &[bool]) -> bool {
    let mut seen = gone.to_vec();
    let mut stack: Vec<usize> = sources.iter().copied().filter(|&s| !gone[s]).collect();
    for &s in &stack {
        seen[s] = true;
    }
    while let Some(u) = stack.pop() {
        if sinks.contains(&u) {
            return true;
        }
        let next: Vec<usize> = if g.is_directed() {
            g.successors(u).to_vec()
        } else {
            g.neighbors(u)
        };
        for w in next {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Maximum matching size by exhaustive search over left nodes, tracking the
/// used right nodes in a bitmask.
pub fn brute_matching(lg: &LinkGraph) -> usize {
    fn go(lg: &LinkGraph, l: usize, used: u64) -> usize {
        if l == lg.left().len() {
            return 0;
        }
        let mut best = go(lg, l + 1, used);
        for &r in lg.adjacent(l) {
            if used >> r & 1 == 0 {
                best = best.max(1 + go(lg, l + 1, used | 1 << r));
            }
        }
        best
    }
    assert!(lg.right().len() <= 64);
    go(lg, 0, 0)
}

/// Link adjacencies `(a, b, e)` computed straight from the edge list.
pub fn link_triples(g: &TerminalGraph, flavor: LinkFlavor) -> BTreeSet<(usize, usize, (usize, usize))> {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g.edges() {
        arcs.push((u, v));
        if !g.is_directed() {
            arcs.push((v, u));
        }
    }
    let canonical = |u: usize, v: usize| if g.is_directed() || u < v { (u, v) } else { (v, u) };
    let mut out = BTreeSet::new();
    for &(a, v) in &arcs {
        for &(x, b) in &arcs {
            if x != v || a == b || g.is_terminal(v) || !g.is_terminal(a) || !g.is_terminal(b) {
                continue;
            }
            let e = match flavor {
                LinkFlavor::Undirected | LinkFlavor::Out => canonical(a, v),
                LinkFlavor::In => canonical(v, b),
            };
            out.insert((a, b, e));
        }
    }
    out
}

/// Size of a smallest τ-separator, by exhaustive search.
pub fn min_separator_size(g: &TerminalGraph, tau: usize) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&mask| {
            let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            g.components_without(&removed).iter().all(|c| c.len() <= tau)
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

pub fn indices(g: &TerminalGraph, ids: &[&str]) -> Vec<usize> {
    ids.iter()
        .map(|id| g.index_of(id).expect("vertex present"))
        .collect()
}
