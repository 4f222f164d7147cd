//! Seeded random instances for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphBuilder, Orientation, TerminalGraph};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn add_random_edge<R: Rng>(rng: &mut R, b: &mut GraphBuilder, directed: bool, u: &str, v: &str) {
    if !directed {
        b.add_edge(u, v).expect("valid edge");
        return;
    }
    match rng.random_range(0..4) {
        0 => b.add_edge(u, v).expect("valid edge"),
        1 => b.add_edge(v, u).expect("valid edge"),
        2 => {
            b.add_edge(u, v).expect("valid edge");
            b.add_edge(v, u).expect("valid edge");
        }
        // one more draw biased towards a single arc
        _ => {
            if rng.random_bool(0.5) {
                b.add_edge(u, v).expect("valid edge")
            } else {
                b.add_edge(v, u).expect("valid edge")
            }
        }
    }
}

/// Terminals `t0..`, non-terminals `n0..`; each terminal/non-terminal pair is
/// joined with probability `p` and each terminal pair with probability
/// `terminal_p`. Directed graphs get a random orientation per edge (one arc
/// or both).
pub fn quasi_bipartite<R: Rng>(
    rng: &mut R,
    orientation: Orientation,
    k: usize,
    nonterminals: usize,
    p: f64,
    terminal_p: f64,
) -> TerminalGraph {
    let directed = orientation.is_directed();
    let mut b = GraphBuilder::new(orientation);
    let t: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
    let n: Vec<String> = (0..nonterminals).map(|i| format!("n{i}")).collect();
    for id in &t {
        b.add_vertex(id, 1, true).expect("fresh id");
    }
    for id in &n {
        b.add_vertex(id, 1, false).expect("fresh id");
    }
    for x in &t {
        for y in &n {
            if rng.random_bool(p) {
                add_random_edge(rng, &mut b, directed, x, y);
            }
        }
    }
    for (i, x) in t.iter().enumerate() {
        for y in &t[i + 1..] {
            if rng.random_bool(terminal_p) {
                add_random_edge(rng, &mut b, directed, x, y);
            }
        }
    }
    b.build()
}

/// Like [`quasi_bipartite`], but the non-terminals come in `groups` groups of
/// random size `1..=tau`, each group internally joined with probability
/// `inner_p`. Components of G∖T therefore have at most `tau` vertices.
#[allow(clippy::too_many_arguments)]
pub fn tau_quasi_bipartite<R: Rng>(
    rng: &mut R,
    orientation: Orientation,
    k: usize,
    tau: usize,
    groups: usize,
    p: f64,
    inner_p: f64,
    terminal_p: f64,
) -> TerminalGraph {
    let directed = orientation.is_directed();
    let mut b = GraphBuilder::new(orientation);
    let t: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
    for id in &t {
        b.add_vertex(id, 1, true).expect("fresh id");
    }
    for g in 0..groups {
        let size = rng.random_range(1..=tau);
        let members: Vec<String> = (0..size).map(|m| format!("g{g}_{m}")).collect();
        for id in &members {
            b.add_vertex(id, 1, false).expect("fresh id");
        }
        for (i, x) in members.iter().enumerate() {
            for y in &members[i + 1..] {
                if rng.random_bool(inner_p) {
                    add_random_edge(rng, &mut b, directed, x, y);
                }
            }
            for y in &t {
                if rng.random_bool(p) {
                    add_random_edge(rng, &mut b, directed, y, x);
                }
            }
        }
    }
    for (i, x) in t.iter().enumerate() {
        for y in &t[i + 1..] {
            if rng.random_bool(terminal_p) {
                add_random_edge(rng, &mut b, directed, x, y);
            }
        }
    }
    b.build()
}

/// Arbitrary graph on `n` vertices `x0..`, weights in `1..=max_weight`, each
/// vertex a terminal with probability `terminal_p`.
pub fn general<R: Rng>(
    rng: &mut R,
    orientation: Orientation,
    n: usize,
    p: f64,
    max_weight: u32,
    terminal_p: f64,
) -> TerminalGraph {
    let directed = orientation.is_directed();
    let mut b = GraphBuilder::new(orientation);
    let ids: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    for id in &ids {
        let w = rng.random_range(1..=max_weight);
        b.add_vertex(id, w, rng.random_bool(terminal_p))
            .expect("fresh id");
    }
    for (i, x) in ids.iter().enumerate() {
        for y in &ids[i + 1..] {
            if rng.random_bool(p) {
                add_random_edge(rng, &mut b, directed, x, y);
            }
        }
    }
    b.build()
}

/// A graph with a planted τ-separator: `hubs` vertices `h0..` whose removal
/// leaves `pieces` connected pieces of size `1..=tau` (vertices `p<i>_<j>`).
/// Each hub attaches to each piece vertex with probability `p`, hubs form a
/// path, and `k` random piece vertices are terminals.
pub fn planted_separator<R: Rng>(
    rng: &mut R,
    tau: usize,
    hubs: usize,
    pieces: usize,
    k: usize,
    p: f64,
) -> TerminalGraph {
    let mut b = GraphBuilder::new(Orientation::Undirected);
    let h: Vec<String> = (0..hubs).map(|i| format!("h{i}")).collect();
    let mut piece_vertices = Vec::new();
    let mut piece_edges = Vec::new();
    for i in 0..pieces {
        let size = rng.random_range(1..=tau);
        let members: Vec<String> = (0..size).map(|j| format!("p{i}_{j}")).collect();
        // random tree keeps the piece connected
        for j in 1..size {
            let parent = rng.random_range(0..j);
            piece_edges.push((members[parent].clone(), members[j].clone()));
        }
        piece_vertices.extend(members);
    }
    let mut order: Vec<usize> = (0..piece_vertices.len()).collect();
    order.shuffle(rng);
    let terminal: Vec<bool> = {
        let mut t = vec![false; piece_vertices.len()];
        for &i in order.iter().take(k) {
            t[i] = true;
        }
        t
    };
    for id in &h {
        b.add_vertex(id, 1, false).expect("fresh id");
    }
    for (id, &t) in piece_vertices.iter().zip(&terminal) {
        b.add_vertex(id, 1, t).expect("fresh id");
    }
    for (u, v) in &piece_edges {
        b.add_edge(u, v).expect("valid edge");
    }
    for w in h.windows(2) {
        b.add_edge(&w[0], &w[1]).expect("valid edge");
    }
    for hub in &h {
        for v in &piece_vertices {
            if rng.random_bool(p) {
                b.add_edge(hub, v).expect("valid edge");
            }
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_reproducible() {
        let a = quasi_bipartite(&mut seeded(7), Orientation::Directed, 4, 6, 0.5, 0.3);
        let b = quasi_bipartite(&mut seeded(7), Orientation::Directed, 4, 6, 0.5, 0.3);
        assert_eq!(a, b);
        assert!(a.is_quasi_bipartite());
    }

    #[test]
    fn tau_components_are_small() {
        for seed in 0..20 {
            let g = tau_quasi_bipartite(&mut seeded(seed), Orientation::Undirected, 3, 3, 5, 0.5, 0.7, 0.2);
            assert!(g.max_nonterminal_component() <= 3);
        }
    }

    #[test]
    fn planted_hubs_separate() {
        let g = planted_separator(&mut seeded(3), 2, 2, 6, 3, 0.5);
        let hubs: Vec<usize> = ["h0", "h1"].iter().map(|h| g.index_of(h).unwrap()).collect();
        let mut removed = vec![false; g.vertex_count()];
        for h in hubs {
            removed[h] = true;
        }
        assert!(g.components_without(&removed).iter().all(|c| c.len() <= 2));
        assert_eq!(g.terminal_count(), 3);
    }
}
