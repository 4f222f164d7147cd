//! Seeded instances shared by the benchmarks in `benches/`.

use vcsparse_core::random::{quasi_bipartite, seeded, tau_quasi_bipartite};
use vcsparse_core::{Orientation, TerminalGraph};

/// Quasi-bipartite graph with `k` terminals and `n` non-terminals.
pub fn qb_instance(orientation: Orientation, k: usize, n: usize) -> TerminalGraph {
    quasi_bipartite(
        &mut seeded(k as u64 * 1000 + n as u64),
        orientation,
        k,
        n,
        0.5,
        0.2,
    )
}

/// Graph whose non-terminal components have at most three vertices.
pub fn tau_instance(k: usize, groups: usize) -> TerminalGraph {
    tau_quasi_bipartite(
        &mut seeded(groups as u64),
        Orientation::Undirected,
        k,
        3,
        groups,
        0.4,
        0.6,
        0.2,
    )
}
