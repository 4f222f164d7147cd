use proptest::prelude::*;
use rand::seq::IndexedRandom;
use vcsparse_core::random::{general, quasi_bipartite, seeded};
use vcsparse_core::{
    mincut, verify_sparsifier, verify_subgraph, CutQuery, Orientation, TerminalGraph, VerifyMode,
    VerifyOptions,
};

fn orientation(directed: bool) -> Orientation {
    if directed {
        Orientation::Directed
    } else {
        Orientation::Undirected
    }
}

/// `g` without a random edge or a random non-terminal.
fn damaged(g: &TerminalGraph, seed: u64) -> TerminalGraph {
    let mut rng = seeded(seed);
    let nonterminals: Vec<usize> = (0..g.vertex_count()).filter(|&v| !g.is_terminal(v)).collect();
    match nonterminals.choose(&mut rng) {
        Some(&v) if seed.is_multiple_of(2) => g.without_vertices(&[v]),
        _ => {
            let mut b = vcsparse_core::GraphBuilder::new(g.orientation());
            for v in g.vertices() {
                b.add_vertex(v.id.as_str(), v.weight, v.terminal).unwrap();
            }
            let skip = g.edges().choose(&mut rng).copied();
            for &(u, v) in g.edges() {
                if Some((u, v)) != skip {
                    b.add_edge(g.id(u).as_str(), g.id(v).as_str()).unwrap();
                }
            }
            b.build()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_replay_through_the_cut_oracle(seed in any::<u64>(), k in 1usize..5, directed in any::<bool>()) {
        let g = quasi_bipartite(&mut seeded(seed), orientation(directed), k, 5, 0.5, 0.4);
        let h = damaged(&g, seed);
        for mode in [VerifyMode::Bipartition, VerifyMode::Full, VerifyMode::Paranoid] {
            let report = verify_sparsifier(&g, &h, mode, VerifyOptions { cross_check: true }).unwrap();
            if let Some(w) = report.witness() {
                let q = CutQuery::new(w.sources.iter().cloned(), w.sinks.iter().cloned())
                    .with_deleted(w.deleted.iter().cloned());
                prop_assert_eq!(mincut(&g, &q).unwrap().value, w.value_in_graph);
                prop_assert_eq!(mincut(&h, &q).unwrap().value, w.value_in_sparsifier);
                prop_assert!(w.value_in_graph != w.value_in_sparsifier);
            }
        }
    }

    #[test]
    fn full_pass_implies_bipartition_pass(seed in any::<u64>(), n in 1usize..8, directed in any::<bool>()) {
        let g = general(&mut seeded(seed), orientation(directed), n, 0.4, 2, 0.5);
        let h = damaged(&g, seed ^ 1);
        let full = verify_sparsifier(&g, &h, VerifyMode::Full, Default::default()).unwrap();
        let bip = verify_sparsifier(&g, &h, VerifyMode::Bipartition, Default::default()).unwrap();
        prop_assert!(!full.passed() || bip.passed());
        if !bip.passed() {
            prop_assert!(!full.passed());
        }
    }

    #[test]
    fn subgraphs_only_lose_connectivity(seed in any::<u64>(), n in 1usize..8, directed in any::<bool>()) {
        let g = general(&mut seeded(seed), orientation(directed), n, 0.5, 3, 0.5);
        let h = damaged(&g, seed.wrapping_mul(3));
        prop_assert!(verify_subgraph(&g, &h));
        let report = verify_sparsifier(&g, &h, VerifyMode::Full, Default::default()).unwrap();
        if let Some(w) = report.witness() {
            prop_assert!(w.value_in_sparsifier < w.value_in_graph);
        }
    }
}
