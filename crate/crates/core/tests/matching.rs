mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use vcsparse_core::random::{quasi_bipartite, seeded};
use vcsparse_core::{build_link_graph, maximum_matching, subdivide_terminal_edges, LinkFlavor, Orientation};

use common::{brute_matching, link_triples};

fn flavors(directed: bool) -> &'static [LinkFlavor] {
    if directed {
        &[LinkFlavor::Out, LinkFlavor::In]
    } else {
        &[LinkFlavor::Undirected]
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn link_graph_is_sound_and_complete(seed in any::<u64>(), k in 2usize..6, n in 0usize..8, directed in any::<bool>()) {
        let o = if directed { Orientation::Directed } else { Orientation::Undirected };
        let g = quasi_bipartite(&mut seeded(seed), o, k, n, 0.5, 0.3);
        let (sub, _) = subdivide_terminal_edges(&g).unwrap();
        for &flavor in flavors(directed) {
            let lg = build_link_graph(&sub, flavor).unwrap();
            prop_assert_eq!(lg.left().len(), k * (k - 1));
            prop_assert_eq!(lg.right(), sub.edges());
            let got: BTreeSet<_> = lg
                .adjacencies()
                .map(|(l, r)| (lg.left()[l].0, lg.left()[l].1, lg.right()[r]))
                .collect();
            prop_assert_eq!(got, link_triples(&sub, flavor));
        }
    }

    #[test]
    fn matching_is_maximum_and_deterministic(seed in any::<u64>(), k in 2usize..5, n in 0usize..5, directed in any::<bool>()) {
        let o = if directed { Orientation::Directed } else { Orientation::Undirected };
        let g = quasi_bipartite(&mut seeded(seed), o, k, n, 0.6, 0.2);
        let (sub, _) = subdivide_terminal_edges(&g).unwrap();
        prop_assume!(sub.edge_count() <= 12);
        for &flavor in flavors(directed) {
            let lg = build_link_graph(&sub, flavor).unwrap();
            let m = maximum_matching(&lg);
            prop_assert!(m.is_valid_for(&lg));
            prop_assert_eq!(m.len(), brute_matching(&lg));
            prop_assert_eq!(&maximum_matching(&lg), &m);
        }
    }
}

#[test]
fn two_hundred_small_link_graphs() {
    let mut checked = 0;
    let mut seed = 0;
    while checked < 200 {
        seed += 1;
        let directed = seed % 2 == 0;
        let o = if directed {
            Orientation::Directed
        } else {
            Orientation::Undirected
        };
        let g = quasi_bipartite(
            &mut seeded(seed),
            o,
            2 + seed as usize % 3,
            1 + seed as usize % 4,
            0.5,
            0.2,
        );
        let (sub, _) = subdivide_terminal_edges(&g).unwrap();
        if sub.edge_count() > 12 {
            continue;
        }
        for &flavor in flavors(directed) {
            let lg = build_link_graph(&sub, flavor).unwrap();
            assert_eq!(
                maximum_matching(&lg).len(),
                brute_matching(&lg),
                "seed {seed} {flavor}"
            );
            checked += 1;
        }
    }
}
