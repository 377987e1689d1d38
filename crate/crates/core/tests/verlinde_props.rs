use proptest::prelude::*;

use cskit::verlinde::{admissible, count_colorings, list_colorings, spine_graph, spine_graph_of_kind, verlinde_dim, SpineKind};

#[test]
fn coloring_table_matches_formula() {
    for (g, r_max) in [(2u32, 12u32), (3, 8), (4, 8)] {
        let graph = spine_graph(g);
        for r in 2..=r_max {
            assert_eq!(count_colorings(&graph, r), verlinde_dim(g, r).unwrap(), "g={g} r={r}");
        }
    }
}

#[test]
fn spines_agree_in_genus_three() {
    let chain = spine_graph_of_kind(3, SpineKind::Chain);
    let necklace = spine_graph_of_kind(3, SpineKind::Necklace);
    for r in 2..=8 {
        assert_eq!(count_colorings(&chain, r), count_colorings(&necklace, r));
    }
}

#[test]
fn listed_colorings_are_admissible_and_ordered() {
    let graph = spine_graph(3);
    let list = list_colorings(&graph, 5);
    assert_eq!(list.len() as u64, verlinde_dim(3, 5).unwrap());
    assert_eq!(list, list_colorings(&graph, 5));
    for labels in &list {
        let mut slots = vec![Vec::new(); graph.vertex_count()];
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            slots[a].push(labels[e]);
            slots[b].push(labels[e]);
        }
        for s in slots {
            assert!(admissible(s[0], s[1], s[2], 5).unwrap());
        }
    }
}

#[test]
fn level_two_has_only_the_vacuum() {
    for g in 1..=8 {
        assert_eq!(verlinde_dim(g, 2).unwrap(), 1);
    }
}

proptest! {
    #[test]
    fn admissibility_is_symmetric(r in 2u32..30, m in 1u32..30, n in 1u32..30, p in 1u32..30) {
        prop_assume!(m < r && n < r && p < r);
        let a = admissible(m, n, p, r).unwrap();
        for (x, y, z) in [(m, p, n), (n, m, p), (n, p, m), (p, m, n), (p, n, m)] {
            prop_assert_eq!(admissible(x, y, z, r).unwrap(), a);
        }
    }

    #[test]
    fn genus_one_counts_labels(r in 2u32..200) {
        prop_assert_eq!(verlinde_dim(1, r).unwrap(), (r - 1) as u64);
    }
}
