//! Property-based invariants over seeded random graphs.

use chordarc::arcs::{build_avoid_graph, enumerate_euler_tours};
use chordarc::catalog::fig4_fixture;
use chordarc::chordal::{alpha_and_cover, build_clique_tree, is_chordal, validate_clique_tree};
use chordarc::gen::{random_chordal, random_graph, GenParams, SplitMix64};
use chordarc::graph::Graph;
use chordarc::obstruction::avoid_witness;
use chordarc::oracle::brute_force_alpha;
use proptest::prelude::*;

fn seeded_graph(n: usize, seed: u64) -> Graph {
    random_graph(n.max(1), seed)
}

fn seeded_chordal(n: usize, seed: u64) -> Graph {
    random_chordal(&GenParams::new(n.max(1), seed)).expect("uncapped sampling cannot reject")
}

proptest! {
    #[test]
    fn parse_roundtrips_vertex_and_edge_counts(n in 1usize..12, seed: u64) {
        let g = seeded_graph(n, seed);
        let text = g.to_edge_list();
        let h = Graph::parse(&text).unwrap();
        prop_assert_eq!(g.n(), h.n());
        prop_assert_eq!(g.edge_count(), h.edge_count());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(n in 2usize..12, seed: u64, mask: u16) {
        let g = seeded_graph(n, seed);
        let subset: Vec<usize> = (0..g.n()).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(!subset.is_empty());
        let h = g.induced(&subset).unwrap();
        prop_assert_eq!(h.n(), subset.len());
        let expected = g
            .edges()
            .filter(|&(u, v)| subset.contains(&u) && subset.contains(&v))
            .count();
        prop_assert_eq!(h.edge_count(), expected);
    }

    #[test]
    fn restricted_paths_avoid_blockers(n in 3usize..11, seed: u64) {
        let g = seeded_graph(n, seed);
        let mut rng = SplitMix64::new(seed ^ 0xabcd);
        let s = rng.below(g.n());
        let t = (s + 1 + rng.below(g.n() - 1)) % g.n();
        prop_assume!(s != t);
        let blockers: Vec<usize> = (0..g.n())
            .filter(|&v| v != s && v != t && rng.chance(1, 4))
            .collect();
        if let Ok(Some(path)) = g.path_missing(s, t, &blockers) {
            prop_assert_eq!(path.first(), s);
            prop_assert_eq!(path.last(), t);
            for &x in &blockers {
                prop_assert!(path.missed_by(&g, x));
            }
        }
    }

    #[test]
    fn unblocked_path_exists_iff_connected(n in 2usize..11, seed: u64) {
        let g = seeded_graph(n, seed);
        let comps = g.components();
        let comp_of = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                let found = matches!(g.path_missing(s, t, &[]), Ok(Some(_)));
                prop_assert_eq!(found, comp_of(s) == comp_of(t));
            }
        }
    }

    #[test]
    fn avoid_witness_presence_is_pair_symmetric(n in 4usize..10, seed: u64) {
        let g = seeded_graph(n, seed);
        prop_assume!(g.n() >= 4);
        let quad = [0, 1, 2, 3];
        for (p1, p2) in [
            ((quad[0], quad[1]), (quad[2], quad[3])),
            ((quad[0], quad[2]), (quad[1], quad[3])),
            ((quad[0], quad[3]), (quad[1], quad[2])),
        ] {
            prop_assert_eq!(
                avoid_witness(&g, p1, p2).is_some(),
                avoid_witness(&g, p2, p1).is_some()
            );
        }
    }

    #[test]
    fn clique_trees_validate_and_covers_match_alpha(n in 1usize..13, seed: u64) {
        let g = seeded_chordal(n, seed);
        let peo = is_chordal(&g).expect("generator emits chordal graphs");
        let cliques = chordarc::chordal::maximal_cliques(&g, &peo).unwrap();
        prop_assert!(cliques.len() <= g.n());
        for clique in &cliques {
            prop_assert!(g.is_clique(clique));
            let extendable = (0..g.n()).any(|v| {
                clique.binary_search(&v).is_err()
                    && clique.iter().all(|&u| g.has_edge(u, v))
            });
            prop_assert!(!extendable, "clique {clique:?} is not maximal");
        }
        let tree = build_clique_tree(&g).unwrap();
        prop_assert!(validate_clique_tree(&g, &tree));
        let (ind, cover) = alpha_and_cover(&g, &peo).unwrap();
        prop_assert!(g.is_independent_set(&ind));
        prop_assert_eq!(ind.len(), cover.members.len());
        prop_assert_eq!(ind.len(), brute_force_alpha(&g));
        for member in &cover.members {
            prop_assert!(g.is_clique(member));
        }
        let mut covered: Vec<usize> = cover.members.concat();
        covered.sort_unstable();
        covered.dedup();
        prop_assert_eq!(covered, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn euler_tours_traverse_each_edge_twice_and_leaves_once(n in 2usize..12, seed: u64) {
        let g = seeded_chordal(n, seed);
        let tree = build_clique_tree(&g).unwrap();
        let tours = enumerate_euler_tours(&tree);
        prop_assert!(!tours.is_empty());
        for tour in tours.iter().take(8) {
            prop_assert!(tour.is_valid_for(&tree));
            if tree.node_count() > 1 {
                for &leaf in &tree.leaves() {
                    let occurrences = tour.nodes.iter().filter(|&&x| x == leaf).count();
                    prop_assert_eq!(occurrences, 1);
                }
            }
        }
    }

    #[test]
    fn avoid_graph_edges_come_in_complementary_pairs(seed: u64) {
        // Random host with the designated quadruple forced independent.
        let base = seeded_graph(9, seed);
        let quad = [0usize, 1, 2, 3];
        let labels: Vec<String> = (0..base.n()).map(|i| format!("v{i}")).collect();
        let edges: Vec<(usize, usize)> = base
            .edges()
            .filter(|&(u, v)| !(quad.contains(&u) && quad.contains(&v)))
            .collect();
        let g = Graph::from_edges(&labels, &edges).unwrap();
        if let Ok(h) = build_avoid_graph(&g, quad) {
            prop_assert_eq!(h.has_edge_slots(0, 1), h.has_edge_slots(2, 3));
            prop_assert_eq!(h.has_edge_slots(0, 2), h.has_edge_slots(1, 3));
            prop_assert_eq!(h.has_edge_slots(0, 3), h.has_edge_slots(1, 2));
            prop_assert!(h.edge_count() < 6);
        }
    }
}

/// Every circle point inside a vertex's arc corresponds to a tour clique
/// containing the vertex, and the assigned position always lies inside.
#[test]
fn arc_points_trace_clique_membership_on_the_worked_example() {
    let fx = fig4_fixture();
    for phi in [&fx.phi_good, &fx.phi_good_star, &fx.phi_bad] {
        let rep = chordarc::arcs::arcs_from_phi(&fx.graph, &fx.tree, &fx.tour, phi).unwrap();
        for v in 0..fx.graph.n() {
            let mask = rep.covered_points(v);
            assert!(mask[phi.phi[v]], "assigned position lies inside the arc");
            for (i, &inside) in mask.iter().enumerate() {
                if inside {
                    let clique = &fx.tree.cliques[fx.tour.nodes[i]];
                    assert!(
                        clique.binary_search(&v).is_ok(),
                        "covered point {i} outside vertex {v}'s cliques"
                    );
                }
            }
        }
    }
}
