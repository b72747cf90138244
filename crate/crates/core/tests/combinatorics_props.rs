mod common;

use common::{
    brute_chromatic_number, brute_contains_cycle, brute_contains_k2s, brute_independence_number, brute_layers,
};
use proptest::prelude::*;
use thetalab::constructions::{clique_union, furedi_graph, furedi_square_identity, polarity_graph};
use thetalab::ffield::{is_prime, FieldSpec};
use thetalab::graph::{chromatic_number_exact, Graph, Pattern, DEFAULT_SUBSET_CAP};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cycle_detection_matches_exhaustive_search(g in graph(9), k in 3usize..=7) {
        prop_assert_eq!(g.contains_cycle(k), brute_contains_cycle(&g, k));
    }

    #[test]
    fn k2s_detection_matches_common_neighbour_counts(g in graph(10), s in 1usize..=4) {
        let lib = g.contains_complete_bipartite(2, s, DEFAULT_SUBSET_CAP).unwrap();
        prop_assert_eq!(lib, brute_contains_k2s(&g, s));
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement().edges(), g.edges());
    }

    #[test]
    fn independence_and_chromatic_numbers(g in graph(8)) {
        prop_assert_eq!(g.independence_number(), brute_independence_number(&g));
        prop_assert_eq!(g.clique_number(), brute_independence_number(&g.complement()));
        prop_assert_eq!(chromatic_number_exact(&g).unwrap(), brute_chromatic_number(&g));
    }

    #[test]
    fn bfs_layers_match_relaxation(g in graph(12), root in 0usize..12) {
        let root = root % g.n();
        prop_assert_eq!(g.bfs_layers(root).unwrap(), brute_layers(&g, root));
    }

    #[test]
    fn json_and_edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap().edges(), g.edges());
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap().edges(), g.edges());
    }
}

fn prime_powers(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| (2..=q).filter(|&p| is_prime(p) && q % p == 0).count() == 1).collect()
}

#[test]
fn field_axioms_on_every_small_field() {
    for q in prime_powers(49) {
        let f = FieldSpec::with_order(q).unwrap();
        let elems: Vec<_> = f.elements().collect();
        assert_eq!(elems.len() as u64, q);
        for a in &elems {
            assert_eq!(f.pow(a, q), *a, "Frobenius fixes every element of GF({q})");
            if a.is_zero() {
                assert!(f.inv(a).is_err());
                continue;
            }
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, &inv), f.one());
            assert_eq!(f.pow(a, q - 1), f.one());
            assert_eq!((q - 1) % f.multiplicative_order(a).unwrap(), 0);
        }
        for a in elems.iter().step_by(3) {
            for b in elems.iter().step_by(2) {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(&f.add(a, b), b), *a);
                for c in elems.iter().step_by(5) {
                    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn subgroups_exist_for_every_divisor() {
    for q in prime_powers(32) {
        let f = FieldSpec::with_order(q).unwrap();
        for t in (1..q).filter(|t| (q - 1) % t == 0) {
            let (h, group) = f.subgroup_of_order(t).unwrap();
            assert_eq!(f.multiplicative_order(&h).unwrap(), t);
            assert_eq!(group.len() as u64, t);
            for a in &group {
                for b in &group {
                    assert!(group.contains(&f.mul(a, b)), "subgroup of order {t} in GF({q}) is closed");
                }
            }
        }
    }
}

#[test]
fn furedi_graphs_up_to_300_vertices() {
    for q in prime_powers(31) {
        for t in (1..q).filter(|t| (q - 1) % t == 0) {
            let n = (q * q - 1) / t;
            if n > 300 {
                continue;
            }
            let fg = furedi_graph(q, t).unwrap();
            assert_eq!(fg.graph.n() as u64, n);
            assert!(!brute_contains_k2s(&fg.graph, (t + 1) as usize), "furedi({q},{t}) contains K_(2,{})", t + 1);
            if q <= 17 {
                let r = furedi_square_identity(&fg);
                assert!(r.holds && r.regular && r.row_sums_ok, "square identity for furedi({q},{t})");
                let allowed = [0, t as i64];
                assert!(r.common_neighbour_counts.iter().all(|c| allowed.contains(c)));
            }
        }
    }
}

#[test]
fn polarity_graphs_are_c4_free() {
    for q in [2u64, 3, 4, 5] {
        let pg = polarity_graph(q).unwrap();
        let g = &pg.graph;
        assert_eq!(g.n() as u64, q * q + q + 1);
        assert!(!brute_contains_k2s(g, 2));
        assert_eq!(pg.absolute_points.len() as u64, q + 1);
        for v in 0..g.n() {
            let expected = if pg.absolute_points.contains(&v) { q } else { q + 1 };
            assert_eq!(g.degree(v) as u64, expected);
        }
    }
}

#[test]
fn clique_unions_avoid_their_patterns() {
    for n in 1..=12 {
        for t in 1..=5 {
            let g = clique_union(n, t).unwrap();
            assert!(!brute_contains_cycle(&g, t + 1));
            assert!(!g.contains(Pattern::Clique(t + 1)).unwrap());
            assert_eq!(g.clique_number(), t.min(n));
        }
    }
}
