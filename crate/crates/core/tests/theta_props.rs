mod common;

use common::{brute_independence_number, jacobi_eigenvalues};
use proptest::prelude::*;
use thetalab::graph::families::petersen;
use thetalab::graph::Graph;
use thetalab::ortho::{gram, random_rep, rep_sum_length, schnirelmann_check, OrthoRep};
use thetalab::theta::{theta_lower_from_rep, theta_sdp, ThetaResult};

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn solve(g: &Graph) -> ThetaResult {
    let r = theta_sdp(g, 1e-7).unwrap();
    r.validate(g).unwrap();
    r
}

fn clique_cover_number(g: &Graph) -> usize {
    // chromatic number of the complement, by trying every assignment
    let c = g.complement();
    let n = c.n();
    (1..=n)
        .find(|&k| {
            let mut col = vec![0usize; n];
            loop {
                if c.edges().iter().all(|&(u, v)| col[u] != col[v]) {
                    return true;
                }
                let mut i = 0;
                while i < n {
                    col[i] += 1;
                    if col[i] < k {
                        break;
                    }
                    col[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
            }
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sandwich_between_independence_and_clique_cover(g in graph(1, 8)) {
        let r = solve(&g);
        prop_assert!(r.gap <= 1e-7);
        let alpha = brute_independence_number(&g) as f64;
        let cover = clique_cover_number(&g) as f64;
        prop_assert!(r.upper >= alpha - 1e-7, "theta {} < alpha {alpha}", r.upper);
        prop_assert!(r.lower <= cover + 1e-7, "theta {} > cover {cover}", r.lower);
    }

    #[test]
    fn product_with_complement_is_at_least_n(g in graph(2, 12)) {
        let (a, b) = (solve(&g), solve(&g.complement()));
        prop_assert!(a.upper * b.upper >= g.n() as f64 - 1e-6);
    }

    #[test]
    fn deleting_an_edge_does_not_decrease_theta(g in graph(3, 10), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let drop = edges[pick % edges.len()];
        let kept: Vec<_> = edges.into_iter().filter(|&e| e != drop).collect();
        let h = Graph::from_edges(g.n(), &kept).unwrap();
        prop_assert!(solve(&h).upper >= solve(&g).lower - 1e-7);
    }

    #[test]
    fn dual_certificate_has_the_graph_pattern(g in graph(2, 12)) {
        let r = solve(&g);
        let n = g.n();
        for i in 0..n {
            for j in 0..n {
                if i == j || !g.is_adjacent(i, j) {
                    prop_assert_eq!(r.dual_b.get(i, j), 1.0);
                }
            }
        }
        prop_assert!((jacobi_eigenvalues(&r.dual_b.rows())[0] - r.upper).abs() <= 1e-8 * r.upper);
    }

    #[test]
    fn generated_reps_satisfy_parseval_and_sum_bound(g in graph(2, 10), seed in any::<u64>()) {
        let rep = random_rep(&g, seed);
        prop_assert!(rep.validate(1e-8).valid);
        let m = gram(&rep);
        // unit diagonal, so tr M = n, and every eigenvalue lies in [0, n]
        prop_assert!((m.trace() - g.n() as f64).abs() <= 1e-9);
        let eig = jacobi_eigenvalues(&m.rows());
        prop_assert!(eig[g.n() - 1] >= -1e-9 && eig[0] <= g.n() as f64 + 1e-9);
        prop_assert!(schnirelmann_check(&m).unwrap().pass);
        // ‖Σ f(v)‖² = Σ_ij M_ij
        let s = rep_sum_length(&rep, None).unwrap();
        prop_assert!((s.raw * s.raw - m.sum_entries()).abs() <= 1e-8 * g.n() as f64);
        let theta_c = solve(&g.complement()).upper;
        prop_assert!(s.raw <= (g.n() as f64 * theta_c).sqrt() + 1e-6);
    }

    #[test]
    fn neighbourhood_mass_is_bounded_by_theta(g in graph(3, 10), seed in any::<u64>()) {
        // f restricted to N(u) represents G[N(u)], so with handle f(u) it bounds
        // theta of the complement of G[N(u)] from below
        let rep = random_rep(&g, seed);
        for u in 0..g.n() {
            let nbrs: Vec<usize> = g.neighbors(u).collect();
            if nbrs.is_empty() {
                continue;
            }
            let h = g.induced_subgraph(&nbrs);
            let sub: Vec<Vec<f64>> = nbrs.iter().map(|&w| rep.vectors()[w].clone()).collect();
            let fu = &rep.vectors()[u];
            let mass: f64 = sub.iter().map(|v| v.iter().zip(fu).map(|(a, b)| a * b).sum::<f64>().powi(2)).sum();
            let sub_rep = OrthoRep::new(rep.d(), sub, h.clone()).unwrap();
            let hc = h.complement();
            let lib = theta_lower_from_rep(&hc, &sub_rep, fu).unwrap();
            prop_assert!((lib - mass).abs() <= 1e-9 * mass.max(1.0));
            prop_assert!(mass <= solve(&hc).upper + 1e-7, "vertex {u}: {mass}");
        }
    }
}

#[test]
fn petersen_theta_is_four() {
    let r = solve(&petersen());
    assert!((r.lower - 4.0).abs() < 1e-6 && (r.upper - 4.0).abs() < 1e-6);
}

#[test]
fn representation_json_round_trip() {
    let g = petersen();
    let rep = random_rep(&g, 9);
    let back = OrthoRep::from_json(&rep.to_json()).unwrap();
    assert_eq!(back.vectors(), rep.vectors());
    assert_eq!(back.graph().edges(), g.edges());
}
