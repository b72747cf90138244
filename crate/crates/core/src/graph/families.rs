//! Small named graphs used as fixtures and experiment inputs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid star")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges).expect("valid complete bipartite graph")
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("valid Petersen graph")
}

/// Erdős–Rényi G(n, p) drawn from a seeded ChaCha stream.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Random graph without a cycle of length exactly `k`: pairs are visited in a
/// shuffled order and each is kept with probability `p` if no `C_k` appears.
pub fn random_cycle_free(n: usize, k: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cycle_free_with(n, k, p, &mut rng)
}

pub fn random_cycle_free_with<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if rng.random::<f64>() >= p {
            continue;
        }
        g.add_edge(u, v).expect("in range");
        if g.contains_cycle(k) {
            g.remove_edge(u, v);
        }
    }
    g
}
