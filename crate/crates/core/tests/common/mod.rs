//! Independent reference implementations used as test oracles. None of them
//! shares code with the library routines they check.

#![allow(dead_code)]

use thetalab::graph::Graph;

/// Cyclic Jacobi eigenvalue iteration on a dense symmetric matrix, sorted descending.
pub fn jacobi_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum().max(0.0) * 2.0 - 1.0;
                let t = t / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(|a, b| b.total_cmp(a));
    eig
}

pub fn adjacency_rows(g: &Graph) -> Vec<Vec<f64>> {
    (0..g.n()).map(|i| (0..g.n()).map(|j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 }).collect()).collect()
}

pub fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn trace(a: &[Vec<f64>]) -> f64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), f)
}

/// Some `k` vertices carry a Hamiltonian cycle: all subsets, all orderings.
pub fn brute_contains_cycle(g: &Graph, k: usize) -> bool {
    if k < 3 || k > g.n() {
        return false;
    }
    for_each_subset(g.n(), k, &mut |s| {
        let mut perm: Vec<usize> = s.to_vec();
        loop {
            if (0..k).all(|i| g.is_adjacent(perm[i], perm[(i + 1) % k])) {
                return true;
            }
            if !next_permutation(&mut perm[1..]) {
                return false;
            }
        }
    })
}

/// `K_{2,s}`: some pair of vertices with at least `s` common neighbours.
pub fn brute_contains_k2s(g: &Graph, s: usize) -> bool {
    (0..g.n()).any(|u| {
        ((u + 1)..g.n()).any(|v| (0..g.n()).filter(|&w| g.is_adjacent(u, w) && g.is_adjacent(v, w)).count() >= s)
    })
}

pub fn brute_independence_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u32..(1 << n))
        .filter(|&mask| {
            (0..n).all(|u| mask & (1 << u) == 0 || (u + 1..n).all(|v| mask & (1 << v) == 0 || !g.is_adjacent(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Exact chromatic number by trying every colouring with `k = 1, 2, ...` colours.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colours = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(u, v)| colours[u] != colours[v]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colours[i] += 1;
                if colours[i] < k {
                    break;
                }
                colours[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// Distance layers from `root` by repeated neighbourhood expansion.
pub fn brute_layers(g: &Graph, root: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    dist[root] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            for v in 0..n {
                if g.is_adjacent(u, v) && dist[u] != usize::MAX && dist[u] + 1 < dist[v] {
                    dist[v] = dist[u] + 1;
                    changed = true;
                }
            }
        }
    }
    let depth = dist.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap_or(0);
    (0..=depth).map(|d| (0..n).filter(|&v| dist[v] == d).collect()).collect()
}
