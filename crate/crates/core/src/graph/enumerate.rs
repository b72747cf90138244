use std::collections::BTreeSet;

use super::Graph;

/// Largest order handled by [`nonisomorphic_graphs`].
const MAX_ENUM_N: usize = 8;

fn pair_bit(i: usize, j: usize) -> u64 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1u64 << (j * (j - 1) / 2 + i)
}

/// Canonical code: the minimum edge code over all relabellings that list the
/// vertices by non-increasing degree. Isomorphic graphs share degree
/// sequences, so the minimum ranges over the same set of codes.
fn canonical_code(masks: &[u64]) -> u64 {
    let n = masks.len();
    let deg: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let mut slots: Vec<u32> = deg.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));
    let mut best = u64::MAX;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(masks, &deg, &slots, 0, &mut perm, &mut used, &mut best);
    best
}

fn assign(
    masks: &[u64],
    deg: &[u32],
    slots: &[u32],
    pos: usize,
    perm: &mut [usize],
    used: &mut [bool],
    best: &mut u64,
) {
    let n = masks.len();
    if pos == n {
        let mut code = 0u64;
        for a in 0..n {
            for b in (a + 1)..n {
                if masks[perm[a]] & (1 << perm[b]) != 0 {
                    code |= pair_bit(a, b);
                }
            }
        }
        *best = (*best).min(code);
        return;
    }
    for v in 0..n {
        if !used[v] && deg[v] == slots[pos] {
            used[v] = true;
            perm[pos] = v;
            assign(masks, deg, slots, pos + 1, perm, used, best);
            used[v] = false;
        }
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code & pair_bit(i, j) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("decoded edges are valid")
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// (`n <= 8`), in increasing canonical-code order.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUM_N, "isomorphism-class enumeration is limited to n <= {MAX_ENUM_N}");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    // Every graph on m vertices is a graph on m-1 vertices plus one vertex.
    let mut level: BTreeSet<u64> = BTreeSet::from([0u64]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(m - 1, code).masks();
            for nbrs in 0u64..(1 << (m - 1)) {
                let mut masks = base.clone();
                masks.push(nbrs);
                for (v, mask) in masks.iter_mut().enumerate().take(m - 1) {
                    if nbrs & (1 << v) != 0 {
                        *mask |= 1 << (m - 1);
                    }
                }
                next.insert(canonical_code(&masks));
            }
        }
        level = next;
    }
    level.into_iter().map(|code| decode(n, code)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088: 1, 1, 2, 4, 11, 34, 156
        let counts: Vec<usize> = (0..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }
}
