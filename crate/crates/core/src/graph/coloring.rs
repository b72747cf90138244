use serde::Serialize;

use super::{Graph, GraphError};

/// Largest graph accepted by [`chromatic_number_exact`].
pub const MAX_CHROMATIC_N: usize = 40;

/// Exact chromatic number by DSATUR backtracking between the clique lower
/// bound and the greedy upper bound.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > MAX_CHROMATIC_N {
        return Err(GraphError::ComplexityRefused {
            what: "exact chromatic number",
            work: g.n() as u128,
            cap: MAX_CHROMATIC_N as u128,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let masks = g.masks();
    let lower = g.clique_number().max(1);
    let upper = dsatur_greedy(&masks);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; masks.len()];
        if colorable(&masks, k, &mut colors, 0, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn saturation(masks: &[u64], colors: &[usize], v: usize) -> u64 {
    let mut seen = 0u64;
    let mut nb = masks[v];
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if colors[w] != usize::MAX {
            seen |= 1 << colors[w];
        }
    }
    seen
}

fn pick_dsatur(masks: &[u64], colors: &[usize]) -> Option<usize> {
    (0..masks.len()).filter(|&v| colors[v] == usize::MAX).max_by_key(|&v| {
        let sat = saturation(masks, colors, v).count_ones();
        (sat, masks[v].count_ones(), std::cmp::Reverse(v))
    })
}

fn dsatur_greedy(masks: &[u64]) -> usize {
    let mut colors = vec![usize::MAX; masks.len()];
    let mut used = 0;
    while let Some(v) = pick_dsatur(masks, &colors) {
        let sat = saturation(masks, &colors, v);
        let c = (!sat).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(masks: &[u64], k: usize, colors: &mut [usize], colored: usize, used: usize) -> bool {
    if colored == masks.len() {
        return true;
    }
    let v = pick_dsatur(masks, colors).expect("uncoloured vertex remains");
    let sat = saturation(masks, colors, v);
    // Colours above `used` are interchangeable; try only the first fresh one.
    for c in 0..k.min(used + 1) {
        if sat & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if colorable(masks, k, colors, colored + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerEntry {
    pub root: usize,
    pub layer: usize,
    pub size: usize,
    pub chromatic_number: usize,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub k: usize,
    /// `k - 2`, the colour bound each layer must meet.
    pub bound: usize,
    pub entries: Vec<LayerEntry>,
    pub max_chromatic: usize,
    pub pass: bool,
}

/// For a graph with no cycle of length exactly `k`, computes the exact
/// chromatic number of every BFS layer `A_i`, `i <= (k-1)/2`, from every root
/// and compares it with `k - 2`.
pub fn layer_chromatic_check(g: &Graph, k: usize) -> Result<LayerReport, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidArgument(format!("cycle length {k} < 3")));
    }
    if g.contains_cycle(k) {
        return Err(GraphError::PreconditionViolated(format!("graph contains C{k}")));
    }
    let bound = k - 2;
    let max_layer = (k - 1) / 2;
    let mut entries = Vec::new();
    for root in 0..g.n() {
        let layers = g.bfs_layers(root)?;
        for (i, layer) in layers.iter().enumerate().take(max_layer + 1) {
            let chi = chromatic_number_exact(&g.induced_subgraph(layer))?;
            entries.push(LayerEntry {
                root,
                layer: i,
                size: layer.len(),
                chromatic_number: chi,
                within_bound: chi <= bound,
            });
        }
    }
    let max_chromatic = entries.iter().map(|e| e.chromatic_number).max().unwrap_or(0);
    let pass = entries.iter().all(|e| e.within_bound);
    Ok(LayerReport { k, bound, entries, max_chromatic, pass })
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number_exact(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(chromatic_number_exact(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn petersen_is_three_colourable_not_two() {
        // Independent oracle: exhaustive search over all 3^10 and 2^10 assignments.
        let p = petersen();
        let edges = p.edges();
        let colourable = |k: usize| {
            let total = k.pow(10);
            (0..total).any(|mut code| {
                let mut col = [0usize; 10];
                for c in col.iter_mut() {
                    *c = code % k;
                    code /= k;
                }
                edges.iter().all(|&(u, v)| col[u] != col[v])
            })
        };
        assert!(!colourable(2));
        assert!(colourable(3));
        assert_eq!(chromatic_number_exact(&p).unwrap(), 3);
    }

    #[test]
    fn chromatic_cap() {
        assert!(matches!(chromatic_number_exact(&Graph::empty(41)), Err(GraphError::ComplexityRefused { .. })));
    }

    #[test]
    fn layer_check_examples() {
        let r = layer_chromatic_check(&complete(4), 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_chromatic, 3);

        assert!(matches!(layer_chromatic_check(&cycle(5), 5), Err(GraphError::PreconditionViolated(_))));

        // binary tree on 7 vertices
        let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let r = layer_chromatic_check(&tree, 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_chromatic, 1);
    }
}
