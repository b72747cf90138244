//! Exact subgraph-pattern detection for cycles, cliques and complete
//! bipartite graphs.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use super::{Graph, GraphError};

/// Default cap on the number of `t`-subsets enumerated by the `K_{t,s}` checker.
pub const DEFAULT_SUBSET_CAP: u128 = 10_000_000;

/// A forbidden pattern with an exact checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// `C_k`, a cycle of length exactly `k`.
    Cycle(usize),
    /// `K_k`.
    Clique(usize),
    /// `K_{t,s}`.
    CompleteBipartite(usize, usize),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Cycle(k) => write!(f, "C{k}"),
            Pattern::Clique(k) => write!(f, "K{k}"),
            Pattern::CompleteBipartite(t, s) => write!(f, "K{t},{s}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = GraphError;

    /// Accepts `C4`, `K3`, `K2,3` (also `K_{2,3}` / `C_5` spellings).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Parse(format!("unknown pattern '{s}' (expected Ck, Kk or Kt,s)"));
        let cleaned: String =
            s.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect::<String>().to_uppercase();
        let (head, rest) = cleaned.split_at(cleaned.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let nums: Result<Vec<usize>, _> = rest.split(',').map(str::parse::<usize>).collect();
        let nums = nums.map_err(|_| bad())?;
        match (head, nums.as_slice()) {
            ("C", [k]) if *k >= 3 => Ok(Pattern::Cycle(*k)),
            ("K", [k]) if *k >= 1 => Ok(Pattern::Clique(*k)),
            ("K", [t, s]) if *t >= 1 && *s >= 1 => Ok(Pattern::CompleteBipartite(*t, *s)),
            _ => Err(bad()),
        }
    }
}

impl Graph {
    /// Whether `self` contains `pattern` as a (not necessarily induced) subgraph.
    pub fn contains(&self, pattern: Pattern) -> Result<bool, GraphError> {
        match pattern {
            Pattern::Cycle(k) => Ok(self.contains_cycle(k)),
            Pattern::Clique(k) => Ok(self.contains_clique(k)),
            Pattern::CompleteBipartite(t, s) => self.contains_complete_bipartite(t, s, DEFAULT_SUBSET_CAP),
        }
    }

    /// True iff the graph has a cycle of length exactly `k`.
    ///
    /// Each cycle is found from its smallest vertex `s`, walking only through
    /// vertices above `s`; a branch is cut as soon as the BFS distance back to
    /// `s` exceeds the number of edges still available.
    pub fn contains_cycle(&self, k: usize) -> bool {
        if k < 3 || k > self.n {
            return false;
        }
        for s in 0..self.n {
            if self.n - s < k {
                break;
            }
            let mut mask = FixedBitSet::with_capacity(self.n);
            mask.insert_range(s..self.n);
            let dist = self.distances_within(s, &mask);
            let mut on_path = FixedBitSet::with_capacity(self.n);
            on_path.insert(s);
            let mut search = CycleSearch { g: self, start: s, k, dist: &dist, on_path, first: 0 };
            for v in self.adj[s].ones().filter(|&v| v > s) {
                search.first = v;
                search.on_path.insert(v);
                if search.extend(v, 1) {
                    return true;
                }
                search.on_path.set(v, false);
            }
        }
        false
    }

    /// True iff some `min(t,s)`-subset has at least `max(t,s)` common neighbours.
    ///
    /// Refuses (rather than guessing) when the number of subsets exceeds `cap`.
    pub fn contains_complete_bipartite(&self, t: usize, s: usize, cap: u128) -> Result<bool, GraphError> {
        let (small, large) = (t.min(s), t.max(s));
        if small == 0 {
            return Err(GraphError::InvalidArgument("K_{t,s} needs t, s >= 1".into()));
        }
        if small + large > self.n {
            return Ok(false);
        }
        let work = binomial(self.n as u128, small as u128);
        if work > cap {
            return Err(GraphError::ComplexityRefused { what: "K_{t,s} subset enumeration", work, cap });
        }
        let mut all = FixedBitSet::with_capacity(self.n);
        all.insert_range(..);
        Ok(self.bipartite_extend(0, small, large, &all))
    }

    fn bipartite_extend(&self, from: usize, remaining: usize, need: usize, common: &FixedBitSet) -> bool {
        if remaining == 0 {
            return common.count_ones(..) >= need;
        }
        for v in from..=(self.n - remaining) {
            let mut next = common.clone();
            next.intersect_with(&self.adj[v]);
            if next.count_ones(..) >= need && self.bipartite_extend(v + 1, remaining - 1, need, &next) {
                return true;
            }
        }
        false
    }

    /// True iff the graph has a clique on `t` vertices.
    pub fn contains_clique(&self, t: usize) -> bool {
        if t <= 1 {
            return self.n >= t;
        }
        max_clique(self, Some(t)) >= t
    }

    pub fn clique_number(&self) -> usize {
        max_clique(self, None)
    }

    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    start: usize,
    k: usize,
    dist: &'a [usize],
    on_path: FixedBitSet,
    first: usize,
}

impl CycleSearch<'_> {
    /// `v` is the endpoint of a path with `len` edges from `start`.
    fn extend(&mut self, v: usize, len: usize) -> bool {
        if len == self.k - 1 {
            // Orientation: each cycle is seen twice; keep the one with first < last.
            return self.first < v && self.g.adj[v].contains(self.start);
        }
        for w in self.g.adj[v].ones() {
            if w <= self.start || self.on_path.contains(w) {
                continue;
            }
            let d = self.dist[w];
            if d == usize::MAX || d > self.k - (len + 1) {
                continue;
            }
            self.on_path.insert(w);
            let found = self.extend(w, len + 1);
            self.on_path.set(w, false);
            if found {
                return true;
            }
        }
        false
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Branch and bound with greedy-colouring bounds. Stops early once `target` is reached.
fn max_clique(g: &Graph, target: Option<usize>) -> usize {
    let mut best = 0usize;
    let cand: Vec<usize> = (0..g.n).collect();
    expand(g, 0, cand, &mut best, target);
    best
}

fn expand(g: &Graph, size: usize, cand: Vec<usize>, best: &mut usize, target: Option<usize>) -> bool {
    let (order, colors) = greedy_color_order(g, &cand);
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return false;
        }
        let v = order[i];
        let next: Vec<usize> = order[..i].iter().copied().filter(|&w| g.adj[v].contains(w)).collect();
        if next.is_empty() {
            if size + 1 > *best {
                *best = size + 1;
                if target.is_some_and(|t| *best >= t) {
                    return true;
                }
            }
        } else if expand(g, size + 1, next, best, target) {
            return true;
        }
    }
    false
}

/// Sequential greedy colouring; returns vertices sorted by colour and their colours (1-based).
fn greedy_color_order(g: &Graph, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes.iter_mut().find(|c| c.iter().all(|&u| !g.adj[v].contains(u))) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colors.push(c + 1);
        }
    }
    (order, colors)
}
