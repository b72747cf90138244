//! Explicit extremal graph families over finite fields.
//!
//! Both field constructions first build the loop-included incidence (a vertex
//! may be adjacent to itself), keep it for the algebraic identities that hold
//! there, and expose the simple graph with the loops dropped.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::ffield::{FieldElement, FieldError, FieldSpec};
use crate::graph::{Graph, Provenance};
use crate::linalg::SymMatrix;

/// Cap on `q²` for the Füredi construction (all pairs of field elements are enumerated).
pub const MAX_FUREDI_PAIRS: u64 = 1 << 22;
/// Cap on the projective plane size `q² + q + 1`.
pub const MAX_POLARITY_POINTS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("construction too large: {0}")]
    TooLarge(String),
}

/// A graph that was built with a loop-included incidence.
pub trait LoopedConstruction {
    fn graph(&self) -> &Graph;
    /// Vertices whose loop was dropped from the simple graph.
    fn loops(&self) -> &[usize];
    fn provenance(&self) -> Provenance;

    /// Adjacency of the simple graph with the loops restored on the diagonal.
    fn loop_included_adjacency(&self) -> SymMatrix {
        let g = self.graph();
        let loops: HashSet<usize> = self.loops().iter().copied().collect();
        SymMatrix::from_fn(g.n(), |i, j| {
            if (i == j && loops.contains(&i)) || (i != j && g.is_adjacent(i, j)) {
                1.0
            } else {
                0.0
            }
        })
    }

    /// Loop-included adjacency as exact integers.
    fn loop_included_rows(&self) -> Vec<Vec<i64>> {
        let g = self.graph();
        let mut rows = vec![vec![0i64; g.n()]; g.n()];
        for (u, v) in g.edges() {
            rows[u][v] = 1;
            rows[v][u] = 1;
        }
        for &v in self.loops() {
            rows[v][v] = 1;
        }
        rows
    }
}

/// Füredi's `K_{2,t+1}`-free graph on the scaling classes of `GF(q)² \ {0}`.
#[derive(Debug, Clone)]
pub struct FurediGraph {
    pub graph: Graph,
    pub q: u64,
    pub t: u64,
    pub field: FieldSpec,
    /// Canonical representative `(a, b)` of each vertex class.
    pub classes: Vec<(FieldElement, FieldElement)>,
    /// `{1, h, ..., h^(t-1)}`.
    pub subgroup: Vec<FieldElement>,
    /// Classes with `a·a + b·b ∈ H`.
    pub loops: Vec<usize>,
}

impl LoopedConstruction for FurediGraph {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn loops(&self) -> &[usize] {
        &self.loops
    }

    fn provenance(&self) -> Provenance {
        Provenance {
            family: "furedi".into(),
            parameters: BTreeMap::from([("q".into(), self.q), ("t".into(), self.t)]),
            loops_removed: self.loops.clone(),
        }
    }
}

/// Builds the Füredi graph for prime power `q` and `t | q - 1`.
///
/// Vertices are the classes `⟨a,b⟩` of nonzero pairs under scaling by the
/// order-`t` subgroup `H`; `⟨a,b⟩ ~ ⟨a',b'⟩` iff `aa' + bb' ∈ H`.
pub fn furedi_graph(q: u64, t: u64) -> Result<FurediGraph, ConstructionError> {
    let field = FieldSpec::with_order(q)?;
    if t == 0 {
        return Err(ConstructionError::InvalidParameters("t must be at least 1".into()));
    }
    let (_, subgroup) = field.subgroup_of_order(t)?;
    if q * q > MAX_FUREDI_PAIRS {
        return Err(ConstructionError::TooLarge(format!("q = {q} needs q^2 > {MAX_FUREDI_PAIRS} pairs")));
    }
    let elems: Vec<FieldElement> = field.elements().collect();
    let index = |e: &FieldElement| field.index_of(e) as usize;
    let qs = q as usize;

    let mut class_of = vec![usize::MAX; qs * qs];
    let mut classes = Vec::new();
    // Pairs in lexicographic (index(a), index(b)) order, so the first member
    // seen is the canonical (smallest) representative.
    for pair in 1..qs * qs {
        if class_of[pair] != usize::MAX {
            continue;
        }
        let (a, b) = (&elems[pair / qs], &elems[pair % qs]);
        let id = classes.len();
        for c in &subgroup {
            let (ca, cb) = (field.mul(c, a), field.mul(c, b));
            class_of[index(&ca) * qs + index(&cb)] = id;
        }
        classes.push((a.clone(), b.clone()));
    }

    let in_h: HashSet<usize> = subgroup.iter().map(index).collect();
    let dot = |x: &(FieldElement, FieldElement), y: &(FieldElement, FieldElement)| {
        index(&field.add(&field.mul(&x.0, &y.0), &field.mul(&x.1, &y.1)))
    };
    let n = classes.len();
    let mut graph = Graph::empty(n);
    let mut loops = Vec::new();
    for i in 0..n {
        if in_h.contains(&dot(&classes[i], &classes[i])) {
            loops.push(i);
        }
        for j in (i + 1)..n {
            if in_h.contains(&dot(&classes[i], &classes[j])) {
                graph.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    let labels = classes.iter().map(|(a, b)| format!("<{a},{b}>")).collect();
    Ok(FurediGraph { graph: graph.with_labels(labels), q, t, field, classes, subgroup, loops })
}

/// Result of checking `A² = (q − t)I + tJ − tQ` on the loop-included adjacency.
#[derive(Debug, Clone, Serialize)]
pub struct SquareIdentityReport {
    pub holds: bool,
    /// `A² − ((q − t)I + tJ − tQ)`, exact.
    pub residual: Vec<Vec<i64>>,
    pub max_abs_residual: i64,
    /// Ones per row of `Q` (pairs without a common neighbour).
    pub q_row_sums: Vec<i64>,
    /// `(q − 1 − t)/t`.
    pub expected_q_row_sum: i64,
    pub row_sums_ok: bool,
    /// Row sums of the loop-included adjacency (all `q` when regular).
    pub degrees: Vec<i64>,
    pub regular: bool,
    /// Distinct off-diagonal common-neighbour counts observed in `A²`.
    pub common_neighbour_counts: Vec<i64>,
}

/// Verifies the square identity entrywise in exact integer arithmetic.
pub fn furedi_square_identity(fg: &FurediGraph) -> SquareIdentityReport {
    let a = fg.loop_included_rows();
    let n = a.len();
    let (q, t) = (fg.q as i64, fg.t as i64);
    let mut sq = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                sq[i][j] += a[i][k] * a[k][j];
            }
        }
    }
    let q_matrix: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| i64::from(i != j && sq[i][j] == 0)).collect()).collect();
    let mut residual = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let rhs = if i == j { q - t } else { 0 } + t - t * q_matrix[i][j];
            residual[i][j] = sq[i][j] - rhs;
        }
    }
    let max_abs_residual = residual.iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    let q_row_sums: Vec<i64> = q_matrix.iter().map(|r| r.iter().sum()).collect();
    let expected_q_row_sum = (q - 1 - t) / t;
    let degrees: Vec<i64> = a.iter().map(|r| r.iter().sum()).collect();
    let mut counts: Vec<i64> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| sq[i][j]).collect();
    counts.sort_unstable();
    counts.dedup();
    SquareIdentityReport {
        holds: max_abs_residual == 0,
        residual,
        max_abs_residual,
        row_sums_ok: q_row_sums.iter().all(|&s| s == expected_q_row_sum),
        q_row_sums,
        expected_q_row_sum,
        regular: degrees.iter().all(|&d| d == q),
        degrees,
        common_neighbour_counts: counts,
    }
}

/// Polarity graph of the projective plane `PG(2, q)`.
#[derive(Debug, Clone)]
pub struct PolarityGraph {
    pub graph: Graph,
    pub q: u64,
    pub field: FieldSpec,
    /// Homogeneous coordinates with first nonzero coordinate 1.
    pub points: Vec<[FieldElement; 3]>,
    /// Self-orthogonal points, whose loops were removed.
    pub absolute_points: Vec<usize>,
}

impl LoopedConstruction for PolarityGraph {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn loops(&self) -> &[usize] {
        &self.absolute_points
    }

    fn provenance(&self) -> Provenance {
        Provenance {
            family: "polarity".into(),
            parameters: BTreeMap::from([("q".into(), self.q)]),
            loops_removed: self.absolute_points.clone(),
        }
    }
}

/// Points of `PG(2, q)`; `u ~ v` iff `u·v = 0`. Absolute points lose their loop.
pub fn polarity_graph(q: u64) -> Result<PolarityGraph, ConstructionError> {
    let field = FieldSpec::with_order(q)?;
    if q * q + q + 1 > MAX_POLARITY_POINTS {
        return Err(ConstructionError::TooLarge(format!("PG(2,{q}) exceeds {MAX_POLARITY_POINTS} points")));
    }
    let zero = field.zero();
    let one = field.one();
    let mut points: Vec<[FieldElement; 3]> = Vec::new();
    for y in field.elements() {
        for z in field.elements() {
            points.push([one.clone(), y.clone(), z]);
        }
    }
    for z in field.elements() {
        points.push([zero.clone(), one.clone(), z]);
    }
    points.push([zero.clone(), zero.clone(), one.clone()]);

    let dot = |u: &[FieldElement; 3], v: &[FieldElement; 3]| {
        let s = field.add(&field.mul(&u[0], &v[0]), &field.mul(&u[1], &v[1]));
        field.add(&s, &field.mul(&u[2], &v[2]))
    };
    let n = points.len();
    let mut graph = Graph::empty(n);
    let mut absolute_points = Vec::new();
    for i in 0..n {
        if dot(&points[i], &points[i]).is_zero() {
            absolute_points.push(i);
        }
        for j in (i + 1)..n {
            if dot(&points[i], &points[j]).is_zero() {
                graph.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    let labels = points.iter().map(|p| format!("({}:{}:{})", p[0], p[1], p[2])).collect();
    Ok(PolarityGraph { graph: graph.with_labels(labels), q, field, points, absolute_points })
}

/// Vertex sets of the `⌈n/t⌉` cliques in [`clique_union`]: consecutive blocks of
/// size `t`, the last one possibly smaller.
pub fn clique_union_parts(n: usize, t: usize) -> Vec<Vec<usize>> {
    assert!(t >= 1, "clique size must be at least 1");
    (0..n).collect::<Vec<_>>().chunks(t).map(<[usize]>::to_vec).collect()
}

/// Disjoint union of `⌈n/t⌉` cliques: `d − 1` of size `t` and one of size `n − (d−1)t`.
pub fn clique_union(n: usize, t: usize) -> Result<Graph, ConstructionError> {
    if n == 0 || t == 0 {
        return Err(ConstructionError::InvalidParameters(format!("clique union needs n, t >= 1 (got n={n}, t={t})")));
    }
    let mut g = Graph::empty(n);
    for part in clique_union_parts(n, t) {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                g.add_edge(u, v).expect("distinct in-range vertices");
            }
        }
    }
    Ok(g)
}

pub fn clique_union_provenance(n: usize, t: usize) -> Provenance {
    Provenance {
        family: "cliques".into(),
        parameters: BTreeMap::from([("n".into(), n as u64), ("t".into(), t as u64)]),
        loops_removed: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_SUBSET_CAP;

    #[test]
    fn furedi_5_2_basic_shape() {
        let fg = furedi_graph(5, 2).unwrap();
        assert_eq!(fg.graph.n(), 12);
        assert_eq!(fg.subgroup.len(), 2);
        assert!(!fg.graph.contains_complete_bipartite(2, 3, DEFAULT_SUBSET_CAP).unwrap());
        for v in 0..12 {
            let looped = fg.loops.contains(&v);
            assert_eq!(fg.graph.degree(v), if looped { 4 } else { 5 });
        }
        // canonical representative is the smallest member: (0,1) ~ (0,4)
        assert_eq!(fg.classes[0], (fg.field.element(0), fg.field.element(1)));
    }

    #[test]
    fn furedi_rejects_bad_t() {
        assert!(matches!(
            furedi_graph(5, 3),
            Err(ConstructionError::Field(FieldError::OrderUnavailable { q: 5, t: 3 }))
        ));
        assert!(matches!(furedi_graph(6, 1), Err(ConstructionError::Field(FieldError::NotPrimePower(6)))));
        assert!(furedi_graph(5, 0).is_err());
    }

    #[test]
    fn square_identity_small_cases() {
        for &(q, t, row) in &[(5u64, 2u64, 1i64), (7, 2, 2), (13, 4, 2), (4, 3, 0), (9, 4, 1)] {
            let rep = furedi_square_identity(&furedi_graph(q, t).unwrap());
            assert!(rep.holds, "q={q} t={t}");
            assert!(rep.regular);
            assert_eq!(rep.expected_q_row_sum, row);
            assert!(rep.row_sums_ok);
            assert!(rep.common_neighbour_counts.iter().all(|&c| c == 0 || c == t as i64));
        }
    }

    #[test]
    fn polarity_small_cases() {
        for q in [2u64, 3, 4] {
            let pg = polarity_graph(q).unwrap();
            let n = (q * q + q + 1) as usize;
            assert_eq!(pg.graph.n(), n);
            assert_eq!(pg.absolute_points.len(), (q + 1) as usize);
            for v in 0..n {
                let want = if pg.absolute_points.contains(&v) { q } else { q + 1 };
                assert_eq!(pg.graph.degree(v) as u64, want);
            }
            assert!(!pg.graph.contains_cycle(4), "q={q}");
        }
    }

    #[test]
    fn clique_union_examples() {
        let g = clique_union(10, 3).unwrap();
        let sizes: Vec<usize> = clique_union_parts(10, 3).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 3, 1]);
        assert_eq!(g.edge_count(), 9);
        assert!(!clique_union(9, 3).unwrap().contains_cycle(4));
        let m = clique_union(12, 2).unwrap();
        assert!(m.degrees().iter().all(|&d| d == 1));
        assert!(!m.contains_clique(3));
        assert!(clique_union(0, 2).is_err());
    }
}
