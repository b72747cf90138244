//! Orthonormal representations `f: V(G) → R^d`: unit vectors with
//! `⟨f(u), f(v)⟩ = 0` whenever `u ≠ v` are non-adjacent.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{clique_union, clique_union_parts, ConstructionError};
use crate::graph::{Graph, GraphError, GraphJson, Pattern};
use crate::linalg::{eigenvalues_sym, numeric_rank, LinalgError, SymMatrix};

/// Default absolute tolerance for unit-scale residuals.
pub const REP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrthoError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("representation invalid (worst residual {residual:e})")]
    RepInvalid { residual: f64 },
    #[error("not a clique cover: {0}")]
    NotACliqueCover(String),
    #[error("unsupported pattern {0}")]
    UnsupportedPattern(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("malformed representation: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthoRep {
    d: usize,
    vectors: Vec<Vec<f64>>,
    graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthoRepJson {
    pub d: usize,
    pub vectors: Vec<Vec<f64>>,
    pub graph: GraphJson,
}

impl OrthoRep {
    /// Checks shapes only; see [`OrthoRep::validate`] for the constraints.
    pub fn new(d: usize, vectors: Vec<Vec<f64>>, graph: Graph) -> Result<Self, OrthoError> {
        if vectors.len() != graph.n() {
            return Err(OrthoError::DimensionMismatch(format!("{} vectors for {} vertices", vectors.len(), graph.n())));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(OrthoError::DimensionMismatch(format!("vector of length {} in dimension {d}", v.len())));
        }
        Ok(Self { d, vectors, graph })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn validate(&self, tol: f64) -> RepValidation {
        validate_against(&self.vectors, &self.graph, tol)
    }

    pub fn to_json_model(&self) -> OrthoRepJson {
        OrthoRepJson { d: self.d, vectors: self.vectors.clone(), graph: self.graph.to_json_model() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_model()).expect("representation serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, OrthoError> {
        let model: OrthoRepJson = serde_json::from_str(text).map_err(|e| OrthoError::Parse(e.to_string()))?;
        let graph = model.graph.into_graph()?;
        Self::new(model.d, model.vectors, graph)
    }

    /// Flips each `f(v)` so that `⟨x, f(v)⟩ ≥ 0`; still a valid representation.
    pub fn sign_aligned(&self, x: &[f64]) -> OrthoRep {
        let vectors = self
            .vectors
            .iter()
            .map(|v| if dot(v, x) < 0.0 { v.iter().map(|c| -c).collect() } else { v.clone() })
            .collect();
        OrthoRep { d: self.d, vectors, graph: self.graph.clone() }
    }

    fn require_valid(&self) -> Result<(), OrthoError> {
        let check = self.validate(REP_TOL);
        if check.valid {
            Ok(())
        } else {
            Err(OrthoError::RepInvalid { residual: check.max_residual })
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepValidation {
    pub valid: bool,
    /// Worst `|‖f(v)‖ − 1|`.
    pub norm_residual: f64,
    /// Worst `|⟨f(u), f(v)⟩|` over non-adjacent pairs.
    pub orthogonality_residual: f64,
    pub max_residual: f64,
}

fn validate_against(vectors: &[Vec<f64>], g: &Graph, tol: f64) -> RepValidation {
    let norm_residual = vectors.iter().map(|v| (norm(v) - 1.0).abs()).fold(0.0, f64::max);
    let orthogonality_residual =
        g.non_edges().iter().map(|&(u, v)| dot(&vectors[u], &vectors[v]).abs()).fold(0.0, f64::max);
    let max_residual = norm_residual.max(orthogonality_residual);
    RepValidation { valid: max_residual <= tol, norm_residual, orthogonality_residual, max_residual }
}

/// Validates `rep`'s vectors as a representation of `g`.
pub fn validate_rep(rep: &OrthoRep, g: &Graph, tol: f64) -> Result<RepValidation, OrthoError> {
    if rep.n() != g.n() {
        return Err(OrthoError::DimensionMismatch(format!("{} vectors for {} vertices", rep.n(), g.n())));
    }
    Ok(validate_against(&rep.vectors, g, tol))
}

/// `M_ij = ⟨f(i), f(j)⟩`.
pub fn gram(rep: &OrthoRep) -> SymMatrix {
    SymMatrix::from_fn(rep.n(), |i, j| dot(&rep.vectors[i], &rep.vectors[j]))
}

/// Standard basis vector `e_i` for every vertex of the `i`-th part.
pub fn basis_rep_from_clique_cover(g: &Graph, cover: &[Vec<usize>]) -> Result<OrthoRep, OrthoError> {
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, part) in cover.iter().enumerate() {
        if !g.is_clique(part) {
            return Err(OrthoError::NotACliqueCover(format!("part {i} is not a clique")));
        }
        for &v in part {
            if v >= g.n() || part_of[v] != usize::MAX {
                return Err(OrthoError::NotACliqueCover(format!("vertex {v} out of range or covered twice")));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(OrthoError::NotACliqueCover(format!("vertex {v} uncovered")));
    }
    let d = cover.len();
    let vectors = part_of
        .iter()
        .map(|&p| {
            let mut e = vec![0.0; d];
            e[p] = 1.0;
            e
        })
        .collect();
    OrthoRep::new(d, vectors, g.clone())
}

/// Greedy clique cover in a seeded vertex order.
fn greedy_clique_cover(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut cover = Vec::new();
    for &v in &order {
        if used[v] {
            continue;
        }
        let mut clique = vec![v];
        used[v] = true;
        for &u in &order {
            if !used[u] && clique.iter().all(|&w| g.is_adjacent(u, w)) {
                clique.push(u);
                used[u] = true;
            }
        }
        cover.push(clique);
    }
    cover
}

/// Random orthonormal basis of `R^d` (Gram-Schmidt on Gaussian vectors).
fn random_orthonormal_basis(d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
    while basis.len() < d {
        let mut v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&v, b);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let len = norm(&v);
        if len > 1e-6 {
            basis.push(v.into_iter().map(|x| x / len).collect());
        }
    }
    basis
}

/// Clique cover, one orthogonal subspace per clique, independent random unit
/// vectors inside each subspace. Ambient dimension is `n`.
pub fn random_rep(g: &Graph, seed: u64) -> OrthoRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let cover = greedy_clique_cover(g, &mut rng);
    let basis = random_orthonormal_basis(n, &mut rng);
    let mut vectors = vec![Vec::new(); n];
    let mut offset = 0;
    for clique in &cover {
        let span = &basis[offset..offset + clique.len()];
        offset += clique.len();
        for &v in clique {
            let mut w = vec![0.0; n];
            loop {
                w.iter_mut().for_each(|x| *x = 0.0);
                for b in span {
                    let c: f64 = StandardNormal.sample(&mut rng);
                    w.iter_mut().zip(b).for_each(|(x, y)| *x += c * y);
                }
                if norm(&w) > 1e-6 {
                    break;
                }
            }
            let len = norm(&w);
            vectors[v] = w.into_iter().map(|x| x / len).collect();
        }
    }
    OrthoRep::new(n, vectors, g.clone()).expect("shapes agree by construction")
}

/// Lovász umbrella in `R^3`: `f(k) = (sin φ cos ψ_k, sin φ sin ψ_k, cos φ)`
/// with `cos² φ = 5^{-1/2}` and `ψ_k = 2πk·s/5`. Vectors two steps apart
/// (`s = 1`) or one step apart (`s = 2`) are orthogonal.
fn umbrella(step: usize) -> Vec<Vec<f64>> {
    let cos_phi = 5f64.powf(-0.25);
    let sin_phi = (1.0 - cos_phi * cos_phi).sqrt();
    (0..5)
        .map(|k| {
            let psi = 2.0 * std::f64::consts::PI * ((k * step) % 5) as f64 / 5.0;
            vec![sin_phi * psi.cos(), sin_phi * psi.sin(), cos_phi]
        })
        .collect()
}

/// Umbrella representation of the 5-cycle `0-1-2-3-4-0`.
pub fn umbrella_c5() -> OrthoRep {
    OrthoRep::new(3, umbrella(1), crate::graph::families::cycle(5)).expect("five vectors in R^3")
}

/// Umbrella representation of the complement of the 5-cycle.
pub fn umbrella_c5_complement() -> OrthoRep {
    OrthoRep::new(3, umbrella(2), crate::graph::families::cycle(5).complement()).expect("five vectors in R^3")
}

/// The umbrella axis `(0, 0, 1)`.
pub fn umbrella_handle() -> Vec<f64> {
    vec![0.0, 0.0, 1.0]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchnirelmannReport {
    pub trace: f64,
    pub trace_of_square: f64,
    pub rank: usize,
    /// `tr(M)²`
    pub lhs: f64,
    /// `rank · tr(M²)`
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
}

/// `tr(M)² ≤ rk(M) · tr(M²)`, with absolute slack `10⁻⁶ · max(1, rhs)`.
pub fn schnirelmann_check(m: &SymMatrix) -> Result<SchnirelmannReport, OrthoError> {
    let trace = m.trace();
    let trace_of_square = m.frobenius_inner(m);
    let rank = numeric_rank(m, None)?;
    let lhs = trace * trace;
    let rhs = rank as f64 * trace_of_square;
    let slack = rhs - lhs;
    Ok(SchnirelmannReport { trace, trace_of_square, rank, lhs, rhs, slack, pass: slack >= -1e-6 * rhs.max(1.0) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MsrCertificate {
    pub pattern: String,
    pub n: usize,
    /// Size of each clique in the union.
    pub clique_size: usize,
    /// `⌈n / clique_size⌉`.
    pub d: usize,
    pub pattern_free: bool,
    pub rep_valid: bool,
    #[serde(skip)]
    pub graph: Graph,
    #[serde(skip)]
    pub rep: OrthoRep,
}

/// Largest clique size whose disjoint union still avoids `pattern`.
pub fn msr_clique_size(pattern: Pattern) -> Result<usize, OrthoError> {
    match pattern {
        Pattern::Cycle(k) if k >= 3 => Ok(k - 1),
        Pattern::Clique(k) if k >= 2 => Ok(k - 1),
        Pattern::CompleteBipartite(2, s) | Pattern::CompleteBipartite(s, 2) if s >= 1 => Ok(s + 1),
        other => Err(OrthoError::UnsupportedPattern(other.to_string())),
    }
}

/// `clique_union(n, t)` with its basis representation in `⌈n/t⌉` dimensions,
/// where `t` is the clique size that keeps the union `pattern`-free.
pub fn msr_upper_certificate(n: usize, pattern: Pattern) -> Result<MsrCertificate, OrthoError> {
    let t = msr_clique_size(pattern)?;
    let graph = clique_union(n, t)?;
    let rep = basis_rep_from_clique_cover(&graph, &clique_union_parts(n, t))?;
    let pattern_free = !graph.contains(pattern)?;
    let rep_valid = rep.validate(0.0).valid;
    Ok(MsrCertificate {
        pattern: pattern.to_string(),
        n,
        clique_size: t,
        d: rep.d(),
        pattern_free,
        rep_valid,
        graph,
        rep,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MsrChainReport {
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub rank: usize,
    pub trace: f64,
    pub trace_of_square: f64,
    /// Largest row sum of `M ∘ M`, i.e. `max_u Σ_w ⟨f(u), f(w)⟩²`; at most `t`.
    pub max_row_square_sum: f64,
    pub row_bound_ok: bool,
    /// `tr(M²) ≤ n t`
    pub trace_bound_ok: bool,
    /// `tr(M)² ≤ rk(M) tr(M²)`
    pub schnirelmann_ok: bool,
    /// `rk(M) ≤ d`
    pub rank_ok: bool,
    /// `n² ≤ d · tr(M²)`
    pub chain_ok: bool,
    pub pass: bool,
}

/// Links of `n² = tr(M)² ≤ rk(M) tr(M²) ≤ d · n t` for the Gram of `rep`.
pub fn msr_lower_chain_check(rep: &OrthoRep, t: usize, tol: f64) -> Result<MsrChainReport, OrthoError> {
    rep.require_valid()?;
    let m = gram(rep);
    let n = rep.n();
    let schn = schnirelmann_check(&m)?;
    let max_row_square_sum = (0..n).map(|u| (0..n).map(|w| m.get(u, w).powi(2)).sum::<f64>()).fold(0.0, f64::max);
    let nt = (n * t) as f64;
    let row_bound_ok = max_row_square_sum <= t as f64 + tol;
    let trace_bound_ok = schn.trace_of_square <= nt + tol * nt.max(1.0);
    let rank_ok = schn.rank <= rep.d();
    let n2 = (n * n) as f64;
    let chain_ok = n2 <= rep.d() as f64 * schn.trace_of_square * (1.0 + tol);
    Ok(MsrChainReport {
        n,
        d: rep.d(),
        t,
        rank: schn.rank,
        trace: schn.trace,
        trace_of_square: schn.trace_of_square,
        max_row_square_sum,
        row_bound_ok,
        trace_bound_ok,
        schnirelmann_ok: schn.pass,
        rank_ok,
        chain_ok,
        pass: row_bound_ok && trace_bound_ok && schn.pass && rank_ok && chain_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `G` is `C_{2t+1}`-free; exponent `2t+1`, bound `(6t)^{2t} n`.
    Odd,
    /// `G` is `C_{2t}`-free; exponent `2t`, bound `(12t)^{2t} n`.
    Even,
}

impl Parity {
    pub fn cycle_length(self, t: usize) -> usize {
        match self {
            Parity::Odd => 2 * t + 1,
            Parity::Even => 2 * t,
        }
    }

    /// Exponent `k` and bound `B` in `tr(M^k) ≤ B`.
    pub fn trace_bound(self, t: usize, n: usize) -> (u32, f64) {
        let tf = t as f64;
        match self {
            Parity::Odd => ((2 * t + 1) as u32, (6.0 * tf).powi(2 * t as i32) * n as f64),
            Parity::Even => ((2 * t) as u32, (12.0 * tf).powi(2 * t as i32) * n as f64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TracePowerReport {
    pub parity: Parity,
    pub t: usize,
    pub exponent: u32,
    pub trace: f64,
    pub bound: f64,
    pub trace_ok: bool,
    pub lambda_max: f64,
    /// `bound^{1/exponent}`
    pub lambda_bound: f64,
    pub lambda_ok: bool,
    pub pass: bool,
}

/// `tr(M^k) ≤ B` for the Gram `M` of a representation of a `C_k`-free graph
/// (`k = 2t+1` or `2t`), and the consequence `λ_1(M) ≤ B^{1/k}`.
pub fn trace_power_certificate(rep: &OrthoRep, t: usize, parity: Parity) -> Result<TracePowerReport, OrthoError> {
    if t == 0 || (parity == Parity::Even && t < 2) {
        return Err(OrthoError::PreconditionViolated(format!("t = {t} is out of range")));
    }
    let k = parity.cycle_length(t);
    if rep.graph().contains_cycle(k) {
        return Err(OrthoError::PreconditionViolated(format!("graph contains C{k}")));
    }
    rep.require_valid()?;
    let (exponent, bound) = parity.trace_bound(t, rep.n());
    let eig = eigenvalues_sym(&gram(rep))?;
    let trace: f64 = eig.iter().map(|l| l.powi(exponent as i32)).sum();
    let lambda_max = eig[0];
    let lambda_bound = bound.powf(1.0 / exponent as f64);
    let trace_ok = trace <= bound * (1.0 + 1e-12);
    let lambda_ok = lambda_max <= lambda_bound * (1.0 + 1e-12);
    Ok(TracePowerReport {
        parity,
        t,
        exponent,
        trace,
        bound,
        trace_ok,
        lambda_max,
        lambda_bound,
        lambda_ok,
        pass: trace_ok && lambda_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumLength {
    /// `‖Σ_v f(v)‖`
    pub raw: f64,
    /// `√(1ᵀ M 1)`
    pub via_gram: f64,
    /// Length after flipping each `f(v)` towards the handle, if one was given.
    pub aligned: Option<f64>,
}

pub fn rep_sum_length(rep: &OrthoRep, handle: Option<&[f64]>) -> Result<SumLength, OrthoError> {
    let length = |r: &OrthoRep| {
        let mut sum = vec![0.0; r.d()];
        for v in r.vectors() {
            sum.iter_mut().zip(v).for_each(|(s, x)| *s += x);
        }
        norm(&sum)
    };
    let raw = length(rep);
    let via_gram = gram(rep).sum_entries().max(0.0).sqrt();
    let aligned = match handle {
        Some(x) if x.len() != rep.d() => {
            return Err(OrthoError::DimensionMismatch(format!("handle of length {} in dimension {}", x.len(), rep.d())))
        }
        Some(x) => Some(length(&rep.sign_aligned(x))),
        None => None,
    };
    Ok(SumLength { raw, via_gram, aligned })
}
