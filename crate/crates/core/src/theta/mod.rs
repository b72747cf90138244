//! The Lovász ϑ-function: a certified SDP bracket, the bounds coming from
//! each of its equivalent definitions, and the `L(G)` sandwich.

mod sdp;

use serde::Serialize;
use thiserror::Error;

pub use sdp::{
    solver_cap, theta_sdp, theta_sdp_with, ThetaOptions, ThetaResult, DEFAULT_MAX_N, MAX_EDGE_CONSTRAINTS, MIN_TOL,
};

use crate::graph::{Graph, GraphError};
use crate::linalg::{eigenvalues_sym, LinalgError, SymMatrix};
use crate::ortho::{dot, validate_rep, OrthoRep, Parity};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThetaError {
    #[error("graph on {n} vertices exceeds the solver cap {cap} (set LAB_MAX_N to raise it)")]
    TooLarge { n: usize, cap: usize },
    #[error("{edges} edge constraints exceed the solver cap {cap}")]
    TooManyConstraints { edges: usize, cap: usize },
    #[error("gap {gap:e} did not reach tolerance {tol:e}")]
    GapNotReached { gap: f64, tol: f64 },
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("handle is orthogonal to the vector of vertex {vertex}")]
    HandleOrthogonalToVector { vertex: usize },
    #[error("representation invalid (worst residual {residual:e})")]
    RepInvalid { residual: f64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `1 − λ_1(A)/λ_n(A)` for a symmetric `A` with zero pattern on the non-edges
/// of some graph `H`: a lower bound on `ϑ(H̄)`. Requires `λ_n < 0`.
pub fn spectral_lower_bound(a: &SymMatrix) -> Result<f64, ThetaError> {
    let eig = eigenvalues_sym(a)?;
    let (first, last) = (eig[0], *eig.last().expect("non-empty"));
    if !(last < 0.0) {
        return Err(ThetaError::NoEdges);
    }
    Ok(1.0 - first / last)
}

/// Lower bound on `ϑ(Ḡ)` from the adjacency matrix of `g`.
pub fn theta_spectral_lower_of_complement(g: &Graph) -> Result<f64, ThetaError> {
    if g.edge_count() == 0 {
        return Err(ThetaError::NoEdges);
    }
    spectral_lower_bound(&SymMatrix::adjacency(g))
}

fn check_handle(rep: &OrthoRep, x: &[f64]) -> Result<(), ThetaError> {
    if x.len() != rep.d() {
        return Err(ThetaError::InvalidArgument(format!("handle length {} in dimension {}", x.len(), rep.d())));
    }
    let len = dot(x, x).sqrt();
    if (len - 1.0).abs() > 1e-8 {
        return Err(ThetaError::InvalidArgument(format!("handle has norm {len}")));
    }
    Ok(())
}

fn require_valid(rep: &OrthoRep, g: &Graph) -> Result<(), ThetaError> {
    let check = validate_rep(rep, g, crate::ortho::REP_TOL).map_err(|e| ThetaError::InvalidArgument(e.to_string()))?;
    if check.valid {
        Ok(())
    } else {
        Err(ThetaError::RepInvalid { residual: check.max_residual })
    }
}

/// `max_v ⟨x, f(v)⟩⁻²` for a representation of `rep.graph()`: an upper bound on its ϑ.
pub fn theta_upper_from_rep(rep: &OrthoRep, x: &[f64]) -> Result<f64, ThetaError> {
    require_valid(rep, rep.graph())?;
    check_handle(rep, x)?;
    let mut worst = 0.0f64;
    for (vertex, v) in rep.vectors().iter().enumerate() {
        let c = dot(v, x);
        if c.abs() <= 1e-12 {
            return Err(ThetaError::HandleOrthogonalToVector { vertex });
        }
        worst = worst.max(c.powi(-2));
    }
    Ok(worst)
}

/// `Σ_v ⟨x, f(v)⟩²` for a representation of `Ḡ`: a lower bound on `ϑ(G)`.
pub fn theta_lower_from_rep(g: &Graph, rep: &OrthoRep, x: &[f64]) -> Result<f64, ThetaError> {
    require_valid(rep, &g.complement())?;
    check_handle(rep, x)?;
    Ok(rep.vectors().iter().map(|v| dot(v, x).powi(2)).sum())
}

/// `(n/√ϑ(G), √(n·ϑ(Ḡ)))`, the bracket on `L(G)` for vertex-transitive `G`
/// (the upper end holds for every `G`).
pub fn sum_length_bounds(n: usize, theta_g: f64, theta_gbar: f64) -> Result<(f64, f64), ThetaError> {
    if !(theta_g >= 1.0 && theta_gbar >= 1.0) {
        return Err(ThetaError::InvalidArgument("ϑ values must be at least 1".into()));
    }
    let n = n as f64;
    Ok((n / theta_g.sqrt(), (n * theta_gbar).sqrt()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransitiveReport {
    pub theta_g: f64,
    pub theta_complement: f64,
    pub product: f64,
    /// Interval containing `ϑ(G)ϑ(Ḡ)` implied by the two brackets.
    pub product_lower: f64,
    pub product_upper: f64,
    pub n: usize,
    pub pass: bool,
}

/// `|ϑ(G)ϑ(Ḡ) − n| ≤ tol·n`, for a graph the caller knows to be vertex-transitive.
pub fn transitive_identity_check(g: &Graph, tol: f64) -> Result<TransitiveReport, ThetaError> {
    let opts = ThetaOptions { tol: (tol * 0.1).max(MIN_TOL), ..ThetaOptions::default() };
    let a = theta_sdp_with(g, &opts)?;
    let b = theta_sdp_with(&g.complement(), &opts)?;
    let n = g.n();
    let product = a.value() * b.value();
    Ok(TransitiveReport {
        theta_g: a.value(),
        theta_complement: b.value(),
        product,
        product_lower: a.lower * b.lower,
        product_upper: a.upper * b.upper,
        n,
        pass: (product - n as f64).abs() <= tol * n as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleFamily {
    pub parity: Parity,
    pub t: usize,
}

impl CycleFamily {
    pub fn odd(t: usize) -> Self {
        Self { parity: Parity::Odd, t }
    }

    pub fn even(t: usize) -> Self {
        Self { parity: Parity::Even, t }
    }

    pub fn forbidden_cycle(&self) -> usize {
        self.parity.cycle_length(self.t)
    }

    /// `((6t)^{2t} n)^{1/(2t+1)}` for odd, `12 t n^{1/(2t)}` for even.
    pub fn formula(&self, n: usize) -> f64 {
        let t = self.t as f64;
        let n = n as f64;
        match self.parity {
            Parity::Odd => ((6.0 * t).powf(2.0 * t) * n).powf(1.0 / (2.0 * t + 1.0)),
            Parity::Even => 12.0 * t * n.powf(1.0 / (2.0 * t)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundFormulaReport {
    pub family: CycleFamily,
    pub n: usize,
    /// ϑ(Ḡ) upper bracket from the solver, or the spectral lower bound when
    /// the graph is beyond the solver cap.
    pub theta_complement: f64,
    /// `"sdp"` or `"spectral"`.
    pub source: String,
    pub formula: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Compares ϑ(Ḡ) for a `C_k`-free `g` with the explicit bound for its family.
pub fn bound_formula_check(g: &Graph, family: CycleFamily) -> Result<BoundFormulaReport, ThetaError> {
    let k = family.forbidden_cycle();
    if family.t == 0 || k < 3 {
        return Err(ThetaError::InvalidArgument(format!("t = {} gives no cycle", family.t)));
    }
    if g.contains_cycle(k) {
        return Err(ThetaError::PreconditionViolated(format!("graph contains C{k}")));
    }
    let complement = g.complement();
    let (theta_complement, source) = if g.n() <= solver_cap() && complement.edge_count() <= MAX_EDGE_CONSTRAINTS {
        (theta_sdp(&complement, ThetaOptions::default().tol)?.upper, "sdp")
    } else {
        (theta_spectral_lower_of_complement(g)?, "spectral")
    };
    let formula = family.formula(g.n());
    Ok(BoundFormulaReport {
        family,
        n: g.n(),
        theta_complement,
        source: source.into(),
        formula,
        margin: formula - theta_complement,
        pass: theta_complement <= formula,
    })
}
