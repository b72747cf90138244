//! Primal-dual interior-point iteration for
//!
//! ```text
//! max ⟨J, X⟩  s.t.  tr X = 1,  X_ij = 0 (ij ∈ E),  X ⪰ 0
//! min y_0     s.t.  Z = y_0 I + Σ_e y_e E_e − J ⪰ 0
//! ```
//!
//! with `E_e = e_i e_jᵀ + e_j e_iᵀ`, started from the strictly feasible pair
//! `X = I/n`, `y_0 = n + 1`. Search directions are HKM. Every iterate is turned
//! into a pair of exactly feasible certificates, so stopping early only costs
//! gap, never validity.

use serde::Serialize;

use super::ThetaError;
use crate::graph::Graph;
use crate::linalg::dense::{cholesky, cholesky_solve, lower_inverse, matmul, spd_inverse, transpose};
use crate::linalg::{eigenvalues_sym, SymMatrix};

/// Default solver cap on the vertex count; `LAB_MAX_N` overrides it.
pub const DEFAULT_MAX_N: usize = 200;
/// Cap on the number of edge constraints (the Schur complement is dense).
pub const MAX_EDGE_CONSTRAINTS: usize = 2500;
/// Smallest accepted gap tolerance.
pub const MIN_TOL: f64 = 1e-8;

const STEP_FRACTION: f64 = 0.95;
const CENTERING: f64 = 0.1;
const RECENTERING: f64 = 0.6;

/// Vertex cap in force, honouring `LAB_MAX_N`.
pub fn solver_cap() -> usize {
    std::env::var("LAB_MAX_N").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaOptions {
    /// Target for `upper − lower`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for ThetaOptions {
    fn default() -> Self {
        Self { tol: 1e-7, max_iter: 500 }
    }
}

/// Certified bracket `lower ≤ ϑ(G) ≤ upper`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaResult {
    pub lower: f64,
    pub upper: f64,
    pub gap: f64,
    /// PSD, trace one, zero on the edges; `lower = ⟨J, primal_x⟩`.
    pub primal_x: SymMatrix,
    /// Ones on the diagonal and non-edges; `upper = λ_max(dual_b)`.
    pub dual_b: SymMatrix,
    pub iterations: usize,
    pub gap_reached: bool,
}

impl ThetaResult {
    /// The bracket midpoint.
    pub fn value(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    /// Errors with `GapNotReached` when the target gap was missed.
    pub fn require_gap(&self, tol: f64) -> Result<&Self, ThetaError> {
        if self.gap <= tol {
            Ok(self)
        } else {
            Err(ThetaError::GapNotReached { gap: self.gap, tol })
        }
    }

    /// Re-checks both certificates against `g` and returns the worst primal
    /// feasibility residual.
    pub fn validate(&self, g: &Graph) -> Result<f64, ThetaError> {
        let n = g.n();
        if self.primal_x.n() != n || self.dual_b.n() != n {
            return Err(ThetaError::InvalidArgument("certificate size differs from graph".into()));
        }
        let x = &self.primal_x;
        let mut residual = (x.trace() - 1.0).abs();
        for (i, j) in g.edges() {
            residual = residual.max(x.get(i, j).abs());
        }
        let lambda_min = *eigenvalues_sym(x)?.last().expect("n >= 1");
        residual = residual.max((-lambda_min).max(0.0));
        for i in 0..n {
            for j in i..n {
                if (i == j || !g.is_adjacent(i, j)) && self.dual_b.get(i, j) != 1.0 {
                    return Err(ThetaError::CertificateInvalid(format!("dual entry ({i},{j}) is not 1")));
                }
            }
        }
        if residual > 1e-8 {
            return Err(ThetaError::CertificateInvalid(format!("primal residual {residual:e}")));
        }
        let lower = x.sum_entries();
        let upper = eigenvalues_sym(&self.dual_b)?[0];
        let scale = 1.0 + upper.abs();
        if (lower - self.lower).abs() > 1e-9 * scale || (upper - self.upper).abs() > 1e-9 * scale {
            return Err(ThetaError::CertificateInvalid("reported bounds do not match certificates".into()));
        }
        Ok(residual)
    }
}

pub fn theta_sdp(g: &Graph, tol: f64) -> Result<ThetaResult, ThetaError> {
    theta_sdp_with(g, &ThetaOptions { tol, ..ThetaOptions::default() })
}

pub fn theta_sdp_with(g: &Graph, opts: &ThetaOptions) -> Result<ThetaResult, ThetaError> {
    let n = g.n();
    if n == 0 {
        return Err(ThetaError::InvalidArgument("graph has no vertices".into()));
    }
    let cap = solver_cap();
    if n > cap {
        return Err(ThetaError::TooLarge { n, cap });
    }
    if !(opts.tol >= MIN_TOL) {
        return Err(ThetaError::InvalidArgument(format!("tolerance {} below {MIN_TOL:e}", opts.tol)));
    }
    let edges = g.edges();
    if edges.len() > MAX_EDGE_CONSTRAINTS {
        return Err(ThetaError::TooManyConstraints { edges: edges.len(), cap: MAX_EDGE_CONSTRAINTS });
    }

    let mut x = vec![0.0; n * n];
    for i in 0..n {
        x[i * n + i] = 1.0 / n as f64;
    }
    let mut y0 = n as f64 + 1.0;
    let mut ye = vec![0.0; edges.len()];

    let (lower, primal_x) = primal_certificate(n, &edges, &x)?;
    let (upper, dual_b) = dual_certificate(n, &edges, &ye)?;
    let mut best = Best { lower, primal_x, upper, dual_b };
    let mut iterations = 0;

    while best.upper - best.lower > opts.tol && iterations < opts.max_iter {
        // a failed or stalled step is retried once with stronger centering
        let step = newton_step(n, &edges, &x, y0, &ye, CENTERING)
            .filter(|s| s.2.min(s.3) > 0.1)
            .or_else(|| newton_step(n, &edges, &x, y0, &ye, RECENTERING));
        let Some((dx, dy, ap, ad)) = step else {
            break;
        };
        iterations += 1;
        for (xi, d) in x.iter_mut().zip(&dx) {
            *xi += ap * d;
        }
        y0 += ad * dy[0];
        for (y, d) in ye.iter_mut().zip(&dy[1..]) {
            *y += ad * d;
        }
        if let Ok((lower, cert)) = primal_certificate(n, &edges, &x) {
            if lower > best.lower {
                best.lower = lower;
                best.primal_x = cert;
            }
        }
        let (upper, cert) = dual_certificate(n, &edges, &ye)?;
        if upper < best.upper {
            best.upper = upper;
            best.dual_b = cert;
        }
        if ap == 0.0 && ad == 0.0 {
            break;
        }
    }

    let gap = best.upper - best.lower;
    Ok(ThetaResult {
        lower: best.lower,
        upper: best.upper,
        gap,
        primal_x: best.primal_x,
        dual_b: best.dual_b,
        iterations,
        gap_reached: gap <= opts.tol,
    })
}

struct Best {
    lower: f64,
    primal_x: SymMatrix,
    upper: f64,
    dual_b: SymMatrix,
}

/// One HKM step; `None` once the iterates are too ill-conditioned to continue.
fn newton_step(
    n: usize,
    edges: &[(usize, usize)],
    x: &[f64],
    y0: f64,
    ye: &[f64],
    sigma: f64,
) -> Option<(Vec<f64>, Vec<f64>, f64, f64)> {
    let z = dual_slack(n, edges, y0, ye);
    let w = spd_inverse(n, &z).ok()?;
    let mu = sigma * x.iter().zip(&z).map(|(a, b)| a * b).sum::<f64>() / n as f64;
    let xw = matmul(n, x, &w);

    let m = edges.len() + 1;
    let mut schur = vec![0.0; m * m];
    let mut rhs = vec![0.0; m];
    schur[0] = (0..n).map(|i| xw[i * n + i]).sum();
    rhs[0] = mu * (0..n).map(|i| w[i * n + i]).sum::<f64>() - 1.0;
    for (a, &(i, j)) in edges.iter().enumerate() {
        let v = xw[i * n + j] + xw[j * n + i];
        schur[a + 1] = v;
        schur[(a + 1) * m] = v;
        rhs[a + 1] = 2.0 * mu * w[i * n + j];
        for (b, &(k, l)) in edges.iter().enumerate().skip(a) {
            let v = x[j * n + k] * w[l * n + i]
                + x[j * n + l] * w[k * n + i]
                + x[i * n + k] * w[l * n + j]
                + x[i * n + l] * w[k * n + j];
            schur[(a + 1) * m + b + 1] = v;
            schur[(b + 1) * m + a + 1] = v;
        }
    }
    let l = regularized_cholesky(m, &mut schur)?;
    let mut dy = rhs;
    cholesky_solve(m, &l, &mut dy);
    if dy.iter().any(|v| !v.is_finite()) {
        return None;
    }

    let mut dz = vec![0.0; n * n];
    for i in 0..n {
        dz[i * n + i] = dy[0];
    }
    for (a, &(i, j)) in edges.iter().enumerate() {
        dz[i * n + j] = dy[a + 1];
        dz[j * n + i] = dy[a + 1];
    }
    let x_dz_w = matmul(n, &matmul(n, x, &dz), &w);
    let mut dx = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let sym = 0.5 * (x_dz_w[i * n + j] + x_dz_w[j * n + i]);
            dx[i * n + j] = mu * w[i * n + j] - x[i * n + j] - sym;
        }
    }
    let ap = step_length(n, x, &dx)?;
    let ad = step_length(n, &z, &dz)?;
    Some((dx, dy, ap, ad))
}

/// Near the optimum the Schur matrix can lose definiteness to rounding; the
/// diagonal shift only perturbs the search direction.
fn regularized_cholesky(m: usize, a: &mut [f64]) -> Option<Vec<f64>> {
    let scale = (0..m).map(|i| a[i * m + i]).fold(0.0f64, f64::max);
    let mut shift = 0.0;
    for exp in [-14, -12, -10, -8] {
        if let Ok(l) = cholesky(m, a) {
            return Some(l);
        }
        let next = scale * 10f64.powi(exp);
        for i in 0..m {
            a[i * m + i] += next - shift;
        }
        shift = next;
    }
    cholesky(m, a).ok()
}

/// `min(1, 0.95 · sup{α : S + α dS ⪰ 0})`.
fn step_length(n: usize, s: &[f64], ds: &[f64]) -> Option<f64> {
    let l = cholesky(n, s).ok()?;
    let li = lower_inverse(n, &l);
    let t = matmul(n, &matmul(n, &li, ds), &transpose(n, &li));
    let lambda_min = *eigenvalues_sym(&SymMatrix::from_dense_symmetrized(n, &t)).ok()?.last()?;
    Some(if lambda_min >= 0.0 { 1.0 } else { (STEP_FRACTION / -lambda_min).min(1.0) })
}

fn dual_slack(n: usize, edges: &[(usize, usize)], y0: f64, ye: &[f64]) -> Vec<f64> {
    let mut z = vec![-1.0; n * n];
    for i in 0..n {
        z[i * n + i] = y0 - 1.0;
    }
    for (&(i, j), &y) in edges.iter().zip(ye) {
        z[i * n + j] = y - 1.0;
        z[j * n + i] = y - 1.0;
    }
    z
}

/// Zeroes the edge entries, shifts into the PSD cone and rescales to trace 1.
fn primal_certificate(n: usize, edges: &[(usize, usize)], x: &[f64]) -> Result<(f64, SymMatrix), ThetaError> {
    let mut cert = SymMatrix::from_dense_symmetrized(n, x);
    for &(i, j) in edges {
        cert.set(i, j, 0.0);
    }
    let lambda_min = *eigenvalues_sym(&cert)?.last().expect("n >= 1");
    if lambda_min < 0.0 {
        for i in 0..n {
            cert.set(i, i, cert.get(i, i) - lambda_min);
        }
    }
    let trace = cert.trace();
    if !(trace > 0.0) {
        return Err(ThetaError::CertificateInvalid("primal iterate has no positive trace".into()));
    }
    let cert = cert.scale(1.0 / trace);
    Ok((cert.sum_entries(), cert))
}

/// `B = J − Σ y_e E_e` and its top eigenvalue.
fn dual_certificate(n: usize, edges: &[(usize, usize)], ye: &[f64]) -> Result<(f64, SymMatrix), ThetaError> {
    let mut b = SymMatrix::ones(n);
    for (&(i, j), &y) in edges.iter().zip(ye) {
        b.set(i, j, 1.0 - y);
    }
    let upper = eigenvalues_sym(&b)?[0];
    Ok((upper, b))
}
