//! Dense symmetric linear algebra: eigendecomposition, trace powers, numeric
//! rank and projection onto the PSD cone.

pub(crate) mod dense;
mod eigen;
mod sym;

use thiserror::Error;

pub use eigen::{eigen_sym, eigenvalues_sym, Spectrum};
pub use sym::SymMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("eigenvalue iteration did not converge after {iterations} sweeps")]
    ConvergenceFailure { iterations: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is empty")]
    Empty,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric (|a_ij - a_ji| = {0})")]
    NotSymmetric(f64),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Largest exponent accepted by [`trace_power`].
pub const MAX_TRACE_POWER: u32 = 64;

/// `tr(M^k) = Σ λ_i^k`, evaluated on the spectrum.
pub fn trace_power(m: &SymMatrix, k: u32) -> Result<f64, LinalgError> {
    if k == 0 || k > MAX_TRACE_POWER {
        return Err(LinalgError::InvalidArgument(format!("trace power exponent {k} outside 1..=64")));
    }
    Ok(eigenvalues_sym(m)?.iter().map(|l| l.powi(k as i32)).sum())
}

/// Default rank tolerance `n · max|λ| · 2^-40`.
pub fn default_rank_tolerance(n: usize, eigenvalues: &[f64]) -> f64 {
    let max_abs = eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    n as f64 * max_abs * 2f64.powi(-40)
}

/// Number of eigenvalues with `|λ| > tol` (default tolerance when `None`).
pub fn numeric_rank(m: &SymMatrix, tol: Option<f64>) -> Result<usize, LinalgError> {
    let eig = eigenvalues_sym(m)?;
    let tol = tol.unwrap_or_else(|| default_rank_tolerance(m.n(), &eig));
    Ok(eig.iter().filter(|l| l.abs() > tol).count())
}

/// Frobenius-nearest PSD matrix: clamp negative eigenvalues to zero.
pub fn psd_project(m: &SymMatrix) -> Result<SymMatrix, LinalgError> {
    let spec = eigen_sym(m)?;
    let vecs = spec.eigenvectors.as_ref().expect("eigen_sym returns vectors");
    let n = m.n();
    let mut out = SymMatrix::zeros(n);
    for (k, &lambda) in spec.eigenvalues.iter().enumerate() {
        if lambda <= 0.0 {
            continue;
        }
        let v = &vecs[k];
        for i in 0..n {
            for j in i..n {
                out.add_to(i, j, lambda * v[i] * v[j]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_power_examples() {
        assert!((trace_power(&SymMatrix::identity(3), 5).unwrap() - 3.0).abs() < 1e-12);
        let c5 = SymMatrix::from_fn(5, |i, j| if (i + 5 - j) % 5 == 1 || (j + 5 - i) % 5 == 1 { 1.0 } else { 0.0 });
        assert!((trace_power(&c5, 2).unwrap() - 10.0).abs() < 1e-10);
        let k4 = SymMatrix::from_fn(4, |i, j| if i != j { 1.0 } else { 0.0 });
        // K4 cubed by hand: A^3 has diagonal 6 (two-step walks back through a triangle), trace 24.
        let dense = k4.to_dense();
        let mut a3_trace = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    a3_trace += dense[i * 4 + j] * dense[j * 4 + k] * dense[k * 4 + i];
                }
            }
        }
        assert_eq!(a3_trace, 24.0);
        assert!((trace_power(&k4, 3).unwrap() - 24.0).abs() < 1e-10);
        assert!(trace_power(&k4, 0).is_err());
        assert!(trace_power(&k4, 65).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(numeric_rank(&SymMatrix::ones(3), None).unwrap(), 1);
        assert_eq!(numeric_rank(&SymMatrix::identity(5), None).unwrap(), 5);
        assert_eq!(numeric_rank(&SymMatrix::zeros(3), None).unwrap(), 0);
        let blocks = SymMatrix::from_fn(4, |i, j| if i / 2 == j / 2 { 1.0 } else { 0.0 });
        assert_eq!(numeric_rank(&blocks, None).unwrap(), 2);
    }

    #[test]
    fn psd_project_examples() {
        let d = SymMatrix::diag(&[2.0, -1.0]);
        let p = psd_project(&d).unwrap();
        assert!((p.get(0, 0) - 2.0).abs() < 1e-12 && p.get(1, 1).abs() < 1e-12 && p.get(0, 1).abs() < 1e-12);

        let swap = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let p = psd_project(&swap).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((p.get(i, j) - 0.5).abs() < 1e-12);
            }
        }

        let psd = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!(psd_project(&psd).unwrap().sub(&psd).frobenius_norm() <= 1e-9);
    }
}
