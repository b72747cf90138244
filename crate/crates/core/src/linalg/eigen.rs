//! Householder tridiagonalisation followed by implicit-shift QL, after the
//! EISPACK `tred2`/`tql2` pair.

use super::{LinalgError, SymMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    /// `max_k ‖M v_k − λ_k v_k‖` (zero when no vectors were computed).
    pub residual: f64,
}

impl Spectrum {
    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn top_eigenvector(&self) -> Option<&[f64]> {
        self.eigenvectors.as_ref().map(|v| v[0].as_slice())
    }
}

/// Full eigendecomposition with eigenvectors and residual.
pub fn eigen_sym(m: &SymMatrix) -> Result<Spectrum, LinalgError> {
    let (values, vectors) = decompose(m, true)?;
    let vectors = vectors.expect("vectors requested");
    let residual = values
        .iter()
        .zip(&vectors)
        .map(|(&lambda, v)| {
            let mv = m.mul_vec(v);
            mv.iter().zip(v).map(|(a, b)| (a - lambda * b).powi(2)).sum::<f64>().sqrt()
        })
        .fold(0.0f64, f64::max);
    Ok(Spectrum { eigenvalues: values, eigenvectors: Some(vectors), residual })
}

/// Eigenvalues only, sorted descending.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Vec<f64>, LinalgError> {
    Ok(decompose(m, false)?.0)
}

type Decomposition = (Vec<f64>, Option<Vec<Vec<f64>>>);

fn decompose(m: &SymMatrix, want_vectors: bool) -> Result<Decomposition, LinalgError> {
    let n = m.n();
    if n == 0 {
        return Err(LinalgError::Empty);
    }
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let mut v = m.to_dense();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(n, &mut v, &mut d, &mut e);
    tql2(n, &mut v, &mut d, &mut e, want_vectors)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[b].total_cmp(&d[a]).then(a.cmp(&b)));
    let values: Vec<f64> = order.iter().map(|&k| d[k]).collect();
    let vectors = want_vectors.then(|| order.iter().map(|&k| (0..n).map(|i| v[i * n + k]).collect()).collect());
    Ok((values, vectors))
}

/// Reduces the row-major symmetric `v` to tridiagonal form; on exit `v` holds
/// the accumulated orthogonal transform, `d` the diagonal and `e` the
/// subdiagonal in `e[1..]`.
fn tred2(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..n.saturating_sub(1) {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(k, i + 1)] * v[at(k, j)];
                }
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL on the tridiagonal `(d, e)`; gives up after `30 n` sweeps in total.
fn tql2(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64], want_vectors: bool) -> Result<(), LinalgError> {
    let at = |i: usize, j: usize| i * n + j;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let max_sweeps = 30 * n;
    let mut sweeps = 0usize;
    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            loop {
                sweeps += 1;
                if sweeps > max_sweeps {
                    return Err(LinalgError::ConvergenceFailure { iterations: sweeps - 1 });
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if want_vectors {
                        for k in 0..n {
                            let h = v[at(k, i + 1)];
                            v[at(k, i + 1)] = s * v[at(k, i)] + c * h;
                            v[at(k, i)] = c * v[at(k, i)] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn two_by_two() {
        let m = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let s = eigen_sym(&m).unwrap();
        assert_close(&s.eigenvalues, &[3.0, 1.0], 1e-12);
        assert!(s.residual < 1e-12);
    }

    #[test]
    fn c5_matches_circulant_formula() {
        let c5 = SymMatrix::from_fn(5, |i, j| if (j - i) == 1 || (j - i) == 4 { 1.0 } else { 0.0 });
        let mut expected: Vec<f64> =
            (0..5).map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 5.0).cos()).collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        let s = eigen_sym(&c5).unwrap();
        assert_close(&s.eigenvalues, &expected, 1e-12);
        assert_close(&s.eigenvalues, &[2.0, 0.618034, 0.618034, -1.618034, -1.618034], 1e-6);
    }

    #[test]
    fn k4_spectrum() {
        let k4 = SymMatrix::from_fn(4, |i, j| if i != j { 1.0 } else { 0.0 });
        assert_close(&eigenvalues_sym(&k4).unwrap(), &[3.0, -1.0, -1.0, -1.0], 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(eigen_sym(&SymMatrix::zeros(0)), Err(LinalgError::Empty));
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, f64::NAN);
        assert_eq!(eigenvalues_sym(&m), Err(LinalgError::NonFinite));
        let one = SymMatrix::diag(&[-4.0]);
        let s = eigen_sym(&one).unwrap();
        assert_eq!(s.eigenvalues, vec![-4.0]);
        assert_eq!(s.eigenvectors.unwrap()[0].len(), 1);
        assert_eq!(eigenvalues_sym(&SymMatrix::zeros(3)).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn values_only_agree_with_full() {
        let m = SymMatrix::from_fn(7, |i, j| ((i * 7 + j * 3) % 11) as f64 - 5.0);
        let full = eigen_sym(&m).unwrap();
        assert_close(&eigenvalues_sym(&m).unwrap(), &full.eigenvalues, 1e-12);
    }
}
