use serde::{Deserialize, Serialize};

use super::LinalgError;
use crate::graph::Graph;

/// Real symmetric matrix stored as its packed upper triangle (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
    /// Every entry is an integer held exactly in an f64.
    exact: bool,
}

fn is_exact_int(x: f64) -> bool {
    x.fract() == 0.0 && x.abs() <= 9_007_199_254_740_992.0
}

impl SymMatrix {
    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        // rows 0..i hold n, n-1, ..., n-i+1 entries
        i * self.n - i * (i.saturating_sub(1)) / 2 - i + j
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * (n + 1) / 2], exact: true }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// All-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| 1.0)
    }

    pub fn diag(values: &[f64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                data.push(f(i, j));
            }
        }
        let exact = data.iter().all(|&x| is_exact_int(x));
        Self { n, data, exact }
    }

    /// Builds from full rows; rejects non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LinalgError::DimensionMismatch("rows must form a square matrix".into()));
        }
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((rows[i][j] - rows[j][i]).abs());
            }
        }
        if worst > 0.0 {
            return Err(LinalgError::NotSymmetric(worst));
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    /// Builds from a row-major dense buffer, averaging the two triangles.
    pub fn from_dense_symmetrized(n: usize, a: &[f64]) -> Self {
        assert_eq!(a.len(), n * n);
        Self::from_fn(n, |i, j| 0.5 * (a[i * n + j] + a[j * n + i]))
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self::from_fn(g.n(), |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let k = self.idx(i, j);
        self.data[k] = value;
        self.exact = self.exact && is_exact_int(value);
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, value: f64) {
        let k = self.idx(i, j);
        self.data[k] += value;
        self.exact = self.exact && is_exact_int(self.data[k]);
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = self.get(i, j);
                out[i * n + j] = v;
                out[j * n + i] = v;
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn sum_entries(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let v = self.get(i, j);
                s += if i == j { v } else { 2.0 * v };
            }
        }
        s
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_inner(self).sqrt()
    }

    /// `⟨A, B⟩ = tr(AB)`.
    pub fn frobenius_inner(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        let mut s = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let p = self.get(i, j) * other.get(i, j);
                s += if i == j { p } else { 2.0 * p };
            }
        }
        s
    }

    pub fn scale(&self, factor: f64) -> SymMatrix {
        Self::from_fn(self.n, |i, j| factor * self.get(i, j))
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum()).collect()
    }

    /// `xᵀ M x`.
    pub fn quad_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `M²`, which is symmetric again.
    pub fn square(&self) -> SymMatrix {
        let d = self.to_dense();
        let n = self.n;
        Self::from_fn(n, |i, j| (0..n).map(|k| d[i * n + k] * d[k * n + j]).sum())
    }

    /// Serialised as nested rows.
    pub fn to_rows_json(&self) -> serde_json::Value {
        serde_json::to_value(self.rows()).expect("rows serialise")
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        SymMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
