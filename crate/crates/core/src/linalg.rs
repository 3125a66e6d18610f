//! Minimal dense linear algebra for small symmetric problems.
//!
//! Covariance and kernel matrices in this pipeline are at most a few dozen
//! rows, so a row-major `Matrix` plus a cyclic Jacobi eigensolver is all that
//! is needed.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Row-major dense matrix of `f64`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Build from nested rows. All rows must share a length.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} columns, expected {ncols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.cols.max(1))
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Per-column mean; empty input gives an all-zero vector.
    pub fn column_means(&self) -> Vec<f64> {
        let mut means = vec![0.0; self.cols];
        if self.rows == 0 {
            return means;
        }
        for row in self.iter_rows() {
            for (m, v) in means.iter_mut().zip(row) {
                *m += v;
            }
        }
        for m in &mut means {
            *m /= self.rows as f64;
        }
        means
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    let na = dot(a, a).sqrt();
    let nb = dot(b, b).sqrt();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    dot(a, b) / (na * nb)
}

/// One eigenpair of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns all eigenpairs sorted by descending eigenvalue. Rotations follow the
/// classic Numerical Recipes scheme; convergence is declared when the sum of
/// absolute off-diagonal entries falls below `1e-14` relative to the matrix
/// norm.
pub fn eigen_sym(matrix: &Matrix) -> Result<Vec<EigenPair>> {
    let n = matrix.rows();
    if n != matrix.cols() {
        return Err(Error::Dimension(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let scale = matrix.frobenius_norm().max(1.0);
    let tol = 1e-14 * scale;
    const MAX_SWEEPS: usize = 100;

    let mut a = matrix.clone();
    // Eigenvector accumulator, starts as identity; columns become eigenvectors.
    let mut v = Matrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 });
    let mut d: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n - 1)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a.get(p, q).abs())
            .sum();
        if off < tol || n == 1 {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let h = d[q] - d[p];
                let theta = 0.5 * h / apq;
                let t = if theta.abs() > 1e150 {
                    // theta^2 would overflow; 1/(|θ|+sqrt(1+θ²)) → 1/(2θ).
                    1.0 / (2.0 * theta)
                } else {
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a.set(p, q, 0.0);
                let rotate = |m: &mut Matrix, i1: usize, j1: usize, i2: usize, j2: usize| {
                    let g = m.get(i1, j1);
                    let h = m.get(i2, j2);
                    m.set(i1, j1, g - s * (h + g * tau));
                    m.set(i2, j2, h + s * (g - h * tau));
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p, j, q, j);
                }
                for j in 0..n {
                    rotate(&mut v, j, p, j, q);
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            z[p] = 0.0;
            d[p] = b[p];
        }
    }
    if !converged {
        // One last check after the final sweep.
        let off: f64 = (0..n - 1)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a.get(p, q).abs())
            .sum();
        if off >= tol {
            return Err(Error::Numeric(
                "Jacobi eigendecomposition did not converge".into(),
            ));
        }
    }

    let mut pairs: Vec<EigenPair> = (0..n)
        .map(|k| EigenPair {
            value: d[k],
            vector: (0..n).map(|i| v.get(i, k)).collect(),
        })
        .collect();
    pairs.sort_by(|a, b| b.value.partial_cmp(&a.value).expect("finite eigenvalues"));
    Ok(pairs)
}

/// Residual `‖A v − λ v‖` for one eigenpair; used to validate decompositions.
pub fn eigen_residual(matrix: &Matrix, pair: &EigenPair) -> f64 {
    let n = matrix.rows();
    let mut residual = 0.0;
    for i in 0..n {
        let av: f64 = (0..n).map(|j| matrix.get(i, j) * pair.vector[j]).sum();
        let r = av - pair.value * pair.vector[i];
        residual += r * r;
    }
    residual.sqrt()
}
