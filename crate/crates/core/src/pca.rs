//! Principal component analysis built on a cyclic Jacobi eigensolver.
//!
//! Fitting centers the data, forms the `n - 1` covariance matrix, diagonalizes
//! it, and keeps the top `k` eigenvectors as rows of the component matrix.
//! Eigenvectors are sign-normalized so that their largest-magnitude entry is
//! positive (lowest index wins ties), which makes fits reproducible bit for
//! bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Maximum number of full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal norm, relative to `‖m‖_F`.
pub const JACOBI_TOL: f64 = 1e-12;
/// Relative asymmetry accepted by [`eig_symmetric`].
pub const SYMMETRY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel<T> {
    /// Per-feature mean of the training data.
    pub mean: Vec<T>,
    /// `k x d`; each row is a unit eigenvector of the covariance matrix.
    pub components: Matrix<T>,
    /// Top `k` eigenvalues, non-increasing and non-negative.
    pub eigenvalues: Vec<T>,
    pub explained_variance_ratio: Vec<T>,
    pub cumulative_explained_variance: T,
    /// Sum of all `d` (clamped) eigenvalues.
    pub total_variance: T,
    pub n_samples: usize,
}

impl<T: Scalar> PcaModel<T> {
    pub fn n_components(&self) -> usize {
        self.components.rows()
    }

    pub fn n_features(&self) -> usize {
        self.mean.len()
    }
}

/// Eigenpairs of a symmetric matrix, sorted by descending eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    /// `d x d`; column `i` pairs with `values[i]`.
    pub vectors: Matrix<T>,
    pub sweeps: usize,
}

/// Subtracts the per-column mean. Returns the centered data and the mean.
pub fn center<T: Scalar>(data: &Matrix<T>) -> Result<(Matrix<T>, Vec<T>)> {
    let (n, d) = data.shape();
    if n == 0 || d == 0 {
        return Err(Error::EmptyMatrix);
    }
    let inv_n = T::one() / T::from_count(n);
    let mut mean = vec![T::zero(); d];
    for row in data.iter_rows() {
        for (m, &x) in mean.iter_mut().zip(row) {
            *m = *m + x;
        }
    }
    for m in &mut mean {
        *m = *m * inv_n;
    }
    let mut centered = data.clone();
    for i in 0..n {
        for (x, &m) in centered.row_mut(i).iter_mut().zip(&mean) {
            *x = *x - m;
        }
    }
    Ok((centered, mean))
}

/// Sample covariance `Zᵀ Z / (n - 1)` of already-centered data.
pub fn covariance<T: Scalar>(centered: &Matrix<T>) -> Result<Matrix<T>> {
    let (n, d) = centered.shape();
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }
    let mut cov = Matrix::zeros(d, d);
    for row in centered.iter_rows() {
        for a in 0..d {
            let za = row[a];
            if za == T::zero() {
                continue;
            }
            let out = cov.row_mut(a);
            for b in a..d {
                out[b] = out[b] + za * row[b];
            }
        }
    }
    let denom = T::from_count(n - 1);
    for a in 0..d {
        for b in a..d {
            let v = cov[(a, b)] / denom;
            cov[(a, b)] = v;
            cov[(b, a)] = v;
        }
    }
    Ok(cov)
}

fn off_diagonal_norm<T: Scalar>(a: &Matrix<T>) -> T {
    let d = a.rows();
    let mut s = T::zero();
    for p in 0..d {
        for q in (p + 1)..d {
            s = s + a[(p, q)] * a[(p, q)];
        }
    }
    (s + s).sqrt()
}

/// Flips `v` so its largest-magnitude entry is positive.
fn normalize_sign<T: Scalar>(v: &mut [T]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v.get(best).is_some_and(|x| *x < T::zero()) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Diagonalizes a symmetric matrix with cyclic Jacobi rotations.
pub fn eig_symmetric<T: Scalar>(m: &Matrix<T>) -> Result<SymmetricEigen<T>> {
    let (d, c) = m.shape();
    if d != c {
        return Err(Error::DimensionMismatch { expected: d, got: c });
    }
    if d == 0 {
        return Err(Error::EmptyMatrix);
    }
    if !m.all_finite() {
        return Err(Error::NonFinite);
    }
    let scale = m.norm();
    let asym = m.max_asymmetry();
    if asym > T::lit(SYMMETRY_TOL) * scale {
        return Err(Error::NotSymmetric(asym.as_f64()));
    }

    // Work on the symmetrized copy.
    let mut a = m.clone();
    let half = T::lit(0.5);
    for p in 0..d {
        for q in (p + 1)..d {
            let v = (a[(p, q)] + a[(q, p)]) * half;
            a[(p, q)] = v;
            a[(q, p)] = v;
        }
    }
    let mut v = Matrix::identity(d);
    // f32 cannot reach 1e-12; fall back to machine epsilon.
    let tol = T::lit(JACOBI_TOL).max(T::epsilon()) * scale;
    let huge = T::lit(1e150);
    let mut sweeps = 0;

    while sweeps < MAX_SWEEPS && off_diagonal_norm(&a) > tol {
        sweeps += 1;
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let theta = (aqq - app) / (apq + apq);
                let t = if theta.abs() > huge {
                    T::one() / (theta + theta)
                } else {
                    let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let cos = T::one() / (t * t + T::one()).sqrt();
                let sin = t * cos;
                for k in 0..d {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    let np = cos * akp - sin * akq;
                    let nq = sin * akp + cos * akq;
                    a[(k, p)] = np;
                    a[(p, k)] = np;
                    a[(k, q)] = nq;
                    a[(q, k)] = nq;
                }
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for k in 0..d {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = cos * vkp - sin * vkq;
                    v[(k, q)] = sin * vkp + cos * vkq;
                }
            }
        }
    }

    let raw: Vec<T> = (0..d).map(|i| a[(i, i)]).collect();
    let mut order: Vec<usize> = (0..d).collect();
    // Stable: equal eigenvalues keep solver order.
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).expect("finite eigenvalues"));

    let mut vectors = Matrix::zeros(d, d);
    let mut values = Vec::with_capacity(d);
    for (dst, &src) in order.iter().enumerate() {
        values.push(raw[src]);
        let mut col = v.column(src);
        normalize_sign(&mut col);
        for (k, x) in col.into_iter().enumerate() {
            vectors[(k, dst)] = x;
        }
    }
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

/// Fits a `k`-component model.
pub fn fit<T: Scalar>(data: &Matrix<T>, k: usize) -> Result<PcaModel<T>> {
    let (n, d) = data.shape();
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }
    if k < 1 || k > d {
        return Err(Error::InvalidComponents { k, d });
    }
    if !data.all_finite() {
        return Err(Error::NonFinite);
    }
    let (centered, mean) = center(data)?;
    let cov = covariance(&centered)?;
    let eig = eig_symmetric(&cov)?;

    let clamped: Vec<T> = eig.values.iter().map(|&l| l.max(T::zero())).collect();
    let total: T = clamped.iter().copied().sum();
    let eigenvalues = clamped[..k].to_vec();
    let explained_variance_ratio: Vec<T> = if total > T::zero() {
        eigenvalues.iter().map(|&l| l / total).collect()
    } else {
        vec![T::zero(); k]
    };
    let cumulative_explained_variance = explained_variance_ratio.iter().copied().sum();

    let mut components = Matrix::zeros(k, d);
    for i in 0..k {
        for j in 0..d {
            components[(i, j)] = eig.vectors[(j, i)];
        }
    }
    Ok(PcaModel {
        mean,
        components,
        eigenvalues,
        explained_variance_ratio,
        cumulative_explained_variance,
        total_variance: total,
        n_samples: n,
    })
}

/// Coordinates of each row in the model's component basis: `(x - mean) Aᵀ`.
pub fn project<T: Scalar>(data: &Matrix<T>, model: &PcaModel<T>) -> Result<Matrix<T>> {
    let d = model.n_features();
    if data.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: data.cols(),
        });
    }
    let k = model.n_components();
    let mut out = Matrix::zeros(data.rows(), k);
    let mut centered = vec![T::zero(); d];
    for (i, row) in data.iter_rows().enumerate() {
        for ((c, &x), &m) in centered.iter_mut().zip(row).zip(&model.mean) {
            *c = x - m;
        }
        for j in 0..k {
            out[(i, j)] = model
                .components
                .row(j)
                .iter()
                .zip(&centered)
                .map(|(&a, &z)| a * z)
                .sum();
        }
    }
    Ok(out)
}

/// Maps projected coordinates back to feature space: `X A + mean`.
pub fn reconstruct<T: Scalar>(coords: &Matrix<T>, model: &PcaModel<T>) -> Result<Matrix<T>> {
    let mut out = coords.matmul(&model.components)?;
    for i in 0..out.rows() {
        for (x, &m) in out.row_mut(i).iter_mut().zip(&model.mean) {
            *x = *x + m;
        }
    }
    Ok(out)
}

/// `(component number, cumulative ratio)` pairs, numbering from 1.
pub fn explained_variance_curve<T: Scalar>(model: &PcaModel<T>) -> Vec<(usize, T)> {
    let mut acc = T::zero();
    model
        .explained_variance_ratio
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            acc = acc + r;
            (i + 1, acc)
        })
        .collect()
}
