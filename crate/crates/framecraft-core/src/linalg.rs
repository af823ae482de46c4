//! Thin layer over nalgebra's dense complex routines: Hermitian
//! eigendecomposition with deterministic ordering, SVD-based rank and span
//! handling, and the PSD square root / pseudoinverse combinations the bracket
//! calculus needs.

use crate::error::{Error, Result};
use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    Complex::new(re, 0.0)
}

/// Largest entry modulus; 0 for empty matrices.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hs_norm_sq(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

/// Max-norm of `M*M - I`.
pub fn unitary_deviation(m: &CMat) -> f64 {
    let n = m.ncols();
    max_abs(&(m.adjoint() * m - CMat::identity(n, n)))
}

pub fn hermitian_part(m: &CMat) -> CMat {
    (m + m.adjoint()).scale(0.5)
}

const EIGEN_MAX_ITER: usize = 100_000;

/// Eigendecomposition of a (nearly) Hermitian matrix. The input is
/// symmetrized first; eigenvalues come back ascending with matching
/// eigenvector columns.
pub fn hermitian_eigen(m: &CMat) -> Result<(Vec<f64>, CMat)> {
    let n = m.nrows();
    if n == 0 {
        return Ok((Vec::new(), CMat::zeros(0, 0)));
    }
    let h = hermitian_part(m);
    let se = h
        .try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::Numeric(format!("hermitian eigensolver stalled on a {n}x{n} block")))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let vectors = CMat::from_columns(
        &order
            .iter()
            .map(|&i| se.eigenvectors.column(i).into_owned())
            .collect::<Vec<_>>(),
    );
    Ok((values, vectors))
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &CMat) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(m)?.0)
}

pub struct Svd {
    pub u: CMat,
    /// Singular values, descending.
    pub sigma: Vec<f64>,
    pub v_t: CMat,
}

pub fn svd(m: &CMat) -> Result<Svd> {
    let (r, c_) = m.shape();
    if r == 0 || c_ == 0 {
        return Ok(Svd {
            u: CMat::zeros(r, 0),
            sigma: Vec::new(),
            v_t: CMat::zeros(0, c_),
        });
    }
    let f = m
        .clone()
        .try_svd(true, true, f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::Numeric(format!("svd stalled on a {r}x{c_} matrix")))?;
    Ok(Svd {
        u: f.u.expect("u requested"),
        sigma: f.singular_values.iter().cloned().collect(),
        v_t: f.v_t.expect("v_t requested"),
    })
}

/// Number of singular values above `tol_rank * sigma_max`.
pub fn rank_from_singular_values(sigma: &[f64], tol_rank: f64) -> usize {
    let smax = sigma.first().copied().unwrap_or(0.0);
    if smax <= 0.0 {
        return 0;
    }
    sigma.iter().filter(|&&s| s > tol_rank * smax).count()
}

/// Number of eigenvalues with modulus above the absolute threshold.
pub fn rank_from_eigenvalues(eigs: &[f64], thresh: f64) -> usize {
    eigs.iter().filter(|&&l| l.abs() > thresh).count()
}

/// Orthonormal basis (as columns) for the column span of `m`, with rank
/// decided by `tol_rank` relative to the largest singular value. The result
/// has shape (nrows, rank); rank 0 gives a (nrows, 0) matrix.
pub fn orthonormal_span(m: &CMat, tol_rank: f64) -> Result<CMat> {
    let f = svd(m)?;
    let rank = rank_from_singular_values(&f.sigma, tol_rank);
    Ok(f.u.columns(0, rank).into_owned())
}

/// `‖v - Q Q* v‖` for orthonormal columns Q: distance from v to span(Q).
pub fn residual_outside_span(q: &CMat, v: &CVec) -> f64 {
    if q.ncols() == 0 {
        return v.norm();
    }
    let proj = q * (q.adjoint() * v);
    (v - proj).norm()
}

fn psd_eigen_clamped(m: &CMat, tol_rank: f64) -> Result<(Vec<f64>, CMat)> {
    let (mut values, vectors) = hermitian_eigen(m)?;
    let lmax = values.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
    for v in values.iter_mut() {
        if *v <= tol_rank * lmax {
            *v = 0.0;
        }
    }
    Ok((values, vectors))
}

/// PSD square root with eigenvalues below `tol_rank * λ_max` truncated to 0.
pub fn psd_sqrt(m: &CMat, tol_rank: f64) -> Result<CMat> {
    let (values, vectors) = psd_eigen_clamped(m, tol_rank)?;
    Ok(rescale_columns(&vectors, &values.iter().map(|&l| l.sqrt()).collect::<Vec<_>>()))
}

/// Moore–Penrose inverse of the PSD square root: V diag(λ^{-1/2}) V* on the
/// numeric range, zero on the truncated part.
pub fn psd_sqrt_pinv(m: &CMat, tol_rank: f64) -> Result<CMat> {
    let (values, vectors) = psd_eigen_clamped(m, tol_rank)?;
    let inv: Vec<f64> = values
        .iter()
        .map(|&l| if l > 0.0 { 1.0 / l.sqrt() } else { 0.0 })
        .collect();
    Ok(rescale_columns(&vectors, &inv))
}

/// Pseudoinverse of a (nearly) Hermitian PSD matrix with rank truncation.
pub fn psd_pinv(m: &CMat, tol_rank: f64) -> Result<CMat> {
    let (values, vectors) = psd_eigen_clamped(m, tol_rank)?;
    let inv: Vec<f64> = values
        .iter()
        .map(|&l| if l > 0.0 { 1.0 / l } else { 0.0 })
        .collect();
    Ok(rescale_columns(&vectors, &inv))
}

/// V diag(w) V* assembled column-wise.
fn rescale_columns(vectors: &CMat, weights: &[f64]) -> CMat {
    let n = vectors.nrows();
    let mut scaled = vectors.clone();
    for (j, &w) in weights.iter().enumerate() {
        scaled.column_mut(j).scale_mut(w);
    }
    let mut out = CMat::zeros(n, n);
    out.gemm(cr(1.0), &scaled, &vectors.adjoint(), cr(0.0));
    out
}

/// Sorted-multiset comparison of two real spectra.
pub fn spectra_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    let scale = sa
        .iter()
        .chain(sb.iter())
        .map(|x| x.abs())
        .fold(0.0f64, f64::max)
        .max(1.0);
    sa.iter().zip(&sb).all(|(x, y)| (x - y).abs() <= tol * scale)
}
