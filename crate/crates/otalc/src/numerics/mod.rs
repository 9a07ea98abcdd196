//! Dense matrix support and the numerical kernels the rest of the crate
//! builds on: compact SVD, regularized Gram-matrix inverses, Gram-Schmidt
//! orthonormalization and seeded Gaussian matrices.
//!
//! All matrices are small (dimensions in the tens), so everything is dense
//! `f64` / `Complex<f64>` backed by nalgebra.

pub mod rng;

use nalgebra::{Complex, DMatrix};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use rng::RngStream;

/// Dense real matrix, the working type for gradients and factors.
pub type RealMatrix = DMatrix<f64>;
/// Dense complex matrix, the working type for channels and air signals.
pub type ComplexMatrix = DMatrix<Complex<f64>>;

/// Relative cutoff below which singular values count as zero.
pub const RANK_TOLERANCE: f64 = 1e-12;

/// Compact singular value decomposition `h = u * diag(sigma) * v^H`.
///
/// `u` is `rows x d`, `v` is `cols x d` and `sigma` holds the `d` singular
/// values above the numerical-rank cutoff, sorted descending.
#[derive(Debug, Clone)]
pub struct CompactSvd {
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
    pub d: usize,
}

impl CompactSvd {
    /// Reconstruct `u * diag(sigma) * v^H`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut us = self.u.clone();
        for (j, s) in self.sigma.iter().enumerate() {
            us.column_mut(j).scale_mut(*s);
        }
        &us * self.v.adjoint()
    }

    /// Smallest retained singular value.
    pub fn sigma_min(&self) -> f64 {
        *self.sigma.last().expect("compact SVD retains at least one value")
    }
}

/// Compact SVD of a complex matrix, truncated at the numerical rank.
pub fn compact_svd(h: &ComplexMatrix) -> Result<CompactSvd> {
    if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::DegenerateMatrix("non-finite entries".into()));
    }
    let svd = h.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if sigma_max <= 0.0 {
        return Err(Error::DegenerateMatrix("all-zero matrix".into()));
    }
    let d = svd
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOLERANCE * sigma_max)
        .count();
    let u_full = svd.u.expect("requested");
    let vt_full = svd.v_t.expect("requested");
    let u = u_full.columns(0, d).into_owned();
    let v = vt_full.rows(0, d).adjoint();
    let sigma = svd.singular_values.iter().take(d).cloned().collect();
    Ok(CompactSvd { u, sigma, v, d })
}

/// Inverse of the regularized Gram matrix `(M^T M + lambda I)^{-1}`.
///
/// `lambda = 0` is allowed only when `M^T M` is invertible; otherwise
/// `SingularGram` is returned.
pub fn solve_regularized_gram(m: &RealMatrix, lambda: f64) -> Result<RealMatrix> {
    assert!(lambda >= 0.0, "lambda must be nonnegative");
    let r = m.ncols();
    let mut gram = m.transpose() * m;
    for i in 0..r {
        gram[(i, i)] += lambda;
    }
    match nalgebra::Cholesky::new(gram) {
        Some(chol) => Ok(chol.inverse()),
        None => Err(Error::SingularGram),
    }
}

/// Orthonormalize the columns of `m` with modified Gram-Schmidt.
///
/// A second projection pass keeps orthogonality near machine precision.
/// Returns `RankDeficient` if some column lies in the span of the previous
/// ones (relative residual below 1e-10).
pub fn orthonormalize_columns(m: &RealMatrix) -> Result<RealMatrix> {
    let (rows, cols) = m.shape();
    assert!(cols <= rows, "cannot orthonormalize more columns than rows");
    let mut q = m.clone();
    for j in 0..cols {
        let original_norm = m.column(j).norm();
        for _pass in 0..2 {
            for i in 0..j {
                let proj = q.column(i).dot(&q.column(j));
                let qi = q.column(i).into_owned();
                q.column_mut(j).axpy(-proj, &qi, 1.0);
            }
        }
        let norm = q.column(j).norm();
        if norm <= 1e-10 * original_norm.max(1e-300) {
            return Err(Error::RankDeficient(j));
        }
        q.column_mut(j).scale_mut(1.0 / norm);
    }
    Ok(q)
}

/// `rows x cols` matrix of i.i.d. standard-normal entries from `stream`.
pub fn gaussian_real(rows: usize, cols: usize, stream: RngStream) -> RealMatrix {
    let mut rng = stream.rng();
    RealMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// `rows x cols` matrix of i.i.d. CN(0, 1) entries from `stream`.
///
/// Each of the real and imaginary parts has variance 1/2 so that
/// `E|z|^2 = 1`. Entries are generated in column-major order.
pub fn gaussian_complex(rows: usize, cols: usize, stream: RngStream) -> ComplexMatrix {
    let mut rng = stream.rng();
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(re * scale, im * scale)
    })
}
