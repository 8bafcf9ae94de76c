//! Cyclic complex Jacobi for Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pair `(p, q)`: a diagonal phase
//! makes `a_pq` real and positive, then a real plane rotation annihilates it.
//! Rotations are accumulated in `Q` so that `M = Q Λ Q*`.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};

pub const DEFAULT_MAX_SWEEPS: usize = 64;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Sorted descending.
    pub values: Vec<f64>,
    /// Column `i` is the eigenvector for `values[i]`.
    pub vectors: CMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        let q = &self.vectors;
        CMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| q[(i, k)] * self.values[k] * q[(j, k)].conj())
                .sum()
        })
    }
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    jacobi(m, DEFAULT_MAX_SWEEPS, false).map(|e| e.values)
}

pub fn hermitian_eigenvalues_with(m: &CMatrix, max_sweeps: usize) -> Result<Vec<f64>> {
    jacobi(m, max_sweeps, false).map(|e| e.values)
}

pub fn hermitian_eigen(m: &CMatrix, max_sweeps: usize) -> Result<HermitianEigen> {
    jacobi(m, max_sweeps, true)
}

fn off_norm_sq(a: &CMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[(i, j)].norm_sqr();
        }
    }
    2.0 * s
}

fn jacobi(m: &CMatrix, max_sweeps: usize, want_vectors: bool) -> Result<HermitianEigen> {
    let n = m.n();
    let mut a = m.hermitian_part();
    let mut q = CMatrix::identity(n);

    let frob_sq: f64 = a.as_slice().iter().map(|z| z.norm_sqr()).sum();
    let threshold = (f64::EPSILON * f64::EPSILON) * frob_sq.max(f64::MIN_POSITIVE);

    let mut converged = off_norm_sq(&a) <= threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == max_sweeps {
            return Err(Error::NotConverged(max_sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for r in p + 1..n {
                rotate(&mut a, &mut q, p, r, want_vectors);
            }
        }
        converged = off_norm_sq(&a) <= threshold;
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = if want_vectors {
        CMatrix::from_fn(n, |i, j| q[(i, order[j])])
    } else {
        q
    };
    Ok(HermitianEigen { values, vectors })
}

fn rotate(a: &mut CMatrix, q: &mut CMatrix, p: usize, r: usize, want_vectors: bool) {
    let apr = a[(p, r)];
    let mag = apr.norm();
    if mag == 0.0 {
        return;
    }
    let n = a.n();
    let phase = apr / mag;
    let app = a[(p, p)].re;
    let arr = a[(r, r)].re;
    let theta = 0.5 * (2.0 * mag).atan2(arr - app);
    let (s, c) = theta.sin_cos();

    // Block of the unitary U acting on coordinates (p, r): diag(1, conj(phase)) · R(θ).
    let u_pp = C64::new(c, 0.0);
    let u_pr = C64::new(s, 0.0);
    let u_rp = -phase.conj() * s;
    let u_rr = phase.conj() * c;

    // A ← A U
    for i in 0..n {
        let x = a[(i, p)];
        let y = a[(i, r)];
        a[(i, p)] = x * u_pp + y * u_rp;
        a[(i, r)] = x * u_pr + y * u_rr;
    }
    // A ← U* A
    for j in 0..n {
        let x = a[(p, j)];
        let y = a[(r, j)];
        a[(p, j)] = u_pp.conj() * x + u_rp.conj() * y;
        a[(r, j)] = u_pr.conj() * x + u_rr.conj() * y;
    }
    a[(p, r)] = C64::new(0.0, 0.0);
    a[(r, p)] = C64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(r, r)].im = 0.0;

    if want_vectors {
        for i in 0..n {
            let x = q[(i, p)];
            let y = q[(i, r)];
            q[(i, p)] = x * u_pp + y * u_rp;
            q[(i, r)] = x * u_pr + y * u_rr;
        }
    }
}
