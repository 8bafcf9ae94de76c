//! Trace of a torus element on the degree-`k` Fock component against the Weyl
//! character of `τ_{(0,…,0,−k)}`.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};

/// Pairs of phases closer than this are spread apart before evaluating the
/// alternant quotient.
const MIN_PHASE_GAP: f64 = 1e-3;
const SPREAD: f64 = 0.05;
const MIN_DENOMINATOR: f64 = 1e-12;

/// Complete homogeneous symmetric polynomial `h_k(x_1, …, x_n)`, using
/// `h_k(x_1..x_j) = h_k(x_1..x_{j−1}) + x_j h_{k−1}(x_1..x_j)`.
pub fn complete_homogeneous(x: &[C64], k: usize) -> C64 {
    let mut h = vec![C64::new(0.0, 0.0); k + 1];
    h[0] = C64::new(1.0, 0.0);
    for &xj in x {
        for d in 1..=k {
            let prev = h[d - 1];
            h[d] += xj * prev;
        }
    }
    h[k]
}

fn pow(y: C64, e: i64) -> C64 {
    if e >= 0 {
        y.powu(e as u32)
    } else {
        y.inv().powu((-e) as u32)
    }
}

/// `det(y_i^{ν_j + n − j}) / det(y_i^{n − j})`.
pub fn weyl_character(nu: &[i64], y: &[C64]) -> Result<C64> {
    let n = nu.len();
    let alt = |shift: &dyn Fn(usize) -> i64| {
        CMatrix::from_fn(n, |i, j| pow(y[i], shift(j) + (n - 1 - j) as i64)).det()
    };
    let den = alt(&|_| 0);
    if den.norm() < MIN_DENOMINATOR {
        return Err(Error::DegeneratePhases);
    }
    Ok(alt(&|j| nu[j]) / den)
}

fn min_gap(theta: &[f64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..theta.len() {
        for j in i + 1..theta.len() {
            let d = (C64::from_polar(1.0, theta[i]) - C64::from_polar(1.0, theta[j])).norm();
            gap = gap.min(d);
        }
    }
    gap
}

/// Phases actually used by [`fock_character_check`]: `θ` itself unless two
/// entries nearly coincide on the circle, in which case `θ_j + (j+1)·0.05`.
pub fn effective_phases(theta: &[f64]) -> Vec<f64> {
    if min_gap(theta) >= MIN_PHASE_GAP {
        theta.to_vec()
    } else {
        theta
            .iter()
            .enumerate()
            .map(|(j, t)| t + SPREAD * (j + 1) as f64)
            .collect()
    }
}

/// `(h_k(e^{−iθ_1}, …, e^{−iθ_n}), χ_{(0,…,0,−k)}(diag(e^{iθ_j})))`, both at
/// [`effective_phases`]. `θ` must have length `n`.
pub fn fock_character_check(n: usize, k: usize, phases: &[f64]) -> Result<(C64, C64)> {
    if n == 0 {
        return Err(Error::EmptyWeight);
    }
    if phases.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: phases.len(),
        });
    }
    let theta = effective_phases(phases);
    let conj: Vec<C64> = theta.iter().map(|&t| C64::from_polar(1.0, -t)).collect();
    let y: Vec<C64> = theta.iter().map(|&t| C64::from_polar(1.0, t)).collect();
    let mut nu = vec![0i64; n];
    nu[n - 1] = -(k as i64);
    Ok((complete_homogeneous(&conj, k), weyl_character(&nu, &y)?))
}
