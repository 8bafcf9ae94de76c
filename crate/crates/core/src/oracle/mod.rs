//! Independent floating-point checks for the exact solver.
//!
//! Nothing here looks at the secular equation: membership is decided by the
//! Jacobi spectrum of `diag(λ) + (α/2) zz*`, and the search only knows the
//! trace identity `tr(zz*) = |z|²`.

pub mod eigen;
pub mod random;

use rand::Rng;

use crate::error::{check_len, Error, Result};
use crate::linalg::{CMatrix, C64};
use crate::orbit_space::ComplexVector;
use crate::weights::DominantWeight;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use random::{random_unitary, rng_for};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub tol: f64,
    pub max_sweeps: usize,
    pub seed: u64,
    /// Stream index; concurrent scans give each call its own stream.
    pub stream: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            tol: 1e-8,
            max_sweeps: eigen::DEFAULT_MAX_SWEEPS,
            seed: 0,
            stream: 0,
        }
    }
}

impl OracleConfig {
    pub fn with_stream(self, stream: u64) -> Self {
        OracleConfig { stream, ..self }
    }

    pub fn rng(&self) -> random::OracleRng {
        rng_for(self.seed, self.stream)
    }
}

/// `diag(λ) + (α/2) z z*`.
pub fn perturbed_matrix(lambda: &DominantWeight, alpha: f64, z: &[C64]) -> CMatrix {
    let mut m = CMatrix::outer(z, z).scale(alpha / 2.0);
    for (i, &l) in lambda.entries().iter().enumerate() {
        m[(i, i)] += l as f64;
    }
    m
}

fn spectral_residual(
    lambda: &DominantWeight,
    alpha: f64,
    z: &[C64],
    mu: &DominantWeight,
    max_sweeps: usize,
) -> Result<f64> {
    let m = perturbed_matrix(lambda, alpha, z);
    let spec = eigen::hermitian_eigenvalues_with(&m, max_sweeps)?;
    Ok(spec
        .iter()
        .zip(mu.entries())
        .map(|(a, &b)| (a - b as f64).abs())
        .fold(0.0, f64::max))
}


/// `spec↓(diag(λ) + (α/2) zz*) = μ` entrywise within `cfg.tol`.
pub fn verify_membership(
    lambda: &DominantWeight,
    alpha: f64,
    z: &ComplexVector,
    mu: &DominantWeight,
    cfg: &OracleConfig,
) -> Result<bool> {
    check_len(lambda.n(), mu.n())?;
    check_len(lambda.n(), z.n())?;
    Ok(spectral_residual(lambda, alpha, z.as_slice(), mu, cfg.max_sweeps)? <= cfg.tol)
}

const GRID_STEP: f64 = 0.25;
const REFINE_STARTS: usize = 2;
const REFINE_ITERS: usize = 40;

/// Searches for `z` with `diag(λ) + (α/2)zz*` on the orbit of `diag(μ)`.
///
/// The spectrum only depends on the coordinate norms `|z_j|²`, and the trace
/// forces `Σ|z_j|² = 2(Σμ − Σλ)/α`. Norm vectors are drawn from the quarter
/// grid on that simplex (the whole grid when it fits in the budget), each
/// with random phases. The best few grid points are then polished by a
/// projected Levenberg–Marquardt iteration on the norms, since exact
/// solutions need not lie on the grid. Every spectrum evaluation counts
/// against `budget`.
pub fn randomized_search(
    lambda: &DominantWeight,
    alpha: f64,
    mu: &DominantWeight,
    budget: usize,
    cfg: &OracleConfig,
) -> Result<Option<ComplexVector>> {
    check_len(lambda.n(), mu.n())?;
    if alpha == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    let n = lambda.n();
    let mut rng = cfg.rng();
    let mut search = Search {
        lambda,
        alpha,
        mu,
        cfg,
        remaining: budget,
    };

    let mut total = 2.0 * (mu.sum() - lambda.sum()) as f64 / alpha;
    if total < -cfg.tol {
        return Ok(None);
    }
    total = total.max(0.0);

    let refine_reserve = (budget / 2).min(REFINE_STARTS * REFINE_ITERS * (n + 2));
    let scan_budget = budget - refine_reserve;
    let cells = (total / GRID_STEP + 1e-9).floor() as u64;

    let mut best: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut consider = |search: &mut Search, norms: Vec<f64>, rng: &mut random::OracleRng| -> Result<Option<ComplexVector>> {
        let z = with_random_phases(&norms, rng);
        let Some(r) = search.residual(&z)? else {
            return Ok(None);
        };
        if r <= cfg.tol {
            return Ok(Some(ComplexVector(z)));
        }
        best.push((r, norms));
        best.sort_by(|a, b| a.0.total_cmp(&b.0));
        best.truncate(REFINE_STARTS);
        Ok(None)
    };

    if grid_size(cells, n).is_some_and(|size| size <= scan_budget as u64) {
        let mut parts = vec![0u64; n.saturating_sub(1)];
        loop {
            let norms = grid_norms(&parts, total);
            if let Some(z) = consider(&mut search, norms, &mut rng)? {
                return Ok(Some(z));
            }
            if !next_composition(&mut parts, cells) {
                break;
            }
        }
    } else {
        for _ in 0..scan_budget {
            let parts = random_composition(&mut rng, n, cells);
            if let Some(z) = consider(&mut search, grid_norms(&parts, total), &mut rng)? {
                return Ok(Some(z));
            }
        }
    }

    for (_, start) in std::mem::take(&mut best) {
        if let Some(norms) = search.refine(start)? {
            let z = ComplexVector(with_random_phases(&norms, &mut rng));
            if verify_membership(lambda, alpha, &z, mu, cfg)? {
                return Ok(Some(z));
            }
        }
    }
    Ok(None)
}

struct Search<'a> {
    lambda: &'a DominantWeight,
    alpha: f64,
    mu: &'a DominantWeight,
    cfg: &'a OracleConfig,
    remaining: usize,
}

impl Search<'_> {
    fn residual(&mut self, z: &[C64]) -> Result<Option<f64>> {
        Ok(self.residuals(z)?.map(|r| r.iter().fold(0.0, |m, v| f64::max(m, v.abs()))))
    }

    /// Signed residuals `spec_i − μ_i`; `None` once the budget is spent.
    fn residuals(&mut self, z: &[C64]) -> Result<Option<Vec<f64>>> {
        if self.remaining == 0 {
            return Ok(None);
        }
        self.remaining -= 1;
        let m = perturbed_matrix(self.lambda, self.alpha, z);
        let spec = eigen::hermitian_eigenvalues_with(&m, self.cfg.max_sweeps)?;
        Ok(Some(
            spec.iter()
                .zip(self.mu.entries())
                .map(|(a, &b)| a - b as f64)
                .collect(),
        ))
    }

    fn norm_residuals(&mut self, norms: &[f64]) -> Result<Option<Vec<f64>>> {
        let z: Vec<C64> = norms.iter().map(|c| C64::new(c.max(0.0).sqrt(), 0.0)).collect();
        self.residuals(&z)
    }

    /// Projected Levenberg–Marquardt on the norm vector (norms stay ≥ 0).
    fn refine(&mut self, mut norms: Vec<f64>) -> Result<Option<Vec<f64>>> {
        let n = norms.len();
        let Some(mut r) = self.norm_residuals(&norms)? else {
            return Ok(None);
        };
        let mut cost = sq(&r);
        let mut damping = 1e-3;
        let mut stalled = 0;
        for _ in 0..REFINE_ITERS {
            if max_abs(&r) <= self.cfg.tol * 0.1 {
                return Ok(Some(norms));
            }
            // forward differences keep the probes inside the orthant
            let mut jac = vec![vec![0.0; n]; n];
            for j in 0..n {
                let h = 1e-7 * norms[j].abs().max(1.0);
                let mut probe = norms.clone();
                probe[j] += h;
                let Some(rp) = self.norm_residuals(&probe)? else {
                    return Ok(None);
                };
                for i in 0..n {
                    jac[i][j] = (rp[i] - r[i]) / h;
                }
            }
            let jtj: Vec<Vec<f64>> = (0..n)
                .map(|a| (0..n).map(|b| (0..n).map(|i| jac[i][a] * jac[i][b]).sum()).collect())
                .collect();
            let jtr: Vec<f64> = (0..n).map(|a| (0..n).map(|i| jac[i][a] * r[i]).sum()).collect();
            let diag_scale = (0..n).map(|a| jtj[a][a]).fold(0.0, f64::max).max(1e-12);
            let mut system = jtj.clone();
            for (a, row) in system.iter_mut().enumerate() {
                row[a] += damping * diag_scale;
            }
            let Some(step) = solve_dense(system, jtr.iter().map(|v| -v).collect()) else {
                damping *= 10.0;
                continue;
            };
            let trial: Vec<f64> = norms.iter().zip(&step).map(|(c, d)| (c + d).max(0.0)).collect();
            let Some(rt) = self.norm_residuals(&trial)? else {
                return Ok(None);
            };
            let trial_cost = sq(&rt);
            if trial_cost < cost {
                stalled = if trial_cost > 0.999 * cost { stalled + 1 } else { 0 };
                norms = trial;
                r = rt;
                cost = trial_cost;
                damping = (damping / 4.0).max(1e-12);
            } else {
                stalled += 1;
                damping *= 8.0;
            }
            if stalled >= 4 || damping > 1e10 {
                break;
            }
        }
        Ok((max_abs(&r) <= self.cfg.tol * 0.1).then_some(norms))
    }
}

fn sq(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| f64::max(m, x.abs()))
}

/// Gaussian elimination with partial pivoting; `None` if singular.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[p][col].abs() < 1e-300 {
            return None;
        }
        a.swap(p, col);
        b.swap(p, col);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

fn with_random_phases<R: Rng + ?Sized>(norms: &[f64], rng: &mut R) -> Vec<C64> {
    norms
        .iter()
        .map(|&c| random::unit_phase(rng) * c.max(0.0).sqrt())
        .collect()
}

/// First `n − 1` norms from grid cells, the last takes the remaining trace.
fn grid_norms(parts: &[u64], total: f64) -> Vec<f64> {
    let mut norms: Vec<f64> = parts.iter().map(|&p| p as f64 * GRID_STEP).collect();
    let used: f64 = norms.iter().sum();
    norms.push((total - used).max(0.0));
    norms
}

/// Number of `(n − 1)`-tuples of non-negative integers with sum `≤ cells`,
/// i.e. `C(cells + n − 1, n − 1)`; `None` on overflow.
fn grid_size(cells: u64, n: usize) -> Option<u64> {
    let k = n.saturating_sub(1) as u64;
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(cells + i)? / i;
    }
    Some(acc)
}

/// Advances `parts` to the next tuple with sum `≤ cells` (odometer order).
fn next_composition(parts: &mut [u64], cells: u64) -> bool {
    let mut sum: u64 = parts.iter().sum();
    for i in 0..parts.len() {
        if sum < cells {
            parts[i] += 1;
            return true;
        }
        sum -= parts[i];
        parts[i] = 0;
    }
    false
}

fn random_composition<R: Rng + ?Sized>(rng: &mut R, n: usize, cells: u64) -> Vec<u64> {
    // sorted uniforms give a uniform point of the simplex
    let mut cuts: Vec<f64> = (0..n.saturating_sub(1)).map(|_| rng.random::<f64>()).collect();
    cuts.sort_by(f64::total_cmp);
    let mut prev = 0.0;
    cuts.iter()
        .map(|&c| {
            let part = ((c - prev) * cells as f64).floor() as u64;
            prev = c;
            part
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn real(v: &[f64]) -> ComplexVector {
        ComplexVector(v.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    #[test]
    fn membership_examples() {
        let cfg = OracleConfig::default();
        let z = real(&[0.5f64.sqrt(), 1.5f64.sqrt()]);
        assert!(verify_membership(&weight(&[3, 1]), 2.0, &z, &weight(&[4, 2]), &cfg).unwrap());

        let l = weight(&[2, 0, -1]);
        assert!(verify_membership(&l, -3.0, &ComplexVector::zeros(3), &l, &cfg).unwrap());

        let mut rng = rng_for(9, 0);
        let target = weight(&[5, 5, 0]);
        for _ in 0..200 {
            let z = ComplexVector(random::random_complex_vector(&mut rng, 3, 1.6));
            assert!(!verify_membership(&weight(&[0, 0, 0]), 2.0, &z, &target, &cfg).unwrap());
        }
    }

    #[test]
    fn search_finds_unique_norms() {
        let cfg = OracleConfig { tol: 1e-6, ..OracleConfig::default() };
        let z = randomized_search(&weight(&[3, 1]), 2.0, &weight(&[4, 2]), 100_000, &cfg)
            .unwrap()
            .expect("feasible");
        assert!((z.0[0].norm_sqr() - 0.5).abs() < 1e-6);
        assert!((z.0[1].norm_sqr() - 1.5).abs() < 1e-6);
    }

    #[test]
    fn search_origin_and_infeasible() {
        let cfg = OracleConfig { tol: 1e-6, ..OracleConfig::default() };
        let l = weight(&[1, -2]);
        let z = randomized_search(&l, 1.0, &l, 10, &cfg).unwrap().unwrap();
        assert_eq!(z.norm_sqr(), 0.0);

        assert!(randomized_search(&weight(&[0, 0]), 1.0, &weight(&[2, 1]), 100_000, &cfg)
            .unwrap()
            .is_none());
    }

    #[test]
    fn search_polishes_off_grid_norms() {
        // Norms (16/3, 2/3, 0) are not quarter multiples.
        let cfg = OracleConfig { tol: 1e-6, ..OracleConfig::default() };
        let z = randomized_search(&weight(&[3, 0, -3]), -1.0, &weight(&[1, -1, -3]), 200_000, &cfg)
            .unwrap()
            .expect("feasible");
        assert!(verify_membership(&weight(&[3, 0, -3]), -1.0, &z, &weight(&[1, -1, -3]), &cfg).unwrap());
    }

    #[test]
    fn search_is_deterministic() {
        let cfg = OracleConfig { tol: 1e-6, seed: 77, ..OracleConfig::default() };
        let a = randomized_search(&weight(&[2, 0]), 1.0, &weight(&[3, 1]), 1000, &cfg).unwrap();
        let b = randomized_search(&weight(&[2, 0]), 1.0, &weight(&[3, 1]), 1000, &cfg).unwrap();
        assert!(a.is_some());
        assert_eq!(a, b);
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(grid_size(4, 3), Some(15));
        let mut parts = vec![0u64; 2];
        let mut count = 1;
        while next_composition(&mut parts, 4) {
            assert!(parts.iter().sum::<u64>() <= 4);
            count += 1;
        }
        assert_eq!(count, 15);
        assert_eq!(grid_size(10, 1), Some(1));
    }
}
