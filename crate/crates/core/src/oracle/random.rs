//! Seeded randomness: ChaCha8 streams, Box–Muller Gaussians, Haar-ish unitaries.

use std::f64::consts::TAU;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{CMatrix, C64};

pub type OracleRng = ChaCha8Rng;

/// Independent generator for `(seed, stream)`; concurrent callers use
/// distinct streams and stay reproducible.
pub fn rng_for(seed: u64, stream: u64) -> OracleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Two independent standard normals (Box–Muller).
pub fn normal_pair<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
    let u2: f64 = rng.random::<f64>();
    let r = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (TAU * u2).sin_cos();
    (r * c, r * s)
}

/// Standard complex Gaussian, `E|w|² = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let (a, b) = normal_pair(rng);
    C64::new(a, b) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn unit_phase<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::from_polar(1.0, TAU * rng.random::<f64>())
}

/// Gram–Schmidt (two passes) on independent complex Gaussian columns.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    assert!(n >= 1);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n).map(|_| complex_normal(rng)).collect();
        for _ in 0..2 {
            for u in &cols {
                let proj: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= proj * ui;
                }
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        v.iter_mut().for_each(|x| *x /= norm);
        cols.push(v);
    }
    CMatrix::from_fn(n, |i, j| cols[j][i])
}

/// Hermitian matrix with entries of magnitude roughly `scale`.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> CMatrix {
    let mut g = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = complex_normal(rng) * scale;
        }
    }
    g.hermitian_part()
}

pub fn random_complex_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> Vec<C64> {
    (0..n).map(|_| complex_normal(rng) * scale).collect()
}
