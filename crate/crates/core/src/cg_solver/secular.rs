//! Secular-polynomial bookkeeping for `diag(λ) + (α/2) zz*`.
//!
//! Its characteristic polynomial is
//! `P(x) = Π_i (x−λ_i) − (α/2) Σ_j |z_j|² Π_{i≠j} (x−λ_i)`.
//! Grouping equal entries of `λ` (values `λ̂_t`, multiplicities `n_t`) gives
//! `P(x) = Π_t (x−λ̂_t)^{n_t−1} · Q(x)` with
//! `Q(x) = Π_t (x−λ̂_t) − (α/2) Σ_t c_t Π_{s≠t} (x−λ̂_s)`, where `c_t` is the
//! total norm of `z` on group `t`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::rational::{int, Rational};
use crate::weights::{DominantWeight, GroupedWeight};

/// The interpolation problem for the group norms: `Q` must equal
/// `Π_{r ∈ residual} (x − r)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecularSystem {
    pub grouped: GroupedWeight,
    /// `μ` with the eigenvalues forced by repeated `λ` entries removed.
    pub residual: Vec<i64>,
    #[serde(serialize_with = "crate::cg_solver::ser_rational")]
    pub alpha: Rational,
}

/// Why no secular system exists for `(λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingForced {
    pub value: i64,
    pub needed: usize,
    pub found: usize,
}

impl SecularSystem {
    /// Removes `n_t − 1` copies of each `λ̂_t` from `μ`. Fails when `μ` does
    /// not contain them.
    pub fn new(
        lambda: &DominantWeight,
        mu: &DominantWeight,
        alpha: &Rational,
    ) -> Result<std::result::Result<Self, MissingForced>> {
        check_len(lambda.n(), mu.n())?;
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        let grouped = lambda.group();
        let mut residual: Vec<i64> = mu.entries().to_vec();
        for (&value, &mult) in grouped.values.iter().zip(&grouped.multiplicities) {
            let needed = mult - 1;
            let found = residual.iter().filter(|&&r| r == value).count();
            if found < needed {
                return Ok(Err(MissingForced {
                    value,
                    needed,
                    found: mu.entries().iter().filter(|&&r| r == value).count(),
                }));
            }
            let mut to_remove = needed;
            residual.retain(|&r| {
                if r == value && to_remove > 0 {
                    to_remove -= 1;
                    false
                } else {
                    true
                }
            });
        }
        debug_assert_eq!(residual.len(), grouped.m());
        Ok(Ok(SecularSystem {
            grouped,
            residual,
            alpha: alpha.clone(),
        }))
    }

    /// The unique candidate
    /// `c_t = −(2/α) Π_{r∈R} (λ̂_t − r) / Π_{s≠t} (λ̂_t − λ̂_s)`.
    pub fn lagrange_norms(&self) -> Vec<Rational> {
        let values = &self.grouped.values;
        let scale = -int(2) / &self.alpha;
        values
            .iter()
            .enumerate()
            .map(|(t, &vt)| {
                let num: BigInt = self.residual.iter().map(|&r| BigInt::from(vt - r)).product();
                let den: BigInt = values
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != t)
                    .map(|(_, &vs)| BigInt::from(vt - vs))
                    .product();
                &scale * Rational::new(num, den)
            })
            .collect()
    }
}

/// `B_{ij} = Π_{k≠j} (μ_i − λ_k)` and `V_i = Π_k (μ_i − λ_k)`, so that the
/// conditions `P(μ_i) = 0` read `V = (α/2) B (|z_1|², …, |z_n|²)ᵀ`.
pub fn secular_matrix_system(
    lambda: &DominantWeight,
    mu: &DominantWeight,
) -> Result<(Vec<Vec<BigInt>>, Vec<BigInt>)> {
    check_len(lambda.n(), mu.n())?;
    let l = lambda.entries();
    let n = l.len();
    let b = mu
        .entries()
        .iter()
        .map(|&m| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| k != j)
                        .map(|k| BigInt::from(m - l[k]))
                        .product()
                })
                .collect()
        })
        .collect();
    let v = mu
        .entries()
        .iter()
        .map(|&m| l.iter().map(|&lk| BigInt::from(m - lk)).product())
        .collect();
    Ok((b, v))
}

pub fn to_rational_matrix(b: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    b.iter()
        .map(|row| row.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect()
}

/// Evaluates the grouped `P` at `x`.
pub fn secular_polynomial_at(
    grouped: &GroupedWeight,
    alpha: &Rational,
    norms: &[Rational],
    x: i64,
) -> Rational {
    let values = &grouped.values;
    let diff = |v: i64| int(x - v);
    let forced: Rational = values
        .iter()
        .zip(&grouped.multiplicities)
        .map(|(&v, &k)| num_traits::pow(diff(v), k - 1))
        .product();
    let full: Rational = values.iter().map(|&v| diff(v)).product();
    let perturbation: Rational = norms
        .iter()
        .enumerate()
        .map(|(t, c)| {
            let others: Rational = values
                .iter()
                .enumerate()
                .filter(|&(s, _)| s != t)
                .map(|(_, &v)| diff(v))
                .product();
            c * others
        })
        .sum();
    forced * (full - alpha / int(2) * perturbation)
}

/// Whether every `μ_k` is a root of `P` built from the group norms `c`.
///
/// Only a necessary condition for membership: it ignores root
/// multiplicities. `false` when `c` does not have one entry per group.
pub fn pointwise_root_condition(
    lambda: &DominantWeight,
    alpha: &Rational,
    mu: &DominantWeight,
    norms: &[Rational],
) -> bool {
    let grouped = lambda.group();
    if norms.len() != grouped.m() || lambda.n() != mu.n() {
        return false;
    }
    mu.entries()
        .iter()
        .all(|&m| secular_polynomial_at(&grouped, alpha, norms, m).is_zero())
}

/// For scalar `λ = (a, …, a)` and `μ ≠ λ`: whether `μ` has the two-level
/// shape `(b^p, a^q)` with `b > a` when `α > 0`, or `(a^p, b^q)` with
/// `a > b` when `α < 0`, where `p, q ≥ 1`.
///
/// This classification ignores the rank of the perturbation; it differs
/// from [`cg_multiplicity`](super::cg_multiplicity) when more than one entry
/// leaves `a`.
pub fn two_level_form(
    lambda: &DominantWeight,
    alpha: &Rational,
    mu: &DominantWeight,
) -> Result<bool> {
    check_len(lambda.n(), mu.n())?;
    if !lambda.is_scalar() {
        return Err(Error::NotScalarLambda);
    }
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    if lambda == mu {
        return Ok(false);
    }
    let a = lambda.entries()[0];
    let g = mu.group();
    if g.m() != 2 {
        return Ok(false);
    }
    let (hi, lo) = (g.values[0], g.values[1]);
    Ok(if alpha.is_positive() { lo == a } else { hi == a })
}
