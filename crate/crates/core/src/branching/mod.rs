//! Branching of `π_{(λ,α)}|_K = ⊕_k τ_λ ⊗ τ_{α,k}` by the Pieri rule.

pub mod character;
pub mod fock;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cg_solver::{cg_multiplicity, two_level_form, Multiplicity};
use crate::error::{check_len, Result};
use crate::rational::Rational;
use crate::weights::{weyl_dimension, DominantWeight};

pub use character::{complete_homogeneous, fock_character_check, weyl_character};
pub use fock::{
    convention, conventions, default_convention, AlphaSign, Conjugate, FockModel, FockType,
    SignMatched, Standard,
};

/// Constituents of `τ_λ ⊗ τ_{(0,…,0,−k)}`: the `ν` with `λ/ν` a horizontal
/// strip of size `k`, each once, lexicographically decreasing.
pub fn tensor_with_dual_sym(lambda: &DominantWeight, k: u64) -> Vec<DominantWeight> {
    fn rec(l: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        let n = l.len();
        if i + 1 == n {
            cur.push(l[i] - left);
            out.push(DominantWeight::new(cur.clone()).expect("strip keeps dominance"));
            cur.pop();
            return;
        }
        let room = (l[i] - l[i + 1]).min(left);
        for r in 0..=room {
            cur.push(l[i] - r);
            rec(l, i + 1, left - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.entries(), 0, k as i64, &mut Vec::with_capacity(lambda.n()), &mut out);
    out
}

/// `(λ_1, …, λ_n) ↦ (−λ_n, …, −λ_1)`, the highest weight of the dual.
pub fn dual_weight(lambda: &DominantWeight) -> DominantWeight {
    DominantWeight::new(lambda.entries().iter().rev().map(|x| -x).collect())
        .expect("dual of a dominant weight is dominant")
}

/// Constituents of `τ_λ ⊗ τ_{(k,0,…,0)}`, obtained by dualizing
/// [`tensor_with_dual_sym`].
pub fn tensor_with_sym(lambda: &DominantWeight, k: u64) -> Vec<DominantWeight> {
    let mut out: Vec<DominantWeight> = tensor_with_dual_sym(&dual_weight(lambda), k)
        .iter()
        .map(dual_weight)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Branching {
    pub m: u8,
    /// The Fock degree that would have to carry `τ_μ`: `Σ(λ−μ)` for
    /// `τ_{(0,…,0,−k)}`, `Σ(μ−λ)` for `τ_{(k,0,…,0)}`.
    pub k: i64,
}

/// `m(π_{(λ,α)}, τ_μ)` by the closed-form interlacing test.
pub fn branching_multiplicity(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    sign: AlphaSign,
    model: &dyn FockModel,
) -> Result<Branching> {
    check_len(lambda.n(), mu.n())?;
    let ty = model.fock_type(sign);
    let k = match ty {
        FockType::DualSym => lambda.sum() - mu.sum(),
        FockType::Sym => mu.sum() - lambda.sum(),
    };
    let m = u8::from(ty.degree(lambda, mu)?.is_some());
    Ok(Branching { m, k })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchRow {
    pub k: u64,
    pub constituents: Vec<DominantWeight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchingTable {
    pub lambda: DominantWeight,
    pub alpha_sign: AlphaSign,
    pub convention: &'static str,
    pub rows: Vec<BranchRow>,
}

impl BranchingTable {
    /// `(k, ν, dim ν)` in row order, the CSV layout.
    pub fn records(&self) -> Vec<(u64, DominantWeight, BigInt)> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.constituents
                    .iter()
                    .map(move |nu| (r.k, nu.clone(), weyl_dimension(nu)))
            })
            .collect()
    }
}

pub fn branch_table(
    lambda: &DominantWeight,
    sign: AlphaSign,
    model: &dyn FockModel,
    k_max: u64,
) -> BranchingTable {
    let ty = model.fock_type(sign);
    let rows = (0..=k_max)
        .into_par_iter()
        .map(|k| BranchRow {
            k,
            constituents: ty.constituents(lambda, k),
        })
        .collect();
    BranchingTable {
        lambda: lambda.clone(),
        alpha_sign: sign,
        convention: model.name(),
        rows,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub mu: DominantWeight,
    pub n: Multiplicity,
    pub m: u8,
    /// `m ≠ 0 ⇒ n ≠ 0`.
    pub agree: bool,
    /// Scalar `λ` and `μ ≠ λ` only: the two-level classification of
    /// [`two_level_form`] disagrees with `n ≠ 0`.
    pub scalar_form_flag: bool,
}

/// `n` and `m` side by side for each `μ`, in the order given.
pub fn compare_n_m(
    lambda: &DominantWeight,
    alpha: &Rational,
    mus: &[DominantWeight],
    model: &dyn FockModel,
) -> Result<Vec<CompareRow>> {
    let sign = AlphaSign::of(alpha)?;
    mus.par_iter()
        .map(|mu| {
            let n = cg_multiplicity(lambda, alpha, mu)?.multiplicity;
            let m = branching_multiplicity(lambda, mu, sign, model)?.m;
            let scalar_form_flag = lambda.is_scalar()
                && lambda != mu
                && two_level_form(lambda, alpha, mu)? != !n.is_zero();
            Ok(CompareRow {
                mu: mu.clone(),
                n,
                m,
                agree: m == 0 || !n.is_zero(),
                scalar_form_flag,
            })
        })
        .collect()
}

/// `C(n+k−1, k)`, the dimension of the degree-`k` polynomials in `n`
/// variables.
pub fn fock_degree_dimension(n: usize, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 1..=k {
        acc = acc * BigInt::from(n as u64 - 1 + i) / BigInt::from(i);
    }
    debug_assert!(!acc.is_zero());
    acc
}
