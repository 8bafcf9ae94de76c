//! Conventions for the `K`-types `τ_{α,k}` of the Fock space `W_α`,
//! registered by name.
//!
//! `W_α = ⊕_k τ_{α,k}` with `τ_{α,k}` either the dual symmetric power
//! `τ_{(0,…,0,−k)}` or the symmetric power `τ_{(k,0,…,0)}`.

use serde::{Deserialize, Serialize};

use super::{tensor_with_dual_sym, tensor_with_sym};
use crate::error::{check_len, Error, Result};
use crate::rational::Rational;
use crate::weights::{interlaces_below, DominantWeight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlphaSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl AlphaSign {
    pub fn of(alpha: &Rational) -> Result<Self> {
        use num_traits::{Signed, Zero};
        if alpha.is_zero() {
            Err(Error::ZeroAlpha)
        } else if alpha.is_positive() {
            Ok(AlphaSign::Positive)
        } else {
            Ok(AlphaSign::Negative)
        }
    }
}

impl std::str::FromStr for AlphaSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "pos" | "positive" | "+1" | "1" => Ok(AlphaSign::Positive),
            "-" | "neg" | "negative" | "-1" => Ok(AlphaSign::Negative),
            other => Err(Error::Parse(format!("alpha sign `{other}`: expected + or -"))),
        }
    }
}

impl std::fmt::Display for AlphaSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AlphaSign::Positive => "+",
            AlphaSign::Negative => "-",
        })
    }
}

/// Which one-row type `τ_{α,k}` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockType {
    /// `τ_{(0,…,0,−k)}`.
    DualSym,
    /// `τ_{(k,0,…,0)}`.
    Sym,
}

impl FockType {
    pub fn highest_weight(self, n: usize, k: u64) -> DominantWeight {
        let mut v = vec![0i64; n];
        match self {
            FockType::DualSym => v[n - 1] = -(k as i64),
            FockType::Sym => v[0] = k as i64,
        }
        DominantWeight::new(v).expect("one-row weights are dominant")
    }

    /// Constituents of `τ_λ ⊗ τ_{α,k}`.
    pub fn constituents(self, lambda: &DominantWeight, k: u64) -> Vec<DominantWeight> {
        match self {
            FockType::DualSym => tensor_with_dual_sym(lambda, k),
            FockType::Sym => tensor_with_sym(lambda, k),
        }
    }

    /// The unique `k` with `τ_μ ⊂ τ_λ ⊗ τ_{α,k}`, if any.
    pub fn degree(self, lambda: &DominantWeight, mu: &DominantWeight) -> Result<Option<u64>> {
        check_len(lambda.n(), mu.n())?;
        let (hi, lo) = match self {
            FockType::DualSym => (lambda, mu),
            FockType::Sym => (mu, lambda),
        };
        Ok(interlaces_below(hi, lo)?.then(|| (hi.sum() - lo.sum()) as u64))
    }
}

pub trait FockModel: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn fock_type(&self, sign: AlphaSign) -> FockType;
}

/// `τ_{(0,…,0,−k)}` for both signs of `α`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Standard;

impl FockModel for Standard {
    fn name(&self) -> &'static str {
        "standard"
    }

    fn description(&self) -> &'static str {
        "tau_(0,...,0,-k) for both signs of alpha"
    }

    fn fock_type(&self, _sign: AlphaSign) -> FockType {
        FockType::DualSym
    }
}

/// `τ_{(0,…,0,−k)}` for `α > 0`, `τ_{(k,0,…,0)}` for `α < 0`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Conjugate;

impl FockModel for Conjugate {
    fn name(&self) -> &'static str {
        "conjugate"
    }

    fn description(&self) -> &'static str {
        "tau_(0,...,0,-k) for alpha > 0, tau_(k,0,...,0) for alpha < 0"
    }

    fn fock_type(&self, sign: AlphaSign) -> FockType {
        match sign {
            AlphaSign::Positive => FockType::DualSym,
            AlphaSign::Negative => FockType::Sym,
        }
    }
}

/// `τ_{(k,0,…,0)}` for `α > 0`, `τ_{(0,…,0,−k)}` for `α < 0`: the types whose
/// strips move in the same direction as the spectrum of
/// `diag(λ) + (α/2) zz*`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SignMatched;

impl FockModel for SignMatched {
    fn name(&self) -> &'static str {
        "sign-matched"
    }

    fn description(&self) -> &'static str {
        "tau_(k,0,...,0) for alpha > 0, tau_(0,...,0,-k) for alpha < 0"
    }

    fn fock_type(&self, sign: AlphaSign) -> FockType {
        match sign {
            AlphaSign::Positive => FockType::Sym,
            AlphaSign::Negative => FockType::DualSym,
        }
    }
}

impl std::fmt::Debug for dyn FockModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

static MODELS: [&dyn FockModel; 3] = [&Standard, &Conjugate, &SignMatched];

pub fn conventions() -> &'static [&'static dyn FockModel] {
    &MODELS
}

pub fn convention(name: &str) -> Result<&'static dyn FockModel> {
    MODELS
        .iter()
        .copied()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "convention",
            name: name.to_string(),
            known: MODELS.iter().map(|m| m.name()).collect::<Vec<_>>().join(", "),
        })
}

pub fn default_convention() -> &'static dyn FockModel {
    &Standard
}
