//! Exact Corwin–Greenleaf multiplicities `n(O^G_{(λ,α)}, O^K_μ)`.
//!
//! The intersection `O^G ∩ pr⁻¹(O^K)` modulo `K` is in bijection with the
//! orbits of the stabilizer `H = U(n_1) × … × U(n_m)` of `diag(λ)` on
//! `F_μ = { z : spec(diag(λ) + (α/2) zz*) = μ }`. The spectrum only depends on
//! the group norms `c_t = Σ_{j ∈ group t} |z_j|²`, and those are pinned down
//! uniquely by the secular polynomial, so `F_μ` is either empty or a product
//! of spheres, i.e. one `H`-orbit.

pub mod norms;
pub mod secular;

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{check_len, Error, Result};
use crate::linalg::C64;
use crate::orbit_space::ComplexVector;
use crate::rational::{is_nonnegative, to_f64, Rational};
use crate::weights::DominantWeight;

pub use norms::{default_solver, solver, solvers, GroupNormSolver, Lagrange, LinearSystem};
pub use secular::{
    pointwise_root_condition, secular_matrix_system, two_level_form, SecularSystem,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

impl Multiplicity {
    pub fn is_zero(&self) -> bool {
        *self == Multiplicity::Finite(0)
    }
}

impl std::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(k) => s.serialize_u64(*k),
            Multiplicity::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Which structural case `λ` (and `B_{λ,μ}`) fell into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolverPath {
    /// Strongly dominant `λ` with `det B_{λ,μ} ≠ 0`.
    StronglyDominantSystem,
    /// `λ = (a, …, a)`.
    ScalarWeight,
    GeneralGrouped,
}

/// One coordinate `z_index = sqrt(radicand)` of an exact witness; all other
/// coordinates are zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessEntry {
    #[serde(serialize_with = "ser_rational")]
    pub radicand: Rational,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Witness {
    pub entries: Vec<WitnessEntry>,
    #[serde(skip)]
    pub n: usize,
}

impl Witness {
    /// Floating-point vector for the oracle.
    pub fn to_vector(&self) -> ComplexVector {
        let mut z = vec![C64::new(0.0, 0.0); self.n];
        for e in &self.entries {
            z[e.index] = C64::new(to_f64(&e.radicand).sqrt(), 0.0);
        }
        ComplexVector(z)
    }

    /// `Σ_{j ∈ group t} |z_j|²` read off exactly from the radicands.
    pub fn group_norms(&self, lambda: &DominantWeight) -> Vec<Rational> {
        let offsets = lambda.group().offsets();
        let mut sums = vec![Rational::zero(); offsets.len()];
        for e in &self.entries {
            let t = offsets.partition_point(|&o| o <= e.index) - 1;
            sums[t] += &e.radicand;
        }
        sums
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CGResult {
    pub multiplicity: Multiplicity,
    /// Present iff the multiplicity is 1.
    pub group_norms: Option<Vec<Rational>>,
    /// Present iff the multiplicity is 1.
    pub witness: Option<Witness>,
    pub path: SolverPath,
    pub diagnostics: String,
}

impl Serialize for CGResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CGResult", 5)?;
        st.serialize_field("n", &self.multiplicity)?;
        st.serialize_field("path", &self.path)?;
        let c: Option<Vec<String>> = self
            .group_norms
            .as_ref()
            .map(|c| c.iter().map(|x| x.to_string()).collect());
        st.serialize_field("c", &c)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("diagnostics", &self.diagnostics)?;
        st.end()
    }
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn classify(lambda: &DominantWeight, mu: &DominantWeight) -> Result<SolverPath> {
    if lambda.is_strongly_dominant() && norms::matrix_invertible(lambda, mu)? {
        Ok(SolverPath::StronglyDominantSystem)
    } else if lambda.is_scalar() {
        Ok(SolverPath::ScalarWeight)
    } else {
        Ok(SolverPath::GeneralGrouped)
    }
}

fn fmt_norms(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `n(O^G_{(λ,α)}, O^K_μ)` with the default (Lagrange) norm solver.
pub fn cg_multiplicity(
    lambda: &DominantWeight,
    alpha: &Rational,
    mu: &DominantWeight,
) -> Result<CGResult> {
    cg_multiplicity_with(default_solver(), lambda, alpha, mu)
}

pub fn cg_multiplicity_with(
    solver: &dyn GroupNormSolver,
    lambda: &DominantWeight,
    alpha: &Rational,
    mu: &DominantWeight,
) -> Result<CGResult> {
    check_len(lambda.n(), mu.n())?;
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let path = classify(lambda, mu)?;
    let mut diagnostics = String::new();
    let candidate = solver.solve(lambda, mu, alpha)?;

    let feasible = match &candidate {
        None => {
            let reason = match SecularSystem::new(lambda, mu, alpha)? {
                Err(missing) => format!(
                    "mu contains {} {} time(s), lambda forces {}",
                    missing.value, missing.found, missing.needed
                ),
                Ok(_) => "no solution of the secular system".to_string(),
            };
            diagnostics.push_str(&reason);
            None
        }
        Some(c) => {
            if let Some((t, ct)) = c.iter().enumerate().find(|(_, x)| x.is_negative()) {
                let _ = write!(
                    diagnostics,
                    "candidate norms {} ({}): c_{} = {} < 0",
                    fmt_norms(c),
                    solver.name(),
                    t + 1,
                    ct
                );
                None
            } else {
                let _ = write!(diagnostics, "group norms {} ({})", fmt_norms(c), solver.name());
                Some(c.clone())
            }
        }
    };

    Ok(match feasible {
        Some(c) => {
            let witness = witness_from_norms(lambda, &c);
            CGResult {
                multiplicity: Multiplicity::Finite(1),
                group_norms: Some(c),
                witness: Some(witness),
                path,
                diagnostics,
            }
        }
        None => CGResult {
            multiplicity: Multiplicity::Finite(0),
            group_norms: None,
            witness: None,
            path,
            diagnostics,
        },
    })
}

fn witness_from_norms(lambda: &DominantWeight, c: &[Rational]) -> Witness {
    let offsets = lambda.group().offsets();
    Witness {
        entries: offsets
            .iter()
            .zip(c)
            .map(|(&index, ct)| WitnessEntry {
                radicand: ct.clone(),
                index,
            })
            .collect(),
        n: lambda.n(),
    }
}

/// `z` with `z_j = sqrt(c_t)` on the first coordinate of each group `t`;
/// `None` when the multiplicity is 0.
pub fn witness(
    lambda: &DominantWeight,
    alpha: &Rational,
    mu: &DominantWeight,
) -> Result<Option<Witness>> {
    Ok(cg_multiplicity(lambda, alpha, mu)?.witness)
}

/// Candidate group norms from the default solver.
pub fn solve_group_norms(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    alpha: &Rational,
) -> Result<Option<Vec<Rational>>> {
    default_solver().solve(lambda, mu, alpha)
}

pub fn all_nonnegative(c: &[Rational]) -> bool {
    c.iter().all(is_nonnegative)
}
