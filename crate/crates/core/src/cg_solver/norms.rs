//! Interchangeable solvers for the group norms `c_t`, registered by name.

use num_traits::Zero;

use super::secular::{secular_matrix_system, to_rational_matrix, SecularSystem};
use crate::error::{check_len, Error, Result};
use crate::rational::{determinant, int, solve, Rational};
use crate::weights::DominantWeight;

pub trait GroupNormSolver: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// The unique candidate group norms (possibly negative), or `None` when
    /// no `z` can reach the spectrum `μ`.
    fn solve(
        &self,
        lambda: &DominantWeight,
        mu: &DominantWeight,
        alpha: &Rational,
    ) -> Result<Option<Vec<Rational>>>;
}

/// Grouped Lagrange interpolation of the secular polynomial. Works for every
/// dominant `λ`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Lagrange;

impl GroupNormSolver for Lagrange {
    fn name(&self) -> &'static str {
        "lagrange"
    }

    fn description(&self) -> &'static str {
        "grouped Lagrange interpolation; any dominant lambda"
    }

    fn solve(
        &self,
        lambda: &DominantWeight,
        mu: &DominantWeight,
        alpha: &Rational,
    ) -> Result<Option<Vec<Rational>>> {
        Ok(SecularSystem::new(lambda, mu, alpha)?
            .ok()
            .map(|sys| sys.lagrange_norms()))
    }
}

/// Exact Gaussian elimination on `(α/2) B c = V`. Only defined for strongly
/// dominant `λ` with `det B ≠ 0`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LinearSystem;

impl GroupNormSolver for LinearSystem {
    fn name(&self) -> &'static str {
        "linear-system"
    }

    fn description(&self) -> &'static str {
        "solve (alpha/2) B c = V exactly; strongly dominant lambda, det B != 0"
    }

    fn solve(
        &self,
        lambda: &DominantWeight,
        mu: &DominantWeight,
        alpha: &Rational,
    ) -> Result<Option<Vec<Rational>>> {
        check_len(lambda.n(), mu.n())?;
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if !lambda.is_strongly_dominant() {
            return Err(Error::SolverNotApplicable {
                solver: self.name(),
                reason: format!("{lambda} is not strongly dominant"),
            });
        }
        let (b, v) = secular_matrix_system(lambda, mu)?;
        let half_alpha = alpha / int(2);
        let scaled: Vec<Vec<Rational>> = to_rational_matrix(&b)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x * &half_alpha).collect())
            .collect();
        let rhs = v.into_iter().map(Rational::from_integer).collect();
        match solve(scaled, rhs) {
            Some(c) => Ok(Some(c)),
            None => Err(Error::SolverNotApplicable {
                solver: self.name(),
                reason: format!("B is singular for lambda={lambda}, mu={mu}"),
            }),
        }
    }
}

impl std::fmt::Debug for dyn GroupNormSolver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

static SOLVERS: [&dyn GroupNormSolver; 2] = [&Lagrange, &LinearSystem];

pub fn solvers() -> &'static [&'static dyn GroupNormSolver] {
    &SOLVERS
}

pub fn solver(name: &str) -> Result<&'static dyn GroupNormSolver> {
    SOLVERS
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "solver",
            name: name.to_string(),
            known: SOLVERS.iter().map(|s| s.name()).collect::<Vec<_>>().join(", "),
        })
}

pub fn default_solver() -> &'static dyn GroupNormSolver {
    &Lagrange
}

/// `det B_{λ,μ} ≠ 0`, exactly.
pub fn matrix_invertible(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    let (b, _) = secular_matrix_system(lambda, mu)?;
    Ok(!determinant(to_rational_matrix(&b)).is_zero())
}
