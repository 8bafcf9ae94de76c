use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight is not dominant: entry {0} is smaller than entry {next}", next = .0 + 1)]
    NotDominant(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty weight")]
    EmptyWeight,
    #[error("central parameter must be nonzero")]
    ZeroCentralParameter,
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("lambda is not a scalar weight (a,...,a)")]
    NotScalarLambda,
    #[error("Weyl denominator vanishes at the given phases")]
    DegeneratePhases,
    #[error("eigensolver did not converge after {0} sweeps")]
    NotConverged(usize),
    #[error("solver `{solver}` does not apply: {reason}")]
    SolverNotApplicable { solver: &'static str, reason: String },
    #[error("unknown {kind} `{name}` (known: {known})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        known: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}
