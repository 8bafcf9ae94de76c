//! Exact Corwin–Greenleaf multiplicities `n(O^G_{(λ,α)}, O^K_μ)` and the
//! branching multiplicities `m(π_{(λ,α)}, τ_μ)` for the Heisenberg motion
//! group `G = U(n) ⋉ H_n`, with a floating-point oracle to check them.

pub mod branching;
pub mod cg_solver;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod orbit_space;
pub mod rational;
pub mod weights;

pub use branching::{
    branch_table, branching_multiplicity, compare_n_m, fock_character_check, tensor_with_dual_sym,
    AlphaSign, BranchingTable, CompareRow, FockModel,
};
pub use cg_solver::{cg_multiplicity, witness, CGResult, Multiplicity, SolverPath, Witness};
pub use error::{Error, Result};
pub use oracle::{randomized_search, verify_membership, OracleConfig};
pub use orbit_space::{ComplexVector, HermitianMatrix, LinearForm};
pub use rational::{parse_rational, Rational};
pub use weights::{interlaces_below, weyl_dimension, DominantWeight};
