use thiserror::Error;

use crate::catalog::MismatchWitness;
use crate::synthesis::FeasibilityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
///
/// Constructor self-checks are not represented here: a constructor whose
/// output fails verification has a bug and panics instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("vectors do not span Z_2^{dim} (rank {rank})")]
    NotAFrame { dim: usize, rank: usize },
    #[error("not a permutation of 0..{len}")]
    InvalidPermutation { len: usize },
    #[error("alpha has weight {weight}, which does not have the parity of d = {dim}")]
    ParityMismatch { weight: usize, dim: usize },
    #[error("K = d = {dim} forces a basis, so alpha must be all ones")]
    BasisForced { dim: usize },
    #[error("invalid shape: need K >= d >= 1, got d = {dim}, K = {len}")]
    InvalidShape { dim: usize, len: usize },
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("alpha has length {len}, shorter than d = {dim}")]
    InsufficientLength { dim: usize, len: usize },
    #[error("no Parseval frame of length d + 1 = {len} has a dual with all cross dot products zero")]
    ParsevalDualUnattainable { len: usize },
    #[error("matrix has full rank; the block decomposition needs rank < d")]
    FullRank,
    #[error("requested {requested} columns but the minimal factor needs {minimum}")]
    TooFewColumns { requested: usize, minimum: usize },
    #[error("K = {len} is below the minimal frame size {minimum}")]
    TooShort { len: usize, minimum: usize },
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("infeasible: {0}")]
    Infeasible(FeasibilityReport),
    #[error("enumerating 2^{exponent} duals exceeds the limit 2^{limit}; force to override")]
    EnumerationGuard { exponent: usize, limit: usize },
    #[error("{multisets} multisets exceed the enumeration budget {budget}")]
    ResourceGuard { multisets: u128, budget: u128 },
    #[error("theory and exhaustive search disagree: {0}")]
    Mismatch(Box<MismatchWitness>),
    #[error("{0}")]
    InvalidInput(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
