use thiserror::Error;

use crate::algebra::AlgebraId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("singular system: rank {rank} < {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("inconsistent linear system")]
    Inconsistent,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("weights belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(AlgebraId, AlgebraId),

    #[error("root is isotropic; no coroot")]
    IsotropicRoot,

    #[error("root is not an odd isotropic root")]
    NotOddIsotropic,

    #[error("root is not a member of the simple root set")]
    NotInRootSet,

    #[error("root data: {0}")]
    RootData(String),

    #[error("critical level k = {0}")]
    CriticalLevel(String),

    #[error("level k = {k} is outside the unitarity range of {algebra}")]
    OutOfRange { algebra: AlgebraId, k: String },

    #[error("weight {0:?} is not in P+_k")]
    NotInPk(Vec<u32>),

    #[error("a concrete ell0 is required")]
    SymbolicEll0,

    #[error("{0}")]
    Invalid(String),
}
