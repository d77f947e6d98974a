use thiserror::Error;

/// Errors raised by the linear algebra kernel, the pentad operations, the
/// graded engine and the builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("A must be invertible")]
    SingularA,
    #[error("Gamma must be diagonal")]
    NonDiagonalGamma,
    #[error("Gamma must have nonzero diagonal entries")]
    SingularGamma,
    #[error("r and n must be positive")]
    EmptyPentad,
    #[error("matrices have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("permutation search is limited to n <= {limit}, got {n}")]
    SearchTooLarge { n: usize, limit: usize },
    #[error("A is not symmetric")]
    AsymmetricPentad,
    #[error("inputs are not symmetric")]
    AsymmetricInputs,
    #[error("requested degree {requested} exceeds the truncation cap {cap}")]
    TruncationLimit { requested: usize, cap: usize },
    #[error("algebra is not extended to its declared degree")]
    NotFullyExtended,
    #[error("module weights are not opposite: {0}")]
    WeightMismatch(String),
    #[error("Cartan data is not symmetrizable by the given root norms")]
    NotSymmetrizable,
    #[error("input matrix is singular")]
    SingularInput,
    #[error("pentad is not regular")]
    NotRegular,
    #[error("weight table entries must be nonnegative integers")]
    NegativeWeightEntry,
    #[error("unknown finite type {0}")]
    UnknownCartanType(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
