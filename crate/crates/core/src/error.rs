use alloc::string::String;

/// Errors raised by the algebraic pipelines.
///
/// Outcomes such as "inconclusive" or "hypothesis fails" are not errors; they
/// are returned as ordinary values by the certifying operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial degree {degree} is too small (need at least {min})")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial has {0} real roots")]
    RealRootsPresent(usize),
    #[error("conjugate pairing of roots is ambiguous")]
    DegeneratePairing,
    #[error("root iteration did not converge")]
    NotConverged,
    #[error("invalid eigenvalue selection: {0}")]
    InvalidSelection(String),
    #[error("condition number 2^{condition_bits} too large for {precision_bits}-bit precision")]
    PrecisionInsufficient { condition_bits: i64, precision_bits: u32 },
    #[error("free rank {0} is odd; not the abelianization of a Kähler group")]
    OddFreeRank(usize),
    #[error(
        "odd rank obstruction: rank ker = {kernel}, rank im = {image}, rank coker = {cokernel}"
    )]
    OddRankObstruction { kernel: usize, image: usize, cokernel: usize },
    #[error("homomorphism has nontrivial torsion; split it first")]
    TorsionPresent,
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("malformed realization plan: {0}")]
    MalformedPlan(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;
