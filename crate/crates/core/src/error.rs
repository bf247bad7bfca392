use alloc::string::String;

/// Errors reported by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("zero has no square class")]
    ZeroClass,
    #[error("mirror vector is isotropic")]
    IsotropicMirror,
    #[error("quadratic space is singular")]
    SingularSpace,
    #[error("matrix is not an isometry of the space")]
    NotIsometry,
    #[error("space must have signature (k, 1, 0), found ({p}, {q}, {r})")]
    WrongSignature { p: usize, q: usize, r: usize },
    #[error("witness vector is not time-like")]
    NotTimelike,
    #[error("{0} generators exceed the 64-generator blade limit")]
    TooManyGenerators(usize),
    #[error("multivectors live over different spaces")]
    SpaceMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("algebra dimension 2^{dim} exceeds the dense-solve limit 2^{limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("element is not in the Clifford group")]
    NotInCliffordGroup,
    #[error("x·x̄ is not a scalar")]
    NormNotScalar,
    #[error("integral structure needs q(g_i) and 2S(g_i, g_j) integral (simply-laced only)")]
    UnsupportedOrder,
    #[error("space is not of the shape V ⊥ P with a trailing hyperbolic pair")]
    NotHyperbolicExtension,
    #[error("Vahlen condition {0} fails")]
    NotVahlen(u8),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is reducible; split it into irreducible components first")]
    Reducible,
    #[error("invalid finite type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("construction needs a simply-laced type")]
    NotSimplyLaced,
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
