use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("Weyl group generation exceeded {0} elements (datum not of finite type?)")]
    GenerationLimit(usize),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("{0} is not dominant")]
    NotDominant(String),

    #[error("{0} is not a positive coroot")]
    NotPositiveCoroot(String),

    #[error("height {height} exceeds the cap {cap}")]
    HeightCap { height: i64, cap: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("scalar context mismatch: q = {0} vs q = {1}")]
    ContextMismatch(u64, u64),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("series operands live over different root data")]
    DatumMismatch,

    #[error("comparison height {height} exceeds series bound {bound}")]
    HeightExceedsBound { height: u32, bound: u32 },

    #[error("{0} is outside the cone of the series")]
    OutsideCone(String),

    #[error("character has a zero value")]
    ZeroCharacterValue,

    #[error("character is not regular")]
    NotRegular,

    #[error("degree mismatch: profile sums to {profile}, bundle has degree {bundle}")]
    DegreeMismatch { profile: i64, bundle: i64 },

    #[error("non-integral count: {0}")]
    NonIntegral(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
