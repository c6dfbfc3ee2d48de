use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported, an odd prime is required")]
    EvenCharacteristic(u64),
    #[error("p-adic valuation and length are undefined for zero")]
    ZeroArgument,
    #[error("binomial C({a}, {b}) has b > a")]
    BinomialOrder { a: u64, b: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("({a}, {b}) is not a two-part partition with a >= b >= 1")]
    InvalidPartition { a: usize, b: usize },
    #[error("parts {0:?} do not form a partition")]
    InvalidGeneralPartition(Vec<usize>),
    #[error("level {v} out of range for block size {b}")]
    LevelOutOfRange { v: usize, b: usize },
    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::subset::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("size violation: {0}")]
    Size(String),
    #[error("{0} is not invertible mod {1}")]
    NotInvertible(u64, u32),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("element is not a universal design")]
    NotUniversal,
    #[error("({a}, {b}) is not pointed for p = {p}")]
    NotPointed { a: usize, b: usize, p: u32 },
    #[error("({a}, {b}) is not James for p = {p}")]
    NotJames { a: usize, b: usize, p: u32 },
    #[error("system has {cols} columns, over the budget of {budget}")]
    BudgetExceeded { cols: usize, budget: usize },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("internal contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures caused by the caller's input rather than by a broken
    /// internal invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Contract(_))
    }
}
