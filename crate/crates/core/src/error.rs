use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not a partition: {0}")]
    NotAPartition(String),
    #[error("partition has {len} parts, more than the order {n}")]
    LengthExceedsOrder { len: usize, n: usize },
    #[error("box ({0},{1}) is outside the diagram")]
    BoxOutsideDiagram(usize, usize),
    #[error("the empty partition has no first row")]
    EmptyPartition,
    #[error("exponents are not realizable: {0}")]
    NotRealizable(String),
    #[error("enumeration would produce {count} items, above the limit {limit}")]
    EnumerationTooLarge { count: String, limit: u64 },
    #[error("arguments are not pairwise distinct")]
    RepeatedArguments,
    #[error("inner partition is not contained in the outer one")]
    NotContained,
    #[error("argument must be positive")]
    NonPositiveArgument,
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("linear system is singular")]
    SingularSystem,
    #[error("interval must satisfy a < b")]
    DegenerateInterval,
    #[error("interval endpoints must be positive")]
    NonPositiveEndpoint,
    #[error("this recurrence needs the first two parts equal")]
    FirstTwoPartsUnequal,
    #[error("this recurrence needs the first part strictly larger than the second")]
    FirstTwoPartsEqual,
    #[error("target space does not contain the source space")]
    NotAnElevation,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{count} paths exceed the limit {limit}")]
    PathCountTooLarge { count: String, limit: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("last leg of the left curve is degenerate")]
    DegenerateDirection,
    #[error("join mode unsupported: {0}")]
    UnsupportedJoin(String),
    #[error("cannot parse number: {0}")]
    Parse(String),
    #[error("sample count must be at least 2")]
    TooFewSamples,
}

pub type Result<T> = std::result::Result<T, Error>;
