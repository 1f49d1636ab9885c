use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("minimum degree is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("colors ({0}, {1}, {2}) are not admissible")]
    Inadmissible(i64, i64, i64),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("exponents {0:?} do not share a common residue class")]
    Grading(Vec<i64>),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("program is not closed: {0} open points remain")]
    NotClosed(usize),
    #[error("arity break at slice {index}: {msg}")]
    ArityBreak { index: usize, msg: String },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arc label {label} appears {count} times (expected exactly 2)")]
    ArcMultiplicity { label: i64, count: usize },
    #[error("state assigns {assigned} of {total} crossings")]
    PartialState { assigned: usize, total: usize },
    #[error("twist region {region} would have {count} crossings")]
    NegativeTwist { region: usize, count: i64 },
    #[error("{what} budget exceeded: cap {cap}, needed {needed}")]
    Budget { what: String, cap: u64, needed: u64 },
    #[error("diagram is not adequate: {0}")]
    NotAdequate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("window too short: need {needed} coefficients, have {available}")]
    InsufficientWindow { needed: usize, available: usize },
    #[error("range {start}..{end} is empty")]
    EmptyRange { start: i64, end: i64 },
    #[error("coefficient list is empty")]
    EmptyList,
    #[error("coefficient list starts with zero")]
    LeadingZero,
    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;
