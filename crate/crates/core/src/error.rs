use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the engine can report. [`Error::exit_code`] maps each one to
/// the command-line exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{message} at {line}:{column}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid problem file: {0}")]
    Format(String),

    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("zero polynomial has no leading or initial term")]
    ZeroPolynomial,
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidField(u64),
    #[error("polynomial {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("the ideal {0} is the unit ideal")]
    UnitIdeal(String),
    #[error("{small} is not contained in {large}: generator {generator} is not a member")]
    NotContained {
        small: String,
        large: String,
        generator: String,
    },
    #[error("field with {0} elements is too small for general elements (need at least 32003)")]
    SmallField(u64),
    #[error("generators of {0} do not all have the same degree")]
    MixedDegrees(String),
    #[error("ideal {0} is not primary to the irrelevant maximal ideal")]
    NotPrimary(String),
    #[error("variable name {0} already in use")]
    NameClash(String),
    #[error("variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("unknown ideal label {0}")]
    UnknownLabel(String),
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{what} did not stabilize before the cap {cap}")]
    NonStabilization { what: String, cap: usize },
    #[error("saturation did not stabilize within {0} colon steps")]
    SaturationCap(usize),
    #[error("seeds disagree: {0}; re-randomize with a different seed")]
    SeedDisagreement(String),
    #[error("dimension anomaly at index {index}: expected dimension at most {expected}, found {found}; re-randomize")]
    DimensionAnomaly {
        index: usize,
        expected: i64,
        found: i64,
    },
    #[error("degree check failed: bivariate polynomial has degree {found}, expected {expected}")]
    DegreeCheck { expected: usize, found: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// 2 for parse errors, 3 for precondition violations, 4 for internal
    /// inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Format(_) => 2,
            Error::NonStabilization { .. }
            | Error::SaturationCap(_)
            | Error::SeedDisagreement(_)
            | Error::DimensionAnomaly { .. }
            | Error::DegreeCheck { .. }
            | Error::Inconsistent(_) => 4,
            _ => 3,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Format(_) => "format",
            Error::RingMismatch { .. } => "ring-mismatch",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::InvalidField(_) => "invalid-field",
            Error::NotHomogeneous(_) => "not-homogeneous",
            Error::UnitIdeal(_) => "unit-ideal",
            Error::NotContained { .. } => "not-contained",
            Error::SmallField(_) => "small-field",
            Error::MixedDegrees(_) => "mixed-degrees",
            Error::NotPrimary(_) => "not-primary",
            Error::NameClash(_) => "name-clash",
            Error::VariableCountMismatch(..) => "variable-count-mismatch",
            Error::UnknownLabel(_) => "unknown-label",
            Error::Unsupported(_) => "unsupported",
            Error::NonStabilization { .. } => "non-stabilization",
            Error::SaturationCap(_) => "saturation-cap",
            Error::SeedDisagreement(_) => "seed-disagreement",
            Error::DimensionAnomaly { .. } => "dimension-anomaly",
            Error::DegreeCheck { .. } => "degree-check",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}
