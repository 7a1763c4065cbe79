use thiserror::Error;

/// Errors raised by the library. Elements are carried in their serialized
/// form so that the error type stays independent of the instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent must be at least 1")]
    ZeroExponent,

    #[error("element {element:?} does not belong to instance {instance}")]
    ForeignElement { element: String, instance: String },

    #[error("cannot parse {input:?} as an element of {instance}: {reason}")]
    Parse {
        input: String,
        instance: String,
        reason: String,
    },

    #[error("generator set contains the unit element {0:?}")]
    UnitInGenerators(String),

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error(
        "stream is not strictly increasing at position {position}: {previous:?} then {next:?}"
    )]
    NotIncreasing {
        position: usize,
        previous: String,
        next: String,
    },

    #[error("budget exhausted")]
    BudgetExhausted,

    #[error("string lengths below {0:?} are unbounded; a length cap is required")]
    MissingLengthCap(String),

    #[error("fiber enumeration over a stream presentation needs a candidate hook")]
    UnsupportedPresentation,

    #[error("product strings must have at least one factor")]
    EmptyString,

    #[error("oracle would evaluate {tuples} tuples, over the limit of {limit}")]
    OracleTooLarge { tuples: u128, limit: u128 },

    #[error("series exponents must be strictly positive, found {0:?}")]
    NonPositiveExponent(String),

    #[error("infinitely many terms lie below the bound {0:?}")]
    InfiniteTruncation(String),

    #[error("cannot parse series literal {input:?}: {reason}")]
    SeriesParse { input: String, reason: String },

    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
