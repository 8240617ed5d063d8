use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The CLI maps every variant to exit status 1 and reports [`Error::kind`]
/// in its error JSON.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("{0} is a rational square; Q(sqrt d) would not be a field")]
    NotAField(String),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid weight {0}: weights must be at least 2")]
    InvalidWeight(i64),
    #[error("element has {got} coefficients but the weight type has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generator {0} has infinite order")]
    NonTorsionGenerator(String),
    #[error("torsion group of order {order} exceeds the enumeration bound {bound}")]
    TorsionTooLarge { order: u64, bound: u64 },
    #[error("genus {0} is not a nonnegative integer")]
    NonIntegralGenus(String),
    #[error("multiplicity n*d/p = {0} is not an integer")]
    NonIntegralMultiplicity(String),
    #[error("Hurwitz identity fails: n*chi = {lhs} but quotient chi = {rhs}")]
    HurwitzViolation { lhs: String, rhs: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid tube action (rank {rank}, order {order}, k {k}): {reason}")]
    InvalidAction {
        rank: u64,
        order: u64,
        k: u64,
        reason: &'static str,
    },
    #[error("parameter {0} is degenerate (0 or 1)")]
    DegenerateParameter(String),
    #[error("unknown tubular row {0:?}")]
    UnknownRow(String),
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("index x{index} out of range for a weight type of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("integer overflow while evaluating {0}")]
    Overflow(String),
    #[error("genus must be positive, got {0}")]
    InvalidGenus(u64),
}

impl Error {
    /// Stable snake_case identifier used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch { .. } => "field_mismatch",
            Error::NotAField(_) => "not_a_field",
            Error::ParseRational(_) => "parse_rational",
            Error::InvalidWeight(_) => "invalid_weight",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::NonTorsionGenerator(_) => "non_torsion_generator",
            Error::TorsionTooLarge { .. } => "torsion_too_large",
            Error::NonIntegralGenus(_) => "non_integral_genus",
            Error::NonIntegralMultiplicity(_) => "non_integral_multiplicity",
            Error::HurwitzViolation { .. } => "hurwitz_violation",
            Error::NotPrime(_) => "not_prime",
            Error::InvalidAction { .. } => "invalid_action",
            Error::DegenerateParameter(_) => "degenerate_parameter",
            Error::UnknownRow(_) => "unknown_row",
            Error::Syntax { .. } => "syntax_error",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::Overflow(_) => "overflow",
            Error::InvalidGenus(_) => "invalid_genus",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
