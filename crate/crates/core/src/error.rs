use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different polynomial rings, or an index is out of range.
    #[error("arity mismatch: {0}")]
    Arity(String),

    /// A truncated power was requested of a polynomial without constant term 1.
    #[error("polynomial has no unit constant term")]
    NotUnit,

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    /// Character values of an elementary abelian 2-group that do not decompose
    /// into nonnegative integral multiplicities.
    #[error("not a representation: {0}")]
    NotARepresentation(String),

    #[error("b_pi = {0} is odd, so the representation of a cyclic group of order 0 mod 4 is not orthogonal")]
    OddBPi(String),

    #[error("multiplicity m_{index} = {value} is odd but q = 1 mod 4 requires even multiplicities")]
    OddMultiplicity { index: usize, value: String },

    /// Character data of SL(n,q) whose derived multiplicities are not
    /// nonnegative integers.
    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("multiplicity m_{index} = {value} must be even when q = 1 mod 4")]
    Evenness { index: usize, value: String },

    /// The derived multiplicities would give a nonzero second Stiefel-Whitney
    /// class, which no orthogonal representation of SL(n,q) has.
    #[error("w_2 would be nonzero: sum of m_k * C(n-2, k-1) is odd")]
    NonSpinorial,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degree overflow: {0}")]
    DegreeOverflow(String),

    #[error("unknown builtin representation '{0}'")]
    UnknownBuiltin(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Arity(_) => "ArityError",
            Error::NotUnit => "NotUnitError",
            Error::NotSymmetric(_) => "NotSymmetricError",
            Error::NotARepresentation(_) => "NotARepresentationError",
            Error::OddBPi(_) => "OddBPiError",
            Error::OddMultiplicity { .. } => "OddMultiplicityError",
            Error::NotACharacter(_) => "NotACharacterError",
            Error::Evenness { .. } => "EvennessError",
            Error::NonSpinorial => "NonSpinorialError",
            Error::Precondition(_) => "PreconditionError",
            Error::DegreeOverflow(_) => "DegreeOverflowError",
            Error::UnknownBuiltin(_) => "UnknownBuiltinError",
            Error::Parse(_) => "ParseError",
            Error::Validation(_) => "ValidationError",
        }
    }
}
