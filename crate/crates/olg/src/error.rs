use thiserror::Error;

/// Every failure the library reports. The variant name doubles as the
/// machine-readable error code printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero: division by zero in a cyclotomic field")]
    DivisionByZero,
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("NonHomogeneous: terms have different weighted degrees ({0})")]
    NonHomogeneous(String),
    #[error("NotSquare: {0}")]
    NotSquare(String),
    #[error("Degenerate: {0}")]
    Degenerate(String),
    #[error("BadWeights: {0}")]
    BadWeights(String),
    #[error("NotClassifiable: {0}")]
    NotClassifiable(String),
    #[error("NotASymmetry: {0}")]
    NotASymmetry(String),
    #[error("NonIsolated: {0}")]
    NonIsolated(String),
    #[error("SocleDegenerate: the Hessian class vanishes in {0}")]
    SocleDegenerate(String),
    #[error("IdentityElement: operation needs a non-identity group element")]
    IdentityElement,
    #[error("MissingCurving: the algebra has no curving element")]
    MissingCurving,
    #[error("NotInvariant: {0}")]
    NotInvariant(String),
    #[error("SingularTwist: {0}")]
    SingularTwist(String),
    #[error("NonIdentityTarget: product lands in sector {0}, not the identity sector")]
    NonIdentityTarget(String),
    #[error("UnsupportedWord: {0}")]
    UnsupportedWord(String),
}

impl Error {
    /// Short error name, e.g. `NotClassifiable`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse(_) => "Parse",
            Error::NonHomogeneous(_) => "NonHomogeneous",
            Error::NotSquare(_) => "NotSquare",
            Error::Degenerate(_) => "Degenerate",
            Error::BadWeights(_) => "BadWeights",
            Error::NotClassifiable(_) => "NotClassifiable",
            Error::NotASymmetry(_) => "NotASymmetry",
            Error::NonIsolated(_) => "NonIsolated",
            Error::SocleDegenerate(_) => "SocleDegenerate",
            Error::IdentityElement => "IdentityElement",
            Error::MissingCurving => "MissingCurving",
            Error::NotInvariant(_) => "NotInvariant",
            Error::SingularTwist(_) => "SingularTwist",
            Error::NonIdentityTarget(_) => "NonIdentityTarget",
            Error::UnsupportedWord(_) => "UnsupportedWord",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
