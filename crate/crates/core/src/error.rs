use thiserror::Error;

/// Failures raised by the symbolic engine and the numeric oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ToeplitzError {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("symbol has a zero or pole on the unit circle")]
    NotInvertibleOnCircle,
    #[error("function is not in H2: pole at {0} lies in the closed unit disc")]
    NotInHardySpace(String),
    #[error("vector is not in the kernel of the given Toeplitz operator")]
    NotInKernel,
    #[error("quotient of symbols is not admissible: {0}")]
    UndefinedQuotient(String),
    #[error("function is not outer: zero at {0} lies in the open unit disc")]
    NotOuter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("Toeplitz kernel is trivial")]
    TrivialKernel,
    #[error("multiplier fails the Carleson condition on the kernel")]
    CarlesonFailure,
    #[error("function is not square integrable on the real line: {0}")]
    NotSquareIntegrable(String),
    #[error("symbol is unbounded on the real line: {0}")]
    UnboundedSymbol(String),
    #[error("function has a pole on the unit circle")]
    PoleOnCircle,
    #[error("subspaces have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("Blaschke parameter at position {position} has modulus >= 1")]
    BlaschkeParameterOutOfDisc { position: usize },
}

impl ToeplitzError {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Self::ZeroPolynomial => "ZeroPolynomial",
            Self::ZeroFunction => "ZeroFunction",
            Self::NotInvertibleOnCircle => "NotInvertibleOnCircle",
            Self::NotInHardySpace(_) => "NotInHardySpace",
            Self::NotInKernel => "NotInKernel",
            Self::UndefinedQuotient(_) => "UndefinedQuotient",
            Self::NotOuter(_) => "NotOuter",
            Self::PreconditionViolation(_) => "PreconditionViolation",
            Self::TrivialKernel => "TrivialKernel",
            Self::CarlesonFailure => "CarlesonFailure",
            Self::NotSquareIntegrable(_) => "NotSquareIntegrable",
            Self::UnboundedSymbol(_) => "UnboundedSymbol",
            Self::PoleOnCircle => "PoleOnCircle",
            Self::DimensionMismatch(..) => "DimensionMismatch",
            Self::Syntax { .. } => "SyntaxError",
            Self::BlaschkeParameterOutOfDisc { .. } => "BlaschkeParameterOutOfDisc",
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            Self::Syntax { position, .. } | Self::BlaschkeParameterOutOfDisc { position } => {
                Some(*position)
            }
            _ => None,
        }
    }
}

pub type Result<T, E = ToeplitzError> = std::result::Result<T, E>;
