use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// The variant names double as the stable machine-readable error codes printed
/// by the CLI and exposed through the C ABI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NonFinite: {0}")]
    NonFinite(String),
    #[error("NotHermitian: defect {defect:.3e} exceeds {bound:.3e}")]
    NotHermitian { defect: f64, bound: f64 },
    #[error("NotPositive: eigenvalue {eigenvalue:.3e} below {bound:.3e}")]
    NotPositive { eigenvalue: f64, bound: f64 },
    #[error("NoConvergence: {0}")]
    NoConvergence(String),
    #[error("SingularOperand: smallest eigenvalue {smallest:.3e} not above {threshold:.3e}")]
    SingularOperand { smallest: f64, threshold: f64 },
    #[error("SingularDenominator: P^2(x)Q^2 + (I-P^2)(x)(I-Q^2) is singular (smallest eigenvalue {smallest:.3e})")]
    SingularDenominator { smallest: f64 },
    #[error("KernelOverlap: ker(A(x)A') and ker(B(x)B') intersect (smallest eigenvalue of K^2 {smallest:.3e})")]
    KernelOverlap { smallest: f64 },
    #[error("NotInvertible: {0}")]
    NotInvertible(String),
    #[error("NotIntertwiner: residual {residual:.3e}")]
    NotIntertwiner { residual: f64 },
    #[error("OnUnitAxis: scalar module ({0}) has a vanishing leg")]
    OnUnitAxis(String),
    #[error("ArityUnsupported: operation needs arity 2, got {0}")]
    ArityUnsupported(usize),
    #[error("NotFullSuspected: {0}")]
    NotFullSuspected(String),
    #[error("NotPrime: word {0:?} is empty, non-binary or a proper power")]
    NotPrime(String),
    #[error("NotD2Shape: {0}")]
    NotD2Shape(String),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("ShapeError: {0}")]
    Shape(String),
    #[error("PythagoreanViolation: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    PythagoreanViolation { residual: f64, tol: f64 },
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable error code: the variant name.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NonFinite(_) => "NonFinite",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NotPositive { .. } => "NotPositive",
            Error::NoConvergence(_) => "NoConvergence",
            Error::SingularOperand { .. } => "SingularOperand",
            Error::SingularDenominator { .. } => "SingularDenominator",
            Error::KernelOverlap { .. } => "KernelOverlap",
            Error::NotInvertible(_) => "NotInvertible",
            Error::NotIntertwiner { .. } => "NotIntertwiner",
            Error::OnUnitAxis(_) => "OnUnitAxis",
            Error::ArityUnsupported(_) => "ArityUnsupported",
            Error::NotFullSuspected(_) => "NotFullSuspected",
            Error::NotPrime(_) => "NotPrime",
            Error::NotD2Shape(_) => "NotD2Shape",
            Error::Parse(_) => "ParseError",
            Error::Shape(_) => "ShapeError",
            Error::PythagoreanViolation { .. } => "PythagoreanViolation",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    /// Input errors (malformed files, bad arguments) as opposed to
    /// mathematical failures on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Shape(_) | Error::PythagoreanViolation { .. } | Error::InvalidArgument(_)
        )
    }
}
