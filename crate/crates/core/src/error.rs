use thiserror::Error;

/// Errors shared by every evaluator in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("argument {0} lies on the branch cut (-inf, 0] (shifted cuts included)")]
    DomainCut(String),
    #[error("pole at {0}")]
    PoleAt(String),
    #[error("series argument |z| = {0} outside the unit disk")]
    DomainRadius(f64),
    #[error("argument outside the admissible domain: {0}")]
    DomainError(String),
    #[error("sphere points coincide (distance {0:.3e})")]
    CoincidentPoints(f64),
    #[error("integral diverges for these parameters: {0}")]
    DivergentIntegral(String),
    #[error("sampling budget exhausted: {0}")]
    BudgetExceeded(String),
    #[error("parameters violate the theorem hypotheses: {0}")]
    HypothesisViolation(String),
    #[error("quadrature failed to certify the requested tolerance: {0}")]
    QuadratureFailure(String),
    #[error("series tail not below tolerance after {terms} terms (certified tail {tail:.3e})")]
    TruncationFailure { terms: usize, tail: f64 },
    #[error("alternating-series cancellation leaves no certified digits ({lost:.1} lost of 15.9)")]
    CancellationLoss { lost: f64 },
    #[error("Richardson iterates diverge: {0}")]
    ExtrapolationUnstable(String),
    #[error("pairing grid too coarse: kernel width {kernel:.3e} < 2 grid steps {step:.3e}")]
    GridTooCoarse { kernel: f64, step: f64 },
    #[error("non-finite value produced in {0}")]
    NonFinite(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
