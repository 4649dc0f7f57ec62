use thiserror::Error;

use crate::report::Report;
use crate::scalar::{FieldSpec, ScalarError};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} has not passed the Hopf axiom suite")]
    Unverified(String),
    #[error("convolution domains do not match")]
    ConvolutionMismatch,
    #[error("no two-sided convolution inverse exists")]
    NoInverse,
    #[error("enumeration too large: {p}^{dim} = {size} candidates exceeds bound {bound}")]
    EnumerationTooLarge { p: u64, dim: usize, size: String, bound: u64 },
    #[error("field {0} is infinite; enumeration needs a prime field")]
    InfiniteField(FieldSpec),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("axioms failed for {name}")]
    AxiomFailure { name: String, report: Box<Report> },
    #[error("not a character: {0}")]
    NotCharacter(String),
    #[error("cocycle mismatch: {0}")]
    CocycleMismatch(String),
    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn axioms(name: impl Into<String>, report: Report) -> Self {
        Error::AxiomFailure {
            name: name.into(),
            report: Box::new(report),
        }
    }
}

/// Fails with [`Error::AxiomFailure`] unless the report passed.
pub(crate) fn require(name: &str, report: Report) -> Result<Report> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::axioms(name, report))
    }
}
