use thiserror::Error;

use crate::symmetrize::SymmetrizationTrace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid vertex, loop or vertex count while building a graph.
    #[error("invalid graph: {0}")]
    Construction(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    /// Malformed graph6 input; `offset` is the byte position of the fault.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("solver did not converge after {iterations} iterations (last residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The symmetrization driver ran out of steps; the partial trace is kept.
    #[error("symmetrization budget of {steps} steps exhausted")]
    Budget {
        steps: usize,
        trace: Box<SymmetrizationTrace>,
    },

    #[error("empty class: {0}")]
    EmptyClass(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
