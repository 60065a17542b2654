use thiserror::Error;

/// Failure modes shared across the library.
///
/// `Parse` and `Validation` carry 1-based line numbers of the offending CSV
/// row (the header is line 1). `Invalid` covers structural problems in data
/// assembled programmatically, where no source line exists.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("line {line}: {message}")]
    Validation { line: u64, message: String },

    #[error("{0}")]
    Invalid(String),

    #[error("unknown participant {0:?}")]
    UnknownParticipant(String),

    #[error("{0}")]
    Config(String),

    #[error(
        "power iteration rooted at {root:?} did not converge: residual {residual:e} \
         after {iterations} iterations"
    )]
    Convergence {
        root: String,
        iterations: usize,
        residual: f64,
    },

    #[error("AUC undefined: {positives} positives, {negatives} negatives, {excluded} excluded")]
    UndefinedAuc {
        positives: usize,
        negatives: usize,
        excluded: usize,
    },

    #[error("lift undefined: population mean is zero over {population} participants")]
    UndefinedLift { population: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
