use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A distance or function value could not be evaluated at a pair of points.
    #[error("evaluation failed for ({from}, {to}): {reason}")]
    Evaluation {
        from: String,
        to: String,
        reason: String,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("numerical degeneracy: {0}")]
    Degenerate(String),

    #[error("outside chart: {0}")]
    OutsideChart(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }

    pub(crate) fn evaluation(
        from: impl std::fmt::Debug,
        to: impl std::fmt::Debug,
        reason: impl Into<String>,
    ) -> Self {
        Error::Evaluation {
            from: format!("{from:?}"),
            to: format!("{to:?}"),
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag used in CLI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Evaluation { .. } => "evaluation",
            Error::Contract(_) => "contract",
            Error::Degenerate(_) => "degenerate",
            Error::OutsideChart(_) => "outside_chart",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    /// Process exit status: 2 for contract violations, 3 for numerical degeneracy.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Degenerate(_) => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
