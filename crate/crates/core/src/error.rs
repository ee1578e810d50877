use thiserror::Error;

pub type Result<T, E = FlockError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum FlockError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An agent sits at or beyond a wall, where the potential is undefined.
    #[error("position {x} is outside the open domain {domain}")]
    Domain { x: f64, domain: String },

    #[error("step size fell below dt_min = {dt_min:e} at t = {t}")]
    Stiffness { t: f64, dt_min: f64 },

    #[error("non-finite state at t = {t}")]
    NonFinite { t: f64 },

    #[error("config error at `{key}`: {msg}")]
    Config { key: String, msg: String },

    #[error("config parse error: {0}")]
    ConfigSyntax(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl FlockError {
    pub(crate) fn config(key: impl Into<String>, msg: impl Into<String>) -> Self {
        FlockError::Config {
            key: key.into(),
            msg: msg.into(),
        }
    }

    /// Time at which an integration failed, when the error carries one.
    pub fn failure_time(&self) -> Option<f64> {
        match self {
            FlockError::Stiffness { t, .. } | FlockError::NonFinite { t } => Some(*t),
            _ => None,
        }
    }
}
