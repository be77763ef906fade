use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A state left the admissible domain (e.g. non-positive load voltage).
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid or inconsistent configuration.
    #[error("config error: {0}")]
    Config(String),

    /// The forward integrator produced an inadmissible state.
    #[error("integration failure at t = {time}: {what}")]
    Integration { time: f64, what: String },

    /// An API was called with mismatched or unsupported arguments.
    #[error("usage error: {0}")]
    Usage(String),

    /// A numerical procedure failed (singular solve, non-finite value, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Kernel bundle is malformed or inconsistent with the requesting config.
    #[error("bundle error: {0}")]
    Bundle(String),

    /// A pipeline stage failed; partial artifacts are left on disk.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
