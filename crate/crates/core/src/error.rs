use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {message}")]
    InvalidParameter {
        field: &'static str,
        message: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integration diverged at t = {t} s")]
    IntegrationDiverged { t: f64 },

    #[error("covariance lost positive definiteness at t = {t} s (min eigenvalue {min_eig:e})")]
    CovarianceCollapse { t: f64, min_eig: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(field: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            message: message.into(),
        }
    }

    /// Process exit code the CLI maps this error to.
    ///
    /// 1 = validation/configuration, 2 = runtime divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::IntegrationDiverged { .. } | Error::CovarianceCollapse { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
