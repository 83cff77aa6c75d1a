//! Library side of the `bigeo` command-line tool.
//!
//! Each subcommand is an ordinary function writing to a `Write` sink, so the
//! binary stays a thin argument-parsing shell and tests can drive commands
//! directly.

use bigeo::GeoError;
use thiserror::Error;

pub mod commands;
pub mod genexpr;
pub mod io;
pub mod render;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Eval(String),
    #[error(transparent)]
    Geo(#[from] GeoError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Error category used as the message prefix.
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Eval(_) => "EvaluationError",
            CliError::Io(_) => "IoError",
            CliError::Geo(g) => match g {
                GeoError::Domain(_) => "DomainError",
                GeoError::Evaluation(_) => "EvaluationError",
                GeoError::IndexOutOfRange(_) => "IndexOutOfRange",
                GeoError::InvalidP(_) => "InvalidP",
                GeoError::DimensionMismatch(_) => "DimensionMismatch",
                GeoError::DegenerateNodes(_) => "DegenerateNodes",
                GeoError::DivisionByGeometricZero => "DivisionByGeometricZero",
            },
        }
    }

    /// Category-coded process exit status (clap reserves 2 for usage errors,
    /// which lines up with ParseError).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Eval(_) => 4,
            CliError::Io(_) => 10,
            CliError::Geo(g) => match g {
                GeoError::Domain(_) => 3,
                GeoError::Evaluation(_) => 4,
                GeoError::IndexOutOfRange(_) => 5,
                GeoError::InvalidP(_) => 6,
                GeoError::DimensionMismatch(_) => 7,
                GeoError::DegenerateNodes(_) => 8,
                GeoError::DivisionByGeometricZero => 9,
            },
        }
    }
}
