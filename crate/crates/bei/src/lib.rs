//! File formats, theorem checks, sweeps and parallel drivers on top of
//! [`bei_core`].

pub mod checks;
pub mod io;
pub mod limits;
pub mod parallel;
pub mod sweep;

pub use bei_core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] bei_core::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
