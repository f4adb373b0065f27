use thiserror::Error;

/// Everything that can go wrong inside the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("pole of {func} at {at}")]
    Pole { func: &'static str, at: String },
    #[error("{what} did not converge after {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("request too expensive: {0}")]
    Complexity(String),
    #[error("imaginary residue {residue:e} left after conjugate pairing")]
    Conjugacy { residue: f64 },
    #[error("pole sequences collide: {0}")]
    PoleCollision(String),
    #[error("contour tail {tail:e} above target {target:e}")]
    Tail { tail: f64, target: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn pole(func: &'static str, at: impl std::fmt::Display) -> Self {
        Error::Pole {
            func,
            at: at.to_string(),
        }
    }
}
