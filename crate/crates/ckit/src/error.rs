use thiserror::Error;

#[derive(Debug, Error)]
pub enum CkError {
    #[error("zero Alexander polynomial")]
    ZeroAlexander,
    #[error("not a Seifert matrix: {0}")]
    NotSeifert(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("signature undefined at jump; use local average separately")]
    SignatureAtJump,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown knot '{0}'; known names: {1}")]
    UnknownKnot(String, String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CkError>;
