use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a solution: {0}")]
    NotASolution(String),
    #[error("singular curve: discriminant is zero")]
    SingularCurve,
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("point {0} is not on the quartic")]
    NotOnQuartic(String),
    #[error("quartic is not squarefree: {0}")]
    NotSquarefree(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("exceptional point: map undefined at {coordinate}")]
    Exceptional { coordinate: String },
    #[error("empty parameter box")]
    EmptyBox,
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("pipeline emitted no solutions: {0}")]
    NoSolutions(String),
    #[error("write failed: {message}")]
    Output { kind: std::io::ErrorKind, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
