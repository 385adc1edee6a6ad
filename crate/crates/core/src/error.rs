use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad file, bad coefficient, ring mismatch).
    #[error("input error: {0}")]
    Input(String),

    /// A contraction or pairing was asked for at an impossible degree.
    #[error("degree error: {0}")]
    Degree(String),

    /// Matrix dimensions do not fit the requested operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// Symbolic computation refused because it exceeds the supported size.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// The catalecticant determinant vanishes, so there is no Gorenstein-linear resolution.
    #[error("degenerate inverse system: catalecticant determinant is zero")]
    DegenerateInverseSystem,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
