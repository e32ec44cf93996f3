use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("halfspaces do not describe a bounded region")]
    Unbounded,
    #[error("input spans an affine space of dimension {found}, expected {dim}")]
    NotFullDimensional { dim: usize, found: usize },
    #[error("input describes an empty set")]
    Empty,
    #[error("unsupported dimension {dim}: {reason}")]
    UnsupportedDimension { dim: usize, reason: &'static str },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("invalid JSON")]
    Json(#[from] serde_json::Error),
    #[error("not a parallelohedron: {0}")]
    NotParallelohedron(crate::parallelohedron::VenkovWitness),
    #[error("ridge {0} is not primitive")]
    NotPrimitive(usize),
    #[error("inconsistent input: {0}")]
    InputCorruption(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("not a lattice vector: {0}")]
    NotInLattice(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown catalog entry '{0}'")]
    UnknownCatalog(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
