use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value elements belong to different spaces")]
    SpaceMismatch,
    #[error("complex scalar supplied to a real-field space")]
    FieldMismatch,
    #[error("value space has no inner product compatible with its norm")]
    NotHilbert,
    #[error("operation requires an undirected graph")]
    DirectedUnsupported,
    #[error("vertex {0} is isolated; the normalized Laplacian is undefined")]
    IsolatedVertex(usize),
    #[error("the {0} family has no directed variant")]
    UnsupportedDirected(&'static str),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not real symmetric (max deviation {deviation:e})")]
    NotSymmetric { deviation: f64 },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is not unitary: max deviation {deviation:e} at entry ({row}, {col})")]
    NotUnitary { deviation: f64, row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exponent order violated: need p < q, got p = {p}, q = {q}")]
    ExponentOrder { p: String, q: String },
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("(p, q) = ({p}, {q}) is not an exact regime (need q = inf or p = 1)")]
    NotExactRegime { p: String, q: String },
    #[error("signal is identically zero")]
    ZeroSignal,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("translation at vertex {m} is not invertible; vanishing spectral indices K0 = {kernel:?}")]
    NotInvertible { m: usize, kernel: Vec<usize> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
