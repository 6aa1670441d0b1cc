use alloc::string::String;
use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex label was not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge `(u, u)` was supplied.
    SelfLoop(usize),
    /// The same unordered pair was supplied twice.
    DuplicateEdge(usize, usize),
    /// The vertex count exceeds what the representation supports.
    TooManyVertices { n: usize, max: usize },
    /// A constructor argument is outside its domain.
    InvalidArgument(String),
    /// Malformed graph6 input.
    Graph6(String),
    /// A probability outside `[0, 1]` (or outside `(0, 1)` where required).
    ProbabilityOutOfRange(String),
    /// An exact computation would exceed a documented size limit.
    LimitExceeded { what: &'static str, value: usize, limit: usize },
    /// A random construction failed after its retry budget.
    Infeasible(String),
    /// Bisection was asked to isolate a root without a sign change.
    NoSignChange,
    /// Text that should have parsed as a number did not.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            Error::TooManyVertices { n, max } => {
                write!(f, "{n} vertices requested, at most {max} supported")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Graph6(msg) => write!(f, "graph6: {msg}"),
            Error::ProbabilityOutOfRange(p) => write!(f, "probability {p} out of range"),
            Error::LimitExceeded { what, value, limit } => {
                write!(f, "{what} = {value} exceeds the exact-computation limit {limit}")
            }
            Error::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            Error::NoSignChange => write!(f, "no sign change on the given interval"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
