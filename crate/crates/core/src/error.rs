use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeAbsent(usize, usize),
    #[error("{n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("malformed length header")]
    BadHeader,
    #[error("expected {expected} data bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Rejected (t, k) pair or construction parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{name} = {value} is out of range; expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        expected: String,
    },
    #[error("the additive constant for t = {t} is not known in closed form")]
    UnspecifiedConstant { t: usize },
    #[error("{0}")]
    Invalid(String),
}

impl ParamError {
    pub fn range(name: &'static str, value: usize, expected: impl Into<String>) -> Self {
        ParamError::OutOfRange {
            name,
            value,
            expected: expected.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring does not match its host graph: {0}")]
    HostMismatch(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{edges} edges exceeds the brute-force cap of {cap}")]
    TooManyEdges { edges: usize, cap: usize },
}
