use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{}self-loop at vertex {vertex}", line_prefix(*.line))]
    SelfLoop { vertex: usize, line: Option<usize> },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Malformed or unusable input that is not tied to a specific line.
    #[error("invalid input: {0}")]
    Input(String),

    /// A quantity is undefined for the given graph (e.g. a coupling factor
    /// with a degree below 2).
    #[error("outside domain: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} would be {actual}, budget is {budget}")]
    Capacity {
        what: &'static str,
        actual: u128,
        budget: u128,
    },
}

fn line_prefix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}
