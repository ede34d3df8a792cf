use thiserror::Error;

/// Errors raised by parsing, construction, and guard checks.
///
/// Axiom *failures* are not errors: the checkers report those through
/// [`CheckReport`](crate::report::CheckReport) so that counterexamples
/// survive. An `Error` means the operation could not be carried out at all.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text; `line` is 1-based in the original input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A declared property of the input does not hold (e.g. a declared
    /// unit that is not a bar-unit).
    #[error("validation error: {0}")]
    Validation(String),

    /// Caller misuse: out-of-range index, size mismatch, bad flag value.
    #[error("usage error: {0}")]
    Usage(String),

    /// A construction precondition failed, naming the violated equation.
    #[error("construction error: {0}")]
    Construction(String),

    /// A size guard was exceeded.
    #[error("guard exceeded: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
