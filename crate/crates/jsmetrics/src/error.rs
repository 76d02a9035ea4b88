use thiserror::Error;

/// Error raised when the input is not parseable under the supported grammar
/// (ES5 plus arrow functions). Unsupported syntax is rejected rather than
/// silently miscounted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl ParseError {
    pub fn new(line: u32, col: u32, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}
