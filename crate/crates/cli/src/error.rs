use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    /// `binding` is the name being defined, or `command.arg` for command
    /// arguments.
    #[error("type error in '{binding}': {msg}")]
    Type { binding: String, msg: String },
}

impl ScriptError {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ScriptError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn type_error(binding: impl Into<String>, msg: impl Into<String>) -> Self {
        ScriptError::Type {
            binding: binding.into(),
            msg: msg.into(),
        }
    }
}
