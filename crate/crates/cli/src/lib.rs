//! Script language, command dispatch and certificates for the `virbialg`
//! binary.

#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod certificate;
pub mod commands;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod selfcheck;
pub mod value;

pub use certificate::Certificate;
pub use commands::{input_hash, run, run_source, RunConfig};
pub use error::ScriptError;
pub use parser::{parse, parse_expr, Script};
pub use value::{eval, Value};

/// Parses and evaluates a standalone expression.
pub fn eval_str(src: &str) -> Result<Value, ScriptError> {
    let e = parse_expr(src)?;
    eval(&e, &value::Env::new()).map_err(|m| ScriptError::type_error("<expr>", m))
}
