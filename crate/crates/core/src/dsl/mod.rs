//! The `.lca` presentation format and the command-line mini-grammars.

pub mod ast;
mod diag;
mod lexer;
mod lower;
mod mini;
mod parser;
mod print;

pub use diag::{Diagnostic, SourceSpan};
pub use lower::{lower, lower_vector, Lowered};
pub use mini::{parse_pbw, parse_point, parse_vector};
pub use parser::{parse_algebra, parse_expr};
pub use print::{print_algebra, print_expr, print_presentation};

use crate::error::{Error, Result};

/// Parses and lowers an `.lca` source.
pub fn load_algebra(src: &str) -> Result<Lowered> {
    let f = parse_algebra(src).map_err(|d| Error::Parse(vec![d]))?;
    lower(&f)
}

#[cfg(test)]
mod tests;
