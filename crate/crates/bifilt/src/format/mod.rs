//! Line-oriented text formats.
//!
//! Every format is UTF-8, one record per line, with reals printed in their
//! shortest round-trip form so that `parse ∘ write` is the identity on
//! canonical files.

mod bifil;
mod points;
mod scc;
mod semifil;

pub use bifil::{parse_bifil, write_bifil};
pub use points::{parse_distance_matrix, parse_points, write_distance_matrix, write_points};
pub use scc::write_scc;
pub use semifil::{parse_semifil, write_semifil, ParsedSemifil};

use std::fmt;

/// A malformed input with its 1-based location.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_real(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{v}")
    } else {
        format!("{v:?}")
    }
}

/// Parses a finite real, reporting the column of the token on failure.
pub(crate) fn parse_real(token: &str, line: usize, column: usize) -> Result<f64, ParseError> {
    match token.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(ParseError::new(
            line,
            column,
            format!("non-finite value `{token}`"),
        )),
        Err(_) => Err(ParseError::new(
            line,
            column,
            format!("expected a number, found `{token}`"),
        )),
    }
}

pub(crate) fn parse_usize(token: &str, line: usize, column: usize) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        ParseError::new(
            line,
            column,
            format!("expected an integer, found `{token}`"),
        )
    })
}

/// Lines with `(1-based number, text)`, keeping everything.
pub(crate) fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

/// Comma-joined display of a list.
pub(crate) struct Joined<'a, T>(pub &'a [T]);

impl<T: fmt::Display> fmt::Display for Joined<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Splits `key=value`, checking the key.
pub(crate) fn field<'a>(
    token: &'a str,
    key: &str,
    line: usize,
    column: usize,
) -> Result<&'a str, ParseError> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| ParseError::new(line, column, format!("expected `{key}=`, found `{token}`")))
}

/// Splits on single spaces, yielding `(1-based column, token)`.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in line.char_indices() {
        if c == ' ' {
            out.push((start + 1, &line[start..i]));
            start = i + 1;
        }
    }
    out.push((start + 1, &line[start..]));
    out
}

/// Parses `a,b,c` (possibly empty) as integers.
pub(crate) fn parse_id_list(
    text: &str,
    line: usize,
    column: usize,
) -> Result<Vec<usize>, ParseError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut col = column;
    for part in text.split(',') {
        out.push(parse_usize(part, line, col)?);
        col += part.len() + 1;
    }
    Ok(out)
}
