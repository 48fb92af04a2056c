//! Vector literals and the plain-text record layout used by the command line.
//!
//! A vector literal is a comma-separated list of decimal integers, optionally
//! wrapped in `(...)` or `[...]`, with whitespace allowed anywhere between
//! tokens: `1,2,2`, `(1, 2, 2)`, `[ -3,4 ]`.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty vector literal")]
    Empty,
    #[error("unbalanced brackets in {0:?}")]
    Brackets(String),
    #[error("bad integer {0:?}")]
    BadInteger(String),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
    #[error("no `{0}` section found")]
    MissingSection(String),
}

/// Parses one vector literal.
pub fn parse_vector(s: &str) -> Result<IntVector, ParseError> {
    let trimmed = s.trim();
    let inner = match (trimmed.chars().next(), trimmed.chars().last()) {
        (Some('('), Some(')')) | (Some('['), Some(']')) if trimmed.len() >= 2 => {
            &trimmed[1..trimmed.len() - 1]
        }
        _ => trimmed,
    };
    if inner.contains(['(', ')', '[', ']']) {
        return Err(ParseError::Brackets(s.to_string()));
    }
    if inner.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    inner
        .split(',')
        .map(|tok| parse_integer(tok.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map(IntVector::new)
}

/// Decimal integer with an optional sign; no embedded whitespace.
pub fn parse_integer(tok: &str) -> Result<BigInt, ParseError> {
    let digits = tok.strip_prefix(['-', '+']).unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::BadInteger(tok.to_string()));
    }
    BigInt::from_str(tok).map_err(|_| ParseError::BadInteger(tok.to_string()))
}

/// Extracts the indented vector lines following a `<name>:` header line, up
/// to the first line that is not indented.
pub fn parse_section(text: &str, name: &str) -> Result<Vec<IntVector>, ParseError> {
    let header = format!("{name}:");
    let mut lines = text.lines().enumerate();
    lines
        .by_ref()
        .find(|(_, l)| l.trim_end() == header)
        .ok_or_else(|| ParseError::MissingSection(name.to_string()))?;
    let mut out = Vec::new();
    for (i, line) in lines {
        if !line.starts_with(' ') || line.trim().is_empty() {
            break;
        }
        let v = parse_vector(line).map_err(|e| ParseError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(v);
    }
    Ok(out)
}

/// Renders a named section of vectors in the layout read by [`parse_section`].
pub fn format_section(name: &str, vectors: &[IntVector]) -> String {
    let mut s = format!("{name}:\n");
    for v in vectors {
        s.push_str("  ");
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}
