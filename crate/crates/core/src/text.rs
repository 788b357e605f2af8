//! Decimal text encoding of residue vectors.
//!
//! Input is ASCII decimal integers separated by any whitespace. Every value
//! must already be reduced modulo the field's prime.

use thiserror::Error;

use crate::ring::{Fp, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("token {index} ({token:?}) is not a nonnegative decimal integer")]
    InvalidToken { index: usize, token: String },

    #[error("token {index} ({value}) is not a residue modulo {modulus}")]
    NotReduced { index: usize, value: u64, modulus: u64 },

    #[error("expected {expected} values, found {found}")]
    Count { expected: usize, found: usize },

    #[error("line {line} is empty")]
    EmptyLine { line: usize },

    #[error("expected exactly two lines of coefficients, found {found}")]
    LineCount { found: usize },
}

/// Parses whitespace-separated reduced residues.
pub fn parse_residues(input: &str, field: &PrimeField) -> Result<Vec<Fp>, ParseError> {
    input
        .split_ascii_whitespace()
        .enumerate()
        .map(|(index, token)| parse_token(index, token, field))
        .collect()
}

/// [`parse_residues`], requiring exactly `expected` values.
pub fn parse_residues_exact(input: &str, field: &PrimeField, expected: usize) -> Result<Vec<Fp>, ParseError> {
    let values = parse_residues(input, field)?;
    if values.len() != expected {
        return Err(ParseError::Count {
            expected,
            found: values.len(),
        });
    }
    Ok(values)
}

fn parse_token(index: usize, token: &str, field: &PrimeField) -> Result<Fp, ParseError> {
    // u64::from_str accepts a leading '+'; plain digits only
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::InvalidToken {
            index,
            token: token.to_owned(),
        });
    }
    let value: u64 = token.parse().map_err(|_| ParseError::InvalidToken {
        index,
        token: token.to_owned(),
    })?;
    field.element(value).map_err(|_| ParseError::NotReduced {
        index,
        value,
        modulus: field.modulus(),
    })
}

/// Parses two nonempty lines of coefficients: the factors `f` and `g`.
/// Blank lines after the second are ignored.
pub fn parse_polynomial_pair(input: &str, field: &PrimeField) -> Result<(Vec<Fp>, Vec<Fp>), ParseError> {
    let mut lines: Vec<&str> = input.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) && lines.len() > 2 {
        lines.pop();
    }
    if lines.len() != 2 {
        return Err(ParseError::LineCount { found: lines.len() });
    }
    let mut parsed = lines.iter().enumerate().map(|(i, line)| {
        let values = parse_residues(line, field)?;
        if values.is_empty() {
            return Err(ParseError::EmptyLine { line: i + 1 });
        }
        Ok(values)
    });
    let f = parsed.next().expect("two lines")?;
    let g = parsed.next().expect("two lines")?;
    Ok((f, g))
}

/// One value per line, newline-terminated.
pub fn format_column(values: &[Fp]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

/// Values separated by single spaces, newline-terminated.
pub fn format_row(values: &[Fp]) -> String {
    let mut out = values.iter().map(Fp::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}
