//! Line-oriented file formats.
//!
//! Four formats share one lexical style: UTF-8, one record per line, a
//! first line naming the format and its version, and comment lines whose
//! first non-blank character is `#`. A `#` elsewhere on a line is content
//! (annotation text and metadata values may contain it). The grammars are
//! frozen in `docs/formats.md`.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

pub mod bpc;
pub mod dom;
pub mod manifest;
pub mod ovf;
pub mod sentence;

/// Parse and I/O failures for the file formats. Every parse error carries
/// a 1-based line number.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {inner}")]
    InFile {
        path: PathBuf,
        #[source]
        inner: Box<FormatError>,
    },
}

impl FormatError {
    pub(crate) fn parse(line: usize, message: impl fmt::Display) -> Self {
        FormatError::Parse {
            line,
            message: message.to_string(),
        }
    }

    pub(crate) fn in_file(path: impl Into<PathBuf>, inner: FormatError) -> Self {
        FormatError::InFile {
            path: path.into(),
            inner: Box::new(inner),
        }
    }

    /// The 1-based line number of the underlying parse error, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Io { .. } => None,
            FormatError::Parse { line, .. } => Some(*line),
            FormatError::InFile { inner, .. } => inner.line(),
        }
    }
}

/// Iterates over the content lines of a file: `(1-based number, trimmed
/// text)`, skipping blank lines and comment lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .zip(1..)
        .map(|(line, number)| (number, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Checks the header line of a format and returns the remaining lines.
pub(crate) fn expect_header<'a>(
    text: &'a str,
    header_key: &str,
) -> Result<Vec<(usize, &'a str)>, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((number, line)) => {
            let expected = format!("{header_key}: 1");
            if line != expected {
                return Err(FormatError::parse(
                    number,
                    format!("expected header `{expected}`"),
                ));
            }
        }
        None => return Err(FormatError::parse(1, format!("missing header `{header_key}: 1`"))),
    }
    Ok(lines.collect())
}

/// Splits `key: value` at the first colon.
pub(crate) fn split_keyed(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    Some((key.trim_end(), value.trim()))
}

/// Parses a comma-separated list of identifiers; the empty string is the
/// empty list.
pub(crate) fn parse_ident_list<T: std::str::FromStr>(
    line_number: usize,
    text: &str,
) -> Result<Vec<T>, FormatError>
where
    T::Err: fmt::Display,
{
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<T>()
                .map_err(|e| FormatError::parse(line_number, e))
        })
        .collect()
}
