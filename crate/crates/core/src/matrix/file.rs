//! Plain-text matrix files.
//!
//! ```text
//! ring integer            # or rational, mod:7, poly:x,y
//! rows 1 2 3
//! cols 1 2 3
//! 1 2 3
//! 4 5 6
//! 7 8 10
//! ```
//!
//! Entries are whitespace separated, so polynomial entries are written without
//! spaces (`a11*a22-a12*a21`). `#` starts a comment.

use std::fmt::Write as _;
use std::str::FromStr;

use super::LabeledMatrix;
use crate::error::{Error, Result};
use crate::index::{parse_label_list, OrderedIndexSet};
use crate::ring::RingContext;

impl LabeledMatrix {
    /// Parses a matrix file. `ring`, when given, replaces the ring named in the header.
    pub fn parse_file(text: &str, ring: Option<&RingContext>) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let mut header = |key: &str| -> Result<(usize, String)> {
            let (no, line) = lines.next().ok_or(Error::MatrixFile {
                line: 0,
                reason: format!("missing `{key}` line"),
            })?;
            let rest = line
                .strip_prefix(key)
                .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
                .ok_or_else(|| Error::MatrixFile {
                    line: no,
                    reason: format!("expected `{key} ...`"),
                })?;
            Ok((no, rest.trim().to_string()))
        };
        let at = |line: usize| {
            move |e: Error| Error::MatrixFile {
                line,
                reason: e.to_string(),
            }
        };

        let (no, spec) = header("ring")?;
        let declared: RingContext = spec.parse().map_err(at(no))?;
        let (no, row_text) = header("rows")?;
        let rows =
            OrderedIndexSet::new(parse_label_list(&row_text).map_err(at(no))?).map_err(at(no))?;
        let (no, col_text) = header("cols")?;
        let cols =
            OrderedIndexSet::new(parse_label_list(&col_text).map_err(at(no))?).map_err(at(no))?;

        let ctx = ring.cloned().unwrap_or(declared);
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        let mut seen_rows = 0;
        for (no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != cols.len() {
                return Err(Error::MatrixFile {
                    line: no,
                    reason: format!("expected {} entries, found {}", cols.len(), fields.len()),
                });
            }
            for field in fields {
                entries.push(ctx.parse_value(field).map_err(at(no))?);
            }
            seen_rows += 1;
        }
        if seen_rows != rows.len() {
            return Err(Error::MatrixFile {
                line: 0,
                reason: format!("expected {} rows of entries, found {seen_rows}", rows.len()),
            });
        }
        Self::new(rows, cols, ctx, entries)
    }

    /// Serializes in the file format read by [`LabeledMatrix::parse_file`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let join = |set: &OrderedIndexSet| {
            set.labels()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "ring {}", self.context);
        let _ = writeln!(out, "rows {}", join(&self.rows));
        let _ = writeln!(out, "cols {}", join(&self.cols));
        for r in 0..self.nrows() {
            let line: Vec<String> = self
                .row(r)
                .iter()
                .map(|v| v.to_string().replace(' ', ""))
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

impl FromStr for LabeledMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_file(s, None)
    }
}
