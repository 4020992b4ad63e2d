//! Text rendering and parsing of rigged configurations.
//!
//! Each row is printed as `<vacancy>[ ]...[ ]<rigging>` with the vacancy
//! right-aligned to the widest vacancy of its partition. An empty partition
//! prints as `(/)`.
//!
//! The horizontal layout puts the partitions side by side: every column is
//! left-aligned and padded with spaces to its widest line, columns are
//! separated by three spaces, and lines keep their trailing padding. Lines
//! are joined by `\n` without a final newline. The vertical layout prints one
//! partition after another, separated by blank lines.

use std::sync::Arc;

use thiserror::Error;

use crate::cartan::CartanDatum;
use crate::rigged::{RiggedConfiguration, RiggedPartition, Row};

pub const EMPTY_PARTITION: &str = "(/)";
const COLUMN_GAP: &str = "   ";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Horizontal,
    Vertical,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("expected {expected} partitions, found {found}")]
    PartCount { expected: usize, found: usize },
    #[error("line {line}: entry at column {col} is not aligned with any partition")]
    Misaligned { line: usize, col: usize },
    #[error("node {node}, row of length {len}: printed vacancy {printed} but the partitions give {computed}")]
    VacancyMismatch {
        node: usize,
        len: usize,
        printed: i64,
        computed: i64,
    },
}

pub fn render(rc: &RiggedConfiguration, style: Style) -> String {
    match style {
        Style::Horizontal => horizontal(rc),
        Style::Vertical => vertical(rc),
    }
}

/// Lines of one rigged partition.
pub fn partition_lines(rc: &RiggedConfiguration, a: usize) -> Vec<String> {
    let rows = rc.rows_with_vacancies(a);
    if rows.is_empty() {
        return vec![EMPTY_PARTITION.to_string()];
    }
    let width = rows.iter().map(|(_, p)| p.to_string().len()).max().unwrap_or(0);
    rows.iter()
        .map(|(row, p)| format!("{p:>width$}{}{}", "[ ]".repeat(row.len), row.rigging))
        .collect()
}

pub fn horizontal(rc: &RiggedConfiguration) -> String {
    let columns: Vec<Vec<String>> = rc.datum().nodes().map(|a| partition_lines(rc, a)).collect();
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(String::len).max().unwrap_or(0))
        .collect();
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let mut lines = Vec::with_capacity(height);
    for i in 0..height {
        let cells: Vec<String> = columns
            .iter()
            .zip(&widths)
            .map(|(col, &w)| format!("{:<w$}", col.get(i).map_or("", String::as_str)))
            .collect();
        lines.push(cells.join(COLUMN_GAP));
    }
    lines.join("\n")
}

pub fn vertical(rc: &RiggedConfiguration) -> String {
    rc.datum()
        .nodes()
        .map(|a| partition_lines(rc, a).join("\n"))
        .collect::<Vec<_>>()
        .join("\n\n")
}

struct Entry {
    /// Byte offset of the first `[`, or of `(/)`.
    anchor: usize,
    row: Option<(i64, Row)>,
}

fn parse_int(bytes: &[u8], pos: &mut usize) -> Option<i64> {
    let start = *pos;
    if bytes.get(*pos) == Some(&b'-') {
        *pos += 1;
    }
    let digits = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    if *pos == digits {
        *pos = start;
        return None;
    }
    std::str::from_utf8(&bytes[start..*pos]).ok()?.parse().ok()
}

fn parse_line(line: &str, line_no: usize) -> Result<Vec<Entry>, ParseError> {
    let bytes = line.as_bytes();
    let err = |col: usize, msg: &str| ParseError::Syntax {
        line: line_no,
        col: col + 1,
        msg: msg.to_string(),
    };
    let mut out = Vec::new();
    let mut pos = 0;
    loop {
        while bytes.get(pos) == Some(&b' ') {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        if line[pos..].starts_with(EMPTY_PARTITION) {
            out.push(Entry { anchor: pos, row: None });
            pos += EMPTY_PARTITION.len();
            continue;
        }
        let vacancy = parse_int(bytes, &mut pos).ok_or_else(|| err(pos, "expected a vacancy number"))?;
        let anchor = pos;
        let mut len = 0;
        while line[pos..].starts_with("[ ]") {
            len += 1;
            pos += 3;
        }
        if len == 0 {
            return Err(err(pos, "expected `[ ]`"));
        }
        let rigging = parse_int(bytes, &mut pos).ok_or_else(|| err(pos, "expected a rigging"))?;
        if bytes.get(pos).is_some_and(|b| *b != b' ') {
            return Err(err(pos, "unexpected character"));
        }
        out.push(Entry {
            anchor,
            row: Some((vacancy, Row::new(len, rigging))),
        });
    }
    Ok(out)
}

/// Parses the horizontal layout produced by [`horizontal`].
pub fn parse_horizontal(text: &str, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, ParseError> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let first = match lines.first() {
        Some(l) => parse_line(l, 1)?,
        None => Vec::new(),
    };
    if first.len() != datum.rank() {
        return Err(ParseError::PartCount {
            expected: datum.rank(),
            found: first.len(),
        });
    }
    let anchors: Vec<usize> = first.iter().map(|e| e.anchor).collect();
    let mut rows: Vec<Vec<(i64, Row)>> = first.iter().map(|e| e.row.into_iter().collect()).collect();
    for (k, line) in lines.iter().enumerate().skip(1) {
        for entry in parse_line(line, k + 1)? {
            let col = anchors
                .iter()
                .position(|&x| x == entry.anchor)
                .filter(|&c| first[c].row.is_some())
                .ok_or(ParseError::Misaligned {
                    line: k + 1,
                    col: entry.anchor + 1,
                })?;
            match entry.row {
                Some(r) => rows[col].push(r),
                None => {
                    return Err(ParseError::Misaligned {
                        line: k + 1,
                        col: entry.anchor + 1,
                    })
                }
            }
        }
    }
    build(rows, datum)
}

/// Parses the vertical layout produced by [`vertical`].
pub fn parse_vertical(text: &str, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, ParseError> {
    let blocks: Vec<&str> = text
        .trim_matches('\n')
        .split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .collect();
    if blocks.len() != datum.rank() {
        return Err(ParseError::PartCount {
            expected: datum.rank(),
            found: blocks.len(),
        });
    }
    let mut rows = Vec::new();
    let mut line_no = 0;
    for block in blocks {
        let mut part = Vec::new();
        for line in block.lines() {
            line_no += 1;
            for entry in parse_line(line, line_no)? {
                part.extend(entry.row);
            }
        }
        line_no += 1;
        rows.push(part);
    }
    build(rows, datum)
}

/// Parses either layout.
pub fn parse_text(text: &str, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, ParseError> {
    if text.trim_matches('\n').contains("\n\n") {
        parse_vertical(text, datum)
    } else {
        parse_horizontal(text, datum)
    }
}

fn build(rows: Vec<Vec<(i64, Row)>>, datum: Arc<CartanDatum>) -> Result<RiggedConfiguration, ParseError> {
    let parts = rows
        .iter()
        .map(|p| RiggedPartition::from_rows_unchecked(p.iter().map(|(_, r)| *r).collect()))
        .collect();
    let rc = RiggedConfiguration::from_parts_unchecked(datum, parts);
    for (idx, part) in rows.iter().enumerate() {
        for (printed, row) in part {
            let computed = rc.vacancy(idx + 1, row.len);
            if computed != *printed {
                return Err(ParseError::VacancyMismatch {
                    node: idx + 1,
                    len: row.len,
                    printed: *printed,
                    computed,
                });
            }
        }
    }
    Ok(rc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{d4, running_example};

    const RUNNING: &str =
        "-1[ ][ ]0   -3[ ][ ][ ]-2   -1[ ][ ]0   0[ ]0\n            -1[ ]-1                          ";

    #[test]
    fn running_example_layout() {
        assert_eq!(horizontal(&running_example()), RUNNING);
    }

    #[test]
    fn empty_placeholder() {
        let empty = RiggedConfiguration::empty(d4());
        assert_eq!(horizontal(&empty), "(/)   (/)   (/)   (/)");
        assert_eq!(vertical(&empty), "(/)\n\n(/)\n\n(/)\n\n(/)");
        assert_eq!(parse_horizontal(&horizontal(&empty), d4()).unwrap(), empty);
        assert_eq!(parse_vertical(&vertical(&empty), d4()).unwrap(), empty);
    }

    #[test]
    fn vacancies_right_aligned() {
        let a1 = Arc::new(CartanDatum::finite('A', 1).unwrap());
        let rc = RiggedConfiguration::from_rows(a1.clone(), vec![vec![(5, -3), (1, 0)]]).unwrap();
        let expected = format!("-12[ ][ ][ ][ ][ ]-3\n -4[ ]0{}", " ".repeat(13));
        assert_eq!(horizontal(&rc), expected);
        assert_eq!(parse_horizontal(&expected, a1).unwrap(), rc);
    }

    #[test]
    fn parse_round_trip() {
        let nu = running_example();
        assert_eq!(parse_horizontal(RUNNING, d4()).unwrap(), nu);
        assert_eq!(parse_vertical(&vertical(&nu), d4()).unwrap(), nu);
        assert_eq!(parse_text(&render(&nu, Style::Vertical), d4()).unwrap(), nu);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_horizontal("-1[ ][ ]0   (/)", d4()),
            Err(ParseError::PartCount { expected: 4, found: 2 })
        ));
        assert!(matches!(
            parse_horizontal("-1[ ][ ]0   -3[ ][ ][ ]-2   -1[ ][ ]0   0[ ]0\n     -1[ ]-1", d4()),
            Err(ParseError::Misaligned { line: 2, .. })
        ));
        assert!(matches!(
            parse_horizontal(
                "-2[ ][ ]0   -3[ ][ ][ ]-2   -1[ ][ ]0   0[ ]0\n            -1[ ]-1",
                d4()
            ),
            Err(ParseError::VacancyMismatch { node: 1, .. })
        ));
        assert!(matches!(
            parse_horizontal("-1[ ][ ]x", d4()),
            Err(ParseError::Syntax { .. })
        ));
    }
}
