//! The quandle text format.
//!
//! Line 1 holds the order `n`; the next `n` lines hold `n` space-separated
//! 0-based entries each, row `x` column `y` giving `x ◁ y`. A `#` starts a
//! comment running to the end of the line. Canonical output has single
//! spaces, no trailing whitespace and `\n` line endings, so formatting a
//! parsed canonical file reproduces it byte for byte.

use crate::error::{Error, Result};
use crate::quandle::Quandle;

/// Parse one quandle from the text format, validating the table.
pub fn parse_quandle(input: &str) -> Result<Quandle> {
    // (1-based line number, significant content)
    let significant = input.lines().enumerate().filter_map(|(i, raw)| {
        let body = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    });

    let mut lines = significant;
    let (first_line, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing order line".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::Parse {
        line: first_line,
        reason: format!("expected the order, got {first:?}"),
    })?;

    let mut flat = Vec::with_capacity(n * n);
    let mut last_line = first_line;
    for row in 0..n {
        let (line, body) = lines.next().ok_or(Error::Parse {
            line: last_line,
            reason: format!("expected {n} rows, found {row}"),
        })?;
        last_line = line;
        let entries: Vec<usize> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    reason: format!("bad entry {tok:?}"),
                })
            })
            .collect::<Result<_>>()?;
        if entries.len() != n {
            return Err(Error::Parse {
                line,
                reason: format!("expected {n} entries, got {}", entries.len()),
            });
        }
        flat.extend(entries);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            reason: "unexpected trailing content".into(),
        });
    }
    Quandle::from_flat(n, flat)
}

/// Canonical text form: order line, then one row per line, single spaces,
/// `\n` endings.
pub fn format_quandle(q: &Quandle) -> String {
    let mut out = String::new();
    out.push_str(&q.order().to_string());
    out.push('\n');
    for row in q.rows() {
        let words: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{Axiom, Witness};
    use crate::fixtures::e3;

    #[test]
    fn parses_the_three_element_example() {
        let q = parse_quandle("3\n0 0 1\n1 1 0\n2 2 2\n").unwrap();
        assert_eq!(q, e3());
    }

    #[test]
    fn parses_the_one_element_file() {
        let q = parse_quandle("1\n0\n").unwrap();
        assert_eq!(q, Quandle::trivial(1));
    }

    #[test]
    fn axiom_errors_pass_through() {
        let err = parse_quandle("3\n0 0 1\n1 1 0\n2 2 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::A1,
                witness: Witness::pair(2, 2),
            }
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# dihedral on three elements\n\n3\n0 2 1   # row 0\n2 1 0\n1 0 2\n";
        let q = parse_quandle(text).unwrap();
        assert_eq!(q, Quandle::dihedral(3));
    }

    #[test]
    fn trailing_content_rejected_with_line_number() {
        let err = parse_quandle("1\n0\n0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                reason: "unexpected trailing content".into(),
            }
        );
    }

    #[test]
    fn short_row_rejected() {
        let err = parse_quandle("2\n0 0\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let text = "3\n0 0 1\n1 1 0\n2 2 2\n";
        let q = parse_quandle(text).unwrap();
        assert_eq!(format_quandle(&q), text);
        let empty = Quandle::from_flat(0, vec![]).unwrap();
        assert_eq!(format_quandle(&empty), "0\n");
        assert_eq!(parse_quandle("0\n").unwrap(), empty);
    }
}
