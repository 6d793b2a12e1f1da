//! Parity-check matrix text format.
//!
//! First non-comment line: `n m` (block length, row count); then `m` lines of
//! `n` space-separated 0/1 digits. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cosetforge_core::{BinaryMatrix, Word};

/// Parses the matrix format from a string.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut data = text.lines().enumerate().filter_map(|(idx, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((idx + 1, line))
    });

    let (header_line, header) = data.next().context("empty matrix file")?;
    let mut dims = header.split_whitespace();
    let n: u32 = dims
        .next()
        .context("missing block length in header")?
        .parse()
        .with_context(|| format!("line {header_line}: malformed block length"))?;
    let m: u32 = dims
        .next()
        .with_context(|| format!("line {header_line}: missing row count in header"))?
        .parse()
        .with_context(|| format!("line {header_line}: malformed row count"))?;
    if let Some(extra) = dims.next() {
        bail!("line {header_line}: unexpected token {extra:?} after `n m` header");
    }
    if n == 0 || m == 0 {
        bail!("line {header_line}: block length and row count must be positive");
    }

    let mut rows = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (line_no, line) = data
            .next()
            .with_context(|| format!("expected {m} matrix rows, found {}", rows.len()))?;
        let mut row = Word::zero(n);
        let mut count = 0u32;
        for token in line.split_whitespace() {
            count += 1;
            if count > n {
                bail!("line {line_no}: expected {n} entries per row, found more");
            }
            match token {
                "0" => {}
                "1" => row.set(count, true),
                other => bail!("line {line_no}: matrix entry {other:?} is not 0 or 1"),
            }
        }
        if count != n {
            bail!("line {line_no}: expected {n} entries per row, found {count}");
        }
        rows.push(row);
    }
    if let Some((line_no, _)) = data.next() {
        bail!("line {line_no}: trailing data after the {m} declared rows");
    }

    BinaryMatrix::from_rows(rows).context("invalid parity-check matrix")
}

/// Reads and parses a matrix file.
pub fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read matrix file {}", path.display()))?;
    parse_matrix(&text).with_context(|| format!("in matrix file {}", path.display()))
}

/// Renders a matrix in the text format; parses back to an equal matrix.
#[must_use]
pub fn format_matrix(matrix: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", matrix.cols(), matrix.rows());
    for row in matrix.iter_rows() {
        let digits: Vec<&str> =
            (1..=matrix.cols()).map(|c| if row.get(c) { "1" } else { "0" }).collect();
        out.push_str(&digits.join(" "));
        out.push('\n');
    }
    out
}

/// Writes a matrix file in the text format.
pub fn write_matrix(path: &Path, matrix: &BinaryMatrix) -> Result<()> {
    fs::write(path, format_matrix(matrix))
        .with_context(|| format!("cannot write matrix file {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_the_text_format() {
        let matrix = BinaryMatrix::from_bit_rows(&["0001111", "0110011", "1010101"]).unwrap();
        let text = format_matrix(&matrix);
        assert_eq!(text, "7 3\n0 0 0 1 1 1 1\n0 1 1 0 0 1 1\n1 0 1 0 1 0 1\n");
        assert_eq!(parse_matrix(&text).unwrap(), matrix);
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let text = "# parity-check matrix\n\n3 2  # dims\n1 1 0\n0 1 1 # last row\n";
        let matrix = parse_matrix(text).unwrap();
        assert_eq!(matrix.rows(), 2);
        assert_eq!(matrix.cols(), 3);
        assert!(matrix.get(0, 1) && matrix.get(0, 2) && !matrix.get(0, 3));
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, needle) in [
            ("", "empty matrix file"),
            ("3\n1 1 0\n", "missing row count"),
            ("x 2\n", "malformed block length"),
            ("3 2 9\n", "unexpected token"),
            ("0 2\n", "must be positive"),
            ("3 2\n1 1 0\n", "expected 2 matrix rows, found 1"),
            ("3 1\n1 2 0\n", "is not 0 or 1"),
            ("3 1\n1 1\n", "expected 3 entries per row, found 2"),
            ("3 1\n1 1 0 1\n", "found more"),
            ("3 1\n1 1 0\n0 1 1\n", "trailing data"),
        ] {
            let err = format!("{:#}", parse_matrix(text).unwrap_err());
            assert!(err.contains(needle), "{text:?} gave {err:?}, wanted {needle:?}");
        }
    }
}
