//! Text formats for matrices: the grid interchange format (strict,
//! round-trip exact), PBM P1 bitmaps for visualization, and a small JSON
//! form.
//!
//! Grid format: a header line "n m", then n lines of exactly m contiguous
//! '0'/'1' characters, each '\n'-terminated. No other whitespace.

use serde::Serialize;

use crate::matrix::BitMatrix;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: bad header, expected \"<rows> <cols>\"")]
    BadHeader { line: usize },
    #[error("line {line}: dimensions must be positive")]
    ZeroDimension { line: usize },
    #[error("illegal character {found:?} at line {line}, column {col}")]
    IllegalCharacter { found: char, line: usize, col: usize },
    #[error("line {line}: row has {found} cells, expected {expected}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("expected {expected} rows, found only {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: unexpected data after the last row")]
    TrailingData { line: usize },
}

/// Strict parse of the grid format. Line numbers in errors are 1-based and
/// count the header as line 1.
pub fn parse_matrix_text(input: &str) -> Result<BitMatrix, ParseError> {
    if input.is_empty() {
        return Err(ParseError::Empty);
    }
    let segments: Vec<&str> = input.split('\n').collect();
    let (n, m) = parse_header(segments[0])?;
    let mut out = BitMatrix::zeros(n, m);
    let mut parsed_rows = 0usize;
    for (offset, &line) in segments[1..].iter().enumerate() {
        let lineno = offset + 2;
        let is_final = offset + 2 == segments.len();
        if line.is_empty() && is_final {
            // Final fragment after the last '\n': end of input, not a row.
            break;
        }
        if parsed_rows == n {
            return Err(ParseError::TrailingData { line: lineno });
        }
        for (col0, ch) in line.chars().enumerate() {
            if col0 >= m {
                return Err(ParseError::RowLength {
                    line: lineno,
                    expected: m,
                    found: line.chars().count(),
                });
            }
            match ch {
                '0' => {}
                '1' => out.set(parsed_rows + 1, col0 + 1, true),
                _ => {
                    return Err(ParseError::IllegalCharacter {
                        found: ch,
                        line: lineno,
                        col: col0 + 1,
                    })
                }
            }
        }
        let len = line.chars().count();
        if len != m {
            return Err(ParseError::RowLength { line: lineno, expected: m, found: len });
        }
        parsed_rows += 1;
    }
    if parsed_rows != n {
        return Err(ParseError::MissingRows { expected: n, found: parsed_rows });
    }
    Ok(out)
}

fn parse_header(header: &str) -> Result<(usize, usize), ParseError> {
    let mut parts = header.split(' ');
    let (a, b) = (parts.next(), parts.next());
    if parts.next().is_some() {
        return Err(ParseError::BadHeader { line: 1 });
    }
    let parse = |s: Option<&str>| -> Result<usize, ParseError> {
        s.filter(|t| !t.is_empty() && t.chars().all(|c| c.is_ascii_digit()))
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadHeader { line: 1 })
    };
    let (n, m) = (parse(a)?, parse(b)?);
    if n == 0 || m == 0 {
        return Err(ParseError::ZeroDimension { line: 1 });
    }
    Ok((n, m))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Grid,
    Pbm,
    Json,
}

#[derive(Serialize)]
struct MatrixJson {
    n: usize,
    m: usize,
    rows: Vec<String>,
}

fn row_string(m: &BitMatrix, i: usize) -> String {
    (1..=m.n_cols()).map(|j| if m.get(i, j) { '1' } else { '0' }).collect()
}

/// Render a matrix. Grid output is the exact inverse of
/// `parse_matrix_text`; PBM is `"P1\n<width> <height>\n"` then
/// space-separated bits row by row; JSON is `{"n":..,"m":..,"rows":["0011",...]}`.
pub fn render_matrix(mat: &BitMatrix, format: RenderFormat) -> String {
    match format {
        RenderFormat::Grid => {
            let mut s = format!("{} {}\n", mat.n_rows(), mat.n_cols());
            for i in 1..=mat.n_rows() {
                s.push_str(&row_string(mat, i));
                s.push('\n');
            }
            s
        }
        RenderFormat::Pbm => {
            let mut s = format!("P1\n{} {}\n", mat.n_cols(), mat.n_rows());
            for i in 1..=mat.n_rows() {
                let bits: Vec<&str> =
                    (1..=mat.n_cols()).map(|j| if mat.get(i, j) { "1" } else { "0" }).collect();
                s.push_str(&bits.join(" "));
                s.push('\n');
            }
            s
        }
        RenderFormat::Json => {
            let doc = MatrixJson {
                n: mat.n_rows(),
                m: mat.n_cols(),
                rows: (1..=mat.n_rows()).map(|i| row_string(mat, i)).collect(),
            };
            let mut s = serde_json::to_string(&doc).expect("matrix json cannot fail");
            s.push('\n');
            s
        }
    }
}
