//! Text format for complex matrices and signals.
//!
//! ```text
//! # complex-matrix rows=2 cols=2
//! 1.0000000000000000e0;0.0000000000000000e0,0.0000000000000000e0;-1.0000000000000000e0
//! 0.0000000000000000e0;1.0000000000000000e0,2.5000000000000000e-1;0.0000000000000000e0
//! ```
//!
//! One row per line, entries `re;im` separated by single commas, LF line
//! endings. Numbers are written with 17 significant digits so that every
//! `f64` survives a round trip. Signals are `N x 1` or `1 x N` matrices.

use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::repr::Signal;

const HEADER: &str = "# complex-matrix";

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let rest = line
        .strip_prefix(HEADER)
        .ok_or_else(|| parse_error(1, 1, format!("expected header '{HEADER} rows=<R> cols=<C>'")))?;
    let mut rows = None;
    let mut cols = None;
    let mut column = HEADER.len() + 1;
    for token in rest.split(' ') {
        column += 1;
        if token.is_empty() {
            continue;
        }
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| parse_error(1, column, format!("expected key=value, found '{token}'")))?;
        let n: usize = value
            .parse()
            .map_err(|_| parse_error(1, column + key.len() + 1, format!("invalid count '{value}'")))?;
        match key {
            "rows" => rows = Some(n),
            "cols" => cols = Some(n),
            _ => return Err(parse_error(1, column, format!("unknown header key '{key}'"))),
        }
        column += token.len();
    }
    match (rows, cols) {
        (Some(r), Some(c)) if r > 0 && c > 0 => Ok((r, c)),
        (Some(_), Some(_)) => Err(parse_error(1, 1, "rows and cols must be positive")),
        _ => Err(parse_error(1, 1, "header must give rows and cols")),
    }
}

fn parse_number(text: &str, line: usize, column: usize) -> Result<f64> {
    let v: f64 = text
        .parse()
        .map_err(|_| parse_error(line, column, format!("invalid number '{text}'")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(parse_error(line, column, format!("non-finite number '{text}'")))
    }
}

pub fn parse_matrix(text: &str) -> Result<DMatrix<Complex64>> {
    let mut lines = text.split('\n');
    let (rows, cols) = parse_header(lines.next().unwrap_or(""))?;
    let mut m = DMatrix::zeros(rows, cols);
    for r in 0..rows {
        let line_no = r + 2;
        let line = lines
            .next()
            .ok_or_else(|| parse_error(line_no, 1, format!("expected {rows} rows, found {r}")))?;
        let mut column = 1;
        let mut count = 0;
        for entry in line.split(',') {
            if count == cols {
                return Err(parse_error(line_no, column, format!("expected {cols} entries")));
            }
            let (re, im) = entry
                .split_once(';')
                .ok_or_else(|| parse_error(line_no, column, format!("expected re;im, found '{entry}'")))?;
            let re = parse_number(re, line_no, column)?;
            let im = parse_number(im, line_no, column + re_len(entry) + 1)?;
            m[(r, count)] = Complex64::new(re, im);
            count += 1;
            column += entry.len() + 1;
        }
        if count != cols {
            return Err(parse_error(line_no, column, format!("expected {cols} entries, found {count}")));
        }
    }
    for (i, rest) in lines.enumerate() {
        if !rest.is_empty() {
            return Err(parse_error(rows + 2 + i, 1, "unexpected content after the last row"));
        }
    }
    Ok(m)
}

fn re_len(entry: &str) -> usize {
    entry.find(';').unwrap_or(entry.len())
}

fn number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn format_matrix(m: &DMatrix<Complex64>) -> String {
    let mut out = format!("{HEADER} rows={} cols={}\n", m.nrows(), m.ncols());
    for r in 0..m.nrows() {
        let row: Vec<String> = m
            .row(r)
            .iter()
            .map(|z| format!("{};{}", number(z.re), number(z.im)))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn read_operator(path: &Path) -> Result<OperatorMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    OperatorMatrix::new(parse_matrix(&text)?)
}

pub fn write_operator(path: &Path, a: &OperatorMatrix) -> Result<()> {
    std::fs::write(path, format_matrix(a.entries())).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_signal(text: &str) -> Result<Signal> {
    let m = parse_matrix(text)?;
    if m.ncols() != 1 && m.nrows() != 1 {
        return Err(parse_error(1, 1, "a signal must be a single row or column"));
    }
    Signal::new(m.iter().copied().collect())
}

pub fn format_signal(f: &Signal) -> String {
    format_matrix(&DMatrix::from_column_slice(f.len(), 1, f.values()))
}

pub fn read_signal(path: &Path) -> Result<Signal> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_signal(&text)
}

pub fn write_signal(path: &Path, f: &Signal) -> Result<()> {
    std::fs::write(path, format_signal(f)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bitwise() {
        let a = crate::random::operator(3, 5, 1).into_entries();
        let mut b = a.clone();
        b[(0, 0)] = Complex64::new(f64::MIN_POSITIVE, -0.0);
        b[(1, 1)] = Complex64::new(1.0 / 3.0, f64::MAX);
        let back = parse_matrix(&format_matrix(&b)).unwrap();
        for (x, y) in b.iter().zip(back.iter()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }

    #[test]
    fn diagnostics_carry_line_and_column() {
        let bad = "# complex-matrix rows=2 cols=2\n1;0,0;0\n0;0,x;1\n";
        match parse_matrix(bad) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 5)),
            other => panic!("{other:?}"),
        }
        let short = "# complex-matrix rows=2 cols=2\n1;0,0;0\n";
        assert!(matches!(parse_matrix(short), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("rows=1"), Err(Error::Parse { line: 1, .. })));
        let wide = "# complex-matrix rows=1 cols=1\n1;0,2;0\n";
        assert!(matches!(parse_matrix(wide), Err(Error::Parse { line: 2, column: 5, .. })));
        let missing_im = "# complex-matrix rows=1 cols=1\n1\n";
        assert!(matches!(parse_matrix(missing_im), Err(Error::Parse { line: 2, column: 1, .. })));
        let nan = "# complex-matrix rows=1 cols=1\n1;NaN\n";
        assert!(matches!(parse_matrix(nan), Err(Error::Parse { line: 2, column: 3, .. })));
    }

    #[test]
    fn signals_as_row_or_column() {
        let f = crate::random::signal(6, 2);
        assert_eq!(parse_signal(&format_signal(&f)).unwrap(), f);
        let row = "# complex-matrix rows=1 cols=2\n1;0,0;1\n";
        assert_eq!(parse_signal(row).unwrap().len(), 2);
        let block = "# complex-matrix rows=2 cols=2\n1;0,0;1\n1;0,0;1\n";
        assert!(parse_signal(block).is_err());
    }
}
