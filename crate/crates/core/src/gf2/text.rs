//! Plain-text matrix format: one row per line over `{0,1}`; blank lines and
//! lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

pub fn parse_matrix(text: &str) -> Result<Gf2Matrix> {
    let mut rows = Vec::new();
    let mut cols = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = Gf2Vector::parse_bits(line).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                line: lineno + 1,
                message,
            },
            other => other,
        })?;
        match cols {
            None => cols = Some(row.len()),
            Some(c) if c != row.len() => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("row has {} entries, expected {c}", row.len()),
                })
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    let Some(cols) = cols else {
        return Err(Error::Parse {
            line: 0,
            message: "no matrix rows found".into(),
        });
    };
    Gf2Matrix::from_rows(cols, rows)
}

pub fn parse_vector(text: &str) -> Result<Gf2Vector> {
    let m = parse_matrix(text)?;
    if m.rows() != 1 {
        return Err(Error::Parse {
            line: 0,
            message: format!("expected a single row, found {}", m.rows()),
        });
    }
    Ok(m.into_rows().remove(0))
}

pub fn format_matrix(m: &Gf2Matrix) -> String {
    m.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blank_lines() {
        let m = parse_matrix("# frame operator\n\n010\n111\n  010  \n").unwrap();
        assert_eq!(m, Gf2Matrix::from_strs(&["010", "111", "010"]));
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn reports_ragged_rows_with_line_numbers() {
        assert_eq!(
            parse_matrix("01\n\n011\n"),
            Err(Error::Parse {
                line: 3,
                message: "row has 3 entries, expected 2".into()
            })
        );
        assert!(matches!(parse_matrix("0a1"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_matrix("# nothing\n").is_err());
    }

    #[test]
    fn vectors_are_single_rows() {
        assert_eq!(parse_vector("1011\n").unwrap().weight(), 3);
        assert!(parse_vector("10\n01\n").is_err());
    }
}
