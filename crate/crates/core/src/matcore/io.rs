//! Plain-text complex matrix format.
//!
//! ```text
//! # comment
//! 2
//! 1.0000000000000000e0+0.0000000000000000e0j 1.0000000000000000e0+0.0000000000000000e0j
//! 1.0000000000000000e0+0.0000000000000000e0j -1.0000000000000000e0+0.0000000000000000e0j
//! ```
//!
//! Entries carry 17 significant digits, so writing and re-reading is exact.

use std::fmt::Write as _;

use super::{CMatrix, C64};
use crate::error::{Error, Result};

pub fn format_entry(z: C64) -> String {
    format!("{:.16e}{:+.16e}j", z.re, z.im)
}

pub fn write_matrix(x: &CMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", x.order());
    for i in 0..x.order() {
        let line: Vec<String> = x.row(i).iter().map(|&z| format_entry(z)).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses one entry: `re+imj`, `re-imj`, a bare real, or a bare imaginary
/// `imj`. `i` is accepted in place of `j`, and surrounding parentheses are
/// ignored.
pub fn parse_entry(tok: &str) -> Option<C64> {
    let s = tok.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix(['j', 'i']) else {
        return s.parse::<f64>().ok().map(|re| C64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let imag = |t: &str| -> Option<f64> {
        match t {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => t.parse().ok(),
        }
    };
    match split {
        Some(p) => Some(C64::new(body[..p].parse().ok()?, imag(&body[p..])?)),
        None => Some(C64::new(0.0, imag(body)?)),
    }
}

pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: "empty input".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: hline,
        col: 1,
        msg: format!("expected matrix order, found `{header}`"),
    })?;
    let mut data = Vec::with_capacity(n * n);
    for row in 0..n {
        let (lno, line) = lines.next().ok_or_else(|| Error::Parse {
            line: hline + row + 1,
            col: 1,
            msg: format!("expected {n} rows, found {row}"),
        })?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != n {
            return Err(Error::Parse {
                line: lno,
                col: 1,
                msg: format!("expected {n} entries, found {}", toks.len()),
            });
        }
        for (c, t) in toks.iter().enumerate() {
            data.push(parse_entry(t).ok_or_else(|| Error::Parse {
                line: lno,
                col: c + 1,
                msg: format!("bad complex entry `{t}`"),
            })?);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            col: 1,
            msg: "trailing data after matrix".into(),
        });
    }
    CMatrix::new(n, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn entry_forms() {
        assert_eq!(parse_entry("1+2j"), Some(C64::new(1.0, 2.0)));
        assert_eq!(parse_entry("-1.5e-3-2e+1j"), Some(C64::new(-1.5e-3, -20.0)));
        assert_eq!(parse_entry("3"), Some(C64::new(3.0, 0.0)));
        assert_eq!(parse_entry("-j"), Some(C64::new(0.0, -1.0)));
        assert_eq!(parse_entry("2.5i"), Some(C64::new(0.0, 2.5)));
        assert_eq!(parse_entry("(0.3+0.1j)"), Some(C64::new(0.3, 0.1)));
        assert_eq!(parse_entry("1e-5j"), Some(C64::new(0.0, 1e-5)));
        assert_eq!(parse_entry("abc"), None);
    }

    #[test]
    fn comments_and_errors() {
        let m = parse_matrix("# F2\n2\n1 1 # first\n1 -1\n").unwrap();
        assert_eq!(m[(1, 1)], C64::new(-1.0, 0.0));
        match parse_matrix("2\n1 1\n1 x\n") {
            Err(Error::Parse { line: 3, col: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_matrix("2\n1 1\n").is_err());
        assert!(parse_matrix("2\n1 1\n1 1\n1 1\n").is_err());
    }

    proptest! {
        #[test]
        fn write_parse_is_exact(vals in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 9)) {
            let m = CMatrix::new(3, vals.iter().map(|&(a, b)| C64::new(a, b)).collect()).unwrap();
            let back = parse_matrix(&write_matrix(&m)).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
