//! Plain-text matrix files.
//!
//! ```text
//! field p=2 m=1 modulus=1,1
//! rows=2 cols=4
//! 1 1 0 0
//! 0 0 1 1
//! ```
//!
//! The modulus lists coefficients from `x^0` up to `x^m`; entries are element
//! representations in `[0, q)`. Blank lines and lines starting with `#` are
//! ignored.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

pub fn format(m: &Matrix) -> String {
    let mut out = String::new();
    out.push_str(&m.field().descriptor());
    out.push('\n');
    out.push_str(&format!("rows={} cols={}\n", m.rows(), m.cols()));
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|x| x.repr().to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn key_values(line: usize, text: &str) -> Result<Vec<(String, String)>> {
    text.split_whitespace()
        .map(|tok| {
            tok.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| err(line, format!("expected key=value, got {tok:?}")))
        })
        .collect()
}

fn lookup<'a>(line: usize, kv: &'a [(String, String)], key: &str) -> Result<&'a str> {
    kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()).ok_or_else(|| err(line, format!("missing {key}=")))
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| err(line, format!("not a number: {s:?}")))
}

pub fn parse(text: &str) -> Result<Matrix> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let rest = header.strip_prefix("field").ok_or_else(|| err(ln, "expected a `field` header"))?;
    let kv = key_values(ln, rest)?;
    let p: u32 = number(ln, lookup(ln, &kv, "p")?)?;
    let m: u32 = number(ln, lookup(ln, &kv, "m")?)?;
    let modulus = lookup(ln, &kv, "modulus")?.split(',').map(|c| number::<u32>(ln, c)).collect::<Result<Vec<_>>>()?;
    if modulus.len() != m as usize + 1 {
        return Err(err(ln, format!("modulus needs {} coefficients, got {}", m + 1, modulus.len())));
    }
    let field = Arc::new(Field::with_modulus(p, &modulus).map_err(|e| err(ln, e.to_string()))?);

    let (ln, dims) = lines.next().ok_or_else(|| err(ln + 1, "missing rows= cols= line"))?;
    let kv = key_values(ln, dims)?;
    let rows: usize = number(ln, lookup(ln, &kv, "rows")?)?;
    let cols: usize = number(ln, lookup(ln, &kv, "cols")?)?;

    let q = field.order();
    let mut data = Vec::with_capacity(rows);
    let mut last = ln;
    for _ in 0..rows {
        let (ln, line) = lines.next().ok_or_else(|| err(last + 1, format!("expected {rows} matrix rows")))?;
        last = ln;
        let row = line
            .split_whitespace()
            .map(|t| {
                let v: u32 = number(ln, t)?;
                if v >= q {
                    return Err(err(ln, format!("entry {v} is not below q = {q}")));
                }
                Ok(Felt(v as u16))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(err(ln, format!("expected {cols} entries, got {}", row.len())));
        }
        data.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "unexpected content after the matrix"));
    }
    Matrix::from_rows(&field, cols, &data)
}
