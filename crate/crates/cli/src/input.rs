//! Parsing of polynomials, matrices and integer lists given inline or as
//! files.

use std::fs;
use std::path::Path;

use kahler_core::{IntMatrix, IntPolynomial};
use num_bigint::BigInt;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

type Result<T> = std::result::Result<T, ParseError>;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(ParseError(msg.into()))
}

/// Reads `arg` as a file when such a file exists, otherwise returns it as is.
pub fn resolve(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        return fs::read_to_string(p).map_err(|e| ParseError(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

/// A polynomial from an expression such as `x^4 + x + 1`, a JSON object
/// `{"coeffs": [...]}` (constant first), or a file holding either.
pub fn parse_poly_arg(arg: &str) -> Result<IntPolynomial> {
    let text = resolve(arg)?;
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| ParseError(format!("invalid polynomial JSON: {e}")))?;
        return poly_from_json(&v);
    }
    parse_poly(t)
}

pub fn poly_from_json(v: &Value) -> Result<IntPolynomial> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("polynomial JSON needs a \"coeffs\" array".into()))?;
    Ok(IntPolynomial::new(coeffs.iter().map(int_from_json).collect::<Result<_>>()?))
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| ParseError(format!("not an integer: {s:?}"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigInt::from(i)),
            None => n.to_string().parse().map_err(|_| ParseError(format!("not an integer: {n}"))),
        },
        other => err(format!("not an integer: {other}")),
    }
}

/// A matrix as a JSON array of rows, a `{"rows","cols","entries"}` object,
/// or a file holding either. Entries may be numbers or decimal strings.
pub fn parse_matrix_arg(arg: &str) -> Result<IntMatrix> {
    let text = resolve(arg)?;
    let v: Value =
        serde_json::from_str(text.trim()).map_err(|e| ParseError(format!("invalid matrix JSON: {e}")))?;
    matrix_from_json(&v)
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let (rows, declared) = match v {
        Value::Array(rows) => (rows, None),
        Value::Object(o) => {
            let rows = o
                .get("entries")
                .and_then(Value::as_array)
                .ok_or_else(|| ParseError("matrix JSON needs an \"entries\" array".into()))?;
            let dim = |k: &str| o.get(k).and_then(Value::as_u64).map(|x| x as usize);
            (rows, Some((dim("rows"), dim("cols"))))
        }
        _ => return err("matrix must be an array of rows"),
    };
    let parsed = rows
        .iter()
        .map(|r| match r {
            Value::Array(es) => es.iter().map(int_from_json).collect::<Result<Vec<_>>>(),
            _ => err("matrix rows must be arrays"),
        })
        .collect::<Result<Vec<_>>>()?;
    let m = IntMatrix::from_rows(parsed).map_err(|e| ParseError(e.to_string()))?;
    if let Some((r, c)) = declared {
        if r.is_some_and(|r| r != m.rows()) || c.is_some_and(|c| c != m.cols()) {
            return err(format!("declared shape does not match {}x{} entries", m.rows(), m.cols()));
        }
    }
    Ok(m)
}

/// Comma- or space-separated integers; empty input gives an empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| ParseError(format!("not an integer: {t:?}"))))
        .collect()
}

/// Group multiplication table: a JSON array of rows of element indices.
pub fn parse_table_arg(arg: &str) -> Result<Vec<Vec<usize>>> {
    let text = resolve(arg)?;
    serde_json::from_str(text.trim()).map_err(|e| ParseError(format!("invalid group table: {e}")))
}

// expr   := term (('+' | '-') term)*
// term   := ('+' | '-')? factor (('*')? factor)*
// factor := atom ('^' integer)?
// atom   := integer | 'x' | '(' expr ')'
struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(format!("expected an integer at position {start}"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') | Some(b'-') => acc = acc.add(&self.term()?),
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'x') | Some(b'X') | Some(b'(') => acc = acc.mul(&self.factor()?),
                Some(c) if c.is_ascii_digit() => return err(format!("unexpected integer at position {}", self.pos)),
                _ => break,
            }
        }
        Ok(if negative { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<IntPolynomial> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.integer()?;
        let e: u32 = e.try_into().ok().filter(|&e| e <= 10_000).ok_or_else(|| ParseError("exponent too large".into()))?;
        let mut out = IntPolynomial::from_i64(&[1]);
        for _ in 0..e {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<IntPolynomial> {
        match self.peek() {
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                Ok(IntPolynomial::from_i64(&[0, 1]))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return err(format!("expected ')' at position {}", self.pos));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPolynomial::constant(self.integer()?)),
            Some(c) => err(format!("unexpected {:?} at position {}", c as char, self.pos)),
            None => err("unexpected end of polynomial"),
        }
    }
}

/// Parses an integer polynomial in `x`.
pub fn parse_poly(s: &str) -> Result<IntPolynomial> {
    let normalized = s.replace('\u{2212}', "-");
    let mut p = Parser { s: normalized.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return err(format!("trailing input at position {}", p.pos));
    }
    Ok(out)
}
