//! Polynomial expressions in `X` with coefficients in `K`.
//!
//! Grammar: sums and differences of products; `*`, `/`, `^` with a
//! nonnegative integer exponent, juxtaposition (`2X`), parentheses, integer
//! literals, `X`, and any named generator the field provides (e.g. `t`).
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polyvec::PolyVec;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Num(s.parse().unwrap()), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        toks.push((t, col));
        i += 1;
    }
    Ok(Lexer {
        toks,
        end: col0 + chars.len(),
    })
}

struct Parser<'a, F: Field> {
    f: &'a F,
    lx: Lexer,
    pos: usize,
    line: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.lx.toks.get(self.pos).map_or(self.lx.end, |(_, c)| *c)
    }

    fn err<T>(&self, col: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: col,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(self.f, &self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(self.f, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(self.f, &self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let rhs = self.unary()?;
                    let c = match (rhs.degree(), rhs.coeff(0)) {
                        (Some(0), Some(c)) => c.clone(),
                        (None, _) => return self.err(col, "division by zero"),
                        _ => return self.err(col, "division by a non-constant polynomial"),
                    };
                    acc = acc.scale(self.f, &self.f.inv(&c).unwrap());
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = acc.mul(self.f, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<F::Elem>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg(self.f))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F::Elem>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let Some(Tok::Num(e)) = self.peek().cloned() else {
            return self.err(col, "expected a nonnegative integer exponent");
        };
        self.pos += 1;
        let e: u32 = e.try_into().or_else(|_| self.err(col, "exponent too large"))?;
        let mut out = Poly::constant(self.f, self.f.one());
        for _ in 0..e {
            out = out.mul(self.f, &base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly<F::Elem>> {
        let col = self.col();
        let Some(tok) = self.peek().cloned() else {
            return self.err(col, "unexpected end of expression");
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(self.f, self.f.from_bigint(&n))),
            Tok::Ident(name) if name == "X" => Ok(Poly::monomial(self.f, self.f.one(), 1)),
            Tok::Ident(name) => match self.f.generator(&name) {
                Some(g) => Ok(Poly::constant(self.f, g)),
                None => self.err(col, format!("unknown symbol `{name}`")),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err(self.col(), "expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            other => self.err(col, format!("unexpected token {}", describe(&other))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "number",
        Tok::Ident(_) => "identifier",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
    }
}

/// Parses one polynomial. `col0` is the 1-based column of `text` in its line.
pub fn parse_poly<F: Field>(f: &F, text: &str, line: usize, col0: usize) -> Result<Poly<F::Elem>> {
    let mut p = Parser {
        f,
        lx: lex(text, line, col0)?,
        pos: 0,
        line,
    };
    let out = p.expr()?;
    if p.pos < p.lx.toks.len() {
        let col = p.col();
        let tok = describe(&p.lx.toks[p.pos].0);
        return p.err(col, format!("unexpected token {tok}"));
    }
    Ok(out)
}

/// Byte ranges of the top-level comma-separated parts of `s`.
fn split_top_level(s: &str) -> Vec<(usize, usize)> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, i));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, s.len()));
    parts
}

/// True when `s` is `( ... )` with the first parenthesis closed by the last.
fn wrapped(s: &str) -> bool {
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

fn char_col(s: &str, byte: usize) -> usize {
    s[..byte].chars().count()
}

/// Parses a vector line: components separated by top-level commas, with
/// optional outer parentheses.
pub fn parse_vector<F: Field>(f: &F, text: &str, line: usize) -> Result<PolyVec<F::Elem>> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut offset = lead;
    if wrapped(body) {
        body = &body[1..body.len() - 1];
        offset += 1;
    }
    if body.trim().is_empty() {
        return Err(Error::Parse {
            line,
            column: char_col(text, offset) + 1,
            message: "empty vector".into(),
        });
    }
    let mut comps = Vec::new();
    for (a, b) in split_top_level(body) {
        let part = &body[a..b];
        if part.trim().is_empty() {
            return Err(Error::Parse {
                line,
                column: char_col(text, offset + a) + 1,
                message: "empty component".into(),
            });
        }
        comps.push(parse_poly(f, part, line, char_col(text, offset + a) + 1)?);
    }
    Ok(PolyVec::new(comps))
}
