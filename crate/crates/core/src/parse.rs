//! Text syntax for polynomials: `x^2*z + x*y*w + y^3`, `3/2 x y - (x+y)^2`.
//!
//! `*` may be omitted, `/` is allowed only by a nonzero numeric constant.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
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

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let col = |k: usize| src[..chars[k].0].chars().count() + 1;
    while i < chars.len() {
        let c = chars[i].1;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let end = chars.get(i).map(|x| x.0).unwrap_or(src.len());
            let digits = &src[chars[start].0..end];
            let n: BigInt = digits.parse().map_err(|_| err(col(start), "bad number"))?;
            out.push((Tok::Num(n), col(start)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let end = chars.get(i).map(|x| x.0).unwrap_or(src.len());
            out.push((Tok::Ident(src[chars[start].0..end].to_string()), col(start)));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(col(start), alloc::format!("unexpected character '{other}'"))),
        };
        out.push((t, col(start)));
        i += 1;
    }
    Ok(out)
}

/// Identifiers in order of first appearance.
pub fn identifiers(src: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (t, _) in tokenize(src)? {
        if let Tok::Ident(s) = t {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    Ok(names)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(err(col, "division only by a nonzero number"));
                    }
                    acc = acc.scale(&d.constant_term().recip());
                }
                _ if self.starts_factor() => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e = n
                        .to_u32()
                        .filter(|e| *e <= u16::MAX as u32)
                        .ok_or_else(|| err(col, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(col, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Polynomial::constant(self.ring, Rational::from_integer(n))),
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(err(col, alloc::format!("unknown variable '{name}'"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Some(_) => Err(err(col, "expected a number, variable or '('")),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

/// Parses `src` in `ring`. Errors report line 1 and a 1-based character column.
pub fn parse_polynomial(src: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        end_col: src.chars().count() + 1,
    };
    if p.toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "unexpected token"));
    }
    Ok(out)
}

/// Parses a homogeneous linear form and returns its coefficient vector.
pub fn parse_linear_form(src: &str, ring: &Ring) -> Result<Vec<Rational>> {
    let p = parse_polynomial(src, ring)?;
    if p.is_zero() {
        return Err(Error::ZeroForm);
    }
    p.linear_coefficients()
        .ok_or_else(|| Error::NotLinear(src.to_string()))
        .and_then(|c| {
            if c.iter().all(|x| x.is_zero()) {
                Err(Error::ZeroForm)
            } else {
                Ok(c)
            }
        })
}
