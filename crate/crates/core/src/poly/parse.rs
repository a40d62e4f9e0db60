//! Text form of polynomials: `2*x[1,+]^2*y - 1/3*z + 5`.
//!
//! Variable names are identifiers optionally followed by a bracketed tag,
//! so `X[1,+,2]` is a single name even though it contains `+`.

use super::{Monomial, Polynomial, Ring};
use crate::rational::{format_q, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Q),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => (out.push((start, Token::Plus)), i += 1).1,
            '-' => (out.push((start, Token::Minus)), i += 1).1,
            '*' => (out.push((start, Token::Star)), i += 1).1,
            '^' => (out.push((start, Token::Caret)), i += 1).1,
            '(' => (out.push((start, Token::LParen)), i += 1).1,
            ')' => (out.push((start, Token::RParen)), i += 1).1,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num = BigInt::from_str(&src[start..i]).expect("digits");
                let mut q = Q::from_integer(num);
                if i < bytes.len() && bytes[i] == b'/' {
                    let ds = i + 1;
                    let mut j = ds;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == ds {
                        return Err(ParseError { pos: i, msg: "expected denominator".into() });
                    }
                    let den = BigInt::from_str(&src[ds..j]).expect("digits");
                    if den.is_zero() {
                        return Err(ParseError { pos: ds, msg: "zero denominator".into() });
                    }
                    q /= Q::from_integer(den);
                    i = j;
                }
                out.push((start, Token::Num(q)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'[' {
                    match src[i..].find(']') {
                        Some(off) => i += off + 1,
                        None => return Err(ParseError { pos: i, msg: "unclosed `[`".into() }),
                    }
                }
                let name: String = src[start..i].chars().filter(|c| !c.is_whitespace()).collect();
                out.push((start, Token::Name(name)));
            }
            other => {
                return Err(ParseError { pos: start, msg: format!("unexpected character `{other}`") })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = match self.peek().cloned() {
            Some(Token::Num(q)) => {
                self.pos += 1;
                Polynomial::constant(self.ring, q)
            }
            Some(Token::Name(n)) => match self.ring.var(&n) {
                Some(v) => {
                    self.pos += 1;
                    Polynomial::var(self.ring, v)
                }
                None => return self.err(format!("unknown variable `{n}`")),
            },
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                inner
            }
            Some(Token::Minus) => {
                self.pos += 1;
                return Ok(-&self.factor()?);
            }
            _ => return self.err("expected a number, variable or `(`"),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(q)) if q.is_integer() && !q.is_negative() => {
                    self.pos += 1;
                    let e: u32 = q.to_integer().try_into().map_err(|_| ParseError {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }
}

impl Polynomial {
    /// Parses the canonical text grammar in `ring`.
    pub fn parse(ring: &Arc<Ring>, src: &str) -> Result<Polynomial, ParseError> {
        let tokens = tokenize(src)?;
        if tokens.is_empty() {
            return Err(ParseError { pos: 0, msg: "empty input".into() });
        }
        let mut p = Parser { ring, tokens, pos: 0, end: src.len() };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in m.support() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.names()[v])?;
        if m.exp(v) > 1 {
            write!(f, "^{}", m.exp(v))?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_q(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_q(&mag))?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn bracketed_names_and_rationals() {
        let r = Ring::grevlex(["x[1,+]", "x[2,1]", "y"]);
        let p = Polynomial::parse(&r, "2*x[1,+]^2*y - 1/3*x[2,1] + 5").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "2*x[1,+]^2*y - 1/3*x[2,1] + 5");
        let q = Polynomial::parse(&r, "(x[1,+] + y)*(x[1,+] - y)").unwrap();
        assert_eq!(q, Polynomial::parse(&r, "x[1,+]^2 - y^2").unwrap());
        assert_eq!(Polynomial::parse(&r, "-3/6").unwrap(), Polynomial::constant(&r, frac(-1, 2)));
    }

    #[test]
    fn parse_errors() {
        let r = Ring::grevlex(["x"]);
        assert!(Polynomial::parse(&r, "x + z").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
        assert!(Polynomial::parse(&r, "x[1").is_err());
        assert!(Polynomial::parse(&r, "1/0").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
    }
}
