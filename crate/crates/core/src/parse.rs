//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/4*x` and `x/2`
//! parse. Juxtaposition such as `2x` is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::MAX_EXPONENT;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(err(i, "implicit multiplication is not allowed; use '*'"));
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character {c:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
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
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(err(pos, "division by a non-constant"));
                    }
                    let c = d.constant_coeff();
                    let inv = c.inv().map_err(|_| err(pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(err(self.pos(), "implicit multiplication is not allowed; use '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|e| *e <= MAX_EXPONENT)
                        .ok_or(Error::ExponentOverflow { max: MAX_EXPONENT })?;
                    if let Some(Tok::Caret) = self.peek() {
                        return Err(err(self.pos(), "chained '^' is ambiguous; use parentheses"));
                    }
                    return base.pow(e);
                }
                _ => return Err(err(pos, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(
                self.ring,
                self.ring.field().from_bigint(&n),
            )),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(err(pos, format!("unknown variable {name:?}"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(err(self.toks.get(self.at - 1).map(|(p, _)| *p).unwrap_or(self.end), "expected ')'")),
                }
            }
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            None => Err(err(pos, "unexpected end of input")),
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
        }
    }
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser {
        ring,
        toks,
        at: 0,
        end: text.len(),
    };
    let f = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(f)
}
