//! Text form of polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := integer | variable | 'a' | '(' expr ')'
//! ```
//!
//! Integers are reduced modulo `p`; `a` is the root of the field modulus
//! (only meaningful for extension fields) unless the ring has a variable of
//! that name.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, Ring};

pub fn parse_polynomial(src: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 {
                acc.sub_poly(&t)
            } else {
                acc.add_poly(&t)
            };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul_poly(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let n = self.natural()?;
            let e = u32::try_from(n).map_err(|_| Error::ExponentOverflow)?;
            if base.is_monomial() {
                // exponent overflow check for single terms
                let (m, _) = base.raw_terms().next().unwrap();
                if m.exps()
                    .iter()
                    .any(|&x| (x as u64) * e as u64 > u16::MAX as u64)
                {
                    self.pos = start;
                    return Err(Error::ExponentOverflow);
                }
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "number too large".into(),
            })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                let field = self.ring.field();
                let c = field.int_raw((n % field.characteristic() as u64) as i64);
                Ok(Polynomial::monomial(
                    self.ring,
                    Monomial::one(self.ring.nvars()),
                    c,
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.ring.var_index(name) {
                    return Ok(self.ring.var(i));
                }
                if name == "a" {
                    let root = self.ring.field().root();
                    return Ok(Polynomial::constant(self.ring, root));
                }
                Err(Error::UnknownVariable(name.to_string()))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Canonical text: terms in descending lex order, prime-field coefficients
/// printed in the symmetric range `(-p/2, p/2]`.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = f.ring();
    let field = ring.field();
    let p = field.characteristic();
    let mut out = String::new();
    for (idx, (m, c)) in f.raw_terms().enumerate() {
        let mono = if m.is_one() {
            None
        } else {
            Some(m.format(ring.names()))
        };
        let (negative, coeff) = if field.degree() == 1 {
            if p > 2 && c > p / 2 {
                (true, (p - c).to_string())
            } else {
                (false, c.to_string())
            }
        } else {
            (false, format!("({})", field.format(field.wrap(c))))
        };
        if negative {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let unit = coeff == "1" || coeff == "(1)";
        match (mono, unit) {
            (None, _) => out.push_str(coeff.trim_matches(|ch| ch == '(' || ch == ')')),
            (Some(m), true) => out.push_str(&m),
            (Some(m), false) => {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&m);
            }
        }
    }
    out
}
