//! Text grammar for polynomials:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits ('/' digits)? | ident | '(' expr ')'
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication.

use std::str::FromStr;

use malachite_base::num::basic::traits::Zero;
use malachite_nz::natural::Natural;

use super::{Polynomial, Rational, VarRing};
use crate::error::{Error, Result};

pub fn parse_polynomial(ring: &VarRing, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(&t)),
    };
    let err = || Error::Parse {
        line: 1,
        column: 1,
        message: format!("invalid rational `{text}`"),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a, b),
        None => (body, "1"),
    };
    let num = Natural::from_str(num).map_err(|_| err())?;
    let den = Natural::from_str(den).map_err(|_| err())?;
    if den == Natural::ZERO {
        return Err(err());
    }
    let r = Rational::from_naturals(num, den);
    Ok(if neg { -r } else { r })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a VarRing,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message,
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
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a non-negative integer exponent".into()));
            }
            let e: u32 = digits
                .parse()
                .ok()
                .filter(|&e| e <= u16::MAX as u32)
                .ok_or_else(|| Error::Parse {
                    line: 1,
                    column: start + 1,
                    message: format!("exponent `{digits}` out of range"),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let mut value = Rational::from(Natural::from_str(&num).expect("digits"));
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected denominator after `/`".into()));
                    }
                    let den = Natural::from_str(&den).expect("digits");
                    if den == Natural::ZERO {
                        return Err(self.error("zero denominator".into()));
                    }
                    value /= Rational::from(den);
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::Parse {
                        line: 1,
                        column: start + 1,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}
