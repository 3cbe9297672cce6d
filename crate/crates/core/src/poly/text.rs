//! Canonical text form of polynomials.
//!
//! ```text
//! poly  := ["-"] term (("+" | "-") term)*  |  "0"
//! term  := coeff ["*" mono] | mono
//! coeff := digits ["/" digits]
//! mono  := power ("*" power)*
//! power := name ["^" digits]
//! ```
//!
//! Whitespace is ignored between tokens. Output lists terms in descending
//! ambient order and omits unit coefficients.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::rational::Rational;
use crate::poly::ring::RingSpec;

pub(crate) fn write_polynomial(f: &mut fmt::Formatter<'_>, p: &Polynomial) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let ring = p.ring();
    for (i, t) in p.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (i, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let c = t.coeff.abs();
        if t.mono.is_one() {
            write!(f, "{c}")?;
        } else if c.is_one() {
            write!(f, "{}", t.mono.display(ring))?;
        } else {
            write!(f, "{c}*{}", t.mono.display(ring))?;
        }
    }
    Ok(())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingSpec,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected variable name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().unwrap();
        if self.eat(b'/') {
            let den: BigInt = self.digits()?.parse().unwrap();
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            Ok(&Rational::from(num) / &Rational::from(den))
        } else {
            Ok(Rational::from(num))
        }
    }

    fn power(&mut self, m: &mut [u16]) -> Result<()> {
        let at = self.pos;
        let name = self.ident()?;
        let v = self.ring.var(name).map_err(|_| Error::Parse {
            pos: at,
            msg: format!("unknown variable `{name}`"),
        })?;
        let e: u16 = if self.eat(b'^') {
            match self.digits()?.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            }
        } else {
            1
        };
        m[v] = match m[v].checked_add(e) {
            Some(x) => x,
            None => return self.err("exponent overflow"),
        };
        Ok(())
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut exps = vec![0u16; self.ring.nvars()];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.eat(b'*') {
                    self.power(&mut exps)?;
                } else {
                    return Ok((c, Monomial::one(self.ring.nvars())));
                }
                c
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.power(&mut exps)?;
                Rational::ONE
            }
            _ => return self.err("expected term"),
        };
        while self.eat(b'*') {
            self.power(&mut exps)?;
        }
        Ok((coeff, Monomial::from_exponents(&exps)?))
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<RingSpec>, s: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        ring,
    };
    let mut terms = Vec::new();
    let mut neg = p.eat(b'-');
    loop {
        let (c, m) = p.term()?;
        terms.push((if neg { -c } else { c }, m));
        if p.eat(b'+') {
            neg = false;
        } else if p.eat(b'-') {
            neg = true;
        } else {
            break;
        }
    }
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(Polynomial::from_terms(ring, terms))
}
