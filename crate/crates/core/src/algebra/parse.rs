use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::var::{Family, VarId};
use crate::error::{Error, Result};

// Grammar (whitespace-insensitive):
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' int] | var ['^' int]
//   var    := ('x'|'y'|'a'|'b') int

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| self.err("number too large"))
    }

    fn factor(&mut self) -> Result<(BigRational, Monomial)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok((BigRational::new(num, den), Monomial::one()))
            }
            Some(c) => {
                let family = Family::from_letter(c as char)
                    .ok_or_else(|| self.err(format!("unexpected {:?}", c as char)))?;
                self.pos += 1;
                // index digits must follow the letter directly
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.err("expected variable index"));
                }
                let index = self.small()?;
                if index == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                let exp = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.small()?
                } else {
                    1
                };
                Ok((
                    BigRational::one(),
                    Monomial::from_pairs([(VarId::new(family, index), exp)]),
                ))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let (mut c, mut m) = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let (c2, m2) = self.factor()?;
            c *= c2;
            m = m.mul(&m2);
        }
        Ok((c, m))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                Some(b'+') => sign = BigRational::one(),
                Some(b'-') => sign = -BigRational::one(),
                None => break,
                Some(other) => return Err(self.err(format!("unexpected {:?}", other as char))),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(terms))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        p.poly()
    }
}
