//! Text form of scalars: sums of `c*q^e` terms, parentheses, `/` between
//! parenthesised factors. `*` may be omitted (`3q^2`).

use std::str::FromStr;

use num_bigint::BigInt;

use super::{LaurentPoly, RatFn};
use crate::error::{syntax, Error, Result};

impl FromStr for RatFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return syntax(p.pos, "unexpected trailing input");
        }
        Ok(v)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: RatFn = s.parse()?;
        if !v.is_laurent() {
            return syntax(0, "expected a Laurent polynomial");
        }
        Ok(v.numer().clone())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFn> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d).or_else(|_| syntax(at, "division by zero"))?;
                }
                Some(c) if c == b'q' || c == b'(' || c.is_ascii_digit() => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFn> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.signed_int()?;
            let e = i32::try_from(e).or_else(|_| syntax(at, "exponent too large"))?;
            return base.pow(e).or_else(|_| syntax(at, "negative power of zero"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFn> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFn::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return syntax(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFn::from(LaurentPoly::constant(self.uint()?))),
            Some(_) => syntax(self.pos, "expected a number, 'q' or '('"),
            None => syntax(self.pos, "unexpected end of input"),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.signed_int()?;
                if self.peek() != Some(b')') {
                    return syntax(self.pos, "expected ')'");
                }
                self.pos += 1;
                return Ok(v);
            }
            _ => false,
        };
        let at = self.pos;
        let v: i64 = self.uint()?.try_into().or_else(|_| syntax(at, "exponent too large"))?;
        Ok(if neg { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFn {
        s.parse().unwrap()
    }

    #[test]
    fn parses_terms() {
        assert_eq!(r("q^2 - 2 + 3*q^-1").to_string(), "q^2 - 2 + 3*q^-1");
        assert_eq!(r("3q^2"), r("3 * q^2"));
        assert_eq!(r("-q^-1").inv().unwrap(), r("-q"));
    }

    #[test]
    fn round_trips_fractions() {
        let x = r("(q^2 + 1)/(q - 2)");
        assert_eq!(r(&x.to_string()), x);
        let y = r("(-q^3)/(2*q^2 + 2)");
        assert_eq!(r(&y.to_string()), y);
    }

    #[test]
    fn reports_position() {
        assert!(matches!("q + * 2".parse::<RatFn>(), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!("1/0".parse::<RatFn>(), Err(Error::Syntax { .. })));
    }
}
