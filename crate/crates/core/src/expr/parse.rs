use num_bigint::BigInt;

use super::{Expr, Gen};
use crate::error::{syntax, Result};
use crate::field::{GLParams, LaurentPoly, RatFn};

/// Parses the expression grammar
///
/// ```text
/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := factor (['*'|'/'] factor)*        // '*' may be omitted
/// factor := primary ['^' int]
/// primary:= e<d> | f<d> | K<d> | k<d> | q | <digits> | '(' expr ')'
/// ```
///
/// `k<d>` expands to `K<d>*K<d+1>^-1`. Negative powers are accepted on
/// `K`/`k` atoms and on scalars only, and `/` only by a scalar.
pub fn parse_expr(text: &str, params: &GLParams) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, params };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return syntax(p.pos, "unexpected trailing input");
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a GLParams,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let first_neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let t = self.term()?;
        terms.push(if first_neg { -t } else { t });
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(-self.term()?);
                }
                _ => return Ok(Expr::sum(terms)),
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        matches!(c, b'e' | b'f' | b'K' | b'k' | b'q' | b'(') || c.is_ascii_digit()
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    let Some(c) = d.as_scalar() else {
                        return syntax(at, "division is only allowed by a scalar");
                    };
                    let Ok(inv) = c.inv() else {
                        return syntax(at, "division by zero");
                    };
                    factors.push(Expr::Scalar(inv));
                }
                Some(c) if Self::starts_factor(c) => factors.push(self.factor()?),
                _ => return Ok(Expr::product(factors)),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        let (base, k_atom) = self.primary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.signed_int()?;
        if e >= 0 {
            return Ok(Expr::pow(base, e as u32));
        }
        let k = e.unsigned_abs();
        if let Some(c) = base.as_scalar() {
            return match c.pow(e) {
                Ok(v) => Ok(Expr::Scalar(v)),
                Err(_) => syntax(at, "negative power of zero"),
            };
        }
        match k_atom {
            Some((b, false)) => Ok(Expr::pow(Expr::kinv_atom(b), k)),
            Some((a, true)) => Ok(Expr::pow(Expr::k_inv(a), k)),
            None => syntax(start, "negative powers are only allowed on K atoms and scalars"),
        }
    }

    /// Returns the primary and, for bare `K<d>`/`k<d>`, its index and
    /// whether it was lowercase.
    fn primary(&mut self) -> Result<(Expr, Option<(usize, bool)>)> {
        let Some(c) = self.peek() else {
            return syntax(self.pos, "unexpected end of input");
        };
        match c {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return syntax(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok((e, None))
            }
            b'q' => {
                self.pos += 1;
                Ok((Expr::Scalar(RatFn::q()), None))
            }
            b'e' | b'f' | b'K' | b'k' => {
                self.pos += 1;
                let at = self.pos;
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return syntax(at, "expected a generator index");
                }
                let i: usize = self.uint()?.try_into().or_else(|_| syntax(at, "index too large"))?;
                let (g, k) = match c {
                    b'e' => (Gen::E(i), None),
                    b'f' => (Gen::F(i), None),
                    b'K' => (Gen::K(i), Some((i, false))),
                    _ => (Gen::E(i), Some((i, true))),
                };
                if c == b'k' {
                    self.params.check_i_prime(i)?;
                    return Ok((Expr::k(i), k));
                }
                g.validate(self.params)?;
                Ok((Expr::Atom(g), k))
            }
            c if c.is_ascii_digit() => Ok((Expr::Scalar(RatFn::from(LaurentPoly::constant(self.uint()?))), None)),
            _ => syntax(self.pos, format!("unexpected character '{}'", c as char)),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<i32> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let at = self.pos;
        let v: i32 = self.uint()?.try_into().or_else(|_| syntax(at, "exponent too large"))?;
        Ok(if neg { -v } else { v })
    }
}
