use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{forward_owned, LaurentPoly};
use super::upoly;
use crate::error::{Error, Result};

/// An element of ℚ(q) kept in a unique reduced form.
///
/// The denominator is an ordinary polynomial not divisible by `q`, with a
/// positive leading coefficient and no common factor with the numerator in
/// ℤ[q]. Any power of `q` lives in the numerator. Because the form is
/// unique, `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFn {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }

    /// `num / den`, reduced. Fails only when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in ℤ[q, q⁻¹].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Number of nonzero terms in numerator and denominator together; the
    /// elimination pivot heuristic minimises this.
    pub fn term_count(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    /// Value at a rational point, or `None` on a pole.
    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(at) / d)
    }

    /// Re-runs canonicalisation. A no-op on any value built through the
    /// public API; exposed so idempotence can be tested.
    pub fn normalize(&self) -> Self {
        reduce(self.num.clone(), self.den.clone())
    }
}

fn reduce(num: LaurentPoly, den: LaurentPoly) -> RatFn {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RatFn::zero();
    }
    let shift = -den.low_degree().unwrap();
    let (num, den) = (num.shift(shift), den.shift(shift));

    if den.is_monomial() {
        let d = den.leading_coeff().unwrap().clone();
        let g = num.content().gcd(&d);
        let mut num = scale_div(&num, &g);
        let mut d = d / &g;
        if d.is_negative() {
            num = -num;
            d = -d;
        }
        return RatFn { num, den: LaurentPoly::constant(d) };
    }

    let (nlo, nc) = num.dense();
    let (_, dc) = den.dense();
    let g = upoly::gcd(nc, dc);
    let (mut n, mut d) =
        if g.len() == 1 && g[0].is_one() { (nc.to_vec(), dc.to_vec()) } else { (upoly::div_exact(nc, &g), upoly::div_exact(dc, &g)) };
    if d.last().unwrap().is_negative() {
        n.iter_mut().for_each(|c| *c = -std::mem::take(c));
        d.iter_mut().for_each(|c| *c = -std::mem::take(c));
    }
    RatFn { num: LaurentPoly::from_dense(nlo, n), den: LaurentPoly::from_dense(0, d) }
}

fn scale_div(p: &LaurentPoly, g: &BigInt) -> LaurentPoly {
    if g.is_one() {
        return p.clone();
    }
    let (lo, c) = p.dense();
    LaurentPoly::from_dense(lo, c.iter().map(|x| x / g).collect())
}

impl From<LaurentPoly> for RatFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFn {
    fn from(c: i64) -> Self {
        Self::int(c)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFn::from_poly(&self.num + &rhs.num);
            }
            return reduce(&self.num + &rhs.num, self.den.clone());
        }
        reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from_poly(&self.num * &rhs.num);
        }
        reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    /// Panics on division by zero; use [`RatFn::checked_div`] otherwise.
    fn div(self, rhs: &RatFn) -> RatFn {
        self.checked_div(rhs).expect("division by the zero function")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -self.num, den: self.den }
    }
}

forward_owned!(RatFn, Add add, Sub sub, Mul mul, Div div);

impl std::ops::AddAssign<&RatFn> for RatFn {
    fn add_assign(&mut self, rhs: &RatFn) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for RatFn {
    fn sum<I: Iterator<Item = RatFn>>(iter: I) -> RatFn {
        iter.fold(RatFn::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFn {
    fn product<I: Iterator<Item = RatFn>>(iter: I) -> RatFn {
        iter.fold(RatFn::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl serde::Serialize for RatFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
