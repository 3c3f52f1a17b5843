use serde::Serialize;

use super::{LaurentPoly, RatFn};
use crate::error::{Error, Result};

/// The pair `(m, n)` fixing the index sets `I = 1..=m+n` and `I' = 1..m+n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GLParams {
    pub m: usize,
    pub n: usize,
}

impl GLParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!("m and n must be positive, got ({m}, {n})")));
        }
        Ok(Self { m, n })
    }

    /// `|I| = m + n`, the dimension of the natural module.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// `m - n` as a signed integer.
    pub fn diff(&self) -> i32 {
        self.m as i32 - self.n as i32
    }

    pub fn check_i(&self, b: usize) -> Result<()> {
        check(b, 1, self.rank())
    }

    pub fn check_i_prime(&self, a: usize) -> Result<()> {
        check(a, 1, self.rank() - 1)
    }

    pub fn is_even_index(&self, a: usize) -> bool {
        a <= self.m
    }

    /// `q_a`: `q` for `a ≤ m`, `p = -q⁻¹` beyond.
    pub fn q_sub(&self, a: usize) -> Result<RatFn> {
        self.check_i(a)?;
        Ok(if a <= self.m { RatFn::q() } else { p() })
    }

    pub(crate) fn qa(&self, a: usize) -> RatFn {
        self.q_sub(a).expect("index checked by caller")
    }
}

fn check(x: usize, lo: usize, hi: usize) -> Result<()> {
    if x < lo || x > hi {
        return Err(Error::IndexOutOfRange { index: x as i64, lo: lo as i64, hi: hi as i64 });
    }
    Ok(())
}

/// `p = -q⁻¹`.
pub fn p() -> RatFn {
    RatFn::from(LaurentPoly::monomial(-1, -1))
}

/// `[k]_q = (q^k - q^-k)/(q - q^-1)`, with `[-k] = -[k]`.
pub fn quantum_int(k: i32) -> LaurentPoly {
    let sign = k.signum();
    let k = k.abs();
    LaurentPoly::from_terms((0..k).map(|i| (k - 1 - 2 * i, sign as i64)))
}

/// `[k]_x` for an arbitrary base, e.g. `[k]_p`.
pub fn quantum_int_in(k: i32, x: &RatFn) -> RatFn {
    let xi = x.inv().expect("nonzero base");
    let num = x.pow(k).unwrap() - xi.pow(k).unwrap();
    num.checked_div(&(x - &xi)).expect("x - 1/x is nonzero for the bases used")
}

/// `q - q⁻¹`, the ubiquitous denominator.
pub fn q_minus_qinv() -> RatFn {
    RatFn::from(LaurentPoly::from_terms([(1, 1), (-1, -1)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_ints() {
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(quantum_int(3), LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(quantum_int(-3), -quantum_int(3));
    }

    #[test]
    fn signed_parameters() {
        let g = GLParams::new(2, 1).unwrap();
        assert_eq!(g.q_sub(1).unwrap(), RatFn::q());
        assert_eq!(g.q_sub(3).unwrap(), p());
        assert!(matches!(g.q_sub(4), Err(Error::IndexOutOfRange { .. })));
        for a in 1..=3 {
            let qa = g.q_sub(a).unwrap();
            let qi = qa.inv().unwrap();
            assert!((&qa * &qi).is_one());
            assert_eq!(&qa - &qi, q_minus_qinv());
        }
    }

    #[test]
    fn quantum_int_at_p() {
        // [2]_p = p + p^-1 = -(q + q^-1)
        assert_eq!(quantum_int_in(2, &p()), -RatFn::from(quantum_int(2)));
        assert_eq!(quantum_int_in(3, &RatFn::q()), RatFn::from(quantum_int(3)));
    }
}
