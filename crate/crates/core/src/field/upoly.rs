//! Dense univariate polynomials over ℤ as ascending coefficient slices.
//!
//! These helpers back the gcd computation of [`super::RatFn`]; inputs are
//! assumed trimmed (no trailing zero coefficient) unless stated otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    if v.is_empty() {
        return v;
    }
    let c = content(&v);
    let mut out: Vec<BigInt> = if c.is_one() { v } else { v.into_iter().map(|x| x / &c).collect() };
    if out.last().is_some_and(|lc| lc.is_negative()) {
        for x in out.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` (b nonzero). The result is only defined up
/// to a nonzero integer factor, which is all the primitive Euclidean
/// algorithm needs.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r = trim(r);
        let c = content(&r);
        if !c.is_zero() && !c.is_one() {
            for x in r.iter_mut() {
                *x = &*x / &c;
            }
        }
    }
    r
}

/// Greatest common divisor in ℤ[q], normalised to a positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive_sign(b.to_vec());
    }
    if b.is_empty() {
        return primitive_sign(a.to_vec());
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive_part(a.to_vec()), primitive_part(b.to_vec()))
    } else {
        (primitive_part(b.to_vec()), primitive_part(a.to_vec()))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(r);
    }
    x.into_iter().map(|v| v * &c).collect()
}

fn primitive_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(|lc| lc.is_negative()) {
        for x in v.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    v
}

/// Exact quotient `a / b` in ℤ[q]; panics if `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    if db == 0 {
        return a
            .iter()
            .map(|x| {
                let (quo, rem) = x.div_rem(lb);
                assert!(rem.is_zero(), "inexact scalar division");
                quo
            })
            .collect();
    }
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        quot[shift] = c;
        r = trim(r);
    }
    assert!(r.is_empty(), "polynomial division left a remainder");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (q+1)(q-2) and (q+1)(2q+3)
        let a = p(&[-2, -1, 1]);
        let b = p(&[3, 5, 2]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(gcd(&p(&[4, 4]), &p(&[6, 6])), p(&[2, 2]));
        assert_eq!(gcd(&p(&[2]), &p(&[0, 4])), p(&[2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]); // q^3 - 1
        let b = p(&[-1, 1]);
        assert_eq!(div_exact(&a, &b), p(&[1, 1, 1]));
    }
}
