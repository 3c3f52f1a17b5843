use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::field::{GLParams, RatFn};

/// A generator of the algebra. Indices are 1-based as in the text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
}

impl Gen {
    pub fn validate(self, params: &GLParams) -> Result<()> {
        match self {
            Gen::E(a) | Gen::F(a) => params.check_i_prime(a),
            Gen::K(b) | Gen::Kinv(b) => params.check_i(b),
        }
    }

    /// Every generator for the given `(m, n)`, in a fixed order.
    pub fn all(params: &GLParams) -> Vec<Gen> {
        let n = params.rank();
        let mut v: Vec<Gen> = (1..n).map(Gen::E).collect();
        v.extend((1..n).map(Gen::F));
        v.extend((1..=n).map(Gen::K));
        v.extend((1..=n).map(Gen::Kinv));
        v
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(a) => write!(f, "e{a}"),
            Gen::F(a) => write!(f, "f{a}"),
            Gen::K(b) => write!(f, "K{b}"),
            Gen::Kinv(b) => write!(f, "K{b}^-1"),
        }
    }
}

/// A noncommutative polynomial in the generators.
///
/// Build through the associated constructors, which keep the tree in a
/// canonical shape. Sums and products are flat and a product carries at
/// most one scalar, in front. `Pow` holds a non-scalar base with exponent at
/// least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Atom(Gen),
    Scalar(RatFn),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn zero() -> Self {
        Expr::Scalar(RatFn::zero())
    }

    pub fn one() -> Self {
        Expr::Scalar(RatFn::one())
    }

    pub fn scalar(c: impl Into<RatFn>) -> Self {
        Expr::Scalar(c.into())
    }

    pub fn e(a: usize) -> Self {
        Expr::Atom(Gen::E(a))
    }

    pub fn f(a: usize) -> Self {
        Expr::Atom(Gen::F(a))
    }

    #[allow(non_snake_case)]
    pub fn K(b: usize) -> Self {
        Expr::Atom(Gen::K(b))
    }

    pub fn kinv_atom(b: usize) -> Self {
        Expr::Atom(Gen::Kinv(b))
    }

    /// `k_a = K_a K_{a+1}^{-1}`.
    pub fn k(a: usize) -> Self {
        Self::product(vec![Self::K(a), Self::kinv_atom(a + 1)])
    }

    /// `k_a^{-1} = K_a^{-1} K_{a+1}`.
    pub fn k_inv(a: usize) -> Self {
        Self::product(vec![Self::kinv_atom(a), Self::K(a + 1)])
    }

    pub fn as_scalar(&self) -> Option<&RatFn> {
        match self {
            Expr::Scalar(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Scalar(c) if c.is_zero())
    }

    pub fn sum(terms: Vec<Expr>) -> Self {
        let mut flat: Vec<Expr> = Vec::with_capacity(terms.len());
        let mut scalar: Option<(usize, RatFn)> = None;
        let push = |t: Expr, flat: &mut Vec<Expr>, scalar: &mut Option<(usize, RatFn)>| match t {
            Expr::Scalar(c) => match scalar {
                Some((_, acc)) => *acc += &c,
                None => {
                    *scalar = Some((flat.len(), c));
                    flat.push(Expr::zero());
                }
            },
            t => flat.push(t),
        };
        for t in terms {
            match t {
                Expr::Sum(inner) => inner.into_iter().for_each(|u| push(u, &mut flat, &mut scalar)),
                t => push(t, &mut flat, &mut scalar),
            }
        }
        if let Some((pos, c)) = scalar {
            flat[pos] = Expr::Scalar(c);
        }
        flat.retain(|t| !t.is_zero());
        match flat.len() {
            0 => Expr::zero(),
            1 => flat.pop().unwrap(),
            _ => Expr::Sum(flat),
        }
    }

    pub fn product(factors: Vec<Expr>) -> Self {
        let mut c = RatFn::one();
        let mut rest: Vec<Expr> = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                Expr::Scalar(x) => c = c * x,
                Expr::Product(inner) => {
                    for g in inner {
                        match g {
                            Expr::Scalar(x) => c = c * x,
                            g => rest.push(g),
                        }
                    }
                }
                f => rest.push(f),
            }
        }
        if c.is_zero() {
            return Expr::zero();
        }
        if rest.is_empty() {
            return Expr::Scalar(c);
        }
        if c.is_one() && rest.len() == 1 {
            return rest.pop().unwrap();
        }
        if !c.is_one() {
            rest.insert(0, Expr::Scalar(c));
        }
        Expr::Product(rest)
    }

    pub fn pow(base: Expr, k: u32) -> Self {
        match (base, k) {
            (_, 0) => Expr::one(),
            (b, 1) => b,
            (Expr::Scalar(c), k) => Expr::Scalar(c.pow(k as i32).unwrap()),
            (Expr::Pow(b, j), k) => Expr::Pow(b, j * k),
            (b, k) => Expr::Pow(Box::new(b), k),
        }
    }

    /// `c·self`.
    pub fn scale(self, c: impl Into<RatFn>) -> Self {
        Self::product(vec![Expr::Scalar(c.into()), self])
    }

    /// `[a, b]_x = ab - x·ba`.
    pub fn qcomm(a: &Expr, b: &Expr, x: impl Into<RatFn>) -> Self {
        let x: RatFn = x.into();
        Self::sum(vec![Self::product(vec![a.clone(), b.clone()]), Self::product(vec![Expr::Scalar(-x), b.clone(), a.clone()])])
    }

    /// `[a, b] = ab - ba`.
    pub fn comm(a: &Expr, b: &Expr) -> Self {
        Self::qcomm(a, b, 1)
    }

    /// Checks every generator index against `params`.
    pub fn validate(&self, params: &GLParams) -> Result<()> {
        match self {
            Expr::Atom(g) => g.validate(params),
            Expr::Scalar(_) => Ok(()),
            Expr::Sum(v) | Expr::Product(v) => v.iter().try_for_each(|t| t.validate(params)),
            Expr::Pow(b, _) => b.validate(params),
        }
    }

    /// Generators occurring in the expression.
    pub fn atoms(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Gen>) {
        match self {
            Expr::Atom(g) => out.push(*g),
            Expr::Scalar(_) => {}
            Expr::Sum(v) | Expr::Product(v) => v.iter().for_each(|t| t.collect_atoms(out)),
            Expr::Pow(b, _) => b.collect_atoms(out),
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, -rhs])
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::product(vec![self, rhs])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(-1)
    }
}

fn is_negative(c: &RatFn) -> bool {
    c.numer().leading_coeff().is_some_and(|l| l.sign() == num_bigint::Sign::Minus)
}

/// A scalar as a standalone summand: bare when it is a single term.
fn fmt_scalar_term(c: &RatFn, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let s = c.to_string();
    if c.is_laurent() && c.numer().term_count() == 1 {
        f.write_str(&s)
    } else {
        write!(f, "({s})")
    }
}

fn fmt_factor(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Scalar(c) => write!(f, "({c})"),
        Expr::Sum(_) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(g) => write!(f, "{g}"),
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::Pow(b, k) => match **b {
                Expr::Atom(Gen::Kinv(i)) => write!(f, "K{i}^-{k}"),
                Expr::Atom(g) => write!(f, "{g}^{k}"),
                _ => write!(f, "({b})^{k}"),
            },
            Expr::Product(v) => {
                let mut it = v.iter();
                if let Some(Expr::Scalar(c)) = v.first() {
                    it.next();
                    if *c == RatFn::int(-1) {
                        f.write_str("-")?;
                    } else {
                        write!(f, "({c})*")?;
                    }
                }
                for (i, t) in it.enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    fmt_factor(t, f)?;
                }
                Ok(())
            }
            Expr::Sum(v) => {
                for (i, t) in v.iter().enumerate() {
                    let neg = match t {
                        Expr::Scalar(c) => is_negative(c),
                        Expr::Product(p) => matches!(p.first(), Some(Expr::Scalar(c)) if is_negative(c)),
                        _ => false,
                    };
                    match (i, neg) {
                        (0, _) => match t {
                            Expr::Scalar(c) => fmt_scalar_term(c, f)?,
                            _ => write!(f, "{t}")?,
                        },
                        (_, true) => {
                            f.write_str(" - ")?;
                            match -t.clone() {
                                Expr::Scalar(c) => fmt_scalar_term(&c, f)?,
                                u => write!(f, "{u}")?,
                            }
                        }
                        (_, false) => {
                            f.write_str(" + ")?;
                            match t {
                                Expr::Scalar(c) => fmt_scalar_term(c, f)?,
                                _ => write!(f, "{t}")?,
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({self})")
    }
}
