//! Hopf structure maps on expressions.

use serde::Serialize;

use super::{Expr, Gen};
use crate::field::RatFn;

/// Which comultiplication builds a tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `Δ(e) = e⊗k + 1⊗e`, `Δ(f) = f⊗1 + k⁻¹⊗f`.
    Delta,
    /// The opposite coproduct `Δ' = τ∘Δ`.
    DeltaPrime,
}

/// A sum of pure tensors `Σ x_i ⊗ y_i`.
pub type Tensor2 = Vec<(Expr, Expr)>;

fn gen_coproduct(g: Gen, side: Side) -> Tensor2 {
    let one = Expr::one;
    match (g, side) {
        (Gen::E(a), Side::Delta) => vec![(Expr::e(a), Expr::k(a)), (one(), Expr::e(a))],
        (Gen::E(a), Side::DeltaPrime) => vec![(Expr::e(a), one()), (Expr::k(a), Expr::e(a))],
        (Gen::F(a), Side::Delta) => vec![(Expr::f(a), one()), (Expr::k_inv(a), Expr::f(a))],
        (Gen::F(a), Side::DeltaPrime) => vec![(Expr::f(a), Expr::k_inv(a)), (one(), Expr::f(a))],
        (g @ (Gen::K(_) | Gen::Kinv(_)), _) => vec![(Expr::Atom(g), Expr::Atom(g))],
    }
}

fn mul_tensors(a: &Tensor2, b: &Tensor2) -> Tensor2 {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (x1, y1) in a {
        for (x2, y2) in b {
            let x = x1.clone() * x2.clone();
            let y = y1.clone() * y2.clone();
            if !x.is_zero() && !y.is_zero() {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn coproduct(x: &Expr, side: Side) -> Tensor2 {
    match x {
        Expr::Atom(g) => gen_coproduct(*g, side),
        Expr::Scalar(c) if c.is_zero() => vec![],
        Expr::Scalar(c) => vec![(Expr::Scalar(c.clone()), Expr::one())],
        Expr::Sum(terms) => terms.iter().flat_map(|t| coproduct(t, side)).collect(),
        Expr::Product(fs) => fs.iter().fold(vec![(Expr::one(), Expr::one())], |acc, f| mul_tensors(&acc, &coproduct(f, side))),
        Expr::Pow(b, k) => {
            let d = coproduct(b, side);
            (0..*k).fold(vec![(Expr::one(), Expr::one())], |acc, _| mul_tensors(&acc, &d))
        }
    }
}

pub fn counit(x: &Expr) -> RatFn {
    match x {
        Expr::Atom(Gen::E(_) | Gen::F(_)) => RatFn::zero(),
        Expr::Atom(_) => RatFn::one(),
        Expr::Scalar(c) => c.clone(),
        Expr::Sum(terms) => terms.iter().map(counit).sum(),
        Expr::Product(fs) => fs.iter().map(counit).product(),
        Expr::Pow(b, k) => counit(b).pow(*k as i32).unwrap(),
    }
}

/// The antipode: `S(e) = -e k⁻¹`, `S(f) = -k f`, `S(K) = K⁻¹`, extended
/// as an anti-homomorphism.
pub fn antipode(x: &Expr) -> Expr {
    match x {
        Expr::Atom(Gen::E(a)) => -(Expr::e(*a) * Expr::k_inv(*a)),
        Expr::Atom(Gen::F(a)) => -(Expr::k(*a) * Expr::f(*a)),
        Expr::Atom(Gen::K(b)) => Expr::kinv_atom(*b),
        Expr::Atom(Gen::Kinv(b)) => Expr::K(*b),
        Expr::Scalar(_) => x.clone(),
        Expr::Sum(terms) => Expr::sum(terms.iter().map(antipode).collect()),
        Expr::Product(fs) => Expr::product(fs.iter().rev().map(antipode).collect()),
        Expr::Pow(b, k) => Expr::pow(antipode(b), *k),
    }
}
