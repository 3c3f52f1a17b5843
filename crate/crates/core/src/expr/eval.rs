use std::collections::HashMap;

use super::{Expr, Gen};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;

/// Anything that assigns a square matrix to each generator.
pub trait GenAction {
    fn dim(&self) -> usize;
    fn matrix(&self, g: Gen) -> Option<&SparseMat>;
}

/// Homomorphic evaluation with a cache of evaluated subtrees, so shared
/// root vectors are multiplied out once per evaluator.
pub struct Evaluator<'a, R: GenAction + ?Sized> {
    rep: &'a R,
    cache: HashMap<Expr, SparseMat>,
}

impl<'a, R: GenAction + ?Sized> Evaluator<'a, R> {
    pub fn new(rep: &'a R) -> Self {
        Self { rep, cache: HashMap::new() }
    }

    pub fn eval(&mut self, x: &Expr) -> Result<SparseMat> {
        let n = self.rep.dim();
        match x {
            Expr::Atom(g) => self.rep.matrix(*g).cloned().ok_or_else(|| Error::MissingGenerator(g.to_string())),
            Expr::Scalar(c) => Ok(SparseMat::scalar(n, c)),
            Expr::Sum(terms) => {
                let mut acc = SparseMat::zeros(n, n);
                for t in terms {
                    acc = acc.add(&self.eval(t)?)?;
                }
                Ok(acc)
            }
            Expr::Product(_) | Expr::Pow(..) => {
                if let Some(m) = self.cache.get(x) {
                    return Ok(m.clone());
                }
                let m = self.eval_uncached(x)?;
                self.cache.insert(x.clone(), m.clone());
                Ok(m)
            }
        }
    }

    fn eval_uncached(&mut self, x: &Expr) -> Result<SparseMat> {
        match x {
            Expr::Product(factors) => {
                let mut scale = None;
                let mut acc: Option<SparseMat> = None;
                for f in factors {
                    if let Expr::Scalar(c) = f {
                        scale = Some(c.clone());
                        continue;
                    }
                    let m = self.eval(f)?;
                    acc = Some(match acc {
                        None => m,
                        Some(a) => a.mul(&m)?,
                    });
                }
                let acc = acc.unwrap_or_else(|| SparseMat::identity(self.rep.dim()));
                Ok(match scale {
                    Some(c) => acc.scale(&c),
                    None => acc,
                })
            }
            Expr::Pow(b, k) => {
                let m = self.eval(b)?;
                m.pow(*k)
            }
            _ => unreachable!(),
        }
    }
}

/// One-shot evaluation of `x` in `rep`.
pub fn eval_in_rep<R: GenAction + ?Sized>(x: &Expr, rep: &R) -> Result<SparseMat> {
    Evaluator::new(rep).eval(x)
}
