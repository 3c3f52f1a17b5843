use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::Representation;
use crate::error::{Error, Result};
use crate::expr::Gen;
use crate::field::RatFn;
use crate::linalg::{nullspace, SparseMat, SparseVec, Subspace};

/// Eigenvalues of `K_1, …, K_{m+n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight(pub Vec<RatFn>);

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn diagonals(rep: &Representation) -> Result<Vec<Vec<RatFn>>> {
    (1..=rep.params.rank())
        .map(|b| {
            let k = rep.gen(Gen::K(b));
            if k.is_diagonal() {
                Ok(k.diag())
            } else {
                Err(Error::NotSimultaneouslyDiagonal(b))
            }
        })
        .collect()
}

/// Basis indices grouped by weight, in order of first appearance.
fn weight_classes(rep: &Representation) -> Result<Vec<(Weight, Vec<usize>)>> {
    let diags = diagonals(rep)?;
    let mut out: Vec<(Weight, Vec<usize>)> = Vec::new();
    for i in 0..rep.dim {
        let w = Weight(diags.iter().map(|d| d[i].clone()).collect());
        match out.iter_mut().find(|(u, _)| *u == w) {
            Some((_, idx)) => idx.push(i),
            None => out.push((w, vec![i])),
        }
    }
    Ok(out)
}

/// Simultaneous eigenspaces of the `K_b`, which must be diagonal in the
/// working basis.
pub fn weight_decomposition(rep: &Representation) -> Result<Vec<(Weight, Vec<SparseVec>)>> {
    Ok(weight_classes(rep)?.into_iter().map(|(w, idx)| (w, idx.into_iter().map(|i| SparseVec::unit(rep.dim, i)).collect())).collect())
}

/// A basis of the joint kernel of the `e_a`, split by weight.
pub fn highest_weight_vectors(rep: &Representation) -> Result<Vec<(Weight, SparseVec)>> {
    let es: Vec<&SparseMat> = (1..rep.params.rank()).map(|a| rep.gen(Gen::E(a))).collect();
    let all_rows: Vec<usize> = (0..rep.dim).collect();
    let mut out = Vec::new();
    for (w, idx) in weight_classes(rep)? {
        let mut triplets = Vec::new();
        let mut row0 = 0;
        for e in &es {
            let sub = e.submatrix(&all_rows, &idx);
            triplets.extend(sub.triplets().map(|(i, j, x)| (row0 + i, j, x.clone())));
            row0 += rep.dim;
        }
        let stacked = SparseMat::from_triplets(row0, idx.len(), triplets);
        for k in nullspace(&stacked) {
            let v = SparseVec::from_entries(rep.dim, k.entries().iter().map(|(j, x)| (idx[*j], x.clone())).collect());
            out.push((w.clone(), v));
        }
    }
    Ok(out)
}

/// The smallest subspace containing `seeds` and stable under every
/// generator matrix.
pub fn submodule_closure(rep: &Representation, seeds: &[SparseVec]) -> Result<Subspace> {
    let mats: Vec<&SparseMat> = rep.gens.values().collect();
    let mut span = Subspace::zero(rep.dim);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for s in seeds {
        if s.dim() != rep.dim {
            return Err(Error::DimensionMismatch(format!("seed of length {} in a module of dimension {}", s.dim(), rep.dim)));
        }
        if span.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for m in &mats {
            let w = m.apply(&v)?;
            if span.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Ok(span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Side;
    use crate::field::{p, GLParams};
    use crate::rep::{dual_rep, natural_rep, tensor_rep};

    fn q() -> RatFn {
        RatFn::q()
    }

    #[test]
    fn natural_weights() {
        let v = natural_rep(&GLParams::new(2, 1).unwrap());
        let ws: Vec<Weight> = weight_decomposition(&v).unwrap().into_iter().map(|w| w.0).collect();
        let one = RatFn::one;
        assert_eq!(ws, vec![Weight(vec![q(), one(), one()]), Weight(vec![one(), q(), one()]), Weight(vec![one(), one(), p()])]);
        let hw = highest_weight_vectors(&v).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].1, SparseVec::unit(3, 0));
    }

    #[test]
    fn dual_highest_weight_is_last() {
        let v = dual_rep(&natural_rep(&GLParams::new(2, 1).unwrap()));
        let hw = highest_weight_vectors(&v).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].1, SparseVec::unit(3, 2));
        assert_eq!(hw[0].0, Weight(vec![RatFn::one(), RatFn::one(), p().inv().unwrap()]));
    }

    #[test]
    fn square_has_two_highest_weights() {
        let v = natural_rep(&GLParams::new(2, 1).unwrap());
        let vv = tensor_rep(&v, &v, Side::Delta).unwrap();
        let hw = highest_weight_vectors(&vv).unwrap();
        assert_eq!(hw.len(), 2);
        assert_eq!(hw[0].1, SparseVec::unit(9, 0));
        assert_eq!(hw[0].0, Weight(vec![q() * q(), RatFn::one(), RatFn::one()]));
        let w = SparseVec::from_entries(9, vec![(1, RatFn::one()), (3, -RatFn::q_pow(-1))]);
        assert_eq!(hw[1].1, w);
        let sym = submodule_closure(&vv, &[hw[0].1.clone()]).unwrap();
        let alt = submodule_closure(&vv, &[hw[1].1.clone()]).unwrap();
        assert_eq!((sym.rank(), alt.rank()), (5, 4));
        assert_eq!(sym.intersection(&alt).unwrap().rank(), 0);
        assert_eq!(submodule_closure(&vv, &[SparseVec::zero(9)]).unwrap().rank(), 0);
    }
}
