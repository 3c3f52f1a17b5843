use super::elim::{nullspace, rref, Echelon};
use super::{SparseMat, SparseVec};
use crate::error::{Error, Result};
use crate::field::RatFn;

/// A subspace of `ℚ(q)^dim` held as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Self { ech: rref(dim, vec![]) }
    }

    pub fn full(dim: usize) -> Self {
        Self::span(dim, (0..dim).map(|i| SparseVec::unit(dim, i)).collect()).unwrap()
    }

    pub fn span(dim: usize, vecs: Vec<SparseVec>) -> Result<Self> {
        if let Some(v) = vecs.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch(format!("vector of dimension {} in a span of dimension {dim}", v.dim())));
        }
        Ok(Self { ech: rref(dim, vecs) })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.ncols
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.ech.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.ech.pivots
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        v.dim() == self.ambient_dim() && self.ech.reduce(v).is_zero()
    }

    /// `v` minus its component along the pivot columns; zero iff `v` is in
    /// the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.ech.reduce(v)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.ech.reduce(v);
        if r.is_zero() {
            return false;
        }
        let mut rows = self.ech.rows.clone();
        rows.push(r);
        self.ech = rref(self.ambient_dim(), rows);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self> {
        self.same_dim(other)?;
        let mut rows = self.ech.rows.clone();
        rows.extend(other.ech.rows.iter().cloned());
        Ok(Self { ech: rref(self.ambient_dim(), rows) })
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Self> {
        self.same_dim(other)?;
        let (a, b) = (self.basis(), other.basis());
        if a.is_empty() || b.is_empty() {
            return Ok(Self::zero(self.ambient_dim()));
        }
        // kernel of [A | -B] gives the coefficient pairs with Ax = By
        let mut cols: Vec<SparseVec> = a.to_vec();
        cols.extend(b.iter().map(|v| v.scale(&RatFn::int(-1))));
        let m = SparseMat::from_columns(self.ambient_dim(), &cols);
        let vecs = nullspace(&m)
            .into_iter()
            .map(|k| a.iter().enumerate().fold(SparseVec::zero(self.ambient_dim()), |acc, (i, v)| acc.axpy(&k.get(i), v)))
            .collect();
        Self::span(self.ambient_dim(), vecs)
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.ech.pivots == other.ech.pivots && self.ech.rows == other.ech.rows
    }

    /// Whether every generator maps the subspace into itself.
    pub fn is_invariant_under(&self, mats: &[&SparseMat]) -> bool {
        self.basis().iter().all(|v| mats.iter().all(|m| m.apply(v).map(|w| self.contains(&w)).unwrap_or(false)))
    }

    fn same_dim(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!("subspaces of dimensions {} and {}", self.ambient_dim(), other.ambient_dim())));
        }
        Ok(())
    }
}
