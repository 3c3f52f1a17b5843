use std::collections::BTreeMap;
use std::fmt;

use super::SparseVec;
use crate::error::{Error, Result};
use crate::field::RatFn;

/// A sparse matrix stored by rows; each row is sorted by column with no
/// zero entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMat {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, RatFn)>>,
}

fn mismatch<T>(what: &str, a: &SparseMat, b: &SparseMat) -> Result<T> {
    Err(Error::DimensionMismatch(format!("{what}: {}x{} vs {}x{}", a.nrows, a.ncols, b.nrows, b.ncols)))
}

impl SparseMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &RatFn::one())
    }

    pub fn scalar(n: usize, c: &RatFn) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        Self { nrows: n, ncols: n, rows: (0..n).map(|i| vec![(i, c.clone())]).collect() }
    }

    pub fn diagonal(d: Vec<RatFn>) -> Self {
        let n = d.len();
        let rows = d.into_iter().enumerate().map(|(i, x)| if x.is_zero() { vec![] } else { vec![(i, x)] });
        Self { nrows: n, ncols: n, rows: rows.collect() }
    }

    /// The matrix unit `e_{ij}` (zero-based) of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_triplets(n, n, vec![(i, j, RatFn::one())])
    }

    /// From `(row, col, value)` triplets; duplicates add, zeros drop.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: Vec<(usize, usize, RatFn)>) -> Self {
        let mut buckets: Vec<Vec<(usize, RatFn)>> = vec![Vec::new(); nrows];
        for (i, j, x) in triplets {
            assert!(i < nrows && j < ncols, "entry ({i}, {j}) outside {nrows}x{ncols}");
            buckets[i].push((j, x));
        }
        let rows = buckets.into_iter().map(|r| SparseVec::from_entries(ncols, r).entries().to_vec());
        Self { nrows, ncols, rows: rows.collect() }
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut rows = vec![Vec::new(); n];
        for (j, &i) in perm.iter().enumerate() {
            rows[i].push((j, RatFn::one()));
        }
        Self { nrows: n, ncols: n, rows }
    }

    pub fn from_columns(nrows: usize, cols: &[SparseVec]) -> Self {
        let mut trip = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), nrows);
            for (i, x) in c.entries() {
                trip.push((*i, j, x.clone()));
            }
        }
        Self::from_triplets(nrows, cols.len(), trip)
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.dim() == ncols));
        Self { nrows: rows.len(), ncols, rows: rows.into_iter().map(|r| r.entries().to_vec()).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.iter().all(|(j, _)| *j == i))
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn as_scalar(&self) -> Option<RatFn> {
        if !self.is_square() || !self.is_diagonal() {
            return None;
        }
        let c = self.get(0, 0);
        (0..self.nrows).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn get(&self, i: usize, j: usize) -> RatFn {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => RatFn::zero(),
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, RatFn)] {
        &self.rows[i]
    }

    pub fn row_vec(&self, i: usize) -> SparseVec {
        SparseVec::from_sorted(self.ncols, self.rows[i].clone())
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let e = (0..self.nrows).filter_map(|i| {
            let x = self.get(i, j);
            (!x.is_zero()).then_some((i, x))
        });
        SparseVec::from_sorted(self.nrows, e.collect())
    }

    /// All nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &RatFn)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, j.to_owned(), x)))
    }

    pub fn diag(&self) -> Vec<RatFn> {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> RatFn {
        self.diag().into_iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                rows[*j].push((i, x.clone()));
            }
        }
        Self { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect());
        Self { nrows: self.nrows, ncols: self.ncols, rows: rows.collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFn::int(-1))
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &RatFn, other: &SparseMat) -> Result<Self> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return mismatch("sum", self, other);
        }
        let rows = (0..self.nrows).map(|i| self.row_vec(i).axpy(c, &other.row_vec(i)).entries().to_vec());
        Ok(Self { nrows: self.nrows, ncols: self.ncols, rows: rows.collect() })
    }

    pub fn add(&self, other: &SparseMat) -> Result<Self> {
        self.axpy(&RatFn::one(), other)
    }

    pub fn sub(&self, other: &SparseMat) -> Result<Self> {
        self.axpy(&RatFn::int(-1), other)
    }

    pub fn mul(&self, other: &SparseMat) -> Result<Self> {
        if self.ncols != other.nrows {
            return mismatch("product", self, other);
        }
        let rows = self.rows.iter().map(|r| {
            let mut acc: BTreeMap<usize, RatFn> = BTreeMap::new();
            for (k, x) in r {
                for (j, y) in &other.rows[*k] {
                    let t = x * y;
                    acc.entry(*j).and_modify(|v| *v += &t).or_insert(t);
                }
            }
            acc.into_iter().filter(|e| !e.1.is_zero()).collect()
        });
        Ok(Self { nrows: self.nrows, ncols: other.ncols, rows: rows.collect() })
    }

    /// Product of a non-empty chain of matrices.
    pub fn product<'a>(mats: impl IntoIterator<Item = &'a SparseMat>) -> Result<Self> {
        let mut it = mats.into_iter();
        let first = it.next().expect("empty product").clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.dim() != self.ncols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of dimension {}",
                self.nrows,
                self.ncols,
                v.dim()
            )));
        }
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = RatFn::zero();
            for (j, x) in r {
                let y = v.get(*j);
                if !y.is_zero() {
                    acc += &(x * &y);
                }
            }
            if !acc.is_zero() {
                out.push((i, acc));
            }
        }
        Ok(SparseVec::from_sorted(self.nrows, out))
    }

    /// Kronecker product; `(a⊗b)(v⊗w) = (av)⊗(bw)` with the left factor
    /// most significant in the basis order.
    pub fn kron(&self, other: &SparseMat) -> Self {
        let (p, q) = (other.nrows, other.ncols);
        let mut rows = Vec::with_capacity(self.nrows * p);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut r = Vec::with_capacity(ra.len() * rb.len());
                for (ja, x) in ra {
                    for (jb, y) in rb {
                        r.push((ja * q + jb, x * y));
                    }
                }
                rows.push(r);
            }
        }
        Self { nrows: self.nrows * p, ncols: self.ncols * q, rows }
    }

    /// `A^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::identity(self.nrows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, other: &SparseMat) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// The entry with the largest term count, a cheap proxy for how far an
    /// identity is from holding. `None` for the zero matrix.
    pub fn max_entry(&self) -> Option<(usize, usize, RatFn)> {
        self.triplets().max_by_key(|(i, j, x)| (x.term_count(), std::cmp::Reverse((*i, *j)))).map(|(i, j, x)| (i, j, x.clone()))
    }

    /// Restriction to a row subset and column subset.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let trip = rows.iter().enumerate().flat_map(|(ri, &r)| {
            let pos = &pos;
            self.rows[r].iter().filter_map(move |(c, x)| pos.get(c).map(|&k| (ri, k, x.clone())))
        });
        Self::from_triplets(rows.len(), cols.len(), trip.collect())
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.nrows, self.ncols)?;
        for (i, j, x) in self.triplets() {
            writeln!(f, "  ({i}, {j}) = {x}")?;
        }
        f.write_str("]")
    }
}
