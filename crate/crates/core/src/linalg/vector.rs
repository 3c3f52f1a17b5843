use std::fmt;

use crate::field::RatFn;

/// A sparse column vector; entries sorted by index, none zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, RatFn)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: Vec::new() }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        Self { dim, entries: vec![(i, RatFn::one())] }
    }

    /// From arbitrary `(index, value)` pairs; duplicates add, zeros drop.
    pub fn from_entries(dim: usize, mut entries: Vec<(usize, RatFn)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, RatFn)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        Self { dim, entries: out }
    }

    pub fn from_dense(v: Vec<RatFn>) -> Self {
        let dim = v.len();
        let entries = v.into_iter().enumerate().filter(|e| !e.1.is_zero()).collect();
        Self { dim, entries }
    }

    /// Trusted constructor: `entries` already sorted, unique and nonzero.
    pub(crate) fn from_sorted(dim: usize, entries: Vec<(usize, RatFn)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero() && e.0 < dim));
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, RatFn)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> RatFn {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => RatFn::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, RatFn)> {
        self.entries.first()
    }

    pub fn to_dense(&self) -> Vec<RatFn> {
        let mut v = vec![RatFn::zero(); self.dim];
        for (i, x) in &self.entries {
            v[*i] = x.clone();
        }
        v
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        if c.is_one() {
            return self.clone();
        }
        Self { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c·other`, merged in one pass.
    pub fn axpy(&self, c: &RatFn, other: &SparseVec) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in axpy");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) if i == j => {
                    let s = x + &(c * y);
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                    a.next();
                    b.next();
                }
                (Some((i, x)), Some((j, _))) if i < j => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (_, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, None) => break,
            }
        }
        Self { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.axpy(&RatFn::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.axpy(&RatFn::int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> RatFn {
        let mut acc = RatFn::zero();
        for (i, x) in &self.entries {
            if let Ok(k) = other.entries.binary_search_by_key(i, |e| e.0) {
                acc += &(x * &other.entries[k].1);
            }
        }
        acc
    }

    /// Tensor product `self ⊗ other` in the lexicographic basis.
    pub fn kron(&self, other: &SparseVec) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        Self { dim: self.dim * other.dim, entries }
    }

    /// Whether `self = c·other` for some scalar `c`, returning `c`.
    pub fn ratio_to(&self, other: &SparseVec) -> Option<RatFn> {
        if self.dim != other.dim || self.nnz() != other.nnz() {
            return None;
        }
        if self.is_zero() {
            return Some(RatFn::zero());
        }
        let c = &self.entries[0].1 / &other.entries[0].1;
        (*self == other.scale(&c)).then_some(c)
    }

    /// Rescales so the first nonzero entry is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lead)) => self.scale(&lead.inv().unwrap()),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseVec[{}]{{", self.dim)?;
        for (k, (i, x)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}: {x}")?;
        }
        f.write_str("}")
    }
}
