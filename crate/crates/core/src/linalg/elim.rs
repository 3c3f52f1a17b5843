//! Gauss–Jordan elimination over ℚ(q).
//!
//! Rows start sparse; once the not-yet-pivoted rows fill past half their
//! width, the remainder switches to dense storage. Pivots in each column are
//! chosen by smallest term count to keep rational-function growth down.

use super::{SparseMat, SparseVec};
use crate::field::RatFn;

trait Row: Clone {
    fn at(&self, c: usize) -> RatFn;
    fn lead(&self) -> Option<usize>;
    fn axpy(&self, c: &RatFn, other: &Self) -> Self;
    fn scale(&self, c: &RatFn) -> Self;
    fn nnz(&self) -> usize;
    fn weight(&self) -> usize;
}

impl Row for SparseVec {
    fn at(&self, c: usize) -> RatFn {
        self.get(c)
    }
    fn lead(&self) -> Option<usize> {
        self.leading().map(|e| e.0)
    }
    fn axpy(&self, c: &RatFn, other: &Self) -> Self {
        SparseVec::axpy(self, c, other)
    }
    fn scale(&self, c: &RatFn) -> Self {
        SparseVec::scale(self, c)
    }
    fn nnz(&self) -> usize {
        SparseVec::nnz(self)
    }
    fn weight(&self) -> usize {
        self.entries().iter().map(|e| e.1.term_count()).sum()
    }
}

impl Row for Vec<RatFn> {
    fn at(&self, c: usize) -> RatFn {
        self[c].clone()
    }
    fn lead(&self) -> Option<usize> {
        self.iter().position(|x| !x.is_zero())
    }
    fn axpy(&self, c: &RatFn, other: &Self) -> Self {
        self.iter().zip(other).map(|(x, y)| if y.is_zero() { x.clone() } else { x + &(c * y) }).collect()
    }
    fn scale(&self, c: &RatFn) -> Self {
        self.iter().map(|x| x * c).collect()
    }
    fn nnz(&self) -> usize {
        self.iter().filter(|x| !x.is_zero()).count()
    }
    fn weight(&self) -> usize {
        self.iter().map(RatFn::term_count).sum()
    }
}

struct State<R> {
    pending: Vec<R>,
    basis: Vec<(usize, R)>,
}

/// Processes columns from `col`; returns the next unprocessed column, or
/// stops early (sparse pass only) once pending fill exceeds one half.
fn run<R: Row>(st: &mut State<R>, mut col: usize, ncols: usize, watch_fill: bool) -> usize {
    while col < ncols && !st.pending.is_empty() {
        let pick = st
            .pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lead() == Some(col))
            .min_by_key(|(_, r)| (r.at(col).term_count(), r.weight()))
            .map(|(k, _)| k);
        if let Some(k) = pick {
            let row = st.pending.swap_remove(k);
            let piv = row.scale(&row.at(col).inv().expect("pivot is nonzero"));
            for r in st.pending.iter_mut() {
                let c = r.at(col);
                if !c.is_zero() {
                    *r = r.axpy(&-c, &piv);
                }
            }
            st.pending.retain(|r| r.lead().is_some());
            for (_, b) in st.basis.iter_mut() {
                let c = b.at(col);
                if !c.is_zero() {
                    *b = b.axpy(&-c, &piv);
                }
            }
            st.basis.push((col, piv));
        }
        col += 1;
        if watch_fill {
            let fill: usize = st.pending.iter().map(Row::nnz).sum();
            let cells = st.pending.len() * (ncols - col);
            if cells >= 64 && 2 * fill > cells {
                return col;
            }
        }
    }
    ncols
}

/// A reduced row echelon form: pivot entries are 1 and pivot columns are
/// otherwise zero.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

pub fn rref(ncols: usize, rows: Vec<SparseVec>) -> Echelon {
    let mut st = State { pending: rows.into_iter().filter(|r| !r.is_zero()).collect(), basis: vec![] };
    let col = run(&mut st, 0, ncols, true);
    let mut basis: Vec<(usize, SparseVec)> = if col < ncols && !st.pending.is_empty() {
        let mut dense = State {
            pending: st.pending.iter().map(SparseVec::to_dense).collect(),
            basis: st.basis.iter().map(|(c, r)| (*c, r.to_dense())).collect(),
        };
        run(&mut dense, col, ncols, false);
        dense.basis.into_iter().map(|(c, r)| (c, SparseVec::from_dense(r))).collect()
    } else {
        st.basis
    };
    basis.sort_by_key(|b| b.0);
    let (pivots, rows) = basis.into_iter().unzip();
    Echelon { ncols, rows, pivots }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ncols)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Subtracts pivot rows from `v` until no pivot column is touched.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (c, r) in self.pivots.iter().zip(&self.rows) {
            let x = v.get(*c);
            if !x.is_zero() {
                v = v.axpy(&-x, r);
            }
        }
        v
    }
}

/// A basis of `{v : a·v = 0}`, each vector scaled so its first nonzero
/// entry is 1.
pub fn nullspace(a: &SparseMat) -> Vec<SparseVec> {
    let ech = rref(a.ncols(), (0..a.nrows()).map(|i| a.row_vec(i)).collect());
    ech.free_columns()
        .into_iter()
        .map(|f| {
            let mut e = vec![(f, RatFn::one())];
            for (c, r) in ech.pivots.iter().zip(&ech.rows) {
                let x = r.get(f);
                if !x.is_zero() {
                    e.push((*c, -x));
                }
            }
            SparseVec::from_entries(a.ncols(), e).monic()
        })
        .collect()
}

pub fn rank(a: &SparseMat) -> usize {
    rref(a.ncols(), (0..a.nrows()).map(|i| a.row_vec(i)).collect()).rank()
}
