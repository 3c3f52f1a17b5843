//! Exact sparse linear algebra over ℚ(q).

mod elim;
mod matrix;
mod subspace;
mod vector;

pub use elim::{nullspace, rank, rref, Echelon};
pub use matrix::SparseMat;
pub use subspace::Subspace;
pub use vector::SparseVec;
