pub mod error;
pub mod exec;
pub mod expr;
pub mod field;
pub mod invariant;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod rmatrix;
pub mod sl21;

pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{GLParams, LaurentPoly, RatFn};
pub use linalg::{SparseMat, SparseVec, Subspace};
pub use report::{Check, Report, Status};
