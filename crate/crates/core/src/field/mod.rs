//! The scalar field ℚ(q).

mod laurent;
mod params;
mod parse;
mod ratfn;
mod upoly;

pub use laurent::LaurentPoly;
pub use params::{p, q_minus_qinv, quantum_int, quantum_int_in, GLParams};
pub use ratfn::RatFn;
