//! Noncommutative expressions in the generators and the relation catalog.

mod ast;
mod catalog;
mod eval;
mod hopf;
mod parse;
mod roots;

pub use ast::{Expr, Gen};
pub use catalog::{relation_catalog, Relation, RelationCatalog, Vacuous};
pub use eval::{eval_in_rep, Evaluator, GenAction};
pub use hopf::{antipode, coproduct, counit, Side, Tensor2};
pub use parse::parse_expr;
pub use roots::{gamma_monomials, odd_f, root_vector};
