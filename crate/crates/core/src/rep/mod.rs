//! Finite dimensional representations given by one matrix per generator.

mod hopf_check;
mod weights;

use std::collections::BTreeMap;

pub use hopf_check::{check_hopf_axioms, k2rho_exponents, k2rho_expr};
pub use weights::{highest_weight_vectors, submodule_closure, weight_decomposition, Weight};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::expr::{coproduct, relation_catalog, Evaluator, Expr, Gen, GenAction, RelationCatalog, Side};
use crate::field::{GLParams, RatFn};
use crate::linalg::SparseMat;
use crate::report::{Report, Status};

/// Default cap on the dimension of constructed tensor powers.
pub const DEFAULT_MAX_DIM: usize = 20000;

#[derive(Clone, Debug)]
pub struct Representation {
    pub params: GLParams,
    pub dim: usize,
    pub gens: BTreeMap<Gen, SparseMat>,
    pub label: String,
}

impl GenAction for Representation {
    fn dim(&self) -> usize {
        self.dim
    }

    fn matrix(&self, g: Gen) -> Option<&SparseMat> {
        self.gens.get(&g)
    }
}

impl Representation {
    /// Assembles a representation from explicit matrices. Every generator
    /// must be present and square of size `dim`.
    pub fn from_matrices(params: GLParams, dim: usize, gens: BTreeMap<Gen, SparseMat>, label: impl Into<String>) -> Result<Self> {
        for g in Gen::all(&params) {
            let m = gens.get(&g).ok_or_else(|| Error::MissingGenerator(g.to_string()))?;
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch(format!("{g} is {}x{}, expected {dim}x{dim}", m.nrows(), m.ncols())));
            }
        }
        Ok(Self { params, dim, gens, label: label.into() })
    }

    pub fn gen(&self, g: Gen) -> &SparseMat {
        &self.gens[&g]
    }

    pub fn eval(&self, x: &Expr) -> Result<SparseMat> {
        Evaluator::new(self).eval(x)
    }

    /// Applies `f` to every generator matrix, keeping the label.
    fn map_gens(&self, label: String, mut f: impl FnMut(Gen, &SparseMat) -> SparseMat) -> Self {
        let gens = self.gens.iter().map(|(g, m)| (*g, f(*g, m))).collect();
        Self { params: self.params, dim: self.dim, gens, label }
    }
}

/// The natural module: `e_a ↦ e_{a,a+1}`, `f_a ↦ e_{a+1,a}`,
/// `K_b ↦ 1 + (q_b - 1)e_{bb}`.
pub fn natural_rep(params: &GLParams) -> Representation {
    let d = params.rank();
    let mut gens = BTreeMap::new();
    for a in 1..d {
        gens.insert(Gen::E(a), SparseMat::unit(d, a - 1, a));
        gens.insert(Gen::F(a), SparseMat::unit(d, a, a - 1));
    }
    for b in 1..=d {
        let qb = params.qa(b);
        let diag = |x: RatFn| SparseMat::diagonal((1..=d).map(|c| if c == b { x.clone() } else { RatFn::one() }).collect());
        gens.insert(Gen::Kinv(b), diag(qb.inv().expect("q_b is nonzero")));
        gens.insert(Gen::K(b), diag(qb));
    }
    Representation { params: *params, dim: d, gens, label: "V".into() }
}

/// The dual module: `x ↦ π(S(x))ᵀ`.
pub fn dual_rep(rep: &Representation) -> Representation {
    let mut ev = Evaluator::new(rep);
    let gens = rep
        .gens
        .keys()
        .map(|g| {
            let s = crate::expr::antipode(&Expr::Atom(*g));
            (*g, ev.eval(&s).expect("generators present").transpose())
        })
        .collect();
    Representation { params: rep.params, dim: rep.dim, gens, label: format!("({})*", rep.label) }
}

/// `r1 ⊗ r2` with the generators acting through `Δ` or `Δ'`. Basis order
/// is lexicographic with the left factor most significant.
pub fn tensor_rep(r1: &Representation, r2: &Representation, side: Side) -> Result<Representation> {
    if r1.params != r2.params {
        return Err(Error::ParamsMismatch);
    }
    let (mut ev1, mut ev2) = (Evaluator::new(r1), Evaluator::new(r2));
    let mut gens = BTreeMap::new();
    for g in r1.gens.keys() {
        let mut acc = SparseMat::zeros(r1.dim * r2.dim, r1.dim * r2.dim);
        for (x, y) in coproduct(&Expr::Atom(*g), side) {
            acc = acc.add(&ev1.eval(&x)?.kron(&ev2.eval(&y)?))?;
        }
        gens.insert(*g, acc);
    }
    let tag = if side == Side::Delta { "" } else { "'" };
    Ok(Representation { params: r1.params, dim: r1.dim * r2.dim, gens, label: format!("{}⊗{tag}{}", r1.label, r2.label) })
}

/// `rep^{⊗r}`, left-nested. Fails when `dim^r` exceeds `max_dim`.
pub fn iterated_tensor(rep: &Representation, r: usize, side: Side, max_dim: usize) -> Result<Representation> {
    assert!(r >= 1, "tensor power must be positive");
    let dim = checked_power(rep.dim, r, max_dim)?;
    let mut out = rep.clone();
    for _ in 1..r {
        out = tensor_rep(&out, rep, side)?;
    }
    debug_assert_eq!(out.dim, dim);
    if r > 1 {
        out.label = format!("{}^{r}", rep.label);
    }
    Ok(out)
}

/// `base^r`, or `ResourceLimit` when it passes `cap`.
pub fn checked_power(base: usize, r: usize, cap: usize) -> Result<usize> {
    let mut d: usize = 1;
    for _ in 0..r {
        d = d.checked_mul(base).filter(|&d| d <= cap).ok_or(Error::ResourceLimit { dim: base.saturating_pow(r as u32), cap })?;
    }
    Ok(d)
}

/// A copy of `rep` with `e_1` replaced by a wrong matrix, for negative
/// controls.
pub fn corrupted(rep: &Representation, g: Gen, m: SparseMat) -> Representation {
    rep.map_gens(format!("{} (corrupted {g})", rep.label), |h, x| if h == g { m.clone() } else { x.clone() })
}

/// Evaluates every catalog entry in `rep`. Entries run in parallel under
/// `exec`; the report keeps catalog order.
pub fn verify_relations(rep: &Representation, exec: Exec) -> Report {
    verify_catalog(rep, &relation_catalog(&rep.params), exec)
}

pub fn verify_catalog(rep: &Representation, cat: &RelationCatalog, exec: Exec) -> Report {
    let suite = format!("relations {}", rep.label);
    let results = exec.map(&cat.entries, |rel| {
        // Each worker has its own cache; entries in one family share most
        // subproducts, so this is cheap to rebuild.
        Evaluator::new(rep).eval(&rel.expr)
    });
    let mut report = Report::new();
    for (rel, res) in cat.entries.iter().zip(results) {
        match res {
            Ok(m) => report.check(&suite, &rel.name, &rel.tag, m.is_zero(), || match m.max_entry() {
                Some((i, j, x)) => format!("max entry ({i}, {j}) = {x}"),
                None => String::new(),
            }),
            Err(e) => report.push(&suite, &rel.name, &rel.tag, Status::Fail, e.to_string()),
        }
    }
    for v in &cat.vacuous {
        report.push(&suite, &v.tag, &v.tag, Status::Vacuous, v.reason.clone());
    }
    report
}
