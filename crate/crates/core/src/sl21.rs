//! Generalized Verma modules of `U_q(sl_{2,1})` and their simple quotients,
//! realized as `U_q(gl_{2,1})`-modules with `K_3 = 1` on the highest weight.
//!
//! Verma basis labels `(ε_F, ε_2, k)` stand for `F^{ε_F} f_2^{ε_2} f_1^k v`
//! with `F = f_1 f_2 - q f_2 f_1` and `0 ≤ k ≤ ℓ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::expr::Gen;
use crate::field::{p, q_minus_qinv, quantum_int, GLParams, RatFn};
use crate::linalg::{rref, SparseMat, SparseVec};
use crate::rep::{highest_weight_vectors, submodule_closure, Representation, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HighestWeightSL21 {
    pub ell: u32,
    /// `λ_1 = sign1 · q^ℓ`.
    pub sign1: i8,
    #[serde(serialize_with = "ser_display")]
    pub lambda2: RatFn,
}

fn ser_display<S: serde::Serializer>(x: &RatFn, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl HighestWeightSL21 {
    pub fn new(ell: u32, sign1: i8, lambda2: RatFn) -> Result<Self> {
        if sign1 != 1 && sign1 != -1 {
            return Err(crate::Error::InvalidParams(format!("sign1 must be +1 or -1, got {sign1}")));
        }
        if lambda2.is_zero() {
            return Err(crate::Error::InvalidParams("lambda2 must be nonzero".into()));
        }
        Ok(Self { ell, sign1, lambda2 })
    }

    pub fn lambda1(&self) -> RatFn {
        RatFn::q_pow(self.ell as i32) * RatFn::int(self.sign1 as i64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Atypicality {
    Typical,
    /// `λ_2 = ±1`.
    AtypicalA,
    /// `λ_2 = ±q⁻¹λ_1⁻¹`.
    AtypicalB,
}

/// The type of `hw` and the dimension of its simple module.
pub fn atypicality_type(hw: &HighestWeightSL21) -> (Atypicality, usize) {
    let l = hw.ell as usize;
    let l2 = &hw.lambda2;
    let l2i = l2.inv().expect("nonzero");
    if (l2 - &l2i).is_zero() {
        return (Atypicality::AtypicalA, 2 * l + 1);
    }
    let x = RatFn::q() * hw.lambda1() * l2.clone();
    if (&x - &x.inv().expect("nonzero")).is_zero() {
        return (Atypicality::AtypicalB, 2 * l + 3);
    }
    (Atypicality::Typical, 4 * (l + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label {
    pub ef: u8,
    pub e2: u8,
    pub k: u32,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.ef == 1 {
            parts.push("F".to_string());
        }
        if self.e2 == 1 {
            parts.push("f2".to_string());
        }
        match self.k {
            0 => {}
            1 => parts.push("f1".into()),
            k => parts.push(format!("f1^{k}")),
        }
        parts.push("v".into());
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug)]
pub struct ModuleData {
    pub hw: HighestWeightSL21,
    /// Labels of the basis vectors, in basis order.
    pub labels: Vec<Label>,
    pub rep: Representation,
    pub highest: usize,
    /// Verma coordinates to module coordinates.
    pub projection: SparseMat,
}

impl ModuleData {
    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    /// The image of the Verma basis vector `label`.
    pub fn image(&self, label: Label) -> SparseVec {
        let l = self.hw.ell;
        let idx = verma_index(label, l);
        self.projection.column(idx)
    }
}

pub fn params21() -> GLParams {
    GLParams::new(2, 1).expect("valid")
}

fn verma_labels(ell: u32) -> Vec<Label> {
    let mut v = Vec::new();
    for (ef, e2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for k in 0..=ell {
            v.push(Label { ef, e2, k });
        }
    }
    v
}

fn verma_index(l: Label, ell: u32) -> usize {
    ((l.ef as usize) * 2 + l.e2 as usize) * (ell as usize + 1) + l.k as usize
}

/// The generalized Verma module of dimension `4(ℓ+1)`.
pub fn verma_module(hw: &HighestWeightSL21) -> ModuleData {
    let ell = hw.ell;
    let labels = verma_labels(ell);
    let n = labels.len();
    let q = RatFn::q;
    let qp = RatFn::q_pow;
    let l1 = hw.lambda1();
    let l1i = l1.inv().expect("nonzero");
    let l2 = hw.lambda2.clone();
    let l2i = l2.inv().expect("nonzero");
    let qmq = q_minus_qinv();
    let c = |k: u32| -> RatFn {
        let k = k as i32;
        RatFn::from(quantum_int(k)) * (&l1 * &qp(1 - k) - &l1i * &qp(k - 1)).checked_div(&qmq).expect("nonzero")
    };
    let dk = |k: u32| -> RatFn {
        let k = k as i32;
        (&l2 * &qp(k) - &l2i * &qp(-k)).checked_div(&qmq).expect("nonzero")
    };

    let mut t: BTreeMap<Gen, Vec<(usize, usize, RatFn)>> = BTreeMap::new();
    let mut put = |g: Gen, from: Label, to: Label, x: RatFn| {
        if to.k <= ell && !x.is_zero() {
            t.entry(g).or_default().push((verma_index(to, ell), verma_index(from, ell), x));
        }
    };
    let lab = |ef, e2, k| Label { ef, e2, k };
    for k in 0..=ell {
        let k1 = k + 1;
        // f1
        put(Gen::F(1), lab(0, 0, k), lab(0, 0, k1), RatFn::one());
        put(Gen::F(1), lab(0, 1, k), lab(1, 0, k), RatFn::one());
        put(Gen::F(1), lab(0, 1, k), lab(0, 1, k1), q());
        put(Gen::F(1), lab(1, 0, k), lab(1, 0, k1), qp(-1));
        put(Gen::F(1), lab(1, 1, k), lab(1, 1, k1), RatFn::one());
        // f2
        put(Gen::F(2), lab(0, 0, k), lab(0, 1, k), RatFn::one());
        put(Gen::F(2), lab(1, 0, k), lab(1, 1, k), -qp(-1));
        // e1
        if k > 0 {
            for (ef, e2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                put(Gen::E(1), lab(ef, e2, k), lab(ef, e2, k - 1), c(k));
            }
        }
        put(Gen::E(1), lab(1, 0, k), lab(0, 1, k), &l1i * &qp(2 * k as i32));
        // e2
        let s = &l2 * &qp(k as i32 + 1);
        put(Gen::E(2), lab(0, 1, k), lab(0, 0, k), dk(k));
        put(Gen::E(2), lab(1, 0, k), lab(0, 0, k1), -s.clone());
        put(Gen::E(2), lab(1, 1, k), lab(1, 0, k), dk(k) + s.clone());
        put(Gen::E(2), lab(1, 1, k), lab(0, 1, k1), s * q());
    }

    let mut gens: BTreeMap<Gen, SparseMat> = BTreeMap::new();
    for a in 1..=2 {
        for g in [Gen::E(a), Gen::F(a)] {
            gens.insert(g, SparseMat::from_triplets(n, n, t.remove(&g).unwrap_or_default()));
        }
    }
    // K_1 = λ_1λ_2 q^{-k-ε_F}, K_2 = λ_2 q^{k-ε_2}, K_3 = p^{ε_2+ε_F}.
    let weight = |l: &Label| -> [RatFn; 3] {
        let (k, ef, e2) = (l.k as i32, l.ef as i32, l.e2 as i32);
        [&(&l1 * &l2) * &qp(-k - ef), &l2 * &qp(k - e2), p().pow(e2 + ef).expect("nonzero")]
    };
    let ws: Vec<[RatFn; 3]> = labels.iter().map(weight).collect();
    for b in 0..3 {
        let d: Vec<RatFn> = ws.iter().map(|w| w[b].clone()).collect();
        gens.insert(Gen::Kinv(b + 1), SparseMat::diagonal(d.iter().map(|x| x.inv().expect("nonzero")).collect()));
        gens.insert(Gen::K(b + 1), SparseMat::diagonal(d));
    }
    let label = format!("M(ell={}, sign1={}, lambda2={})", hw.ell, hw.sign1, hw.lambda2);
    let rep = Representation::from_matrices(params21(), n, gens, label).expect("all generators built");
    ModuleData { hw: hw.clone(), labels, rep, highest: 0, projection: SparseMat::identity(n) }
}

/// Rank of a label in the quotient-basis preference; lower is kept first.
fn preference(l: &Label, kind: Atypicality) -> (u8, u32) {
    let class = match (kind, l.ef, l.e2) {
        (_, 0, 0) => 0,
        (Atypicality::AtypicalA, 1, 0) | (Atypicality::Typical | Atypicality::AtypicalB, 0, 1) => 1,
        (Atypicality::AtypicalA, 0, 1) | (Atypicality::Typical | Atypicality::AtypicalB, 1, 0) => 2,
        _ => 3,
    };
    (class, l.k)
}

/// `vm` modulo the submodule generated by `seeds`. Basis vectors of the
/// quotient are Verma labels, chosen by `preference`.
fn quotient(vm: &ModuleData, seeds: &[SparseVec]) -> Result<ModuleData> {
    let sub = submodule_closure(&vm.rep, seeds)?;
    let n = vm.dim();
    let (kind, _) = atypicality_type(&vm.hw);
    // Least preferred coordinates go first so elimination pivots on them.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(preference(&vm.labels[i], kind)));
    let mut pos = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let permute = |v: &SparseVec| SparseVec::from_entries(n, v.entries().iter().map(|(i, x)| (pos[*i], x.clone())).collect());
    let ech = rref(n, sub.basis().iter().map(permute).collect());
    let free = ech.free_columns();
    let kept: Vec<usize> = free.iter().map(|&c| order[c]).collect();
    let mut kept_sorted = kept.clone();
    kept_sorted.sort_unstable();
    let index_of: BTreeMap<usize, usize> = kept_sorted.iter().enumerate().map(|(i, &o)| (pos[o], i)).collect();
    let dq = kept_sorted.len();

    // Projection: reduce, then read off the free coordinates.
    let project = |v: &SparseVec| -> SparseVec {
        let r = ech.reduce(&permute(v));
        SparseVec::from_entries(dq, r.entries().iter().map(|(c, x)| (index_of[c], x.clone())).collect())
    };
    let proj_cols: Vec<SparseVec> = (0..n).map(|j| project(&SparseVec::unit(n, j))).collect();
    let proj = SparseMat::from_columns(dq, &proj_cols);
    let mut gens = BTreeMap::new();
    for (g, m) in &vm.rep.gens {
        let cols: Vec<SparseVec> = kept_sorted.iter().map(|&j| project(&m.column(j))).collect();
        gens.insert(*g, SparseMat::from_columns(dq, &cols));
    }
    let rep = Representation::from_matrices(
        vm.rep.params,
        dq,
        gens,
        format!("L(ell={}, sign1={}, lambda2={})", vm.hw.ell, vm.hw.sign1, vm.hw.lambda2),
    )?;
    let labels = kept_sorted.iter().map(|&i| vm.labels[i]).collect();
    let highest = kept_sorted.iter().position(|&i| i == vm.highest).expect("highest vector survives");
    Ok(ModuleData { hw: vm.hw.clone(), labels, rep, highest, projection: proj.mul(&vm.projection)? })
}

/// The simple quotient: repeatedly factor out the submodule generated by
/// singular vectors of weight different from the highest one.
pub fn simple_quotient(vm: &ModuleData) -> Result<ModuleData> {
    let mut cur = vm.clone();
    loop {
        let top = hw_weight(&cur);
        let seeds: Vec<SparseVec> = highest_weight_vectors(&cur.rep)?.into_iter().filter(|(w, _)| *w != top).map(|(_, v)| v).collect();
        if seeds.is_empty() {
            return Ok(cur);
        }
        cur = quotient(&cur, &seeds)?;
    }
}

fn hw_weight(m: &ModuleData) -> Weight {
    Weight((1..=3).map(|b| m.rep.gen(Gen::K(b)).get(m.highest, m.highest)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::rep::verify_relations;

    fn hw(ell: u32, sign1: i8, l2: RatFn) -> HighestWeightSL21 {
        HighestWeightSL21::new(ell, sign1, l2).unwrap()
    }

    #[test]
    fn verma_passes_relations() {
        for (ell, l2) in [(0, RatFn::q_pow(3)), (1, RatFn::q_pow(3)), (2, RatFn::one()), (1, RatFn::q_pow(-2))] {
            let vm = verma_module(&hw(ell, 1, l2));
            assert_eq!(vm.dim(), 4 * (ell as usize + 1));
            let r = verify_relations(&vm.rep, Exec::Sequential);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn types() {
        assert_eq!(atypicality_type(&hw(2, 1, RatFn::q_pow(5))), (Atypicality::Typical, 12));
        assert_eq!(atypicality_type(&hw(3, 1, RatFn::int(-1))), (Atypicality::AtypicalA, 7));
        assert_eq!(atypicality_type(&hw(2, 1, RatFn::q_pow(-3))), (Atypicality::AtypicalB, 7));
        assert_eq!(atypicality_type(&hw(2, -1, RatFn::q_pow(-3))), (Atypicality::AtypicalB, 7));
    }

    #[test]
    fn small_quotients() {
        let l = simple_quotient(&verma_module(&hw(1, 1, RatFn::q_pow(3)))).unwrap();
        assert_eq!(l.dim(), 8);
        let l = simple_quotient(&verma_module(&hw(1, 1, RatFn::one()))).unwrap();
        assert_eq!(l.dim(), 3);
        let l = simple_quotient(&verma_module(&hw(0, 1, RatFn::q_pow(-1)))).unwrap();
        assert_eq!(l.dim(), 3);
        let names: Vec<String> = l.labels.iter().map(Label::to_string).collect();
        assert_eq!(names, ["v", "f2 v", "F v"]);
    }
}
