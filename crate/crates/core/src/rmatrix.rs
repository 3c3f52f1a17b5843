//! The R-matrix on `V⊗V` and its braid form, with the checks built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Gen, Side};
use crate::field::{q_minus_qinv, GLParams, RatFn};
use crate::linalg::{rank, SparseMat, SparseVec, Subspace};
use crate::rep::{checked_power, iterated_tensor, natural_rep, submodule_closure, tensor_rep, Representation};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct RMatrixBundle {
    pub params: GLParams,
    pub r: SparseMat,
    pub rinv: SparseMat,
    pub rcheck: SparseMat,
    pub rcheckinv: SparseMat,
    /// The flip `v ⊗ w ↦ w ⊗ v`.
    pub p: SparseMat,
    /// The ordinary `gl_{m+n}` R-matrix, the reference control.
    pub t: SparseMat,
}

/// `1 + Σ_a (x_a - 1) e_aa ⊗ e_aa`.
fn diagonal_part(d: usize, x: impl Fn(usize) -> RatFn) -> SparseMat {
    SparseMat::diagonal((0..d * d).map(|k| if k / d == k % d { x(k / d + 1) } else { RatFn::one() }).collect())
}

/// `1 + c Σ_{a<b} e_ab ⊗ e_ba`.
fn theta(d: usize, c: &RatFn) -> SparseMat {
    let mut t: Vec<(usize, usize, RatFn)> = (0..d * d).map(|k| (k, k, RatFn::one())).collect();
    for a in 0..d {
        for b in a + 1..d {
            // e_ab ⊗ e_ba sends v_b ⊗ v_a to v_a ⊗ v_b.
            t.push((a * d + b, b * d + a, c.clone()));
        }
    }
    SparseMat::from_triplets(d * d, d * d, t)
}

pub fn flip(d: usize) -> SparseMat {
    SparseMat::permutation(&(0..d * d).map(|k| (k % d) * d + k / d).collect::<Vec<_>>())
}

/// `R₀Θ` with the diagonal eigenvalues `x_a`.
fn r_with_diagonal(d: usize, x: impl Fn(usize) -> RatFn) -> SparseMat {
    diagonal_part(d, x).mul(&theta(d, &q_minus_qinv())).expect("square")
}

pub fn build_bundle(params: &GLParams) -> RMatrixBundle {
    let d = params.rank();
    let qa = |a| params.qa(a);
    let r = r_with_diagonal(d, qa);
    // Θ is unipotent with square-zero nilpotent part.
    let theta_inv = theta(d, &-q_minus_qinv());
    let r0_inv = diagonal_part(d, |a| qa(a).inv().expect("nonzero"));
    let rinv = theta_inv.mul(&r0_inv).expect("square");
    let p = flip(d);
    let rcheck = p.mul(&r).expect("square");
    let rcheckinv = rinv.mul(&p).expect("square");
    let t = r_with_diagonal(d, |_| RatFn::q());
    RMatrixBundle { params: *params, r, rinv, rcheck, rcheckinv, p, t }
}

/// The R-matrix with `p` replaced by `q⁻¹` on the degenerate diagonal. It
/// fails the Yang–Baxter equation and serves as a negative control.
pub fn perturbed_r(params: &GLParams) -> SparseMat {
    let m = params.m;
    r_with_diagonal(params.rank(), |a| if a <= m { RatFn::q() } else { RatFn::q_pow(-1) })
}

fn digits(mut k: usize, d: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for slot in out.iter_mut().rev() {
        *slot = k % d;
        k /= d;
    }
    out
}

fn undigits(x: &[usize], d: usize) -> usize {
    x.iter().fold(0, |acc, &c| acc * d + c)
}

/// Permutation of tensor factors: position `k` of the image carries the
/// source factor `order[k]`.
pub fn factor_permutation(order: &[usize], d: usize) -> SparseMat {
    let r = order.len();
    let perm: Vec<usize> = (0..d.pow(r as u32))
        .map(|j| {
            let x = digits(j, d, r);
            undigits(&order.iter().map(|&o| x[o]).collect::<Vec<_>>(), d)
        })
        .collect();
    SparseMat::permutation(&perm)
}

/// A two-leg operator `a` on `V⊗V` placed on factors `i` and `j`
/// (1-based, distinct) of `V^{⊗r}`.
pub fn place_legs(a: &SparseMat, i: usize, j: usize, r: usize, d: usize) -> SparseMat {
    assert!(i != j && i >= 1 && j >= 1 && i <= r && j <= r);
    let mut order = vec![i - 1, j - 1];
    order.extend((0..r).filter(|&k| k != i - 1 && k != j - 1));
    let perm = factor_permutation(&order, d);
    let wide = a.kron(&SparseMat::identity(d.pow(r as u32 - 2)));
    perm.transpose().mul(&wide).and_then(|x| x.mul(&perm)).expect("square")
}

fn ybe_holds(r: &SparseMat, d: usize) -> (bool, String) {
    let (r12, r13, r23) = (place_legs(r, 1, 2, 3, d), place_legs(r, 1, 3, 3, d), place_legs(r, 2, 3, 3, d));
    let lhs = SparseMat::product([&r12, &r13, &r23]).expect("square");
    let rhs = SparseMat::product([&r23, &r13, &r12]).expect("square");
    let detail = match lhs.sub(&rhs).expect("square").max_entry() {
        Some((i, j, x)) => format!("max entry ({i}, {j}) = {x}"),
        None => String::new(),
    };
    (lhs == rhs, detail)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` for `R` and `T`, plus the perturbed control
/// which is expected to fail (recorded as passing when it does).
pub fn verify_ybe(b: &RMatrixBundle) -> Report {
    let d = b.params.rank();
    let mut rep = Report::new();
    let (ok, det) = ybe_holds(&b.r, d);
    rep.check("ybe", "R12 R13 R23 = R23 R13 R12", "ybe", ok, || det);
    let (ok, det) = ybe_holds(&b.t, d);
    rep.check("ybe", "T12 T13 T23 = T23 T13 T12", "ybe", ok, || det);
    let (ok, _) = ybe_holds(&perturbed_r(&b.params), d);
    rep.check("ybe", "negative control: perturbed R violates it", "ybe", !ok, || "perturbed R satisfies the equation".into());
    let inv_ok = b.r.mul(&b.rinv).is_ok_and(|x| x.is_identity()) && b.rcheck.mul(&b.rcheckinv).is_ok_and(|x| x.is_identity());
    rep.check("ybe", "R Rinv = 1, Rcheck Rcheckinv = 1", "r-matrix", inv_ok, || "inverse mismatch".into());
    let off_diag = (0..d * d).filter(|k| k / d != k % d).all(|k| b.r.column(k) == b.t.column(k));
    rep.check("ybe", "R = T on v_a⊗v_b, a != b", "r-matrix", off_diag, || "columns differ".into());
    rep
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    /// Dimension of the `q`-eigenspace of `Ř`.
    pub sym: usize,
    /// Dimension of the `-q⁻¹`-eigenspace.
    pub alt: usize,
}

impl Spectrum {
    /// The expected dimensions of the two simple summands of `V⊗V`.
    pub fn expected(params: &GLParams) -> Self {
        let (m, n) = (params.m, params.n);
        Spectrum { sym: m * (m + 1) / 2 + m * n + n * (n - 1) / 2, alt: m * (m - 1) / 2 + m * n + n * (n + 1) / 2 }
    }
}

/// `(Ř - q)(Ř + q⁻¹) = 0` and the eigenprojector calculus.
pub fn verify_hecke_and_spectrum(b: &RMatrixBundle) -> Result<(Report, Spectrum)> {
    let d = b.params.rank();
    let dd = d * d;
    let q = RatFn::q();
    let qi = RatFn::q_pow(-1);
    let id = SparseMat::identity(dd);
    let mut rep = Report::new();

    let minus_q = b.rcheck.sub(&SparseMat::scalar(dd, &q))?;
    let plus_qi = b.rcheck.add(&SparseMat::scalar(dd, &qi))?;
    let hecke = minus_q.mul(&plus_qi)?;
    rep.check("hecke", "(Rcheck - q)(Rcheck + q^-1) = 0", "hecke", hecke.is_zero(), || detail(&hecke));

    let norm = (&q + &qi).inv()?;
    let ps = plus_qi.scale(&norm);
    let pa = minus_q.scale(&-norm);
    rep.check("hecke", "Ps^2 = Ps", "projector", ps.mul(&ps)? == ps, String::new);
    rep.check("hecke", "Pa^2 = Pa", "projector", pa.mul(&pa)? == pa, String::new);
    rep.check("hecke", "Ps Pa = 0", "projector", ps.mul(&pa)?.is_zero(), String::new);
    rep.check("hecke", "Ps + Pa = 1", "projector", ps.add(&pa)? == id, String::new);

    let spectrum = Spectrum { sym: rank(&ps), alt: rank(&pa) };
    let want = Spectrum::expected(&b.params);
    rep.check("hecke", format!("eigenspace dimensions ({}, {})", want.sym, want.alt), "spectrum", spectrum == want, || {
        format!("got ({}, {})", spectrum.sym, spectrum.alt)
    });

    // The two images are the submodules generated by the highest weight
    // vectors of V⊗V.
    let v = natural_rep(&b.params);
    let vv = tensor_rep(&v, &v, Side::Delta)?;
    let hw_s = SparseVec::unit(dd, 0);
    let hw_a = SparseVec::from_entries(dd, vec![(1, RatFn::one()), (d, -qi.clone())]);
    let rs = b.rcheck.apply(&hw_s)?;
    rep.check("hecke", "Rcheck(v1⊗v1) = q v1⊗v1", "hecke", rs == hw_s.scale(&q), String::new);
    let ra = b.rcheck.apply(&hw_a)?;
    rep.check("hecke", "Rcheck(w) = -q^-1 w", "hecke", ra == hw_a.scale(&-qi), String::new);
    let img = |p: &SparseMat| Subspace::span(dd, (0..dd).map(|j| p.column(j)).collect());
    let ls = submodule_closure(&vv, &[hw_s])?;
    let la = submodule_closure(&vv, &[hw_a])?;
    rep.check("hecke", "image Ps = closure of v1⊗v1", "spectrum", img(&ps)?.equals(&ls), String::new);
    rep.check("hecke", "image Pa = closure of w", "spectrum", img(&pa)?.equals(&la), String::new);
    Ok((rep, spectrum))
}

fn detail(m: &SparseMat) -> String {
    m.max_entry().map(|(i, j, x)| format!("max entry ({i}, {j}) = {x}")).unwrap_or_default()
}

/// `R·Δ(x) = Δ'(x)·R` on `V⊗V` for every generator, and `Ř` commuting with
/// the `Δ` action.
pub fn verify_intertwiner(b: &RMatrixBundle, v: &Representation) -> Result<Report> {
    if v.params != b.params {
        return Err(Error::ParamsMismatch);
    }
    let vd = tensor_rep(v, v, Side::Delta)?;
    let vp = tensor_rep(v, v, Side::DeltaPrime)?;
    let mut rep = Report::new();
    for g in Gen::all(&b.params) {
        let (l, r) = (b.r.mul(vd.gen(g))?, vp.gen(g).mul(&b.r)?);
        rep.check("intertwiner", format!("R Delta({g}) = Delta'({g}) R"), "intertwiner", l == r, || detail(&l.sub(&r).unwrap()));
        let c = b.rcheck.commutator(vd.gen(g))?;
        rep.check("intertwiner", format!("[Rcheck, Delta({g})] = 0"), "intertwiner", c.is_zero(), || detail(&c));
    }
    Ok(rep)
}

/// `R_{1r} R_{2r} ⋯ R_{r-1,r}` on `V^{⊗r}`.
pub fn leg_product(b: &RMatrixBundle, r: usize, inverse: bool) -> SparseMat {
    let d = b.params.rank();
    let legs: Vec<SparseMat> = (1..r).map(|i| place_legs(if inverse { &b.rinv } else { &b.r }, i, r, r, d)).collect();
    if inverse {
        SparseMat::product(legs.iter().rev()).expect("square")
    } else {
        SparseMat::product(&legs).expect("square")
    }
}

/// An isomorphism from `(V^{⊗r}, Δ)` to `(V^{⊗r}, Δ')` together with its
/// inverse: `M_2 = R`, `M_r = (M_{r-1} ⊗ 1)·R_{1r}⋯R_{r-1,r}`.
pub fn tensor_iso(params: &GLParams, r: usize, max_dim: usize) -> Result<(SparseMat, SparseMat)> {
    assert!(r >= 2, "tensor_iso needs r >= 2");
    let d = params.rank();
    checked_power(d, r, max_dim)?;
    let b = build_bundle(params);
    let (mut m, mut minv) = (b.r.clone(), b.rinv.clone());
    for k in 3..=r {
        let id = SparseMat::identity(d);
        m = m.kron(&id).mul(&leg_product(&b, k, false))?;
        minv = leg_product(&b, k, true).mul(&minv.kron(&id))?;
    }
    Ok((m, minv))
}

/// Checks `M` against the iterated `Δ` and `Δ'` actions and that the
/// returned inverse is one. Also records whether the bare leg product
/// `R_{1r}⋯R_{r-1,r}` already intertwines.
pub fn verify_tensor_iso(params: &GLParams, r: usize, max_dim: usize) -> Result<Report> {
    let (m, minv) = tensor_iso(params, r, max_dim)?;
    let v = natural_rep(params);
    let vd = iterated_tensor(&v, r, Side::Delta, max_dim)?;
    let vp = iterated_tensor(&v, r, Side::DeltaPrime, max_dim)?;
    let mut rep = Report::new();
    let suite = "tensor-iso";
    rep.check(suite, format!("r={r}: M Minv = 1"), "tensor-iso", m.mul(&minv)?.is_identity(), String::new);
    let mut all = true;
    let mut bad = String::new();
    for g in Gen::all(params) {
        if m.mul(vd.gen(g))? != vp.gen(g).mul(&m)? {
            all = false;
            bad = format!("fails on {g}");
            break;
        }
    }
    rep.check(suite, format!("r={r}: M Delta(x) = Delta'(x) M for all generators"), "tensor-iso", all, || bad);
    Ok(rep)
}

/// Whether the bare product `R_{1r}⋯R_{r-1,r}` intertwines the two
/// iterated actions on every generator.
pub fn leg_product_intertwines(params: &GLParams, r: usize, max_dim: usize) -> Result<bool> {
    let b = build_bundle(params);
    let m = leg_product(&b, r, false);
    let v = natural_rep(params);
    let vd = iterated_tensor(&v, r, Side::Delta, max_dim)?;
    let vp = iterated_tensor(&v, r, Side::DeltaPrime, max_dim)?;
    for g in Gen::all(params) {
        if m.mul(vd.gen(g))? != vp.gen(g).mul(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}
