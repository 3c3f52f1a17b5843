//! Quantum traces and the link invariant built from the braid group action
//! on `V^{⊗r}`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{quantum_int, GLParams, RatFn};
use crate::linalg::SparseMat;
use crate::rep::{checked_power, k2rho_expr, natural_rep, Representation};
use crate::report::Report;
use crate::rmatrix::build_bundle;

pub fn k2rho_matrix(rep: &Representation) -> Result<SparseMat> {
    rep.eval(&k2rho_expr(&rep.params))
}

/// `τ(A) = tr(π(K_{2ρ}) A)`.
pub fn quantum_trace(a: &SparseMat, rep: &Representation) -> Result<RatFn> {
    if a.nrows() != rep.dim || a.ncols() != rep.dim {
        return Err(Error::DimensionMismatch(format!("{}x{} operator on a {}-dimensional module", a.nrows(), a.ncols(), rep.dim)));
    }
    Ok(k2rho_matrix(rep)?.mul(a)?.trace())
}

/// `[m-n]` for `m+n` even, `q[m-n]` otherwise.
pub fn quantum_dimension(params: &GLParams) -> RatFn {
    let base = RatFn::from(quantum_int(params.diff()));
    if params.rank().is_multiple_of(2) {
        base
    } else {
        base * RatFn::q()
    }
}

fn k2rho_diag(params: &GLParams) -> Vec<RatFn> {
    k2rho_matrix(&natural_rep(params)).expect("natural rep has all generators").diag()
}

/// `(id ⊗ τ_V)(Γ)` for an operator `Γ` on `V⊗V`.
pub fn partial_qtrace(gamma: &SparseMat, params: &GLParams) -> Result<SparseMat> {
    let d = params.rank();
    if gamma.nrows() != d * d || gamma.ncols() != d * d {
        return Err(Error::DimensionMismatch(format!("expected a {0}x{0} operator", d * d)));
    }
    let k = k2rho_diag(params);
    let mut t = Vec::new();
    for (row, col, x) in gamma.triplets() {
        if row % d == col % d {
            t.push((row / d, col / d, x * &k[row % d]));
        }
    }
    Ok(SparseMat::from_triplets(d, d, t))
}

/// A word in the standard generators `b_1, …, b_{r-1}` of the braid group;
/// a negative letter is an inverse generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParams("a braid needs at least one strand".into()));
        }
        if let Some(&l) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::StrandMismatch { letter: l as i64, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        Self::new(strands, vec![]).expect("no letters")
    }

    /// Whitespace-separated nonzero integers. The strand count defaults to
    /// one more than the largest `|letter|`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            let at = text[pos..].find(tok).map_or(pos, |i| pos + i);
            pos = at + tok.len();
            let l: i32 = tok.parse().map_err(|_| Error::Syntax { pos: at, msg: format!("'{tok}' is not an integer") })?;
            if l == 0 {
                return Err(Error::Syntax { pos: at, msg: "braid letters must be nonzero".into() });
            }
            letters.push(l);
        }
        let needed = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(needed), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::DimensionMismatch(format!("braids on {} and {} strands", self.strands, other.strands)));
        }
        Ok(Self { strands: self.strands, letters: self.letters.iter().chain(&other.letters).copied().collect() })
    }

    /// The same word read in a braid group with more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    /// `b·b_r^{±1}` in `B_{r+1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let r = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { r } else { -r });
        Self { strands: self.strands + 1, letters }
    }

    pub fn with_letter(&self, pos: usize, letter: i32) -> Result<Self> {
        let mut letters = self.letters.clone();
        letters[pos] = letter;
        Self::new(self.strands, letters)
    }

    pub fn without(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        Self { strands: self.strands, letters }
    }

    pub fn random(rng: &mut impl Rng, strands: usize, len: usize) -> Self {
        assert!(strands >= 2, "random words need at least two strands");
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        Self { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `ν_r(b)` as an explicit matrix on `V^{⊗r}`.
pub fn braid_rep(b: &BraidWord, params: &GLParams, max_dim: usize) -> Result<SparseMat> {
    let d = params.rank();
    let r = b.strands;
    let n = checked_power(d, r, max_dim)?;
    let bundle = build_bundle(params);
    let mut acc = SparseMat::identity(n);
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize;
        let core = if l > 0 { &bundle.rcheck } else { &bundle.rcheckinv };
        let left = SparseMat::identity(d.pow(i as u32 - 1));
        let right = SparseMat::identity(d.pow((r - i - 1) as u32));
        acc = acc.mul(&left.kron(core).kron(&right))?;
    }
    Ok(acc)
}

/// Applies braid letters to sparse vectors on `V^{⊗r}` one leg pair at a
/// time, never forming `(m+n)^r`-sized matrices.
struct LegAction {
    d: usize,
    r: usize,
    fwd: Vec<Vec<(usize, RatFn)>>,
    inv: Vec<Vec<(usize, RatFn)>>,
}

impl LegAction {
    fn new(params: &GLParams, r: usize) -> Self {
        let b = build_bundle(params);
        let d = params.rank();
        let cols = |m: &SparseMat| (0..d * d).map(|j| m.column(j).entries().to_vec()).collect();
        Self { d, r, fwd: cols(&b.rcheck), inv: cols(&b.rcheckinv) }
    }

    fn apply(&self, v: &BTreeMap<usize, RatFn>, letter: i32) -> BTreeMap<usize, RatFn> {
        let i = letter.unsigned_abs() as usize;
        let sb = self.d.pow((self.r - i - 1) as u32);
        let sa = sb * self.d;
        let cols = if letter > 0 { &self.fwd } else { &self.inv };
        let mut out: BTreeMap<usize, RatFn> = BTreeMap::new();
        for (&x, c) in v {
            let (a, b) = ((x / sa) % self.d, (x / sb) % self.d);
            let base = x - a * sa - b * sb;
            for (row, y) in &cols[a * self.d + b] {
                let idx = base + (row / self.d) * sa + (row % self.d) * sb;
                *out.entry(idx).or_insert_with(RatFn::zero) += &(c * y);
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// The diagonal entry `ν_r(b)[x, x]`.
    fn diagonal_entry(&self, word: &[i32], x: usize) -> RatFn {
        let mut v = BTreeMap::from([(x, RatFn::one())]);
        for &l in word.iter().rev() {
            v = self.apply(&v, l);
        }
        v.remove(&x).unwrap_or_else(RatFn::zero)
    }
}

fn require_m_ne_n(params: &GLParams) -> Result<()> {
    if params.m == params.n {
        Err(Error::EqualMNUnsupported)
    } else {
        Ok(())
    }
}

/// `τ_{V^{⊗r}}(ν_r(b))` without normalization. The sum over basis vectors
/// runs under `exec`.
pub fn braid_qtrace(b: &BraidWord, params: &GLParams, exec: Exec, max_dim: usize) -> Result<RatFn> {
    let d = params.rank();
    let r = b.strands;
    let n = checked_power(d, r, max_dim)?;
    let k = k2rho_diag(params);
    let act = LegAction::new(params, r);
    let terms = exec.map_range(n, |x| {
        let diag = act.diagonal_entry(&b.letters, x);
        if diag.is_zero() {
            return diag;
        }
        let mut w = diag;
        let mut y = x;
        for _ in 0..r {
            w = w * &k[y % d];
            y /= d;
        }
        w
    });
    Ok(terms.into_iter().sum())
}

/// `φ_r(b) = τ(ν_r(b)) / dim_q(V)^r`.
pub fn markov_trace(b: &BraidWord, params: &GLParams, exec: Exec, max_dim: usize) -> Result<RatFn> {
    require_m_ne_n(params)?;
    let t = braid_qtrace(b, params, exec, max_dim)?;
    t.checked_div(&quantum_dimension(params).pow(b.strands as i32)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub params: GLParams,
    pub braid: BraidWord,
    pub writhe: i64,
    #[serde(serialize_with = "ser_display")]
    pub markov_trace: RatFn,
    #[serde(serialize_with = "ser_display")]
    pub invariant: RatFn,
}

fn ser_display<S: serde::Serializer>(x: &RatFn, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// `q^{-(m-n)e(b)} [m-n]^{r-1} φ_r(b)`.
pub fn normalize(phi: &RatFn, b: &BraidWord, params: &GLParams) -> RatFn {
    let dm = params.diff();
    let scale = RatFn::q_pow(-dm * b.writhe() as i32) * RatFn::from(quantum_int(dm)).pow(b.strands as i32 - 1).expect("nonzero");
    phi * &scale
}

pub fn link_invariant(b: &BraidWord, params: &GLParams, exec: Exec, max_dim: usize) -> Result<InvariantResult> {
    let phi = markov_trace(b, params, exec, max_dim)?;
    Ok(InvariantResult { params: *params, braid: b.clone(), writhe: b.writhe(), invariant: normalize(&phi, b, params), markov_trace: phi })
}

/// Conjugation invariance of `φ` on random pairs in `B_3` and stabilization
/// behaviour from `B_r` to `B_{r+1}` for `2 ≤ r < max_strands`. A negative
/// control shows the unnormalized trace is not stable.
pub fn verify_markov(params: &GLParams, samples: usize, max_strands: usize, seed: u64, exec: Exec, max_dim: usize) -> Result<Report> {
    require_m_ne_n(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new();
    let suite = "markov";
    let phi = |b: &BraidWord| markov_trace(b, params, exec, max_dim);
    let dm = params.diff();
    let ratio = RatFn::q_pow(dm).checked_div(&RatFn::from(quantum_int(dm)))?;

    for _ in 0..samples {
        let (l1, l2) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let b1 = BraidWord::random(&mut rng, 3, l1);
        let b2 = BraidWord::random(&mut rng, 3, l2);
        let (x, y) = (phi(&b1.concat(&b2)?)?, phi(&b2.concat(&b1)?)?);
        rep.check(suite, format!("phi({b1} | {b2}) = phi({b2} | {b1})"), "markov-conjugation", x == y, || format!("{x} vs {y}"));
    }
    for r in 2..max_strands {
        for _ in 0..samples {
            let len = rng.gen_range(1..=5);
            let b = BraidWord::random(&mut rng, r, len);
            let positive = rng.gen_bool(0.5);
            let st = b.stabilize(positive);
            let (p0, p1) = (phi(&b)?, phi(&st)?);
            let factor = if positive { ratio.clone() } else { RatFn::q_pow(-2 * dm) * ratio.clone() };
            rep.check(suite, format!("phi_{}({st}) = c phi_{r}({b})", r + 1), "markov-stabilization", p1 == &factor * &p0, || {
                format!("{p1} vs {}", &factor * &p0)
            });
            let (i0, i1) = (normalize(&p0, &b, params), normalize(&p1, &st, params));
            rep.check(suite, format!("I({st}) = I({b}) on {} strands", r + 1), "markov-stabilization", i0 == i1, || {
                format!("{i1} vs {i0}")
            });
        }
    }
    let b = BraidWord::new(2, vec![1, 1])?;
    let (p0, p1) = (phi(&b)?, phi(&b.stabilize(true))?);
    rep.check(suite, "negative control: phi alone is not stable", "markov-stabilization", p0 != p1, || "phi was stable".into());
    Ok(rep)
}

/// `q^{m-n} I(L+) - q^{-(m-n)} I(L-) = (q - q⁻¹) I(L0)` where the three
/// words differ at letter `pos`, plus a control with swapped prefactors.
pub fn verify_skein(params: &GLParams, b: &BraidWord, pos: usize, exec: Exec, max_dim: usize) -> Result<Report> {
    require_m_ne_n(params)?;
    if pos >= b.len() {
        return Err(Error::IndexOutOfRange { index: pos as i64, lo: 0, hi: b.len() as i64 - 1 });
    }
    let i = b.letters[pos].abs();
    let inv = |w: &BraidWord| link_invariant(w, params, exec, max_dim).map(|r| r.invariant);
    let (ip, im, i0) = (inv(&b.with_letter(pos, i)?)?, inv(&b.with_letter(pos, -i)?)?, inv(&b.without(pos))?);
    let a = RatFn::q_pow(params.diff());
    let ai = RatFn::q_pow(-params.diff());
    let z = crate::field::q_minus_qinv();
    let lhs = &a * &ip - &ai * &im;
    let rhs = &z * &i0;
    let mut rep = Report::new();
    rep.check("skein", format!("[{b}] at {pos}"), "skein", lhs == rhs, || format!("{lhs} vs {rhs}"));
    let swapped = &ai * &ip - &a * &im;
    rep.check("skein", format!("negative control [{b}] at {pos}"), "skein", swapped != rhs, || "swapped prefactors also satisfy it".into());
    Ok(rep)
}

/// Random (word, position) skein checks.
pub fn verify_skein_random(params: &GLParams, samples: usize, strands: usize, seed: u64, exec: Exec, max_dim: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new();
    for _ in 0..samples {
        let len = rng.gen_range(1..=6);
        let b = BraidWord::random(&mut rng, strands, len);
        let pos = rng.gen_range(0..len);
        rep.extend(verify_skein(params, &b, pos, exec, max_dim)?);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: usize, n: usize) -> GLParams {
        GLParams::new(m, n).unwrap()
    }

    #[test]
    fn quantum_dimensions() {
        assert_eq!(quantum_dimension(&g(2, 1)), RatFn::q());
        assert_eq!(quantum_dimension(&g(3, 1)), "q + q^-1".parse().unwrap());
        assert!(quantum_dimension(&g(1, 1)).is_zero());
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)] {
            let v = natural_rep(&g(m, n));
            assert_eq!(quantum_trace(&SparseMat::identity(v.dim), &v).unwrap(), quantum_dimension(&g(m, n)));
        }
    }

    #[test]
    fn parse_words() {
        let b = BraidWord::parse("1 1 1", None).unwrap();
        assert_eq!((b.strands(), b.writhe()), (2, 3));
        let b = BraidWord::parse("1 -2 1 -2", None).unwrap();
        assert_eq!((b.strands(), b.writhe()), (3, 0));
        assert!(matches!(BraidWord::parse("0", None), Err(Error::Syntax { .. })));
        assert!(matches!(BraidWord::parse("1 x", None), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(BraidWord::parse("3", Some(3)), Err(Error::StrandMismatch { letter: 3, strands: 3 })));
        assert_eq!(BraidWord::parse("", None).unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn sparse_trace_matches_matrix() {
        let p = g(2, 1);
        let b = BraidWord::parse("1 -2 1 2 2", None).unwrap();
        let m = braid_rep(&b, &p, 1000).unwrap();
        let dense = quantum_trace(&m, &crate::rep::iterated_tensor(&natural_rep(&p), 3, crate::expr::Side::Delta, 1000).unwrap()).unwrap();
        assert_eq!(braid_qtrace(&b, &p, Exec::Sequential, 1000).unwrap(), dense);
        assert_eq!(braid_qtrace(&b, &p, Exec::Parallel, 1000).unwrap(), dense);
    }

    #[test]
    fn unknot_and_single_crossing() {
        let p = g(2, 1);
        let one = BraidWord::empty(1);
        assert!(link_invariant(&one, &p, Exec::Sequential, 1000).unwrap().invariant.is_one());
        let b1 = BraidWord::parse("1", None).unwrap();
        let r = link_invariant(&b1, &p, Exec::Sequential, 1000).unwrap();
        assert!(r.invariant.is_one());
        assert_eq!(r.markov_trace, RatFn::q()); // q^{m-n}/[m-n] with m-n = 1
        let bm = BraidWord::parse("-1", None).unwrap();
        assert_eq!(markov_trace(&bm, &p, Exec::Sequential, 1000).unwrap(), RatFn::q_pow(-1));
        assert_eq!(markov_trace(&one, &g(1, 1), Exec::Sequential, 1000), Err(Error::EqualMNUnsupported));
    }

    #[test]
    fn partial_traces_of_rcheck() {
        for (m, n) in [(2, 1), (3, 1), (3, 2)] {
            let p = g(m, n);
            let b = build_bundle(&p);
            let dq = quantum_dimension(&p);
            let dm = p.diff();
            let qint = RatFn::from(quantum_int(dm));
            for (mat, e) in [(&b.rcheck, dm), (&b.rcheckinv, -dm)] {
                let phi = partial_qtrace(mat, &p).unwrap();
                let c = phi.as_scalar().expect("scalar");
                assert_eq!(c.checked_div(&dq).unwrap(), RatFn::q_pow(e).checked_div(&qint).unwrap());
            }
        }
        let p = g(2, 1);
        assert_eq!(partial_qtrace(&build_bundle(&p).rcheck, &p).unwrap(), SparseMat::scalar(3, &RatFn::q_pow(2)));
    }
}
