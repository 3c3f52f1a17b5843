//! Every defining relation and derived identity as an expression that must
//! vanish in any representation. Fractions are cleared by `q_a - q_a⁻¹`,
//! which equals `q - q⁻¹` for every `a`.

use serde::Serialize;

use super::roots::{odd_f, root_vector};
use super::Expr;
use crate::field::{quantum_int_in, GLParams, RatFn};

#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    /// Unique human-readable name, e.g. `gl-8: e2^2`.
    pub name: String,
    /// The family the entry belongs to, e.g. `gl-8`.
    pub tag: String,
    #[serde(serialize_with = "ser_display")]
    pub expr: Expr,
}

fn ser_display<S: serde::Serializer>(e: &Expr, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

/// A family that has no entries for the given `(m, n)`.
#[derive(Clone, Debug, Serialize)]
pub struct Vacuous {
    pub tag: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCatalog {
    pub params: GLParams,
    pub entries: Vec<Relation>,
    pub vacuous: Vec<Vacuous>,
}

impl RelationCatalog {
    pub fn get(&self, name: &str) -> Option<&Relation> {
        self.entries.iter().find(|r| r.name == name)
    }

    pub fn tags(&self) -> Vec<&str> {
        let mut t: Vec<&str> = Vec::new();
        for r in &self.entries {
            if !t.contains(&r.tag.as_str()) {
                t.push(&r.tag);
            }
        }
        t
    }
}

struct Builder {
    p: GLParams,
    entries: Vec<Relation>,
    vacuous: Vec<Vacuous>,
}

impl Builder {
    fn push(&mut self, tag: &str, label: String, expr: Expr) {
        self.entries.push(Relation { name: format!("{tag}: {label}"), tag: tag.to_string(), expr });
    }

    fn vacuous(&mut self, tag: &str, reason: &str) {
        self.vacuous.push(Vacuous { tag: tag.into(), reason: reason.into() });
    }

    fn q(&self, a: usize) -> RatFn {
        self.p.qa(a)
    }

    fn root(&self, i: usize, j: usize) -> Expr {
        root_vector(i, j, &self.p).expect("indices in range")
    }
}

fn qmq() -> RatFn {
    crate::field::q_minus_qinv()
}

pub fn relation_catalog(params: &GLParams) -> RelationCatalog {
    let mut b = Builder { p: *params, entries: vec![], vacuous: vec![] };
    defining(&mut b);
    serre_elements(&mut b);
    root_identities(&mut b);
    power_brackets(&mut b);
    odd_f_identities(&mut b);
    odd_brackets(&mut b);
    RelationCatalog { params: *params, entries: b.entries, vacuous: b.vacuous }
}

fn defining(b: &mut Builder) {
    let (m, nn) = (b.p.m, b.p.rank());
    let (e, f, kk, ki) = (Expr::e, Expr::f, Expr::K, Expr::kinv_atom);

    for a in 1..=nn {
        b.push("gl-1", format!("K{a}*K{a}^-1"), kk(a) * ki(a) - Expr::one());
        b.push("gl-1", format!("K{a}^-1*K{a}"), ki(a) * kk(a) - Expr::one());
        for c in a + 1..=nn {
            for (x, y, s) in [(kk(a), kk(c), "K,K"), (kk(a), ki(c), "K,K^-1"), (ki(a), kk(c), "K^-1,K"), (ki(a), ki(c), "K^-1,K^-1")] {
                b.push("gl-1", format!("[{s}] {a},{c}"), Expr::comm(&x, &y));
            }
        }
    }

    for a in 1..=nn {
        for c in 1..nn {
            let ex = (a == c) as i32 - (a == c + 1) as i32;
            let qa = b.q(a);
            let lhs = kk(a) * e(c) * ki(a);
            b.push("gl-2", format!("K{a} e{c} K{a}^-1"), lhs - e(c).scale(qa.pow(ex).unwrap()));
            let lhs = kk(a) * f(c) * ki(a);
            b.push("gl-3", format!("K{a} f{c} K{a}^-1"), lhs - f(c).scale(qa.pow(-ex).unwrap()));
        }
    }

    for a in 1..nn {
        for c in 1..nn {
            let mut x = Expr::comm(&e(a), &f(c)).scale(qmq());
            if a == c {
                x = x - (Expr::k(a) - Expr::k_inv(a));
            }
            b.push("gl-4", format!("[e{a}, f{c}]"), x);
        }
    }

    for a in 1..nn {
        for c in a + 2..nn {
            b.push("gl-5", format!("[e{a}, e{c}]"), Expr::comm(&e(a), &e(c)));
            b.push("gl-5", format!("[f{a}, f{c}]"), Expr::comm(&f(a), &f(c)));
        }
    }

    for a in (1..nn).filter(|&a| a != m) {
        for c in [a.wrapping_sub(1), a + 1].into_iter().filter(|&c| (1..nn).contains(&c)) {
            let qa = b.q(a);
            let s = &qa + &qa.inv().unwrap();
            let serre = |x: fn(usize) -> Expr| {
                Expr::sum(vec![Expr::pow(x(a), 2) * x(c), (x(a) * x(c) * x(a)).scale(-s.clone()), x(c) * Expr::pow(x(a), 2)])
            };
            b.push("gl-6", format!("e{a}^2 e{c}"), serre(e));
            b.push("gl-7", format!("f{a}^2 f{c}"), serre(f));
        }
    }

    b.push("gl-8", format!("e{m}^2"), Expr::pow(e(m), 2));
    b.push("gl-8", format!("f{m}^2"), Expr::pow(f(m), 2));

    if m >= 2 && b.p.n >= 2 {
        let up = b.root(m - 1, m + 2);
        let down = b.root(m + 2, m - 1);
        b.push("gl-9", "Q+".into(), Expr::comm(&e(m), &up));
        b.push("gl-10", "Q-".into(), Expr::comm(&f(m), &down));
    } else {
        let why = "needs m >= 2 and n >= 2";
        b.vacuous("gl-9", why);
        b.vacuous("gl-10", why);
    }
}

/// The cubic and quadratic Serre elements of the rank-two case, and the
/// fact that they commute with the opposite Chevalley generators.
fn serre_elements(b: &mut Builder) {
    if (b.p.m, b.p.n) != (2, 1) {
        b.vacuous("serre", "only for (m, n) = (2, 1)");
        return;
    }
    let s = RatFn::q() + RatFn::q_pow(-1);
    let cubic = |x: fn(usize) -> Expr| {
        Expr::sum(vec![Expr::pow(x(1), 2) * x(2), (x(1) * x(2) * x(1)).scale(-s.clone()), x(2) * Expr::pow(x(1), 2)])
    };
    let s12p = cubic(Expr::e);
    let s12m = cubic(Expr::f);
    let s2p = Expr::pow(Expr::e(2), 2);
    let s2m = Expr::pow(Expr::f(2), 2);
    for (name, x) in [("S12+", &s12p), ("S12-", &s12m), ("S2+", &s2p), ("S2-", &s2m)] {
        b.push("serre", name.into(), x.clone());
    }
    for i in 1..=2 {
        b.push("serre", format!("[f{i}, S12+]"), Expr::comm(&Expr::f(i), &s12p));
        b.push("serre", format!("[f{i}, S2+]"), Expr::comm(&Expr::f(i), &s2p));
        b.push("serre", format!("[e{i}, S12-]"), Expr::comm(&Expr::e(i), &s12m));
        b.push("serre", format!("[e{i}, S2-]"), Expr::comm(&Expr::e(i), &s2m));
    }
}

/// Commutation identities among the lowering root vectors `E_{ji}`, `i < j`.
fn root_identities(b: &mut Builder) {
    let (m, nn) = (b.p.m, b.p.rank());
    let params = b.p;
    let r = |i, j| root_vector(i, j, &params).expect("indices in range");

    // [E_ji, f_k] = 0 when the support of E_ji stays clear of f_k's
    // neighbours or strictly contains it
    for i in 1..nn {
        for j in i + 1..=nn {
            for k in 1..nn {
                let apart = j < k || k + 1 < i;
                let around = i < k && k + 1 < j;
                if apart || around {
                    b.push("root-f-comm", format!("[E{j},{i}, f{k}]"), Expr::comm(&r(j, i), &Expr::f(k)));
                }
            }
        }
    }

    for i in 1..=m {
        for k in m + 1..=nn {
            b.push("root-nil", format!("E{k},{i}^2"), Expr::pow(r(k, i), 2));
        }
    }

    for i in 1..=nn {
        for j in i + 1..=nn {
            for k in 1..=nn {
                for l in k + 1..=nn {
                    let (eji, elk) = (r(j, i), r(l, k));
                    if j < k || (k < i && j < l) {
                        b.push("root-comm", format!("[E{j},{i}, E{l},{k}]"), Expr::comm(&eji, &elk));
                    }
                    if i < k && k < j && j < l {
                        let rhs = (r(l, i) * r(j, k)).scale(qmq());
                        b.push("root-bracket", format!("[E{j},{i}, E{l},{k}]"), Expr::comm(&eji, &elk) - rhs);
                    }
                }
            }
        }
    }

    for i in 1..=nn {
        for j in i + 1..=nn {
            for k in j + 1..=nn {
                // E_ki E_kj = q_k E_kj E_ki
                let x = Expr::qcomm(&r(k, i), &r(k, j), b.q(k));
                b.push("root-qcomm-row", format!("E{k},{i} E{k},{j}"), x);
            }
        }
    }
    for k in 1..=nn {
        for i in k + 1..=nn {
            for j in i + 1..=nn {
                // E_jk E_ik = q_k^-1 E_ik E_jk
                let x = Expr::qcomm(&r(j, k), &r(i, k), b.q(k).inv().unwrap());
                b.push("root-qcomm-col", format!("E{j},{k} E{i},{k}"), x);
            }
        }
    }
}

/// `[f_a, e_a^k]` and `[e_a, f_a^k]` for the non-degenerate simple roots,
/// `k = 1..=3`, in the base `q_a`.
fn power_brackets(b: &mut Builder) {
    let (m, nn) = (b.p.m, b.p.rank());
    for a in (1..nn).filter(|&a| a != m) {
        let qa = b.q(a);
        for k in 1..=3u32 {
            let ki = k as i32;
            let qk = quantum_int_in(ki, &qa);
            let x = Expr::comm(&Expr::f(a), &Expr::pow(Expr::e(a), k)).scale(qmq());
            let cart = Expr::k(a).scale(qa.pow(ki - 1).unwrap()) - Expr::k_inv(a).scale(qa.pow(1 - ki).unwrap());
            let rhs = (Expr::pow(Expr::e(a), k - 1) * cart).scale(-qk.clone());
            b.push("e-f-power", format!("[f{a}, e{a}^{k}]"), x - rhs);

            let x = Expr::comm(&Expr::e(a), &Expr::pow(Expr::f(a), k)).scale(qmq());
            let cart = Expr::k(a).scale(qa.pow(1 - ki).unwrap()) - Expr::k_inv(a).scale(qa.pow(ki - 1).unwrap());
            let rhs = (Expr::pow(Expr::f(a), k - 1) * cart).scale(qk);
            b.push("e-f-power", format!("[e{a}, f{a}^{k}]"), x - rhs);
        }
    }
}

/// Identities of `F = f_{m-1} f_m - q f_m f_{m-1}` around the degenerate
/// node; for `(2,1)` these are the rewriting rules of the simple modules.
fn odd_f_identities(b: &mut Builder) {
    let Some(ff) = odd_f(&b.p) else {
        b.vacuous("odd-F", "needs m >= 2");
        return;
    };
    let m = b.p.m;
    let (f1, f2) = (Expr::f(m - 1), Expr::f(m));
    let q = RatFn::q;
    b.push("odd-F", format!("f{} F", m - 1), Expr::qcomm(&f1, &ff, q().inv().unwrap()));
    b.push("odd-F", format!("f{m} F"), Expr::qcomm(&f2, &ff, -q().inv().unwrap()));
    b.push("odd-F", "F^2".into(), Expr::pow(ff.clone(), 2));
    let x = Expr::comm(&Expr::e(m - 1), &ff) - f2.clone() * Expr::k_inv(m - 1);
    b.push("odd-F", format!("[e{}, F]", m - 1), x);
    let x = Expr::comm(&Expr::e(m), &ff) + (f1.clone() * Expr::k(m)).scale(q());
    b.push("odd-F", format!("[e{m}, F]"), x);
    for k in 1..=3u32 {
        let qk = RatFn::from(crate::field::quantum_int(k as i32));
        let x = Expr::pow(f1.clone(), k) * f2.clone()
            - (ff.clone() * Expr::pow(f1.clone(), k - 1)).scale(qk)
            - (f2.clone() * Expr::pow(f1.clone(), k)).scale(RatFn::q_pow(k as i32));
        b.push("odd-F", format!("f{}^{k} f{m}", m - 1), x);
    }
}

/// Brackets of lowering generators with the raising root vectors through
/// the degenerate node.
fn odd_brackets(b: &mut Builder) {
    let (m, n) = (b.p.m, b.p.n);
    if m < 2 {
        b.vacuous("odd-bracket", "needs m >= 2");
        return;
    }
    let up1 = b.root(m - 1, m + 1);
    let qm = b.q(m);
    let x = Expr::comm(&Expr::f(m), &up1) + (Expr::e(m - 1) * Expr::k(m)).scale(qm.inv().unwrap());
    b.push("odd-bracket", format!("[f{m}, E{},{}]", m - 1, m + 1), x);
    let x = Expr::comm(&Expr::f(m - 1), &up1) - Expr::e(m) * Expr::k_inv(m - 1);
    b.push("odd-bracket", format!("[f{}, E{},{}]", m - 1, m - 1, m + 1), x);
    if n < 2 {
        b.vacuous("odd-bracket-long", "needs n >= 2 for e_{m+1}");
        return;
    }
    let up2 = b.root(m - 1, m + 2);
    let mid = b.root(m, m + 2);
    let qm1 = b.q(m + 1);
    b.push("odd-bracket-long", format!("[f{m}, E{},{}]", m - 1, m + 2), Expr::comm(&Expr::f(m), &up2));
    let x = Expr::comm(&Expr::f(m - 1), &up2) - mid * Expr::k_inv(m - 1);
    b.push("odd-bracket-long", format!("[f{}, E{},{}]", m - 1, m - 1, m + 2), x);
    let x = Expr::comm(&Expr::f(m + 1), &up2) + (up1 * Expr::k(m + 1)).scale(qm1.inv().unwrap());
    b.push("odd-bracket-long", format!("[f{}, E{},{}]", m + 1, m - 1, m + 2), x);
}
