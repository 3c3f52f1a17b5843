use super::Representation;
use crate::error::Result;
use crate::expr::{antipode, coproduct, counit, Evaluator, Expr, Gen, Side};
use crate::field::GLParams;
use crate::linalg::SparseMat;
use crate::report::{Report, Status};

/// Exponents of `K_1, …, K_{m+n}` in `K_{2ρ}`.
pub fn k2rho_exponents(params: &GLParams) -> Vec<i32> {
    let (m, n) = (params.m as i32, params.n as i32);
    let odd = (m + n) % 2 == 1;
    let even_part = (1..=m).map(|a| m - n + 1 - 2 * a + odd as i32);
    let odd_part = (1..=n).map(|mu| m + n + 1 - 2 * mu - odd as i32);
    even_part.chain(odd_part).collect()
}

/// `K_{2ρ}` as a product of `K_b^{±k}`.
pub fn k2rho_expr(params: &GLParams) -> Expr {
    let factors = k2rho_exponents(params)
        .into_iter()
        .enumerate()
        .filter(|(_, e)| *e != 0)
        .map(|(i, e)| {
            let atom = if e > 0 { Expr::K(i + 1) } else { Expr::kinv_atom(i + 1) };
            Expr::pow(atom, e.unsigned_abs())
        })
        .collect();
    Expr::product(factors)
}

fn sum_kron3(ev: &mut Evaluator<'_, Representation>, terms: &[(Expr, Expr, Expr)], d: usize) -> Result<SparseMat> {
    let n = d * d * d;
    let mut acc = SparseMat::zeros(n, n);
    for (a, b, c) in terms {
        acc = acc.add(&ev.eval(a)?.kron(&ev.eval(b)?).kron(&ev.eval(c)?))?;
    }
    Ok(acc)
}

fn sum_products(ev: &mut Evaluator<'_, Representation>, terms: impl IntoIterator<Item = (Expr, Expr)>, d: usize) -> Result<SparseMat> {
    let mut acc = SparseMat::zeros(d, d);
    for (a, b) in terms {
        acc = acc.add(&ev.eval(&(a * b))?)?;
    }
    Ok(acc)
}

fn diff_detail(a: &SparseMat, b: &SparseMat) -> String {
    match a.sub(b).ok().and_then(|d| d.max_entry()) {
        Some((i, j, x)) => format!("max entry ({i}, {j}) = {x}"),
        None => "dimension mismatch".into(),
    }
}

/// The Hopf axioms together with `S² = Ad(K_{2ρ})` on every generator, as
/// exact matrix identities in `rep` (and `rep^{⊗3}` for coassociativity).
pub fn check_hopf_axioms(rep: &Representation) -> Report {
    let mut report = Report::new();
    if let Err(e) = run(rep, &mut report) {
        report.push("hopf", format!("{} construction", rep.label), "hopf", Status::Fail, e.to_string());
    }
    report
}

fn run(rep: &Representation, report: &mut Report) -> Result<()> {
    let suite = format!("hopf {}", rep.label);
    let d = rep.dim;
    let mut ev = Evaluator::new(rep);
    let k2 = ev.eval(&k2rho_expr(&rep.params))?;
    for g in Gen::all(&rep.params) {
        let x = Expr::Atom(g);
        let dx = coproduct(&x, Side::Delta);

        let left: Vec<_> =
            dx.iter().flat_map(|(a, b)| coproduct(a, Side::Delta).into_iter().map(move |(a1, a2)| (a1, a2, b.clone()))).collect();
        let right: Vec<_> =
            dx.iter().flat_map(|(a, b)| coproduct(b, Side::Delta).into_iter().map(move |(b1, b2)| (a.clone(), b1, b2))).collect();
        let (l, r) = (sum_kron3(&mut ev, &left, d)?, sum_kron3(&mut ev, &right, d)?);
        report.check(&suite, format!("coassociativity {g}"), "coassociativity", l == r, || diff_detail(&l, &r));

        let px = ev.eval(&x)?;
        let c1 = sum_products(&mut ev, dx.iter().map(|(a, b)| (a.clone(), Expr::Scalar(counit(b)))), d)?;
        let c2 = sum_products(&mut ev, dx.iter().map(|(a, b)| (Expr::Scalar(counit(a)), b.clone())), d)?;
        report.check(&suite, format!("counit {g}"), "counit", c1 == px && c2 == px, || diff_detail(if c1 == px { &c2 } else { &c1 }, &px));

        let eps = SparseMat::scalar(d, &counit(&x));
        let s1 = sum_products(&mut ev, dx.iter().map(|(a, b)| (antipode(a), b.clone())), d)?;
        let s2 = sum_products(&mut ev, dx.iter().map(|(a, b)| (a.clone(), antipode(b))), d)?;
        report.check(&suite, format!("antipode {g}"), "antipode", s1 == eps && s2 == eps, || {
            diff_detail(if s1 == eps { &s2 } else { &s1 }, &eps)
        });

        let ssx = ev.eval(&antipode(&antipode(&x)))?;
        let (lhs, rhs) = (ssx.mul(&k2)?, k2.mul(&px)?);
        report.check(&suite, format!("S^2 = Ad(K2rho) {g}"), "antipode-square", lhs == rhs, || diff_detail(&lhs, &rhs));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RatFn;
    use crate::rep::natural_rep;

    #[test]
    fn k2rho_small_cases() {
        let p21 = GLParams::new(2, 1).unwrap();
        assert_eq!(k2rho_exponents(&p21), vec![1, -1, 1]);
        let v = natural_rep(&p21);
        let k = v.eval(&k2rho_expr(&p21)).unwrap();
        assert_eq!(k, SparseMat::diagonal(vec![RatFn::q(), RatFn::q_pow(-1), -RatFn::q_pow(-1)]));

        let p11 = GLParams::new(1, 1).unwrap();
        assert_eq!(k2rho_exponents(&p11), vec![-1, 1]);
        let k = natural_rep(&p11).eval(&k2rho_expr(&p11)).unwrap();
        assert_eq!(k, SparseMat::diagonal(vec![RatFn::q_pow(-1), -RatFn::q_pow(-1)]));
    }

    #[test]
    fn natural_axioms_hold() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
            let r = check_hopf_axioms(&natural_rep(&GLParams::new(m, n).unwrap()));
            assert!(r.all_passed(), "{r}");
            assert_eq!(r.checks.len(), 4 * Gen::all(&GLParams::new(m, n).unwrap()).len());
        }
    }
}
