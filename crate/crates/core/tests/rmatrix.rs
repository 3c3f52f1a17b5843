use degenq::expr::{Gen, Side};
use degenq::rep::{iterated_tensor, natural_rep, tensor_rep};
use degenq::rmatrix::*;
use degenq::{GLParams, RatFn, SparseMat, Status};

const PARAMS: [(usize, usize); 6] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)];

fn g(m: usize, n: usize) -> GLParams {
    GLParams::new(m, n).unwrap()
}

#[test]
fn yang_baxter_for_all_params() {
    for (m, n) in PARAMS {
        let r = verify_ybe(&build_bundle(&g(m, n)));
        assert!(r.all_passed(), "({m},{n})\n{r}");
        assert_eq!(r.count(Status::Pass), 5);
    }
}

#[test]
fn hecke_and_spectrum_for_all_params() {
    for (m, n) in PARAMS {
        let pr = g(m, n);
        let (r, spectrum) = verify_hecke_and_spectrum(&build_bundle(&pr)).unwrap();
        assert!(r.all_passed(), "({m},{n})\n{r}");
        assert_eq!(spectrum, Spectrum::expected(&pr));
        assert_eq!(spectrum.sym + spectrum.alt, pr.rank() * pr.rank());
    }
    assert_eq!(Spectrum::expected(&g(2, 1)), Spectrum { sym: 5, alt: 4 });
    assert_eq!(Spectrum::expected(&g(1, 1)), Spectrum { sym: 2, alt: 2 });
}

#[test]
fn intertwiner_for_all_params() {
    for (m, n) in PARAMS {
        let pr = g(m, n);
        let r = verify_intertwiner(&build_bundle(&pr), &natural_rep(&pr)).unwrap();
        assert!(r.all_passed(), "({m},{n})\n{r}");
    }
}

#[test]
fn intertwiner_rejects_foreign_params() {
    let b = build_bundle(&g(2, 1));
    assert!(verify_intertwiner(&b, &natural_rep(&g(3, 1))).is_err());
}

#[test]
fn tensor_iso_intertwines_up_to_three() {
    for (m, n) in PARAMS {
        for r in [2, 3] {
            let rep = verify_tensor_iso(&g(m, n), r, 20000).unwrap();
            assert!(rep.all_passed(), "({m},{n}) r={r}\n{rep}");
        }
    }
}

#[test]
fn tensor_iso_at_four_for_small_rank() {
    let rep = verify_tensor_iso(&g(1, 1), 4, 20000).unwrap();
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn tensor_iso_respects_the_cap() {
    assert!(matches!(tensor_iso(&g(3, 2), 3, 100), Err(degenq::Error::ResourceLimit { .. })));
}

#[test]
fn braid_relation_on_three_legs() {
    for (m, n) in PARAMS {
        let pr = g(m, n);
        let d = pr.rank();
        let b = build_bundle(&pr);
        let id = SparseMat::identity(d);
        let s1 = b.rcheck.kron(&id);
        let s2 = id.kron(&b.rcheck);
        let l = SparseMat::product([&s1, &s2, &s1]).unwrap();
        let r = SparseMat::product([&s2, &s1, &s2]).unwrap();
        assert_eq!(l, r, "({m},{n})");
    }
}

#[test]
fn place_legs_matches_kron() {
    let pr = g(2, 1);
    let b = build_bundle(&pr);
    let id = SparseMat::identity(3);
    assert_eq!(place_legs(&b.r, 1, 2, 3, 3), b.r.kron(&id));
    assert_eq!(place_legs(&b.r, 2, 3, 3, 3), id.kron(&b.r));
    // R_13 = P_23 R_12 P_23
    let p23 = id.kron(&flip(3));
    assert_eq!(place_legs(&b.r, 1, 3, 3, 3), SparseMat::product([&p23, &b.r.kron(&id), &p23]).unwrap());
}

#[test]
fn degenerate_diagonal() {
    // The odd basis vector gives Rcheck eigenvalue -q^-1 on v3⊗v3.
    let b = build_bundle(&g(2, 1));
    let k = 2 * 3 + 2;
    assert_eq!(b.rcheck.get(k, k), -RatFn::q_pow(-1));
    assert_eq!(b.t.get(k, k), RatFn::q());
}

#[test]
fn rcheck_commutes_with_diagonal_action() {
    let pr = g(3, 1);
    let b = build_bundle(&pr);
    let v = natural_rep(&pr);
    let vv = tensor_rep(&v, &v, Side::Delta).unwrap();
    for gen in Gen::all(&pr) {
        assert!(b.rcheck.commutator(vv.gen(gen)).unwrap().is_zero(), "{gen}");
    }
    let v3 = iterated_tensor(&v, 3, Side::Delta, 1000).unwrap();
    let s1 = b.rcheck.kron(&SparseMat::identity(4));
    for gen in Gen::all(&pr) {
        assert!(s1.commutator(v3.gen(gen)).unwrap().is_zero(), "{gen}");
    }
}
