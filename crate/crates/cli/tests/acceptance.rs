//! The twelve acceptance criteria, one line each. Runs without the test
//! harness so the lines always print; exits nonzero if any criterion fails.

#[path = "../../core/tests/common/homfly.rs"]
mod homfly;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use degenq::expr::Side;
use degenq::field::quantum_int;
use degenq::invariant::*;
use degenq::rep::{check_hopf_axioms, iterated_tensor, natural_rep, verify_relations, DEFAULT_MAX_DIM};
use degenq::rmatrix::*;
use degenq::sl21::*;
use degenq::{Exec, GLParams, RatFn, Report, SparseMat};
use homfly::Homfly;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const ALL: [(usize, usize); 6] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)];

fn g(m: usize, n: usize) -> GLParams {
    GLParams::new(m, n).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &Report, what: &str) -> Result<(), String> {
    let first = r.failures().next().map(|c| format!("{what}: {} [{}] {}", c.name, c.tag, c.detail));
    ensure(r.all_passed(), || first.unwrap_or_default())
}

fn relations() -> Outcome {
    let mut checks = 0;
    for (m, n) in ALL {
        let v = natural_rep(&g(m, n));
        for side in [Side::Delta, Side::DeltaPrime] {
            for r in 1..=3 {
                let t = iterated_tensor(&v, r, side, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                let rep = verify_relations(&t, Exec::default());
                passed(&rep, &format!("({m},{n}) V^{r} {side:?}"))?;
                checks += rep.checks.len();
            }
        }
    }
    Ok(format!("{checks} entries exact zero over 6 params, V..V^3, both coproducts"))
}

fn hopf() -> Outcome {
    let mut checks = 0;
    for (m, n) in ALL {
        let r = check_hopf_axioms(&natural_rep(&g(m, n)));
        passed(&r, &format!("({m},{n})"))?;
        checks += r.checks.len();
    }
    Ok(format!("{checks} generator checks"))
}

fn ybe() -> Outcome {
    for (m, n) in ALL {
        passed(&verify_ybe(&build_bundle(&g(m, n))), &format!("({m},{n})"))?;
    }
    Ok("R and T satisfy it; perturbed R violates it".into())
}

fn hecke() -> Outcome {
    let mut dims = Vec::new();
    for (m, n) in ALL {
        let pr = g(m, n);
        let (r, spectrum) = verify_hecke_and_spectrum(&build_bundle(&pr)).map_err(|e| e.to_string())?;
        passed(&r, &format!("({m},{n})"))?;
        ensure(spectrum == Spectrum::expected(&pr), || format!("({m},{n}) got ({}, {})", spectrum.sym, spectrum.alt))?;
        dims.push(format!("({m},{n}):{}+{}", spectrum.sym, spectrum.alt));
    }
    Ok(format!("eigenspace dims {}", dims.join(" ")))
}

fn intertwiner() -> Outcome {
    for (m, n) in ALL {
        let pr = g(m, n);
        let r = verify_intertwiner(&build_bundle(&pr), &natural_rep(&pr)).map_err(|e| e.to_string())?;
        passed(&r, &format!("({m},{n})"))?;
        for k in [2, 3] {
            let r = verify_tensor_iso(&pr, k, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
            passed(&r, &format!("({m},{n}) r={k}"))?;
        }
    }
    Ok("every generator, tensor iso at r = 2, 3".into())
}

fn sl21_modules() -> Outcome {
    let mut cases = 0;
    for ell in 0..=3u32 {
        for sign1 in [1i8, -1] {
            let l1 = HighestWeightSL21::new(ell, sign1, RatFn::one()).unwrap().lambda1();
            let b = RatFn::q_pow(-1) * l1.inv().unwrap();
            let l = ell as usize;
            let grid = [
                (RatFn::q_pow(3), 4 * (l + 1)),
                (RatFn::one(), 2 * l + 1),
                (RatFn::int(-1), 2 * l + 1),
                (b.clone(), 2 * l + 3),
                (-b, 2 * l + 3),
            ];
            for (l2, want) in grid {
                let hw = HighestWeightSL21::new(ell, sign1, l2.clone()).unwrap();
                let (kind, _) = atypicality_type(&hw);
                let m = simple_quotient(&verma_module(&hw)).map_err(|e| e.to_string())?;
                let tag = format!("ell={ell} sign1={sign1} lambda2={l2}");
                ensure(m.dim() == want, || format!("{tag}: dim {} != {want}", m.dim()))?;
                passed(&verify_relations(&m.rep, Exec::default()), &tag)?;
                let img = |ef, e2, k| m.image(Label { ef, e2, k });
                for k in 0..ell {
                    let ok = match kind {
                        Atypicality::Typical => true,
                        Atypicality::AtypicalA => {
                            let c = -(RatFn::q_pow(k as i32 + 1) / RatFn::from(quantum_int(k as i32 + 1)));
                            img(1, 0, k) == img(0, 1, k + 1).scale(&c)
                        }
                        Atypicality::AtypicalB => {
                            img(1, 0, k).scale(&RatFn::from(quantum_int((ell - k) as i32)))
                                == img(0, 1, k + 1).scale(&RatFn::q_pow(k as i32 - ell as i32))
                        }
                    };
                    ensure(ok, || format!("{tag}: identity fails at k={k}"))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} highest weights, dims and identities exact"))
}

fn quantum_dim() -> Outcome {
    for (m, n) in ALL {
        let pr = g(m, n);
        let v = natural_rep(&pr);
        let tau = quantum_trace(&SparseMat::identity(v.dim), &v).map_err(|e| e.to_string())?;
        let base = RatFn::from(quantum_int(pr.diff()));
        let want = if (m + n) % 2 == 0 { base } else { RatFn::q() * base };
        ensure(tau == want && quantum_dimension(&pr) == want, || format!("({m},{n}): {tau} vs {want}"))?;
    }
    ensure(quantum_dimension(&g(1, 1)).is_zero(), || "(1,1) nonzero".into())?;
    Ok("matches tau_V(id); (1,1) gives 0".into())
}

fn partial_trace() -> Outcome {
    for (m, n) in [(2, 1), (3, 1), (3, 2)] {
        let pr = g(m, n);
        let b = build_bundle(&pr);
        let dq = quantum_dimension(&pr);
        let qd = RatFn::from(quantum_int(pr.diff()));
        for (gamma, e) in [(&b.rcheck, 1), (&b.rcheckinv, -1)] {
            let phi = partial_qtrace(gamma, &pr).map_err(|x| x.to_string())?;
            let c = phi.as_scalar().ok_or_else(|| format!("({m},{n}) sign {e}: not scalar"))?;
            let want = RatFn::q_pow(e * pr.diff()) / qd.clone();
            ensure(c.clone() / dq.clone() == want, || format!("({m},{n}) sign {e}: {c}"))?;
        }
    }
    Ok("scalar with ratio q^(+-(m-n))/[m-n] for (2,1), (3,1), (3,2)".into())
}

fn markov() -> Outcome {
    let mut n_checks = 0;
    for (m, n) in [(2, 1), (3, 1)] {
        let r = verify_markov(&g(m, n), 20, 4, 9, Exec::default(), DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
        passed(&r, &format!("({m},{n})"))?;
        n_checks += r.checks.len();
    }
    Ok(format!("{n_checks} checks: 20 conjugation pairs, 20 stabilizations B2->B3 and B3->B4 each"))
}

fn skein() -> Outcome {
    for (m, n) in [(2, 1), (1, 2), (3, 1), (3, 2)] {
        let r = verify_skein_random(&g(m, n), 10, 3, 5, Exec::default(), DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
        passed(&r, &format!("({m},{n})"))?;
    }
    Ok("10 random (word, position) pairs for each of 4 params".into())
}

fn homfly() -> Outcome {
    let links = [("trefoil", "1 1 1"), ("figure-eight", "1 -2 1 -2"), ("Hopf link", "1 1")];
    let inv = |s: &str, pr: &GLParams| {
        let b = BraidWord::parse(s, None).unwrap();
        link_invariant(&b, pr, Exec::default(), DEFAULT_MAX_DIM).map(|r| r.invariant).map_err(|e| e.to_string())
    };
    for (m, n) in [(2, 1), (3, 1)] {
        let pr = g(m, n);
        let mut oracle = Homfly::at_difference(pr.diff());
        for (name, s) in links {
            let b = BraidWord::parse(s, None).unwrap();
            let (x, y) = (inv(s, &pr)?, oracle.eval(b.strands(), b.letters()));
            ensure(x == y, || format!("({m},{n}) {name}: {x} vs oracle {y}"))?;
        }
    }
    for (name, s) in links {
        let (x, y) = (inv(s, &g(2, 1))?, inv(s, &g(3, 2))?);
        ensure(x == y, || format!("{name}: (2,1) {x} vs (3,2) {y}"))?;
    }
    Ok("trefoil, figure-eight, Hopf link match the skein oracle; (2,1) = (3,2)".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_degenq");
    let runs: [&[&str]; 3] = [
        &["invariant", "--m", "2", "--n", "1", "--braid", "1 1 1", "--json"],
        &["invariant", "--m", "3", "--n", "1", "--braid", "1 -2 1 -2", "--json"],
        &["verify", "--m", "2", "--n", "1", "--suite", "rmatrix", "--json"],
    ];
    for args in runs {
        let run = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (a, b) = (run()?, run()?);
        ensure(a.status.success(), || format!("{args:?} exited with {}", a.status))?;
        ensure(a.stdout == b.stdout, || format!("{args:?}: outputs differ"))?;
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
        if args[0] == "invariant" && args[6] == "1 1 1" {
            ensure(v["writhe"] == 3, || "trefoil writhe is not 3".into())?;
        }
    }
    Ok("3 commands run twice, byte-identical JSON".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("relation suite", relations),
        ("Hopf axioms", hopf),
        ("Yang-Baxter", ybe),
        ("Hecke and spectrum", hecke),
        ("intertwiner and tensor iso", intertwiner),
        ("sl(2|1) simple modules", sl21_modules),
        ("quantum dimension", quantum_dim),
        ("partial trace", partial_trace),
        ("Markov properties", markov),
        ("skein relation", skein),
        ("HOMFLY agreement", homfly),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
