use degenq::expr::{parse_expr, Side};
use degenq::invariant::{link_invariant, verify_markov, verify_skein_random, BraidWord};
use degenq::rep::{check_hopf_axioms, highest_weight_vectors, iterated_tensor, natural_rep, verify_relations};
use degenq::rmatrix::{build_bundle, verify_hecke_and_spectrum, verify_intertwiner, verify_tensor_iso, verify_ybe};
use degenq::sl21::{atypicality_type, simple_quotient, verma_module, HighestWeightSL21};
use degenq::{Error, Exec, GLParams, RatFn, Report, Result, SparseMat, Status};
use serde_json::{json, Value};

use crate::{SideArg, Suite};

const MARKOV_SAMPLES: usize = 20;
const SKEIN_SAMPLES: usize = 10;
const SEED: u64 = 2;

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn report_json(r: &Report) -> Value {
    json!({
        "passed": r.all_passed(),
        "counts": {
            "pass": r.count(Status::Pass),
            "fail": r.count(Status::Fail),
            "vacuous": r.count(Status::Vacuous),
            "unsupported": r.count(Status::Unsupported),
        },
        "checks": r.checks,
    })
}

fn matrix_json(a: &SparseMat) -> Value {
    let entries: Vec<Value> = a.triplets().map(|(i, j, x)| json!([i, j, x.to_string()])).collect();
    json!({ "rows": a.nrows(), "cols": a.ncols(), "entries": entries })
}

fn matrix_text(a: &SparseMat) -> String {
    let mut s = format!("{}x{} matrix, {} nonzero entries\n", a.nrows(), a.ncols(), a.nnz());
    for (i, j, x) in a.triplets() {
        s += &format!("  ({i}, {j})  {x}\n");
    }
    s
}

pub fn invariant(m: usize, n: usize, braid: &str, strands: Option<usize>, json: bool, max_dim: usize) -> Result<u8> {
    let params = GLParams::new(m, n)?;
    let b = BraidWord::parse(braid, strands)?;
    let r = link_invariant(&b, &params, Exec::default(), max_dim)?;
    let a = RatFn::q_pow(params.diff());
    if json {
        print_json(&json!({
            "m": m,
            "n": n,
            "strands": b.strands(),
            "writhe": r.writhe,
            "markov_trace": r.markov_trace.to_string(),
            "invariant": r.invariant.to_string(),
            "a": a.to_string(),
            "z": "q - q^-1",
        }));
    } else {
        println!("braid       [{b}] on {} strands, writhe {}", b.strands(), r.writhe);
        println!("markov      {}", r.markov_trace);
        println!("invariant   {}", r.invariant);
        println!("variables   a = {a}, z = q - q^-1");
    }
    Ok(0)
}

fn unsupported(rep: &mut Report, suite: &str) {
    rep.push(suite, "m = n", suite, Status::Unsupported, "quantum dimension of V is zero");
}

pub fn verify(m: usize, n: usize, suite: Suite, depth: usize, json: bool, max_dim: usize) -> Result<u8> {
    let params = GLParams::new(m, n)?;
    let exec = Exec::default();
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut rep = Report::new();
    let v = natural_rep(&params);

    if want(Suite::Relations) {
        for side in [Side::Delta, Side::DeltaPrime] {
            for r in 1..=depth.max(1) {
                if r == 1 && side == Side::DeltaPrime {
                    continue;
                }
                let t = iterated_tensor(&v, r, side, max_dim)?;
                let mut sub = verify_relations(&t, exec);
                for c in &mut sub.checks {
                    c.suite = format!("relations V^{r} {}", side_name(side));
                }
                rep.extend(sub);
            }
        }
    }
    if want(Suite::Hopf) {
        rep.extend(check_hopf_axioms(&v));
    }
    if want(Suite::Rmatrix) {
        let b = build_bundle(&params);
        rep.extend(verify_ybe(&b));
        rep.extend(verify_hecke_and_spectrum(&b)?.0);
        rep.extend(verify_intertwiner(&b, &v)?);
        for r in 2..=depth {
            rep.extend(verify_tensor_iso(&params, r, max_dim)?);
        }
    }
    if want(Suite::Invariant) {
        match verify_markov(&params, MARKOV_SAMPLES, 4, SEED, exec, max_dim) {
            Err(Error::EqualMNUnsupported) => unsupported(&mut rep, "markov"),
            other => rep.extend(other?),
        }
        match verify_skein_random(&params, SKEIN_SAMPLES, 3, SEED, exec, max_dim) {
            Err(Error::EqualMNUnsupported) => unsupported(&mut rep, "skein"),
            other => rep.extend(other?),
        }
    }

    if json {
        let mut v = report_json(&rep);
        v["m"] = json!(m);
        v["n"] = json!(n);
        print_json(&v);
    } else {
        println!("{rep}");
    }
    Ok(if rep.all_passed() { 0 } else { 1 })
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Delta => "Delta",
        Side::DeltaPrime => "Delta'",
    }
}

pub fn simple_module(ell: u32, sign1: i8, lambda2: &str, json: bool) -> Result<u8> {
    let l2: RatFn = lambda2.parse()?;
    let hw = HighestWeightSL21::new(ell, sign1, l2)?;
    let (kind, dim) = atypicality_type(&hw);
    let l = simple_quotient(&verma_module(&hw))?;
    let rel = verify_relations(&l.rep, Exec::default());
    let labels: Vec<String> = l.labels.iter().map(ToString::to_string).collect();
    if json {
        let gens: serde_json::Map<String, Value> = l.rep.gens.iter().map(|(g, a)| (g.to_string(), matrix_json(a))).collect();
        print_json(&json!({
            "highest_weight": hw,
            "type": kind,
            "expected_dim": dim,
            "dim": l.dim(),
            "basis": labels,
            "relations_passed": rel.all_passed(),
            "action": gens,
        }));
    } else {
        println!("highest weight  lambda1 = {}, lambda2 = {}", hw.lambda1(), hw.lambda2);
        println!("type            {kind:?}");
        println!("dimension       {} (expected {dim})", l.dim());
        println!("basis           {}", labels.join(", "));
        println!("relations       {}", rel.to_string().lines().last().unwrap_or(""));
    }
    Ok(if rel.all_passed() && l.dim() == dim { 0 } else { 1 })
}

pub fn decompose(m: usize, n: usize, json: bool) -> Result<u8> {
    let params = GLParams::new(m, n)?;
    let b = build_bundle(&params);
    let (rep, spectrum) = verify_hecke_and_spectrum(&b)?;
    let v = natural_rep(&params);
    let vv = iterated_tensor(&v, 2, Side::Delta, usize::MAX)?;
    let hw: Vec<String> = highest_weight_vectors(&vv)?.into_iter().map(|(w, _)| w.to_string()).collect();
    if json {
        let mut out = report_json(&rep);
        out["eigenvalue q"] = json!(spectrum.sym);
        out["eigenvalue -q^-1"] = json!(spectrum.alt);
        out["highest_weights"] = json!(hw);
        print_json(&out);
    } else {
        println!("{rep}");
        println!("eigenvalue q       multiplicity {}", spectrum.sym);
        println!("eigenvalue -q^-1   multiplicity {}", spectrum.alt);
        println!("highest weights    {}", hw.join("; "));
    }
    Ok(if rep.all_passed() { 0 } else { 1 })
}

pub fn eval(m: usize, n: usize, expr: &str, rep: &str, side: SideArg, json: bool, max_dim: usize) -> Result<u8> {
    let params = GLParams::new(m, n)?;
    let e = parse_expr(expr, &params)?;
    let r = match rep {
        "natural" => 1,
        s => s
            .strip_prefix("tensor")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::InvalidParams(format!("unknown representation {s:?}; use natural or tensorK")))?,
    };
    let side = match side {
        SideArg::Delta => Side::Delta,
        SideArg::DeltaPrime => Side::DeltaPrime,
    };
    let t = iterated_tensor(&natural_rep(&params), r, side, max_dim)?;
    let a = t.eval(&e)?;
    if json {
        print_json(&json!({ "expr": e.to_string(), "rep": rep, "matrix": matrix_json(&a) }));
    } else {
        print!("{}", matrix_text(&a));
    }
    Ok(0)
}
