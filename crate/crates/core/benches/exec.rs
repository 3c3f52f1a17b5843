use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use degenq::expr::Side;
use degenq::invariant::{braid_qtrace, BraidWord};
use degenq::rep::{iterated_tensor, natural_rep, verify_relations, DEFAULT_MAX_DIM};
use degenq::{Exec, GLParams};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("relations");
    group.sample_size(10);
    for (m, n) in [(2, 1), (3, 1)] {
        let v = natural_rep(&GLParams::new(m, n).unwrap());
        let v3 = iterated_tensor(&v, 3, Side::Delta, DEFAULT_MAX_DIM).unwrap();
        for (name, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(name, format!("({m},{n}) V^3")), &v3, |b, rep| {
                b.iter(|| verify_relations(black_box(rep), exec))
            });
        }
    }
    group.finish();
}

fn traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("braid_qtrace");
    group.sample_size(10);
    let word = BraidWord::parse("1 -2 3 2 -1 3 2 -3", None).unwrap();
    for (m, n) in [(2, 1), (3, 1)] {
        let params = GLParams::new(m, n).unwrap();
        for (name, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(name, format!("({m},{n}) B4")), &word, |b, w| {
                b.iter(|| braid_qtrace(black_box(w), &params, exec, DEFAULT_MAX_DIM).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, relations, traces);
criterion_main!(benches);
