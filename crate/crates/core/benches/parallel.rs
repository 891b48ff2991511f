//! Sequential vs rayon evaluation of the transform and the table searches.
//!
//! `cargo bench -p rrseq-core --bench parallel`

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rrseq_core::catalog::SeqSpec;
use rrseq_core::engine::{find_c_n, rr_family, table2_min_k};
use rrseq_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn transform(c: &mut Criterion) {
    let mut g = c.benchmark_group("rr_transform");
    g.sample_size(10);
    for (spec, n) in [(SeqSpec::Primes, 200), (SeqSpec::Power { k: 50 }, 120)] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("{spec} n={n}")), &n, |b, &n| {
                b.iter(|| rr_family(&spec, n, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "c_10"), |b| b.iter(|| find_c_n(10, None, 200, exec)));
        g.bench_function(BenchmarkId::new(name, "table2 n=12"), |b| b.iter(|| table2_min_k(12, 100, exec)));
    }
    g.finish();
}

criterion_group!(benches, transform, searches);
criterion_main!(benches);
