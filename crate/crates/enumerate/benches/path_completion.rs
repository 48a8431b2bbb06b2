use criterion::{criterion_group, criterion_main, Criterion};
use enumerate::{invariants, invariants_seq};
use lattice::parse_preset;

fn bench_cubic_counts(c: &mut Criterion) {
    let cubic = parse_preset("degree:3").unwrap();
    let mut group = c.benchmark_group("cubic-genus0");
    group.bench_function("parallel", |b| b.iter(|| invariants(&cubic, 0).unwrap()));
    group.bench_function("sequential", |b| {
        b.iter(|| invariants_seq(&cubic, 0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_cubic_counts);
criterion_main!(benches);
