use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nilorb::orbits::{enumerate_orbits, is_characteristic};
use nilorb::SearchConfig;
use nilorb_bench::{algebra, diagram};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("chevalley");
    for t in ["G2", "F4", "E6", "E7"] {
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, t| {
            b.iter(|| algebra(t))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for t in ["G2", "B4", "F4", "E6"] {
        let g = algebra(t);
        group.bench_function(t, |b| b.iter(|| enumerate_orbits(&g, &cfg)));
    }
    group.finish();
}

fn characteristic(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let g = algebra("E7");
    let valid = diagram("E7", "2,0,0,2,0,2,0");
    let invalid = diagram("E7", "2,1,0,0,0,0,1");
    c.bench_function("characteristic/E7 valid", |b| {
        b.iter(|| is_characteristic(&g, &valid, &cfg))
    });
    c.bench_function("characteristic/E7 invalid", |b| {
        b.iter(|| is_characteristic(&g, &invalid, &cfg))
    });
}

criterion_group!(benches, construction, enumeration, characteristic);
criterion_main!(benches);
