use criterion::{criterion_group, criterion_main, Criterion};
use nilorb::classical::{self, ClassicalAlgebra};
use nilorb::{sl3, Partition};

fn divisibility(c: &mut Criterion) {
    let algs = [
        ClassicalAlgebra::sl(13),
        ClassicalAlgebra::sp(12),
        ClassicalAlgebra::so(13),
    ];
    c.bench_function("criterion/N=13", |b| {
        b.iter(|| {
            algs.iter()
                .flat_map(|a| {
                    classical::valid_partitions(a)
                        .into_iter()
                        .map(move |p| (a, p))
                })
                .filter(|(a, p)| {
                    !p.is_zero_orbit() && classical::is_divisible_partition(a, p).unwrap()
                })
                .count()
        })
    });
    let so13 = ClassicalAlgebra::so(13);
    let p: Partition = "5,3,3,1,1".parse().unwrap();
    c.bench_function("brute force/so13 5,3,3,1,1", |b| {
        b.iter(|| classical::divisible_by_diagrams(&so13, &p))
    });
}

fn construction(c: &mut Criterion) {
    let so = ClassicalAlgebra::so(13);
    let p: Partition = "5,3,3,1,1".parse().unwrap();
    c.bench_function("e2/so13 5,3,3,1,1", |b| {
        b.iter(|| {
            let t = classical::build_triple(&so, &p).unwrap();
            let e2 = classical::build_e2(&so, &p, &t).unwrap();
            classical::verify_e2(&t, &e2).unwrap()
        })
    });
}

fn branching(c: &mut Criterion) {
    c.bench_function("sl3/profiles a,b <= 10", |b| {
        b.iter(|| {
            (0..=10)
                .flat_map(|a| (0..=10).map(move |b| sl3::branching_profile(a, b)))
                .count()
        })
    });
}

criterion_group!(benches, divisibility, construction, branching);
criterion_main!(benches);
