use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use airystable::airy::{airy_frac, airy_odd, classical_airy_series};
use airystable::density::{subordinated_density, SubordinationParams};
use airystable::special::{subordinator_density, wright, WrightParams};

fn airy_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("airy_frac");
    for x in [-4.0, 0.5, 4.0] {
        group.bench_with_input(BenchmarkId::new("alpha=2.5", x), &x, |b, &x| {
            b.iter(|| airy_frac(black_box(2.5), black_box(x)).unwrap())
        });
    }
    group.finish();
    c.bench_function("airy_odd n=2 x=1.5", |b| {
        b.iter(|| airy_odd(black_box(2), black_box(1.5)).unwrap())
    });
    c.bench_function("classical_airy_series z=-3", |b| {
        b.iter(|| classical_airy_series(black_box(-3.0)).unwrap())
    });
}

fn densities(c: &mut Criterion) {
    let p = SubordinationParams::new(5.081_864_856_954_861, 0.295_167_235_300_866_6).unwrap();
    c.bench_function("subordinated_density stable nu=1.5 x=1", |b| {
        b.iter(|| subordinated_density(&p, black_box(1.0), 1.0).unwrap())
    });
    let w = WrightParams::new(-0.5, 0.5).unwrap();
    c.bench_function("wright(-1/2,1/2) z=-2", |b| {
        b.iter(|| wright(&w, black_box(-2.0)).unwrap())
    });
    c.bench_function("subordinator_density theta=0.7 x=1", |b| {
        b.iter(|| subordinator_density(0.7, black_box(1.0), 1.0).unwrap())
    });
}

criterion_group!(benches, airy_series, densities);
criterion_main!(benches);
