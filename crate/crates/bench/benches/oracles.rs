use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use airystable::density::{mc_subordinated_density, SubordinationParams};
use airystable::oracles::{airy_frac_quadrature, cms_stable_samples, subordinated_fourier_density};
use airystable::{QuadratureConfig, StableParams};

fn quadrature(c: &mut Criterion) {
    let cfg = QuadratureConfig::default();
    c.bench_function("airy_frac_quadrature alpha=2.5 x=-4", |b| {
        b.iter(|| airy_frac_quadrature(2.5, black_box(-4.0), &cfg).unwrap())
    });
    c.bench_function("airy_frac_quadrature alpha=1.5 x=-30 (saddle path)", |b| {
        b.iter(|| airy_frac_quadrature(1.5, black_box(-30.0), &cfg).unwrap())
    });
    let p = SubordinationParams::new(3.0, 0.5).unwrap();
    c.bench_function("subordinated_fourier_density (3, 0.5) x=2", |b| {
        b.iter(|| subordinated_fourier_density(&p, black_box(2.0), 1.0, &cfg).unwrap())
    });
}

fn monte_carlo(c: &mut Criterion) {
    let mut group = c.benchmark_group("monte_carlo");
    group.sample_size(10);
    let p = SubordinationParams::new(3.0, 0.9).unwrap();
    group.bench_function("mc_subordinated_density 1e5", |b| {
        b.iter(|| mc_subordinated_density(&p, black_box(1.0), 1.0, 100_000, 1).unwrap())
    });
    let s = StableParams::new(1.5, 0.5, 1.0, 0.0).unwrap();
    group.bench_function("cms_stable_samples 1e5", |b| {
        b.iter(|| cms_stable_samples(&s, 1.0, black_box(100_000), 1).unwrap())
    });
    group.finish();
}

criterion_group!(benches, quadrature, monte_carlo);
criterion_main!(benches);
