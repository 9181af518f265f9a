//! Benchmarks for the hot paths: asymmetry bisection, the minimal-cover
//! LP, the exact planar separability sweep, and the rational segment
//! cover.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use nonsep_core::asymmetry::minkowski_sigma;
use nonsep_core::covering::minimal_cover;
use nonsep_core::generators::{gen_sharp_simplex, gen_touching_chain, random_polygon};
use nonsep_core::geometry::{vec2, ConvexBody};
use nonsep_core::intervals::{goodman_segment_cover, rat, WeightedInterval};
use nonsep_core::separability::{check_nonseparable, CheckMode};

fn bench_sigma(c: &mut Criterion) {
    let octagon = random_polygon(7, 8).unwrap();
    c.bench_function("minkowski_sigma random octagon", |b| {
        b.iter(|| minkowski_sigma(black_box(&octagon)))
    });
}

fn bench_minimal_cover(c: &mut Criterion) {
    let family = gen_sharp_simplex(2, 10).unwrap().family;
    c.bench_function("minimal_cover sharp d=2 N=10", |b| {
        b.iter(|| minimal_cover(black_box(&family)))
    });
}

fn bench_exact_2d(c: &mut Criterion) {
    let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
    let scales: Vec<f64> = (0..8).map(|i| 0.5 + 0.25 * i as f64).collect();
    let family = gen_touching_chain(&disk, 8, &scales, 7).unwrap();
    c.bench_function("check_nonseparable exact-2d 8-chain", |b| {
        b.iter(|| check_nonseparable(black_box(&family), &CheckMode::Exact2d))
    });
}

fn bench_segment_cover(c: &mut Criterion) {
    // 200 overlapping rational segments with small denominators.
    let intervals: Vec<WeightedInterval> = (0..200)
        .map(|i| {
            let lo = rat(2 * i, 3);
            let hi = rat(2 * i + 4, 3);
            WeightedInterval::new(lo, hi).unwrap()
        })
        .collect();
    c.bench_function("goodman_segment_cover 200 segments", |b| {
        b.iter(|| goodman_segment_cover(black_box(&intervals)))
    });
}

criterion_group!(
    benches,
    bench_sigma,
    bench_minimal_cover,
    bench_exact_2d,
    bench_segment_cover
);
criterion_main!(benches);
