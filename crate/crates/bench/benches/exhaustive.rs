use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use motzkin_bench::{nonlevel_paths, strip_tableaux};
use motzkin_core::axioms::{run_suite, Suite};
use motzkin_core::paths::{enumerate_paths, shift};
use motzkin_core::tableaux::{cyclic_descent_set_3row, promotion, rectify};
use motzkin_core::StepOrder;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_paths");
    for n in [8, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_paths(n).count())
        });
    }
    group.finish();
}

fn path_statistics(c: &mut Criterion) {
    let paths = nonlevel_paths(10);
    let mut group = c.benchmark_group("paths_n10");
    for order in StepOrder::ALL {
        group.bench_function(BenchmarkId::new("cdes", order), |b| {
            b.iter(|| {
                for m in &paths {
                    black_box(m.cyclic_descent_set(order).unwrap());
                }
            })
        });
        group.bench_function(BenchmarkId::new("shift", order), |b| {
            b.iter(|| {
                for m in &paths {
                    black_box(shift(m, order).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn tableaux(c: &mut Criterion) {
    let family: Vec<_> = strip_tableaux(10)
        .into_iter()
        .filter(|t| t.shape().as_strip().is_some_and(|(_, k)| k > 0))
        .collect();
    let mut group = c.benchmark_group("strip_tableaux_n10");
    group.bench_function("promotion", |b| {
        b.iter(|| {
            for t in &family {
                black_box(promotion(t));
            }
        })
    });
    group.bench_function("cdes_3row", |b| {
        b.iter(|| {
            for t in &family {
                black_box(cyclic_descent_set_3row(t).unwrap());
            }
        })
    });
    group.bench_function("rectify", |b| {
        b.iter(|| {
            for t in &family {
                black_box(rectify(t));
            }
        })
    });
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites_3_to_8");
    group.sample_size(10);
    for suite in [Suite::Axioms, Suite::Commutation, Suite::Equidist] {
        group.bench_function(suite.as_str(), |b| b.iter(|| run_suite(suite, 3, 8)));
    }
    group.finish();
}

criterion_group!(benches, enumeration, path_statistics, tableaux, suites);
criterion_main!(benches);
