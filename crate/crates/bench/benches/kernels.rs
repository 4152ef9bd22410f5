use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fsq_core::contour::{contour_integral, FSQ_BRANCH};
use fsq_core::fourier::{plancherel_pair, Gaussian, GridSpec, PairingKernel};
use fsq_core::kernels::{cauchy_kernel, f_kernel};
use fsq_core::{CliffordElement, Contour, Form, ImaginaryUnit, IntegralKind, Paravector, Side, SliceStem};
use num_complex::Complex64;

fn point(n: usize, x0: f64, step: f64) -> Paravector {
    Paravector::new(x0, (1..=n).map(|j| step * j as f64).collect())
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("product");
    for n in [2usize, 4, 8] {
        let dim = 1 << n;
        let make = |phase: f64| {
            let coeffs = (0..dim).map(|k| Complex64::new((k as f64 + phase).sin(), (k as f64 * phase).cos())).collect();
            CliffordElement::from_coeffs(n, coeffs).unwrap()
        };
        let (a, b) = (make(0.3), make(1.7));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(&a).product(black_box(&b)).unwrap())
        });
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    for n in [2usize, 3, 5] {
        let s = point(n, 1.5, 0.3);
        let x = point(n, -0.2, 0.1);
        group.bench_with_input(BenchmarkId::new("Sinv-II", n), &n, |bench, _| {
            bench.iter(|| cauchy_kernel(black_box(&s), black_box(&x), Form::II, Side::Left).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("Fn", n), &n, |bench, &n| {
            bench.iter(|| f_kernel(black_box(&s), black_box(&x), n, Side::Left).unwrap())
        });
    }
    group.finish();
}

fn contours(c: &mut Criterion) {
    let mut group = c.benchmark_group("contour");
    for n in [2usize, 3] {
        let stem = SliceStem::monomial(n, 3).unwrap();
        let ct = Contour::new(0.0, 2.0, ImaginaryUnit::axis(n, 1).unwrap(), 256).unwrap();
        let x = point(n, 0.2, 0.1);
        group.bench_with_input(BenchmarkId::new("fsq-256", n), &n, |bench, _| {
            bench.iter(|| contour_integral(&stem, black_box(&x), &ct, IntegralKind::Fsq(FSQ_BRANCH), Side::Left, false).unwrap())
        });
    }
    group.finish();
}

fn pairing(c: &mut Criterion) {
    let mut group = c.benchmark_group("plancherel");
    group.sample_size(10);
    let grid = GridSpec::new(20.0, 256, 2).unwrap();
    let test = Gaussian::new(vec![0.3, -0.5], 1.5).unwrap();
    group.bench_function("n1-N256", |bench| {
        bench.iter(|| plancherel_pair(PairingKernel::Sinv, 1.0, 1, &test, &grid, false).unwrap())
    });
    group.finish();
}

criterion_group!(benches, products, kernels, contours, pairing);
criterion_main!(benches);
