use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use std::f64::consts::FRAC_PI_3;

use rofrft::{
    fractional_convolve, kernel, rofrft_fast, rofrft_quadrature, ConvolutionPair,
    FractionalAngle, UniformGrid,
};
use rofrft_bench::{chirp, gaussian};

fn bench_kernel(c: &mut Criterion) {
    let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
    c.bench_function("kernel_eval", |b| {
        b.iter(|| kernel(angle, black_box(1.7), black_box(-0.9)))
    });
}

fn bench_fast(c: &mut Criterion) {
    let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
    let mut group = c.benchmark_group("rofrft_fast");
    for &n in &[1 << 12, 1 << 14, 1 << 16] {
        let x = chirp(50.0, n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| rofrft_fast(black_box(x), angle))
        });
    }
    group.finish();
}

fn bench_quadrature(c: &mut Criterion) {
    let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
    let mut group = c.benchmark_group("rofrft_quadrature");
    group.sample_size(10);
    for &n in &[512usize, 2048] {
        let x = gaussian(20.0, n);
        let u_grid = UniformGrid::new(-8.0, 16.0 / n as f64, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| rofrft_quadrature(black_box(x), angle, u_grid))
        });
    }
    group.finish();
}

fn bench_convolve(c: &mut Criterion) {
    let angle = FractionalAngle::new(FRAC_PI_3).unwrap();
    let mut group = c.benchmark_group("fractional_convolve");
    group.sample_size(10);
    for &n in &[512usize, 2048] {
        let f = gaussian(16.0, n);
        let g = gaussian(16.0, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            let pair = ConvolutionPair::new(&f, &g, angle).unwrap();
            b.iter(|| fractional_convolve(black_box(&pair)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_kernel, bench_fast, bench_quadrature, bench_convolve);
criterion_main!(benches);
