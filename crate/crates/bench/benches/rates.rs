use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use niba_bench::{fmo_dimer, pc645_dimer};
use niba_core::bath::re_u_at_rabi;
use niba_core::special::re_digamma_imaginary;
use niba_core::{
    compute_rates, compute_rates_with, evolve, CutoffTreatment, Duration, QuadratureControl,
    RatePath, Wavenumber,
};

fn special(c: &mut Criterion) {
    c.bench_function("re_digamma_imaginary(0.6)", |b| {
        b.iter(|| re_digamma_imaginary(black_box(0.6)))
    });
    c.bench_function("re_digamma_imaginary(20)", |b| {
        b.iter(|| re_digamma_imaginary(black_box(20.0)))
    });
}

fn principal_value(c: &mut Criterion) {
    let sys = pc645_dimer();
    let ctl = QuadratureControl::default();
    c.bench_function("re_u_at_rabi debye", |b| {
        b.iter(|| {
            re_u_at_rabi(
                sys.bath(),
                CutoffTreatment::Explicit,
                black_box(Wavenumber::new(644.0)),
                sys.temperature(),
                &ctl,
            )
        })
    });
}

fn rate_sets(c: &mut Criterion) {
    let fmo = fmo_dimer(77.0);
    let pc645 = pc645_dimer();
    c.bench_function("rates fmo closed form", |b| {
        b.iter(|| compute_rates(black_box(&fmo)))
    });
    c.bench_function("rates fmo quadrature", |b| {
        b.iter(|| compute_rates_with(black_box(&fmo), RatePath::quadrature()))
    });
    c.bench_function("rates pc645", |b| {
        b.iter(|| compute_rates(black_box(&pc645)))
    });
}

fn dynamics(c: &mut Criterion) {
    let fmo = fmo_dimer(77.0);
    let rates = compute_rates(&fmo).unwrap();
    c.bench_function("evolve 2048 samples", |b| {
        b.iter(|| evolve(black_box(&rates), &fmo, Duration::new(1000.0), 2048))
    });
}

criterion_group!(benches, special, principal_value, rate_sets, dynamics);
criterion_main!(benches);
