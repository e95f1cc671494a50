use niba_core::dynamics::population_difference;
use niba_core::{
    compute_rates, compute_rates_with, evolve, validate_regime, DimerSystem, Duration, RatePath,
    SpectralModel, Temperature, Wavenumber,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ohmic_dimer(eps: f64, delta: f64, lambda: f64, tau: f64, kelvin: f64) -> DimerSystem {
    let bath =
        SpectralModel::ohmic_from_lambda_tau(Wavenumber::new(lambda), Duration::new(tau)).unwrap();
    DimerSystem::new(
        Wavenumber::new(eps),
        Wavenumber::new(delta),
        Temperature::new(kelvin).unwrap(),
        bath,
    )
    .unwrap()
}

fn debye_dimer(eps: f64, delta: f64, lambda: f64, tau: f64, kelvin: f64) -> DimerSystem {
    let bath = SpectralModel::debye(Wavenumber::new(lambda), Duration::new(tau)).unwrap();
    DimerSystem::new(
        Wavenumber::new(eps),
        Wavenumber::new(delta),
        Temperature::new(kelvin).unwrap(),
        bath,
    )
    .unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn closed_form_and_quadrature_routes_agree() {
    let mut grid = Vec::new();
    for mask in 0..16u32 {
        let f = |bit: u32| if mask & (1 << bit) == 0 { 0.5 } else { 1.5 };
        let kelvin = if mask % 3 == 0 { 277.0 } else { 77.0 };
        grid.push(ohmic_dimer(
            75.0 * f(0),
            87.7 * f(1),
            35.0 * f(2),
            50.0 * f(3),
            kelvin,
        ));
    }
    for kelvin in [38.5, 77.0, 150.0, 277.0] {
        grid.push(ohmic_dimer(75.0, 87.7, 35.0, 50.0, kelvin));
    }
    assert_eq!(grid.len(), 20);
    for sys in &grid {
        let closed = compute_rates_with(sys, RatePath::ClosedForm).unwrap();
        let general = compute_rates_with(sys, RatePath::quadrature()).unwrap();
        assert!(rel(general.rabi.cm1(), closed.rabi.cm1()) < 1e-6, "{sys:?}");
        assert!(
            rel(general.relaxation.cm1(), closed.relaxation.cm1()) < 1e-12,
            "{sys:?}"
        );
        assert!(
            rel(general.decoherence.cm1(), closed.decoherence.cm1()) < 1e-12,
            "{sys:?}"
        );
    }
}

fn sweep_is_monotone(delta: f64) {
    let base = ohmic_dimer(75.0, delta, 35.0, 50.0, 77.0);
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=90 {
        let ratio = 0.05 + 0.01 * i as f64;
        let sys = base
            .with_bias(Wavenumber::new(ratio * 2.0 * delta))
            .unwrap();
        let r = compute_rates(&sys).unwrap();
        let (tr, td) = (
            r.relaxation_time().unwrap().fs(),
            r.decoherence_time().unwrap().fs(),
        );
        if let Some((ptr, ptd)) = prev {
            assert!(tr > ptr, "relaxation time not increasing at ratio {ratio}");
            assert!(td < ptd, "decoherence time not decreasing at ratio {ratio}");
        }
        prev = Some((tr, td));
    }
}

#[test]
fn larger_bias_ratio_shortens_dephasing() {
    sweep_is_monotone(87.7);
    sweep_is_monotone(35.0);
}

#[test]
fn decoherence_bounded_below_by_half_relaxation() {
    for eps in [0.0, 1.0, 30.0, 75.0, 150.0] {
        for kelvin in [20.0, 77.0, 277.0] {
            let r = compute_rates(&ohmic_dimer(eps, 87.7, 35.0, 50.0, kelvin)).unwrap();
            let half = 0.5 * r.relaxation.cm1();
            if eps == 0.0 {
                assert_eq!(r.decoherence.cm1(), half);
            } else {
                assert!(r.decoherence.cm1() > half);
            }
            assert!(r.delta_b >= r.delta_eff && r.delta_b.cm1() >= eps);
        }
    }
}

fn random_in_regime(rng: &mut ChaCha8Rng) -> DimerSystem {
    loop {
        let delta = rng.gen_range(20.0..400.0);
        let eps = rng.gen_range(0.05..0.95) * 2.0 * delta;
        let kelvin = rng.gen_range(10.0..400.0);
        let tau = rng.gen_range(20.0..120.0);
        let lambda = rng.gen_range(5.0..150.0);
        let bath = if rng.gen_bool(0.5) {
            SpectralModel::ohmic_from_lambda_tau(Wavenumber::new(lambda), Duration::new(tau))
        } else {
            SpectralModel::debye(Wavenumber::new(lambda), Duration::new(tau))
        };
        let Ok(bath) = bath else { continue };
        let sys = DimerSystem::new(
            Wavenumber::new(eps),
            Wavenumber::new(delta),
            Temperature::new(kelvin).unwrap(),
            bath,
        )
        .unwrap();
        if matches!(validate_regime(&sys), Ok(f) if f.all_ok()) {
            return sys;
        }
    }
}

#[test]
fn trajectories_stay_physical() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..100 {
        let sys = random_in_regime(&mut rng);
        let rates = compute_rates(&sys).unwrap();
        let traj = evolve(&rates, &sys, Duration::new(2000.0), 4000).unwrap();
        assert_eq!(traj.population_difference[0], 1.0);
        for i in 0..traj.len() {
            let p = traj.population_difference[i];
            assert!(p.abs() <= 1.0, "|P| = {p} > 1 for {sys:?}");
            assert_eq!(traj.rho1[i] + traj.rho2[i], 1.0);
            assert!((0.0..=1.0).contains(&traj.rho1[i]));
            assert!((traj.rho1[i] - traj.rho2[i] - p).abs() < 1e-15);
        }
    }
}

#[test]
fn trajectory_is_deterministic() {
    let sys = debye_dimer(82.0, 319.4, 130.0, 50.0, 294.0);
    let rates = compute_rates(&sys).unwrap();
    let a = evolve(&rates, &sys, Duration::new(1000.0), 2048).unwrap();
    let b = evolve(&rates, &sys, Duration::new(1000.0), 2048).unwrap();
    assert_eq!(a, b);
    assert_eq!(population_difference(&rates, &sys, 0.0), 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rates_scale_with_energy_units(s in 0.2f64..5.0, debye in any::<bool>()) {
        let build = |f: f64| {
            if debye {
                debye_dimer(82.0 * f, 319.4 * f, 130.0 * f, 50.0 / f, 294.0 * f)
            } else {
                ohmic_dimer(75.0 * f, 87.7 * f, 35.0 * f, 50.0 / f, 77.0 * f)
            }
        };
        let base = compute_rates(&build(1.0)).unwrap();
        let scaled = compute_rates(&build(s)).unwrap();
        prop_assert!(rel(scaled.rabi.cm1(), s * base.rabi.cm1()) < 1e-8);
        prop_assert!(rel(scaled.relaxation.cm1(), s * base.relaxation.cm1()) < 1e-9);
        prop_assert!(rel(scaled.decoherence.cm1(), s * base.decoherence.cm1()) < 1e-9);
    }
}
