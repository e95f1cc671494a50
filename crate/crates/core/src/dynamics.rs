//! Population dynamics of the two single-excitation states, starting with
//! the excitation fully on site 1.
//!
//! P(t) = ⟨σ_z⟩(t) has an incoherent channel relaxing at γ_r toward the
//! thermal value P_∞ and a coherent channel oscillating at Ω and decaying
//! at γ:
//!
//! P(t) = P_∞ + (ε²/Δ_b² − P_∞)·e^{−γ_r t}
//!        + (Δ_eff²/Δ_b²)·e^{−γt}·[cos Ωt + (γ/Ω) sin Ωt]
//!
//! so that P(0) = 1, since Δ_eff² + ε² = Δ_b².
//!
//! with P_∞ = −(ε/Δ_b)·tanh(ℏΔ_b/2k_BT).

use crate::rates::{DimerSystem, RateSet};
use crate::units::{angular_frequency, rate_to_lifetime, thermal_wavenumber, Duration};
use crate::{Error, Result};

/// Uniform time grid with ⟨σ_z⟩ and the two site populations.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub time_fs: Vec<f64>,
    pub population_difference: Vec<f64>,
    pub rho1: Vec<f64>,
    pub rho2: Vec<f64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.time_fs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.time_fs.is_empty()
    }
}

/// Thermal equilibrium of ⟨σ_z⟩; negative because site 1 is the upper site.
pub fn equilibrium_population(rates: &RateSet, system: &DimerSystem) -> f64 {
    let db = rates.delta_b.cm1();
    let kt = thermal_wavenumber(system.temperature()).cm1();
    -(system.bias().cm1() / db) * (db / (2.0 * kt)).tanh()
}

/// ⟨σ_z⟩ at time `t_fs`.
pub fn population_difference(rates: &RateSet, system: &DimerSystem, t_fs: f64) -> f64 {
    let db = rates.delta_b.cm1();
    let incoherent_weight = (system.bias().cm1() / db).powi(2);
    // Δ_eff²/Δ_b², written so the two weights sum to exactly one
    let coherent_weight = 1.0 - incoherent_weight;
    let p_inf = equilibrium_population(rates, system);

    let t = t_fs * 1e-15;
    let gamma_r = angular_frequency(rates.relaxation);
    let gamma = angular_frequency(rates.decoherence);
    let omega = angular_frequency(rates.rabi);
    let phase = omega * t;

    incoherent_weight
        + coherent_weight * (-gamma * t).exp() * (phase.cos() + (gamma / omega) * phase.sin())
        + (incoherent_weight - p_inf) * (-gamma_r * t).exp_m1()
}

/// Samples the population dynamics on `n_samples` uniform points in [0, t_max].
pub fn evolve(
    rates: &RateSet,
    system: &DimerSystem,
    t_max: Duration,
    n_samples: usize,
) -> Result<Trajectory> {
    if n_samples < 2 {
        return Err(Error::domain("samples", n_samples as f64, ">= 2"));
    }
    if !(t_max.fs() > 0.0) || !t_max.fs().is_finite() {
        return Err(Error::domain("t_max", t_max.fs(), "finite and > 0 fs"));
    }
    if !(rates.rabi.cm1() > 0.0) {
        return Err(Error::domain(
            "Rabi frequency",
            rates.rabi.cm1(),
            "> 0 cm^-1",
        ));
    }
    let step = t_max.fs() / (n_samples - 1) as f64;
    let mut traj = Trajectory {
        time_fs: Vec::with_capacity(n_samples),
        population_difference: Vec::with_capacity(n_samples),
        rho1: Vec::with_capacity(n_samples),
        rho2: Vec::with_capacity(n_samples),
    };
    for i in 0..n_samples {
        let t = i as f64 * step;
        let p = population_difference(rates, system, t);
        let rho1 = 0.5 * (1.0 + p);
        traj.time_fs.push(t);
        traj.population_difference.push(p);
        traj.rho1.push(rho1);
        traj.rho2.push(1.0 - rho1);
    }
    Ok(traj)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistenceReport {
    pub threshold: f64,
    pub persistence: Duration,
}

/// Latest time at which the coherent envelope
/// (Δ_eff²/Δ_b²)·e^{−γt}·√(1 + (γ/Ω)²) is still at or above `threshold`.
pub fn persistence(rates: &RateSet, threshold: f64) -> Result<PersistenceReport> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::domain("threshold", threshold, "in (0, 1)"));
    }
    let ratio = rates.decoherence.cm1() / rates.rabi.cm1();
    let amplitude = (rates.delta_eff.cm1() / rates.delta_b.cm1()).powi(2) * ratio.hypot(1.0);
    let decay_time = rate_to_lifetime(rates.decoherence)?;
    let t = (amplitude / threshold).ln() * decay_time.fs();
    Ok(PersistenceReport {
        threshold,
        persistence: Duration::new(t.max(0.0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{compute_rates, SpectralModel, Temperature, Wavenumber};

    fn fmo(t: f64) -> DimerSystem {
        let bath = SpectralModel::ohmic_from_lambda_tau(Wavenumber::new(35.0), Duration::new(50.0))
            .unwrap();
        DimerSystem::new(
            Wavenumber::new(75.0),
            Wavenumber::new(87.7),
            Temperature::new(t).unwrap(),
            bath,
        )
        .unwrap()
    }

    #[test]
    fn starts_on_site_one() {
        let sys = fmo(77.0);
        let rates = compute_rates(&sys).unwrap();
        let traj = evolve(&rates, &sys, Duration::new(1000.0), 2048).unwrap();
        assert_eq!(traj.population_difference[0], 1.0);
        assert_eq!(traj.rho1[0], 1.0);
        assert_eq!(traj.rho2[0], 0.0);
        assert_eq!(traj.len(), 2048);
        assert_eq!(*traj.time_fs.last().unwrap(), 1000.0);
    }

    #[test]
    fn populations_sum_to_one() {
        let sys = fmo(277.0);
        let rates = compute_rates(&sys).unwrap();
        let traj = evolve(&rates, &sys, Duration::new(1000.0), 3001).unwrap();
        for (a, b) in traj.rho1.iter().zip(&traj.rho2) {
            assert_eq!(a + b, 1.0);
        }
    }

    #[test]
    fn relaxes_to_thermal_value() {
        let sys = fmo(77.0);
        let rates = compute_rates(&sys).unwrap();
        let p_inf = equilibrium_population(&rates, &sys);
        assert!(p_inf < 0.0);
        assert!((population_difference(&rates, &sys, 1e5) - p_inf).abs() < 1e-12);
    }

    #[test]
    fn undamped_limit_is_biased_rabi_oscillation() {
        let sys = fmo(77.0);
        let mut rates = compute_rates(&sys).unwrap();
        rates.relaxation = Wavenumber::ZERO;
        rates.decoherence = Wavenumber::ZERO;
        let db2 = rates.delta_b.cm1().powi(2);
        let omega = angular_frequency(rates.rabi);
        for i in 0..50 {
            let t = i as f64 * 37.0;
            let want = 75.0f64.powi(2) / db2
                + rates.delta_eff.cm1().powi(2) / db2 * (omega * t * 1e-15).cos();
            assert!((population_difference(&rates, &sys, t) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn initial_slope_from_incoherent_channel() {
        let sys = fmo(77.0);
        let rates = compute_rates(&sys).unwrap();
        let h = 1e-3;
        let numeric = (population_difference(&rates, &sys, h)
            - population_difference(&rates, &sys, -h))
            / (2.0 * h);
        let weight = (75.0 / rates.delta_b.cm1()).powi(2);
        let analytic = -angular_frequency(rates.relaxation)
            * 1e-15
            * (weight - equilibrium_population(&rates, &sys));
        assert!(
            ((numeric - analytic) / analytic).abs() < 1e-6,
            "{numeric} vs {analytic}"
        );
    }

    #[test]
    fn rejects_bad_grids() {
        let sys = fmo(77.0);
        let rates = compute_rates(&sys).unwrap();
        assert!(evolve(&rates, &sys, Duration::new(100.0), 1).is_err());
        assert!(evolve(&rates, &sys, Duration::new(0.0), 10).is_err());
        assert!(evolve(&rates, &sys, Duration::new(-5.0), 10).is_err());
    }

    #[test]
    fn persistence_fmo() {
        let r77 = compute_rates(&fmo(77.0)).unwrap();
        let t = persistence(&r77, 0.015).unwrap().persistence.fs();
        assert!((t - 600.0).abs() < 30.0, "{t}");
        let r277 = compute_rates(&fmo(277.0)).unwrap();
        let t = persistence(&r277, 0.011).unwrap().persistence.fs();
        assert!((t - 300.0).abs() < 15.0, "{t}");
    }

    #[test]
    fn persistence_edge_cases() {
        let r = compute_rates(&fmo(77.0)).unwrap();
        assert_eq!(persistence(&r, 0.999).unwrap().persistence.fs(), 0.0);
        assert!(persistence(&r, 0.0).is_err());
        assert!(persistence(&r, 1.0).is_err());

        let mut prev = f64::INFINITY;
        for i in 1..100 {
            let t = persistence(&r, i as f64 * 0.01).unwrap().persistence.fs();
            assert!(t <= prev);
            prev = t;
        }
        let mut faster = r;
        faster.decoherence = Wavenumber::new(r.decoherence.cm1() * 1.5);
        assert!(
            persistence(&faster, 0.02).unwrap().persistence.fs()
                < persistence(&r, 0.02).unwrap().persistence.fs()
        );
    }
}
