//! The three reports: rate table, population trajectory, bias-ratio sweep.
//!
//! CSV output carries no timestamps; provenance goes on `#`-prefixed lines
//! above the column header, so identical inputs give identical bytes.

use std::io::Write;

use niba_core::rates::compute_rates_with;
use niba_core::units::{period_from_rabi, rate_to_lifetime};
use niba_core::{
    evolve, naive_estimates, persistence, thermal_wavenumber, DimerSystem, NaiveEstimates,
    PersistenceReport, RatePath, RateSet, RegimeFlags, SpectralModel, Wavenumber,
};

use crate::{CliError, Setup, Status};

fn status_of(flags: &RegimeFlags) -> Status {
    if flags.all_ok() {
        Status::Ok
    } else {
        Status::RegimeWarning
    }
}

fn rates_for(setup: &Setup, system: &DimerSystem) -> Result<RateSet, CliError> {
    let path = match RatePath::default_for(system.bath()) {
        RatePath::Quadrature { cutoff, .. } => RatePath::Quadrature {
            control: setup.control,
            cutoff,
        },
        closed => closed,
    };
    Ok(compute_rates_with(system, path)?)
}

fn naive_for(system: &DimerSystem) -> Result<NaiveEstimates, CliError> {
    let bath = system.bath();
    Ok(naive_estimates(
        bath.reorganization_energy(),
        bath.cutoff_frequency(),
        system.temperature(),
    )?)
}

pub fn describe_bath(bath: &SpectralModel) -> String {
    match *bath {
        SpectralModel::OhmicExp { damping, cutoff } => {
            format!("ohmic K={damping:.6} omega_c_cm1={:.6}", cutoff.cm1())
        }
        SpectralModel::Debye {
            reorganization,
            relaxation,
        } => format!(
            "debye lambda_cm1={} tau_fs={}",
            reorganization.cm1(),
            relaxation.fs()
        ),
    }
}

/// Dimensionless characterization of the system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ratios {
    /// ε/2Δ
    pub bias_over_tunneling: f64,
    /// K, or λτ/π for a Debye bath
    pub damping: f64,
    /// 2Δ/ω_c
    pub tunneling_over_cutoff: f64,
    /// 2Δ/k_BT
    pub tunneling_over_thermal: f64,
}

impl Ratios {
    pub fn of(system: &DimerSystem) -> Self {
        let tunneling = system.tunneling().cm1();
        Ratios {
            bias_over_tunneling: system.bias().cm1() / tunneling,
            damping: system.bath().damping_equivalent(),
            tunneling_over_cutoff: tunneling / system.bath().cutoff_frequency().cm1(),
            tunneling_over_thermal: tunneling / thermal_wavenumber(system.temperature()).cm1(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatesReport {
    pub system: DimerSystem,
    pub rates: RateSet,
    pub naive: NaiveEstimates,
    pub ratios: Ratios,
    pub persistence: PersistenceReport,
}

pub fn rates_report(setup: &Setup) -> Result<RatesReport, CliError> {
    let rates = rates_for(setup, &setup.system)?;
    Ok(RatesReport {
        system: setup.system,
        rates,
        naive: naive_for(&setup.system)?,
        ratios: Ratios::of(&setup.system),
        persistence: persistence(&rates, setup.threshold)?,
    })
}

impl RatesReport {
    pub fn status(&self) -> Status {
        status_of(&self.rates.flags)
    }

    fn rows(&self) -> Result<Vec<(&'static str, f64, &'static str)>, CliError> {
        let r = &self.rates;
        let flag = |ok: bool| if ok { 1.0 } else { 0.0 };
        Ok(vec![
            ("epsilon", self.system.bias().cm1(), "cm^-1"),
            ("delta", self.system.coupling().cm1(), "cm^-1"),
            ("temperature", self.system.temperature().kelvin(), "K"),
            ("eps_over_2delta", self.ratios.bias_over_tunneling, "1"),
            ("damping_K", self.ratios.damping, "1"),
            (
                "two_delta_over_omega_c",
                self.ratios.tunneling_over_cutoff,
                "1",
            ),
            ("two_delta_over_kT", self.ratios.tunneling_over_thermal, "1"),
            ("delta_eff", r.delta_eff.cm1(), "cm^-1"),
            ("delta_b", r.delta_b.cm1(), "cm^-1"),
            ("T_b", r.crossover.kelvin(), "K"),
            ("omega", r.rabi.cm1(), "cm^-1"),
            ("rabi_period", period_from_rabi(r.rabi)?.fs(), "fs"),
            ("gamma_r", r.relaxation.cm1(), "cm^-1"),
            ("gamma_r_inv", rate_to_lifetime(r.relaxation)?.fs(), "fs"),
            ("gamma", r.decoherence.cm1(), "cm^-1"),
            ("gamma_inv", rate_to_lifetime(r.decoherence)?.fs(), "fs"),
            ("tau_G", self.naive.tau_g.fs(), "fs"),
            ("gamma_phi", self.naive.gamma_phi.cm1(), "cm^-1"),
            (
                "gamma_phi_inv",
                rate_to_lifetime(self.naive.gamma_phi)?.fs(),
                "fs",
            ),
            ("persistence_threshold", self.persistence.threshold, "1"),
            ("persistence", self.persistence.persistence.fs(), "fs"),
            ("bias_ratio_ok", flag(r.flags.bias_ratio_ok), "bool"),
            (
                "low_temperature_ok",
                flag(r.flags.low_temperature_ok),
                "bool",
            ),
            ("weak_coupling_ok", flag(r.flags.weak_coupling_ok), "bool"),
        ])
    }

    pub fn write_table<W: Write>(&self, out: &mut W) -> Result<(), CliError> {
        writeln!(out, "bath: {}", describe_bath(self.system.bath()))?;
        for (name, value, unit) in self.rows()? {
            if unit == "bool" {
                let verdict = if value == 1.0 { "ok" } else { "VIOLATED" };
                writeln!(out, "{name:<24} {verdict}")?;
            } else {
                writeln!(out, "{name:<24} {value:>14.6} {unit}")?;
            }
        }
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, out: &mut W) -> Result<(), CliError> {
        writeln!(
            out,
            "# niba rates; bath: {}",
            describe_bath(self.system.bath())
        )?;
        writeln!(out, "quantity,value,unit")?;
        for (name, value, unit) in self.rows()? {
            writeln!(out, "{name},{value:.9},{unit}")?;
        }
        Ok(())
    }
}

/// Writes the population trajectory; columns `t_fs,P,rho1,rho2`.
pub fn write_dynamics<W: Write>(setup: &Setup, out: &mut W) -> Result<Status, CliError> {
    let system = &setup.system;
    let rates = rates_for(setup, system)?;
    let traj = evolve(&rates, system, setup.t_max, setup.samples)?;
    let coherence = persistence(&rates, setup.threshold)?;

    writeln!(
        out,
        "# niba dynamics; epsilon_cm1={} delta_cm1={} temperature_K={} bath: {}",
        system.bias().cm1(),
        system.coupling().cm1(),
        system.temperature().kelvin(),
        describe_bath(system.bath())
    )?;
    writeln!(
        out,
        "# rates: delta_eff_cm1={:.9} delta_b_cm1={:.9} T_b_K={:.6} omega_cm1={:.9} gamma_r_cm1={:.9} gamma_cm1={:.9}",
        rates.delta_eff.cm1(),
        rates.delta_b.cm1(),
        rates.crossover.kelvin(),
        rates.rabi.cm1(),
        rates.relaxation.cm1(),
        rates.decoherence.cm1()
    )?;
    writeln!(
        out,
        "# persistence_fs={:.3} at threshold {}",
        coherence.persistence.fs(),
        coherence.threshold
    )?;
    writeln!(out, "t_fs,P,rho1,rho2")?;
    for i in 0..traj.len() {
        writeln!(
            out,
            "{:.6},{:.12},{:.12},{:.12}",
            traj.time_fs[i], traj.population_difference[i], traj.rho1[i], traj.rho2[i]
        )?;
    }
    Ok(status_of(&rates.flags))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub points: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            ratio_min: 0.05,
            ratio_max: 0.95,
            points: 19,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub eps_over_2delta: f64,
    pub gamma_r_inv_fs: f64,
    pub gamma_inv_fs: f64,
    pub gamma_phi_inv_fs: f64,
    pub tau_g_fs: f64,
    pub flags: RegimeFlags,
}

/// Relaxation and decoherence times as ε/2Δ varies with Δ, bath and T fixed.
pub fn sweep(setup: &Setup, spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    let SweepSpec {
        ratio_min,
        ratio_max,
        points,
    } = *spec;
    if !(0.0 < ratio_min && ratio_min < ratio_max && ratio_max < 1.0) {
        return Err(CliError::Invalid {
            field: "ratio range".into(),
            constraint: format!("must satisfy 0 < min < max < 1 (got {ratio_min}..{ratio_max})"),
        });
    }
    if points < 2 {
        return Err(CliError::Invalid {
            field: "ratio points".into(),
            constraint: "must be >= 2".into(),
        });
    }
    let naive = naive_for(&setup.system)?;
    let tunneling = setup.system.tunneling().cm1();
    let step = (ratio_max - ratio_min) / (points - 1) as f64;

    (0..points)
        .map(|i| {
            let ratio = ratio_min + step * i as f64;
            let system = setup.system.with_bias(Wavenumber::new(ratio * tunneling))?;
            let rates = rates_for(setup, &system)?;
            Ok(SweepRow {
                eps_over_2delta: ratio,
                gamma_r_inv_fs: rate_to_lifetime(rates.relaxation)?.fs(),
                gamma_inv_fs: rate_to_lifetime(rates.decoherence)?.fs(),
                gamma_phi_inv_fs: rate_to_lifetime(naive.gamma_phi)?.fs(),
                tau_g_fs: naive.tau_g.fs(),
                flags: rates.flags,
            })
        })
        .collect()
}

pub fn write_sweep<W: Write>(
    setup: &Setup,
    spec: &SweepSpec,
    out: &mut W,
) -> Result<Status, CliError> {
    let rows = sweep(setup, spec)?;
    let system = &setup.system;
    writeln!(
        out,
        "# niba sweep; delta_cm1={} temperature_K={} bath: {}",
        system.coupling().cm1(),
        system.temperature().kelvin(),
        describe_bath(system.bath())
    )?;
    writeln!(
        out,
        "eps_over_2delta,gamma_r_inv_fs,gamma_inv_fs,gamma_phi_inv_fs,tau_G_fs"
    )?;
    let mut status = Status::Ok;
    for row in &rows {
        writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6}",
            row.eps_over_2delta,
            row.gamma_r_inv_fs,
            row.gamma_inv_fs,
            row.gamma_phi_inv_fs,
            row.tau_g_fs
        )?;
        if status_of(&row.flags) != Status::Ok {
            status = Status::RegimeWarning;
        }
    }
    Ok(status)
}
