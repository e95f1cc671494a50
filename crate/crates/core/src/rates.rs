//! Renormalized tunneling, crossover temperature, and the Rabi frequency,
//! relaxation rate and decoherence rate of the biased dimer.
//!
//! Two evaluation routes exist. The closed-form route uses the Ohmic
//! expressions built on Re ψ; the quadrature route evaluates the expressions
//! valid for a general J(ω). Debye baths only have the quadrature route.

use std::f64::consts::PI;

use crate::bath::{
    noise_power_with, re_u_at_rabi, CutoffTreatment, QuadratureControl, SpectralModel,
};
use crate::special::{coth_guarded, gamma_real, re_digamma_imaginary};
use crate::units::{rate_to_lifetime, thermal_wavenumber, Duration, Temperature, Wavenumber};
use crate::{Error, Result};

/// Raw two-chromophore parameters: site energies and the inter-site coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiteParams {
    pub eps1: Wavenumber,
    pub eps2: Wavenumber,
    pub coupling: Wavenumber,
}

/// Maps site energies onto the bias ε = ε₁ − ε₂ of the single-excitation
/// two-level system; the coupling Δ passes through unchanged.
pub fn reduce_sites(sites: &SiteParams) -> Result<(Wavenumber, Wavenumber)> {
    let (e1, e2) = (sites.eps1.cm1(), sites.eps2.cm1());
    if e1 < e2 {
        return Err(Error::SiteOrder { eps1: e1, eps2: e2 });
    }
    if !(sites.coupling.cm1() > 0.0) {
        return Err(Error::domain(
            "coupling Delta",
            sites.coupling.cm1(),
            "> 0 cm^-1",
        ));
    }
    Ok((Wavenumber::new(e1 - e2), sites.coupling))
}

/// Effective two-level system: bias ε ≥ 0, coupling Δ > 0 (the bare
/// tunneling between the two single-excitation states is Δ̃ = 2Δ),
/// temperature and bath.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimerSystem {
    bias: Wavenumber,
    coupling: Wavenumber,
    temperature: Temperature,
    bath: SpectralModel,
}

impl DimerSystem {
    pub fn new(
        bias: Wavenumber,
        coupling: Wavenumber,
        temperature: Temperature,
        bath: SpectralModel,
    ) -> Result<Self> {
        if !(bias.cm1() >= 0.0) || !bias.cm1().is_finite() {
            return Err(Error::domain(
                "bias epsilon",
                bias.cm1(),
                "finite and >= 0 cm^-1 (label the higher-energy site as site 1)",
            ));
        }
        if !(coupling.cm1() > 0.0) || !coupling.cm1().is_finite() {
            return Err(Error::domain(
                "coupling Delta",
                coupling.cm1(),
                "finite and > 0 cm^-1",
            ));
        }
        Ok(DimerSystem {
            bias,
            coupling,
            temperature,
            bath,
        })
    }

    pub fn from_sites(
        sites: &SiteParams,
        temperature: Temperature,
        bath: SpectralModel,
    ) -> Result<Self> {
        let (bias, coupling) = reduce_sites(sites)?;
        DimerSystem::new(bias, coupling, temperature, bath)
    }

    pub fn bias(&self) -> Wavenumber {
        self.bias
    }

    pub fn coupling(&self) -> Wavenumber {
        self.coupling
    }

    /// Δ̃ = 2Δ.
    pub fn tunneling(&self) -> Wavenumber {
        Wavenumber::new(2.0 * self.coupling.cm1())
    }

    pub fn temperature(&self) -> Temperature {
        self.temperature
    }

    pub fn bath(&self) -> &SpectralModel {
        &self.bath
    }

    pub fn with_bias(self, bias: Wavenumber) -> Result<Self> {
        DimerSystem::new(bias, self.coupling, self.temperature, self.bath)
    }

    pub fn with_temperature(self, temperature: Temperature) -> Self {
        DimerSystem {
            temperature,
            ..self
        }
    }
}

/// Which expressions evaluate Ω and γ_r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatePath {
    /// Ohmic closed forms in terms of Re ψ and coth.
    ClosedForm,
    /// General-J(ω) forms with the principal-value quadrature.
    Quadrature {
        control: QuadratureControl,
        cutoff: CutoffTreatment,
    },
}

impl RatePath {
    pub fn quadrature() -> Self {
        RatePath::Quadrature {
            control: QuadratureControl::default(),
            cutoff: CutoffTreatment::default(),
        }
    }

    /// Closed form for Ohmic baths, quadrature otherwise.
    pub fn default_for(bath: &SpectralModel) -> Self {
        match bath {
            SpectralModel::OhmicExp { .. } => RatePath::ClosedForm,
            SpectralModel::Debye { .. } => RatePath::quadrature(),
        }
    }
}

/// Validity annotations. They never stop a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeFlags {
    /// ε/Δ̃ < 1.
    pub bias_ratio_ok: bool,
    /// T < T_b.
    pub low_temperature_ok: bool,
    /// K (or its Debye equivalent) below [`WEAK_COUPLING_LIMIT`].
    pub weak_coupling_ok: bool,
}

impl RegimeFlags {
    pub fn all_ok(&self) -> bool {
        self.bias_ratio_ok && self.low_temperature_ok && self.weak_coupling_ok
    }
}

/// Upper bound on K (or λτ/π for Debye baths) for the weak-coupling flag.
pub const WEAK_COUPLING_LIMIT: f64 = 0.5;

/// All derived quantities for one system. Rates are angular, in cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSet {
    pub delta_eff: Wavenumber,
    pub delta_b: Wavenumber,
    pub crossover: Temperature,
    pub rabi: Wavenumber,
    pub relaxation: Wavenumber,
    pub decoherence: Wavenumber,
    pub flags: RegimeFlags,
}

impl RateSet {
    pub fn rabi_period(&self) -> Result<Duration> {
        crate::units::period_from_rabi(self.rabi)
    }

    pub fn relaxation_time(&self) -> Result<Duration> {
        rate_to_lifetime(self.relaxation)
    }

    pub fn decoherence_time(&self) -> Result<Duration> {
        rate_to_lifetime(self.decoherence)
    }
}

/// Δ_eff = [Γ(1−2K)cos(πK)]^{1/(2(1−K))}·(Δ̃/ω_c)^{K/(1−K)}·Δ̃ for Ohmic
/// baths. Debye baths carry no adiabatic renormalization: Δ_eff = Δ̃.
pub fn effective_tunneling(system: &DimerSystem) -> Result<Wavenumber> {
    let bare = system.tunneling().cm1();
    match *system.bath() {
        SpectralModel::OhmicExp { damping: k, cutoff } => {
            if !(k > 0.0 && k < 0.5) {
                return Err(Error::CouplingOutOfRange { k });
            }
            let prefactor = gamma_real(1.0 - 2.0 * k)? * (PI * k).cos();
            let renorm =
                prefactor.powf(1.0 / (2.0 * (1.0 - k))) * (bare / cutoff.cm1()).powf(k / (1.0 - k));
            Ok(Wavenumber::new(renorm * bare))
        }
        SpectralModel::Debye { .. } => Ok(Wavenumber::new(bare)),
    }
}

/// Δ_b = √(Δ_eff² + ε²).
pub fn renormalized_splitting(system: &DimerSystem, delta_eff: Wavenumber) -> Wavenumber {
    Wavenumber::new(delta_eff.cm1().hypot(system.bias().cm1()))
}

/// T_b = ℏΔ_b/k_B, the crossover between the low- and high-temperature regimes.
pub fn crossover_temperature(system: &DimerSystem) -> Result<Temperature> {
    let delta_eff = effective_tunneling(system)?;
    Temperature::from_thermal_wavenumber(renormalized_splitting(system, delta_eff))
}

/// Renormalized Rabi frequency Ω.
pub fn rabi_frequency(
    system: &DimerSystem,
    delta_eff: Wavenumber,
    path: RatePath,
) -> Result<Wavenumber> {
    let de = delta_eff.cm1();
    let eps = system.bias().cm1();
    let db = renormalized_splitting(system, delta_eff);
    let kt = thermal_wavenumber(system.temperature()).cm1();

    let omega_sq = match path {
        RatePath::ClosedForm => {
            let k = ohmic_damping(system.bath())?;
            let y = db.cm1() / (2.0 * PI * kt);
            db.cm1().powi(2) + 2.0 * k * de * de * (re_digamma_imaginary(y)? - y.ln())
        }
        RatePath::Quadrature { control, cutoff } => {
            let re_u = re_u_at_rabi(system.bath(), cutoff, db, system.temperature(), &control)?;
            de * de * (1.0 - 2.0 * re_u) + eps * eps
        }
    };
    if !(omega_sq > 0.0) {
        return Err(Error::ImaginaryRabi(omega_sq));
    }
    Ok(Wavenumber::new(omega_sq.sqrt()))
}

/// Relaxation rate γ_r of the incoherent population channel.
pub fn relaxation_rate(
    system: &DimerSystem,
    delta_eff: Wavenumber,
    path: RatePath,
) -> Result<Wavenumber> {
    let de = delta_eff.cm1();
    let db = renormalized_splitting(system, delta_eff);
    let kt = thermal_wavenumber(system.temperature()).cm1();

    let rate = match path {
        RatePath::ClosedForm => {
            let k = ohmic_damping(system.bath())?;
            PI * k * coth_guarded(db.cm1() / (2.0 * kt))? * de * de / db.cm1()
        }
        RatePath::Quadrature { cutoff, .. } => {
            let s = noise_power_with(system.bath(), cutoff, db, system.temperature())?;
            0.5 * PI * (de / db.cm1()).powi(2) * s.cm1()
        }
    };
    Ok(Wavenumber::new(rate))
}

/// Decoherence rate γ = γ_r/2 + (π/2)(ε²/Δ_b²)·S(0).
///
/// For Ohmic baths S(0) = 4K·k_BT, which gives γ_r/2 + 2πK(ε²/Δ_b²)k_BT.
pub fn decoherence_rate(
    system: &DimerSystem,
    delta_eff: Wavenumber,
    relaxation: Wavenumber,
) -> Result<Wavenumber> {
    let eps = system.bias().cm1();
    let db = renormalized_splitting(system, delta_eff).cm1();
    let s0 = noise_power_with(
        system.bath(),
        CutoffTreatment::Explicit,
        Wavenumber::ZERO,
        system.temperature(),
    )?;
    Ok(Wavenumber::new(
        0.5 * relaxation.cm1() + 0.5 * PI * (eps * eps) / (db * db) * s0.cm1(),
    ))
}

fn ohmic_damping(bath: &SpectralModel) -> Result<f64> {
    match *bath {
        SpectralModel::OhmicExp { damping, .. } => Ok(damping),
        SpectralModel::Debye { .. } => Err(Error::Unsupported(
            "closed-form rates exist only for Ohmic baths; use the quadrature path",
        )),
    }
}

pub fn validate_regime(system: &DimerSystem) -> Result<RegimeFlags> {
    let crossover = crossover_temperature(system)?;
    Ok(RegimeFlags {
        bias_ratio_ok: system.bias().cm1() / system.tunneling().cm1() < 1.0,
        low_temperature_ok: system.temperature().kelvin() < crossover.kelvin(),
        weak_coupling_ok: system.bath().damping_equivalent() < WEAK_COUPLING_LIMIT,
    })
}

/// Rates with the default route for the bath type.
pub fn compute_rates(system: &DimerSystem) -> Result<RateSet> {
    compute_rates_with(system, RatePath::default_for(system.bath()))
}

pub fn compute_rates_with(system: &DimerSystem, path: RatePath) -> Result<RateSet> {
    let delta_eff = effective_tunneling(system)?;
    let delta_b = renormalized_splitting(system, delta_eff);
    let rabi = rabi_frequency(system, delta_eff, path)?;
    let relaxation = relaxation_rate(system, delta_eff, path)?;
    let decoherence = decoherence_rate(system, delta_eff, relaxation)?;
    Ok(RateSet {
        delta_eff,
        delta_b,
        crossover: Temperature::from_thermal_wavenumber(delta_b)?,
        rabi,
        relaxation,
        decoherence,
        flags: validate_regime(system)?,
    })
}

/// High-temperature estimates: the Gaussian dephasing time
/// τ_G = √(ℏ²/2λk_BT) and the rate γ_φ = 2π(k_BT/ℏ)·λ/(ℏω_c).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaiveEstimates {
    pub tau_g: Duration,
    pub gamma_phi: Wavenumber,
}

pub fn naive_estimates(
    lambda: Wavenumber,
    cutoff: Wavenumber,
    t: Temperature,
) -> Result<NaiveEstimates> {
    if !(lambda.cm1() > 0.0) {
        return Err(Error::domain("lambda", lambda.cm1(), "> 0 cm^-1"));
    }
    if !(cutoff.cm1() > 0.0) {
        return Err(Error::domain("omega_c", cutoff.cm1(), "> 0 cm^-1"));
    }
    let kt = thermal_wavenumber(t).cm1();
    Ok(NaiveEstimates {
        tau_g: rate_to_lifetime(Wavenumber::new((2.0 * lambda.cm1() * kt).sqrt()))?,
        gamma_phi: Wavenumber::new(2.0 * PI * kt * lambda.cm1() / cutoff.cm1()),
    })
}
