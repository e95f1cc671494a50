//! Bath spectral densities, the noise power S(ω), and the principal-value
//! integral Re u(iΔ_b) entering the general Rabi-frequency expression.

use std::f64::consts::PI;

use crate::quadrature;
use crate::special::{coth_guarded, coth_minus_one};
use crate::units::{angular_frequency, thermal_wavenumber, Duration, Temperature, Wavenumber};
use crate::{Error, Result};

/// Bath description, fully characterized by its spectral density J(ω).
///
/// Build through the constructors, which enforce the parameter windows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralModel {
    /// J(ω) = 2Kω·exp(−ω/ω_c).
    OhmicExp { damping: f64, cutoff: Wavenumber },
    /// J(ω) = 2λ·ωτ/(1 + (ωτ)²), with ωτ taken in angular units.
    Debye {
        reorganization: Wavenumber,
        relaxation: Duration,
    },
}

/// How the Ohmic cutoff enters the general (quadrature) rate expressions.
///
/// The closed-form Ohmic rates fold all ω_c dependence into the renormalized
/// tunneling Δ_eff and then treat the bath in the scaling limit J(ω) = 2Kω.
/// `ScalingLimit` evaluates the quadrature route with that same density;
/// `Explicit` keeps the exponential factor. Debye baths ignore this setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutoffTreatment {
    #[default]
    ScalingLimit,
    Explicit,
}

impl SpectralModel {
    pub fn ohmic(damping: f64, cutoff: Wavenumber) -> Result<Self> {
        if !(damping > 0.0 && damping < 0.5) {
            return Err(Error::CouplingOutOfRange { k: damping });
        }
        if !(cutoff.cm1() > 0.0) || !cutoff.cm1().is_finite() {
            return Err(Error::domain(
                "omega_c",
                cutoff.cm1(),
                "finite and > 0 cm^-1",
            ));
        }
        Ok(SpectralModel::OhmicExp { damping, cutoff })
    }

    /// Ohmic bath from reorganization energy λ = 2Kω_c and phonon relaxation
    /// time τ = π/(2ω_c).
    pub fn ohmic_from_lambda_tau(lambda: Wavenumber, tau: Duration) -> Result<Self> {
        check_lambda_tau(lambda, tau)?;
        let cutoff = Wavenumber::from_angular(PI / (2.0 * tau.seconds()));
        let damping = lambda.cm1() / (2.0 * cutoff.cm1());
        SpectralModel::ohmic(damping, cutoff)
    }

    pub fn debye(reorganization: Wavenumber, relaxation: Duration) -> Result<Self> {
        check_lambda_tau(reorganization, relaxation)?;
        Ok(SpectralModel::Debye {
            reorganization,
            relaxation,
        })
    }

    pub fn reorganization_energy(&self) -> Wavenumber {
        match *self {
            SpectralModel::OhmicExp { damping, cutoff } => {
                Wavenumber::new(2.0 * damping * cutoff.cm1())
            }
            SpectralModel::Debye { reorganization, .. } => reorganization,
        }
    }

    /// ω_c for Ohmic baths; the Drude cutoff 1/τ for Debye baths.
    pub fn cutoff_frequency(&self) -> Wavenumber {
        match *self {
            SpectralModel::OhmicExp { cutoff, .. } => cutoff,
            SpectralModel::Debye { relaxation, .. } => {
                Wavenumber::from_angular(1.0 / relaxation.seconds())
            }
        }
    }

    /// K for Ohmic baths. For Debye baths, the K of the Ohmic bath with the
    /// same λ and relaxation time, λτ/π. Used for regime diagnostics only.
    pub fn damping_equivalent(&self) -> f64 {
        match *self {
            SpectralModel::OhmicExp { damping, .. } => damping,
            SpectralModel::Debye {
                reorganization,
                relaxation,
            } => angular_frequency(reorganization) * relaxation.seconds() / PI,
        }
    }

    /// dJ/dω at ω = 0 (dimensionless); bounds J(ω) ≤ slope·ω for both models.
    fn low_frequency_slope(&self) -> f64 {
        match *self {
            SpectralModel::OhmicExp { damping, .. } => 2.0 * damping,
            SpectralModel::Debye {
                reorganization,
                relaxation,
            } => {
                2.0 * reorganization.cm1()
                    * angular_frequency(Wavenumber::new(1.0))
                    * relaxation.seconds()
            }
        }
    }

    fn density(&self, cutoff: CutoffTreatment, omega: f64) -> f64 {
        match *self {
            SpectralModel::OhmicExp {
                damping,
                cutoff: wc,
            } => match cutoff {
                CutoffTreatment::ScalingLimit => 2.0 * damping * omega,
                CutoffTreatment::Explicit => 2.0 * damping * omega * (-omega / wc.cm1()).exp(),
            },
            SpectralModel::Debye {
                reorganization,
                relaxation,
            } => {
                let x = angular_frequency(Wavenumber::new(omega)) * relaxation.seconds();
                2.0 * reorganization.cm1() * x / (1.0 + x * x)
            }
        }
    }
}

fn check_lambda_tau(lambda: Wavenumber, tau: Duration) -> Result<()> {
    if !(lambda.cm1() > 0.0) || !lambda.cm1().is_finite() {
        return Err(Error::domain(
            "lambda",
            lambda.cm1(),
            "finite and > 0 cm^-1",
        ));
    }
    if !(tau.fs() > 0.0) || !tau.fs().is_finite() {
        return Err(Error::domain("tau", tau.fs(), "finite and > 0 fs"));
    }
    Ok(())
}

fn check_frequency(omega: Wavenumber) -> Result<f64> {
    let w = omega.cm1();
    if w >= 0.0 && w.is_finite() {
        Ok(w)
    } else {
        Err(Error::domain("omega", w, "finite and >= 0 cm^-1"))
    }
}

/// J(ω), with the Ohmic cutoff applied explicitly.
pub fn j_omega(model: &SpectralModel, omega: Wavenumber) -> Result<Wavenumber> {
    spectral_density(model, CutoffTreatment::Explicit, omega)
}

pub fn spectral_density(
    model: &SpectralModel,
    cutoff: CutoffTreatment,
    omega: Wavenumber,
) -> Result<Wavenumber> {
    let w = check_frequency(omega)?;
    Ok(Wavenumber::new(model.density(cutoff, w)))
}

/// S(ω) = J(ω)·coth(ℏω/2k_BT), with the Ohmic cutoff applied explicitly.
pub fn noise_power(model: &SpectralModel, omega: Wavenumber, t: Temperature) -> Result<Wavenumber> {
    noise_power_with(model, CutoffTreatment::Explicit, omega, t)
}

/// S(ω) with the ω = 0 value given by its analytic limit 2·J'(0)·k_BT.
pub fn noise_power_with(
    model: &SpectralModel,
    cutoff: CutoffTreatment,
    omega: Wavenumber,
    t: Temperature,
) -> Result<Wavenumber> {
    let w = check_frequency(omega)?;
    let kt = thermal_wavenumber(t).cm1();
    if w == 0.0 {
        return Ok(Wavenumber::new(2.0 * model.low_frequency_slope() * kt));
    }
    let j = model.density(cutoff, w);
    Ok(Wavenumber::new(j * coth_guarded(w / (2.0 * kt))?))
}

/// Tolerances and panel budget for the principal-value quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureControl {
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
}

impl QuadratureControl {
    pub fn new(abs_tol: f64, rel_tol: f64, max_panels: usize) -> Result<Self> {
        for (name, tol) in [("abs_tol", abs_tol), ("rel_tol", rel_tol)] {
            if !(tol > 0.0 && tol <= 1e-6) {
                return Err(Error::domain(name, tol, "in (0, 1e-6]"));
            }
        }
        if max_panels < 1000 {
            return Err(Error::domain("max_panels", max_panels as f64, ">= 1000"));
        }
        Ok(QuadratureControl {
            abs_tol,
            rel_tol,
            max_panels,
        })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_panels(&self) -> usize {
        self.max_panels
    }
}

impl Default for QuadratureControl {
    fn default() -> Self {
        QuadratureControl {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_panels: 4000,
        }
    }
}

/// Re u(iΔ_b) = ½·PV∫₀^∞ dω g(ω)/(ω² − Δ_b²), g(ω) = J(ω)(coth(ℏω/2k_BT) − 1).
///
/// The pole is removed by subtracting g(Δ_b): since PV∫₀^∞ dω/(ω² − Δ_b²) = 0
/// the remaining integrand is regular and needs no correction term. The
/// interval is split at Δ_b and cut at W, chosen so the bound on the neglected
/// ∫_W^∞ g/(ω² − Δ_b²) is below tolerance; the subtracted constant's tail
/// beyond W is added in closed form.
pub fn re_u_at_rabi(
    model: &SpectralModel,
    cutoff: CutoffTreatment,
    delta_b: Wavenumber,
    t: Temperature,
    ctl: &QuadratureControl,
) -> Result<f64> {
    let a = delta_b.cm1();
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("Delta_b", a, "finite and > 0 cm^-1"));
    }
    let kt = thermal_wavenumber(t).cm1();
    let slope = model.low_frequency_slope();

    let g = |w: f64| {
        if w <= 0.0 {
            slope * 2.0 * kt
        } else {
            model.density(cutoff, w) * coth_minus_one(w / (2.0 * kt))
        }
    };
    let ga = g(a);
    let h = |w: f64| {
        let d = w - a;
        if d.abs() <= 1e-12 * a {
            // removable point: the limit is g'(a)/(2a)
            let step = 1e-5 * a;
            (g(a + step) - g(a - step)) / (2.0 * step) / (2.0 * a)
        } else {
            (g(w) - ga) / (d * (w + a))
        }
    };

    let piece_tol = 0.25 * ctl.abs_tol;
    let tail_bound = |w: f64| {
        let decay = (-w / kt).exp();
        8.0 / 3.0 * slope * kt * decay / (w * (1.0 - decay))
    };
    let mut upper = 2.0 * a;
    while tail_bound(upper) > piece_tol {
        upper += 5.0 * kt;
    }

    let below = quadrature::integrate(h, 0.0, a, piece_tol, ctl.rel_tol, ctl.max_panels)?;
    let above = quadrature::integrate(h, a, upper, piece_tol, ctl.rel_tol, ctl.max_panels)?;
    let constant_tail = -ga * ((upper + a) / (upper - a)).ln() / (2.0 * a);

    Ok(0.5 * (below.value + above.value + constant_tail))
}
