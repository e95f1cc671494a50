//! Unit newtypes and the handful of conversions between spectroscopic
//! wavenumbers, angular frequencies and femtosecond timescales.

use std::f64::consts::PI;
use std::fmt;

use crate::{Error, Result};

/// Speed of light in m/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// k_B/(hc) in cm⁻¹ per kelvin.
pub const BOLTZMANN_WAVENUMBER: f64 = 0.695_034_80;

/// Speed of light in cm/s; multiplies a wavenumber to give an ordinary frequency.
const C_CM_PER_S: f64 = SPEED_OF_LIGHT * 100.0;

const FS_PER_S: f64 = 1e15;

/// Spectral energy, frequency or rate in cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Wavenumber(f64);

impl Wavenumber {
    pub const ZERO: Wavenumber = Wavenumber(0.0);

    pub const fn new(cm1: f64) -> Self {
        Wavenumber(cm1)
    }

    pub const fn cm1(self) -> f64 {
        self.0
    }

    /// Converts an angular frequency in rad/s.
    pub fn from_angular(rad_per_s: f64) -> Self {
        Wavenumber(rad_per_s / (2.0 * PI * C_CM_PER_S))
    }
}

impl fmt::Display for Wavenumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cm^-1", self.0)
    }
}

/// A time in femtoseconds.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Duration(f64);

impl Duration {
    pub const fn new(fs: f64) -> Self {
        Duration(fs)
    }

    pub const fn fs(self) -> f64 {
        self.0
    }

    pub fn seconds(self) -> f64 {
        self.0 / FS_PER_S
    }
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fs", self.0)
    }
}

/// Absolute temperature in kelvin, always strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(kelvin: f64) -> Result<Self> {
        if kelvin.is_finite() && kelvin > 0.0 {
            Ok(Temperature(kelvin))
        } else {
            Err(Error::domain("temperature", kelvin, "finite and > 0 K"))
        }
    }

    /// The temperature whose thermal energy k_B·T equals `energy`.
    pub fn from_thermal_wavenumber(energy: Wavenumber) -> Result<Self> {
        Temperature::new(energy.cm1() / BOLTZMANN_WAVENUMBER)
    }

    pub const fn kelvin(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Temperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} K", self.0)
    }
}

/// Angular frequency 2π·c·ν in rad/s.
pub fn angular_frequency(nu: Wavenumber) -> f64 {
    2.0 * PI * C_CM_PER_S * nu.cm1()
}

/// Thermal energy k_B·T in cm⁻¹.
pub fn thermal_wavenumber(t: Temperature) -> Wavenumber {
    Wavenumber(BOLTZMANN_WAVENUMBER * t.kelvin())
}

/// Lifetime 1/γ of a rate quoted in cm⁻¹ (interpreted as an angular rate).
pub fn rate_to_lifetime(rate: Wavenumber) -> Result<Duration> {
    if !(rate.cm1() > 0.0) || !rate.cm1().is_finite() {
        return Err(Error::domain("rate", rate.cm1(), "finite and > 0 cm^-1"));
    }
    Ok(Duration(FS_PER_S / angular_frequency(rate)))
}

/// Inverse of [`rate_to_lifetime`].
pub fn lifetime_to_rate(lifetime: Duration) -> Result<Wavenumber> {
    if !(lifetime.fs() > 0.0) || !lifetime.fs().is_finite() {
        return Err(Error::domain(
            "lifetime",
            lifetime.fs(),
            "finite and > 0 fs",
        ));
    }
    Ok(Wavenumber(
        FS_PER_S / (2.0 * PI * C_CM_PER_S * lifetime.fs()),
    ))
}

/// Oscillation period 2π/Ω of a Rabi frequency in cm⁻¹.
pub fn period_from_rabi(rabi: Wavenumber) -> Result<Duration> {
    let lifetime = rate_to_lifetime(rabi)?;
    Ok(Duration(2.0 * PI * lifetime.fs()))
}
