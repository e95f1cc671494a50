//! Coherence observables for a two-chromophore excitonic dimer coupled to a
//! harmonic bath, in the enhanced non-interacting blip approximation.
//!
//! All energies, frequencies and rates are carried in cm⁻¹ ([`Wavenumber`]);
//! times are femtoseconds ([`Duration`]). Conversion to rad/s only happens
//! where a product with a physical time is needed.
//!
//! ```
//! use niba_core::{compute_rates, period_from_rabi, rate_to_lifetime};
//! use niba_core::{DimerSystem, SpectralModel, Temperature, Wavenumber, Duration};
//!
//! let bath = SpectralModel::ohmic_from_lambda_tau(Wavenumber::new(35.0), Duration::new(50.0))?;
//! let fmo = DimerSystem::new(
//!     Wavenumber::new(75.0),
//!     Wavenumber::new(87.7),
//!     Temperature::new(77.0)?,
//!     bath,
//! )?;
//! let rates = compute_rates(&fmo)?;
//! assert!((period_from_rabi(rates.rabi)?.fs() - 163.0).abs() < 5.0);
//! assert!((rate_to_lifetime(rates.decoherence)?.fs() - 153.0).abs() < 5.0);
//! # Ok::<(), niba_core::Error>(())
//! ```

// Domain checks are written as `!(x > 0.0)` so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bath;
pub mod dynamics;
mod error;
pub mod quadrature;
pub mod rates;
pub mod special;
pub mod units;

pub use bath::{CutoffTreatment, QuadratureControl, SpectralModel};
pub use dynamics::{evolve, persistence, PersistenceReport, Trajectory};
pub use error::{Error, Result};
pub use rates::{
    compute_rates, compute_rates_with, crossover_temperature, decoherence_rate,
    effective_tunneling, naive_estimates, rabi_frequency, reduce_sites, relaxation_rate,
    validate_regime, DimerSystem, NaiveEstimates, RatePath, RateSet, RegimeFlags, SiteParams,
};
pub use units::{
    angular_frequency, lifetime_to_rate, period_from_rabi, rate_to_lifetime, thermal_wavenumber,
    Duration, Temperature, Wavenumber,
};
