//! Fixture systems shared by the criterion benches.

use niba_core::{DimerSystem, Duration, SpectralModel, Temperature, Wavenumber};

pub fn fmo_dimer(kelvin: f64) -> DimerSystem {
    let bath = SpectralModel::ohmic_from_lambda_tau(Wavenumber::new(35.0), Duration::new(50.0))
        .expect("valid FMO bath");
    DimerSystem::new(
        Wavenumber::new(75.0),
        Wavenumber::new(87.7),
        Temperature::new(kelvin).expect("positive temperature"),
        bath,
    )
    .expect("valid FMO dimer")
}

pub fn pc645_dimer() -> DimerSystem {
    let bath = SpectralModel::debye(Wavenumber::new(130.0), Duration::new(50.0))
        .expect("valid PC645 bath");
    DimerSystem::new(
        Wavenumber::new(82.0),
        Wavenumber::new(319.4),
        Temperature::new(294.0).expect("positive temperature"),
        bath,
    )
    .expect("valid PC645 dimer")
}
