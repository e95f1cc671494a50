use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{name} must be {constraint}, got {value}")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// Bath parameters outside the window where the rate expressions exist.
    #[error("damping strength K = {k} is outside (0, 0.5); the renormalized tunneling diverges")]
    CouplingOutOfRange { k: f64 },

    #[error(
        "site 1 must be the higher-energy site (eps1 = {eps1} cm^-1, eps2 = {eps2} cm^-1); swap the site labels"
    )]
    SiteOrder { eps1: f64, eps2: f64 },

    #[error("quadrature did not converge within {panels} panels (estimated error {achieved:e}, requested {requested:e})")]
    Quadrature {
        panels: usize,
        achieved: f64,
        requested: f64,
    },

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("renormalized Rabi frequency is not real (Omega^2 = {0} cm^-2)")]
    ImaginaryRabi(f64),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            constraint,
        }
    }
}
