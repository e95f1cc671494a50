//! Run configuration: a TOML document with `system`, `bath`, `output` and
//! `numeric` tables. Unknown keys are rejected.

use std::fs;
use std::path::{Path, PathBuf};

use niba_core::{
    DimerSystem, Duration, QuadratureControl, SiteParams, SpectralModel, Temperature, Wavenumber,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub system: SystemBlock,
    pub bath: BathBlock,
    #[serde(default, skip_serializing_if = "OutputBlock::is_default")]
    pub output: OutputBlock,
    #[serde(default)]
    pub numeric: NumericBlock,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_cm1: Option<f64>,
    /// [site 1, site 2]; site 1 must be the higher-energy site.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub site_energies_cm1: Option<[f64; 2]>,
    pub delta_cm1: f64,
    #[serde(rename = "temperature_K")]
    pub temperature_k: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BathKind {
    Ohmic,
    Debye,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathBlock {
    #[serde(rename = "type")]
    pub kind: BathKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_cm1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_fs: Option<f64>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub damping: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_c_cm1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

impl OutputBlock {
    fn is_default(&self) -> bool {
        *self == OutputBlock::default()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NumericBlock {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
    pub samples: usize,
    pub t_max_fs: f64,
    /// Coherent-envelope amplitude used for the persistence time.
    pub threshold: f64,
}

impl Default for NumericBlock {
    fn default() -> Self {
        NumericBlock {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_panels: 4000,
            samples: 2048,
            t_max_fs: 1000.0,
            threshold: 0.01,
        }
    }
}

/// A validated configuration, ready to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct Setup {
    pub system: DimerSystem,
    pub control: QuadratureControl,
    pub samples: usize,
    pub t_max: Duration,
    pub threshold: f64,
}

fn invalid(field: &str, constraint: &str) -> CliError {
    CliError::Invalid {
        field: field.to_string(),
        constraint: constraint.to_string(),
    }
}

fn positive(field: &str, value: f64) -> Result<f64, CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(invalid(
            field,
            &format!("must be finite and > 0 (got {value})"),
        ))
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let config: RunConfig = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    pub fn validate(&self) -> Result<Setup, CliError> {
        let sys = &self.system;
        let temperature = Temperature::new(positive("system.temperature_K", sys.temperature_k)?)?;
        positive("system.delta_cm1", sys.delta_cm1)?;
        let bath = self.spectral_model()?;

        let system = match (sys.epsilon_cm1, sys.site_energies_cm1) {
            (Some(_), Some(_)) => {
                return Err(CliError::Conflict(
                    "system: give either epsilon_cm1 or site_energies_cm1, not both".into(),
                ))
            }
            (None, None) => {
                return Err(invalid(
                    "system.epsilon_cm1",
                    "one of epsilon_cm1 or site_energies_cm1 is required",
                ))
            }
            (Some(eps), None) => {
                if !(eps.is_finite() && eps >= 0.0) {
                    return Err(invalid(
                        "system.epsilon_cm1",
                        "must be finite and >= 0; site 1 is the higher-energy site",
                    ));
                }
                DimerSystem::new(
                    Wavenumber::new(eps),
                    Wavenumber::new(sys.delta_cm1),
                    temperature,
                    bath,
                )?
            }
            (None, Some([e1, e2])) => {
                let sites = SiteParams {
                    eps1: Wavenumber::new(e1),
                    eps2: Wavenumber::new(e2),
                    coupling: Wavenumber::new(sys.delta_cm1),
                };
                DimerSystem::from_sites(&sites, temperature, bath)?
            }
        };

        let num = &self.numeric;
        let control = QuadratureControl::new(num.abs_tol, num.rel_tol, num.max_panels)?;
        if num.samples < 2 {
            return Err(invalid("numeric.samples", "must be >= 2"));
        }
        if !(num.threshold > 0.0 && num.threshold < 1.0) {
            return Err(invalid("numeric.threshold", "must lie in (0, 1)"));
        }
        Ok(Setup {
            system,
            control,
            samples: num.samples,
            t_max: Duration::new(positive("numeric.t_max_fs", num.t_max_fs)?),
            threshold: num.threshold,
        })
    }

    fn spectral_model(&self) -> Result<SpectralModel, CliError> {
        let b = &self.bath;
        let lambda_tau = b.lambda_cm1.is_some() || b.tau_fs.is_some();
        let k_omega = b.damping.is_some() || b.omega_c_cm1.is_some();
        if lambda_tau && k_omega {
            return Err(CliError::Conflict(
                "bath: give either {lambda_cm1, tau_fs} or {K, omega_c_cm1}, not both".into(),
            ));
        }
        let need = |field: &str, v: Option<f64>| {
            v.ok_or_else(|| {
                invalid(
                    &format!("bath.{field}"),
                    "is required for this parameterization",
                )
            })
            .and_then(|v| positive(&format!("bath.{field}"), v))
        };
        let model = match b.kind {
            BathKind::Ohmic if k_omega => SpectralModel::ohmic(
                need("K", b.damping)?,
                Wavenumber::new(need("omega_c_cm1", b.omega_c_cm1)?),
            )?,
            BathKind::Ohmic => SpectralModel::ohmic_from_lambda_tau(
                Wavenumber::new(need("lambda_cm1", b.lambda_cm1)?),
                Duration::new(need("tau_fs", b.tau_fs)?),
            )?,
            BathKind::Debye if k_omega => {
                return Err(invalid("bath", "a debye bath takes lambda_cm1 and tau_fs"));
            }
            BathKind::Debye => SpectralModel::debye(
                Wavenumber::new(need("lambda_cm1", b.lambda_cm1)?),
                Duration::new(need("tau_fs", b.tau_fs)?),
            )?,
        };
        Ok(model)
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    RunConfig::parse(&text)
}
