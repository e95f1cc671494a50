//! Named parameter sets compiled into the binary.

use crate::{CliError, RunConfig};

pub const NAMES: [&str; 3] = ["fmo77", "fmo277", "pc645"];

/// The preset file exactly as shipped, comments included.
pub fn preset_text(name: &str) -> Result<&'static str, CliError> {
    match name {
        "fmo77" => Ok(include_str!("../presets/fmo77.toml")),
        "fmo277" => Ok(include_str!("../presets/fmo277.toml")),
        "pc645" => Ok(include_str!("../presets/pc645.toml")),
        other => Err(CliError::UnknownPreset(other.to_string())),
    }
}

pub fn preset(name: &str) -> Result<RunConfig, CliError> {
    RunConfig::parse(preset_text(name)?)
}
