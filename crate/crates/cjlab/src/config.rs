//! Optional JSON config: economic parameters and extra device profiles.
//! Looked up from `CJLAB_CONFIG` when set.

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Config {
    #[serde(default)]
    pub params: econ::EconParams,
    #[serde(default)]
    pub devices: Vec<econ::DeviceProfile>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            params: econ::EconParams::default(),
            devices: econ::fixtures::default_devices(),
        }
    }
}

/// Load the config file named by `CJLAB_CONFIG`, falling back to defaults.
/// Devices from the file are added in front of the built-in profiles, so a
/// file can override a built-in by reusing its name.
pub fn load_config() -> Result<Config, CliError> {
    let Some(path) = std::env::var_os("CJLAB_CONFIG") else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.to_string_lossy())))?;
    let mut config: Config =
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("config: {e}")))?;
    for builtin in econ::fixtures::default_devices() {
        if !config.devices.iter().any(|d| d.name == builtin.name) {
            config.devices.push(builtin);
        }
    }
    Ok(config)
}
