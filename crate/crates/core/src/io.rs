//! Versioned JSON envelopes and the TOML configuration file.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("reading {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Every JSON document carries its schema name and version.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub version: u32,
    pub data: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(kind: &str, data: T) -> Envelope<T> {
        Envelope {
            schema: format!("chordcrystal/{kind}"),
            version: SCHEMA_VERSION,
            data,
        }
    }

    pub fn to_json(&self) -> Result<String, IoError> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Defaults for depths and caps; every field may be omitted from the file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub crystal_depth: usize,
    pub pentagon_depth: usize,
    pub bridge_depth: usize,
    pub closure_cap: usize,
    pub reach_budget: usize,
    pub render_scale: f64,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            crystal_depth: 6,
            pentagon_depth: 8,
            bridge_depth: 4,
            closure_cap: 100_000,
            reach_budget: 6,
            render_scale: 60.0,
            seed: 1,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config, IoError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Config, IoError> {
        let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Config::from_toml(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_config() {
        let c = Config::from_toml("pentagon_depth = 10\nseed = 7\n").unwrap();
        assert_eq!(c.pentagon_depth, 10);
        assert_eq!(c.seed, 7);
        assert_eq!(c.closure_cap, Config::default().closure_cap);
        assert!(Config::from_toml("depth = 3").is_err());
    }

    #[test]
    fn envelope_fields() {
        let j = Envelope::new("demo", vec![1, 2]).to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["schema"], "chordcrystal/demo");
        assert_eq!(v["version"], SCHEMA_VERSION);
    }
}
