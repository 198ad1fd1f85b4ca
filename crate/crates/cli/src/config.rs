//! Optional `key = value` defaults file. Lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub budget: u64,
    pub max_degree: usize,
    pub threads: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budget: 300,
            max_degree: 8,
            threads: None,
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config, String> {
        let mut entries = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        let mut config = Config::default();
        for (key, value) in entries {
            let bad = |_| format!("bad value {value:?} for {key}");
            match key.as_str() {
                "budget" => config.budget = value.parse().map_err(bad)?,
                "max_degree" => config.max_degree = value.parse().map_err(bad)?,
                "threads" => config.threads = Some(value.parse().map_err(bad)?),
                _ => return Err(format!("unknown key {key:?}")),
            }
        }
        Ok(config)
    }
}
