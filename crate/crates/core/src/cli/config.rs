use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact_arith::is_prime;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

/// Run configuration, read from TOML.
#[derive(Clone, PartialEq, Eq, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub ell_list: Vec<u64>,
    pub memory_budget_mb: u64,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub output_dir: Option<PathBuf>,
    pub mode: Mode,
}

impl Default for Config {
    fn default() -> Self {
        Config { ell_list: vec![3], memory_budget_mb: 1024, threads: 0, output_dir: None, mode: Mode::Exact }
    }
}

pub const THREADS_ENV: &str = "SYMPKIT_THREADS";

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: Config = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Config::from_toml(&text)
    }

    fn validate(&self) -> Result<()> {
        if let Some(l) = self.ell_list.iter().find(|&&l| l == 2 || !is_prime(l)) {
            return Err(Error::Parse(format!("ell_list entry {l} is not an odd prime")));
        }
        if self.memory_budget_mb == 0 {
            return Err(Error::Parse("memory_budget_mb must be positive".into()));
        }
        Ok(())
    }

    /// Thread count after the environment override.
    pub fn effective_threads(&self) -> Result<usize> {
        match std::env::var(THREADS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{THREADS_ENV}={v:?} is not a count"))),
            Err(_) => Ok(self.threads),
        }
    }
}
