//! Size limits, search budgets and seeds shared by the exact searches.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest graph for the full `α` subset table (exact `ι`).
    pub alpha_n: usize,
    /// Largest graph for the exact cycle spectrum.
    pub spectrum_n: usize,
    /// Largest graph for the exact chromatic number.
    pub chi_n: usize,
    /// Largest graph for the exact longest-path search.
    pub path_n: usize,
    /// Largest graph for exhaustive independent-set enumeration.
    pub expansion_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            alpha_n: 24,
            spectrum_n: 16,
            chi_n: 30,
            path_n: 18,
            expansion_n: 18,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    /// Sets examined by one expansion check.
    pub expansion_sets: u64,
    /// Random samples drawn by non-exhaustive independent-set checks.
    pub expansion_samples: u64,
    /// Largest set size tried when measuring set expansion.
    pub set_expansion_max_t: usize,
    /// Search nodes for the partial cycle spectrum.
    pub spectrum_nodes: u64,
    /// Paths visited when exploring a rotation closure path by path.
    pub rotation_paths: u64,
    /// Restarts of the heuristic longest-path search.
    pub path_restarts: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            expansion_sets: 5_000_000,
            expansion_samples: 20_000,
            set_expansion_max_t: 6,
            spectrum_nodes: 20_000_000,
            rotation_paths: 200_000,
            path_restarts: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Seeds {
    pub master: u64,
}

impl Default for Seeds {
    fn default() -> Self {
        Seeds { master: 20_240_601 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub limits: Limits,
    pub budgets: Budgets,
    pub seeds: Seeds,
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Config> {
        Config::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let c = Config::from_json(r#"{"limits":{"spectrum_n":8},"seeds":{"master":7}}"#).unwrap();
        assert_eq!(c.limits.spectrum_n, 8);
        assert_eq!(c.limits.alpha_n, 24);
        assert_eq!(c.seeds.master, 7);
        assert!(Config::from_json(r#"{"limit":{}}"#).is_err());
    }
}
