//! Run configuration: the dimension of the lattice, its pairing matrix and
//! any named graded spaces, read from a JSON document such as
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "pairing": [[1, "1/2"], [0, -3]],
//!   "spaces": { "P1": [[0, 2]], "odd": [[1, 1], [-1, 2]] }
//! }
//! ```
//!
//! Pairing entries are integers or exact `"p/q"` strings; floats are refused.

use std::collections::BTreeMap;
use std::path::Path;

use heisenfock_core::rational::parse_rational;
use heisenfock_core::{GradedDims, PairingMatrix, Rational};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("pairing has {rows} rows but dimension is {dim}")]
    RowCount { rows: usize, dim: usize },
    #[error("pairing row {row} has {len} entries but dimension is {dim}")]
    RowLength { row: usize, len: usize, dim: usize },
    #[error("pairing entry ({row}, {col}): {message}")]
    Entry { row: usize, col: usize, message: String },
    #[error("space {label:?}: {message}")]
    Space { label: String, message: String },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    dimension: usize,
    pairing: Vec<Vec<RawEntry>>,
    #[serde(default)]
    spaces: BTreeMap<String, Vec<(i32, u64)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub pairing: PairingMatrix,
    pub spaces: BTreeMap<String, GradedDims>,
}

impl Default for Config {
    /// One generator per mode with `⟨e, e⟩ = 1`.
    fn default() -> Self {
        Self::with_pairing(PairingMatrix::identity(1))
    }
}

impl Config {
    pub fn with_pairing(pairing: PairingMatrix) -> Self {
        Self { pairing, spaces: BTreeMap::new() }
    }

    pub fn dimension(&self) -> usize {
        self.pairing.dim()
    }

    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_json::from_str(text)?;
        let dim = raw.dimension;
        if raw.pairing.len() != dim {
            return Err(ConfigError::RowCount { rows: raw.pairing.len(), dim });
        }
        let mut rows = Vec::with_capacity(dim);
        for (row, entries) in raw.pairing.into_iter().enumerate() {
            if entries.len() != dim {
                return Err(ConfigError::RowLength { row, len: entries.len(), dim });
            }
            let parsed = entries
                .into_iter()
                .enumerate()
                .map(|(col, entry)| match entry {
                    RawEntry::Int(v) => Ok(Rational::from_integer(v.into())),
                    RawEntry::Text(s) => parse_rational(&s)
                        .map_err(|e| ConfigError::Entry { row, col, message: e.to_string() }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        let pairing = PairingMatrix::new(rows).expect("shape checked above");
        let mut spaces = BTreeMap::new();
        for (label, pairs) in raw.spaces {
            if label.contains(':') {
                return Err(ConfigError::Space { label, message: "labels may not contain ':'".into() });
            }
            spaces.insert(label, GradedDims::from_pairs(pairs));
        }
        Ok(Self { pairing, spaces })
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    /// A named space, or an inline `degree:dim,degree:dim` list.
    pub fn space(&self, text: &str) -> Result<GradedDims, ConfigError> {
        if let Some(w) = self.spaces.get(text) {
            return Ok(w.clone());
        }
        if !text.contains(':') {
            return Err(ConfigError::Space { label: text.into(), message: "no such space in config".into() });
        }
        let bad = |message: String| ConfigError::Space { label: text.into(), message };
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (degree, dim) = item
                .split_once(':')
                .ok_or_else(|| bad(format!("expected degree:dim, got {item:?}")))?;
            let degree = degree.trim().parse::<i32>().map_err(|e| bad(format!("degree {degree:?}: {e}")))?;
            let dim = dim.trim().parse::<u64>().map_err(|e| bad(format!("dimension {dim:?}: {e}")))?;
            pairs.push((degree, dim));
        }
        Ok(GradedDims::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use heisenfock_core::rational::{int, rat};

    #[test]
    fn parses_mixed_entries() {
        let c = Config::from_json(r#"{"dimension": 2, "pairing": [[1, "1/2"], ["-3", 0]], "spaces": {"W": [[0, 2], [1, 1]]}}"#)
            .unwrap();
        assert_eq!(c.dimension(), 2);
        assert_eq!(*c.pairing.get(0, 1), rat(1, 2));
        assert_eq!(*c.pairing.get(1, 0), int(-3));
        assert_eq!(c.space("W").unwrap(), GradedDims::from_pairs([(0, 2), (1, 1)]));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(Config::from_json(r#"{"dimension": 2, "pairing": [[1]]}"#), Err(ConfigError::RowCount { .. })));
        assert!(matches!(
            Config::from_json(r#"{"dimension": 1, "pairing": [[1, 2]]}"#),
            Err(ConfigError::RowLength { .. })
        ));
        assert!(matches!(
            Config::from_json(r#"{"dimension": 1, "pairing": [["1/0"]]}"#),
            Err(ConfigError::Entry { .. })
        ));
        // floats would lose exactness
        assert!(Config::from_json(r#"{"dimension": 1, "pairing": [[0.5]]}"#).is_err());
        assert!(Config::from_json(r#"{"dimension": 1, "pairing": [[1]], "spaces": {"W": [[0, -1]]}}"#).is_err());
    }

    #[test]
    fn inline_spaces() {
        let c = Config::default();
        assert_eq!(c.space("0:2, 1:1,0:1").unwrap(), GradedDims::from_pairs([(0, 3), (1, 1)]));
        assert_eq!(c.space("-2:4").unwrap(), GradedDims::from_pairs([(-2, 4)]));
        assert!(c.space("nope").is_err());
        assert!(c.space("0:x").is_err());
    }
}
