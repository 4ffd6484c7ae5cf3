use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CoxeterError, CoxeterSystem, Result};

/// On-disk form: `{ "generators": [...], "matrix": {"r,s": 3, "s,t": "inf"} }`.
/// Unlisted pairs commute.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SystemFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub matrix: BTreeMap<String, SystemValue>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum SystemValue {
    Finite(u32),
    Named(String),
}

impl SystemFile {
    pub fn into_system(self) -> Result<CoxeterSystem> {
        let k = self.generators.len();
        let mut m = vec![vec![Some(2); k]; k];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        let index = |n: &str| {
            self.generators
                .iter()
                .position(|g| g == n.trim())
                .ok_or_else(|| CoxeterError::UnknownGenerator(n.trim().to_string()))
        };
        for (key, value) in &self.matrix {
            let parts: Vec<&str> = key.split(',').collect();
            let [a, b] = parts.as_slice() else {
                return Err(CoxeterError::File(format!("matrix key '{key}' is not of the form \"a,b\"")));
            };
            let (i, j) = (index(a)?, index(b)?);
            let v = match value {
                SystemValue::Finite(v) => Some(*v),
                SystemValue::Named(s) if s == "inf" || s == "∞" => None,
                SystemValue::Named(s) => {
                    return Err(CoxeterError::InvalidEntry(a.to_string(), b.to_string(), s.clone()))
                }
            };
            if i == j {
                return Err(CoxeterError::InvalidEntry(a.to_string(), b.to_string(), "diagonal".into()));
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        CoxeterSystem::from_matrix(self.generators, m)
    }

    pub fn from_system(w: &CoxeterSystem) -> Self {
        let mut matrix = BTreeMap::new();
        for i in 0..w.rank() {
            for j in i + 1..w.rank() {
                let v = match w.m(i, j) {
                    Some(v) => SystemValue::Finite(v),
                    None => SystemValue::Named("inf".into()),
                };
                matrix.insert(format!("{},{}", w.name(i), w.name(j)), v);
            }
        }
        SystemFile {
            generators: w.names().to_vec(),
            matrix,
        }
    }
}

impl CoxeterSystem {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: SystemFile = serde_json::from_str(text).map_err(|e| CoxeterError::File(e.to_string()))?;
        f.into_system()
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let f: SystemFile = toml::from_str(text).map_err(|e| CoxeterError::File(e.to_string()))?;
        f.into_system()
    }

    /// Reads JSON, or TOML when the extension is `.toml`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CoxeterError::File(format!("{}: {e}", path.display())))?;
        let parsed = if path.extension().is_some_and(|e| e == "toml") {
            CoxeterSystem::from_toml(&text)
        } else {
            CoxeterSystem::from_json(&text)
        };
        parsed.map_err(|e| match e {
            CoxeterError::File(msg) => CoxeterError::File(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SystemFile::from_system(self)).expect("system serialises")
    }
}
