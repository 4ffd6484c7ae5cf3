use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, SystemFile};

use super::{DigraphError, Edge, EdgeStyle, SLabeledDigraph};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemRef {
    Inline(SystemFile),
    /// Path relative to the digraph file.
    File(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeFile {
    pub from: String,
    pub to: String,
    pub label: String,
    #[serde(default = "solid")]
    pub style: EdgeStyle,
}

fn solid() -> EdgeStyle {
    EdgeStyle::Solid
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DigraphFile {
    pub system: SystemRef,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFile>,
}

impl SLabeledDigraph {
    pub fn to_file(&self) -> DigraphFile {
        DigraphFile {
            system: SystemRef::Inline(SystemFile::from_system(&self.system)),
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeFile {
                    from: self.vertices[e.src].clone(),
                    to: self.vertices[e.dst].clone(),
                    label: self.system.name(e.label).to_string(),
                    style: e.style,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("digraph serialises")
    }

    /// `base` resolves a system given as a file reference.
    pub fn from_file(file: DigraphFile, base: Option<&Path>) -> Result<Self, DigraphError> {
        let system = match file.system {
            SystemRef::Inline(s) => s.into_system()?,
            SystemRef::File(p) => {
                let path = match base {
                    Some(b) => b.join(&p),
                    None => p.into(),
                };
                CoxeterSystem::load(&path)?
            }
        };
        let mut index = HashMap::new();
        for (i, v) in file.vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(DigraphError::Format(format!("vertices[{i}]: duplicate vertex '{v}'")));
            }
        }
        let mut edges = Vec::with_capacity(file.edges.len());
        for (i, e) in file.edges.iter().enumerate() {
            let endpoint = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| DigraphError::Format(format!("edges[{i}]: unknown vertex '{name}'")))
            };
            let label = system
                .generator(&e.label)
                .map_err(|_| DigraphError::Format(format!("edges[{i}]: unknown label '{}'", e.label)))?;
            edges.push(Edge {
                src: endpoint(&e.from)?,
                dst: endpoint(&e.to)?,
                label,
                style: e.style,
            });
        }
        Ok(SLabeledDigraph::new(Arc::new(system), file.vertices, edges))
    }

    pub fn from_json(text: &str, base: Option<&Path>) -> Result<Self, DigraphError> {
        let file: DigraphFile = serde_json::from_str(text).map_err(|e| DigraphError::Format(e.to_string()))?;
        SLabeledDigraph::from_file(file, base)
    }

    pub fn load(path: &Path) -> Result<Self, DigraphError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| DigraphError::Format(format!("{}: {e}", path.display())))?;
        SLabeledDigraph::from_json(&text, path.parent()).map_err(|e| match e {
            DigraphError::Format(m) => DigraphError::Format(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", escape(v));
        }
        for e in &self.edges {
            let style = match e.style {
                EdgeStyle::Solid => String::new(),
                EdgeStyle::Dashed => ", style=dashed".to_string(),
            };
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"{}];",
                escape(&self.vertices[e.src]),
                escape(&self.vertices[e.dst]),
                escape(self.system.name(e.label)),
                style
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
