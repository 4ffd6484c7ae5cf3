//! S-labeled digraphs: vertices, labeled solid/dashed edges, derived graphs
//! and structural analyses.

mod io;
mod iso;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem};

pub use io::{DigraphFile, EdgeFile, SystemRef};
pub use iso::labeled_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStyle {
    Solid,
    Dashed,
}

impl EdgeStyle {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeStyle::Solid => "solid",
            EdgeStyle::Dashed => "dashed",
        }
    }
}

/// Field order gives the canonical sort (label, src, dst, style).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub label: usize,
    pub src: usize,
    pub dst: usize,
    pub style: EdgeStyle,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("{0}")]
    Format(String),
    #[error("structurally invalid digraph: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Structure(Vec<StructureViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    SelfLoop { vertex: String, label: String },
    LabelCount { vertex: String, label: String, count: usize },
    DuplicateVertex(String),
    BadEndpoint { edge: usize },
    BadLabel { edge: usize },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::SelfLoop { vertex, label } => write!(f, "loop at {vertex} labeled {label}"),
            StructureViolation::LabelCount { vertex, label, count } => {
                write!(f, "vertex {vertex} meets {count} edges labeled {label}")
            }
            StructureViolation::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            StructureViolation::BadEndpoint { edge } => write!(f, "edge #{edge} has an out-of-range endpoint"),
            StructureViolation::BadLabel { edge } => write!(f, "edge #{edge} has an unknown label"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub acyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAnalysis {
    pub components: Vec<ComponentInfo>,
}

impl ComponentAnalysis {
    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.vertices.contains(&v))
            .expect("every vertex lies in a component")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathLengthViolation {
    pub from: usize,
    pub to: usize,
    pub shortest: usize,
    pub longest: usize,
}

#[derive(Clone, Debug)]
pub struct SLabeledDigraph {
    system: Arc<CoxeterSystem>,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Structural equality: same system, vertex list and canonical edge list.
impl PartialEq for SLabeledDigraph {
    fn eq(&self, other: &Self) -> bool {
        *self.system == *other.system && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for SLabeledDigraph {}

impl SLabeledDigraph {
    /// Edges are sorted into canonical order; nothing else is checked.
    pub fn new(system: Arc<CoxeterSystem>, vertices: Vec<String>, mut edges: Vec<Edge>) -> Self {
        edges.sort();
        SLabeledDigraph {
            system,
            vertices,
            edges,
        }
    }

    /// Builds from `(src, dst, label, style)` name tuples.
    pub fn from_names(
        system: Arc<CoxeterSystem>,
        vertices: &[&str],
        edges: &[(&str, &str, &str, EdgeStyle)],
    ) -> Result<Self, DigraphError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let find = |n: &str| {
            vertices
                .iter()
                .position(|v| v == n)
                .ok_or_else(|| DigraphError::Format(format!("unknown vertex '{n}'")))
        };
        let mut out = Vec::new();
        for &(a, b, l, style) in edges {
            out.push(Edge {
                src: find(a)?,
                dst: find(b)?,
                label: system.generator(l)?,
                style,
            });
        }
        Ok(SLabeledDigraph::new(system, vertices, out))
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn validate_structure(&self) -> Vec<StructureViolation> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.as_str()) {
                out.push(StructureViolation::DuplicateVertex(v.clone()));
            }
        }
        let n = self.vertices.len();
        let k = self.system.rank();
        let mut count = vec![vec![0usize; k]; n];
        for (i, e) in self.edges.iter().enumerate() {
            if e.src >= n || e.dst >= n {
                out.push(StructureViolation::BadEndpoint { edge: i });
                continue;
            }
            if e.label >= k {
                out.push(StructureViolation::BadLabel { edge: i });
                continue;
            }
            if e.src == e.dst {
                out.push(StructureViolation::SelfLoop {
                    vertex: self.vertices[e.src].clone(),
                    label: self.system.name(e.label).to_string(),
                });
                count[e.src][e.label] += 1;
                continue;
            }
            count[e.src][e.label] += 1;
            count[e.dst][e.label] += 1;
        }
        for (v, row) in count.iter().enumerate() {
            for (s, &c) in row.iter().enumerate() {
                if c != 1 {
                    out.push(StructureViolation::LabelCount {
                        vertex: self.vertices[v].clone(),
                        label: self.system.name(s).to_string(),
                        count: c,
                    });
                }
            }
        }
        out
    }

    pub fn check_structure(&self) -> Result<(), DigraphError> {
        let v = self.validate_structure();
        if v.is_empty() {
            Ok(())
        } else {
            Err(DigraphError::Structure(v))
        }
    }

    /// The unique edge labeled `s` at `v`, assuming structural validity.
    pub fn edge_at(&self, v: usize, s: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.label == s && (e.src == v || e.dst == v))
    }

    /// `Γ_J` over the parabolic subsystem generated by `J`.
    pub fn restrict(&self, j: &[usize]) -> Result<SLabeledDigraph, DigraphError> {
        let sub = Arc::new(self.system.subsystem(j)?);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                j.iter().position(|&s| s == e.label).map(|pos| Edge {
                    label: pos,
                    ..*e
                })
            })
            .collect();
        Ok(SLabeledDigraph::new(sub, self.vertices.clone(), edges))
    }

    /// Induced subdigraph on the given vertices, in the given order.
    pub fn induced(&self, vs: &[usize]) -> SLabeledDigraph {
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (pos.get(&e.src), pos.get(&e.dst)) {
                (Some(&a), Some(&b)) => Some(Edge { src: a, dst: b, ..*e }),
                _ => None,
            })
            .collect();
        let names = vs.iter().map(|&v| self.vertices[v].clone()).collect();
        SLabeledDigraph::new(self.system.clone(), names, edges)
    }

    pub fn reverse(&self) -> SLabeledDigraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: e.dst,
                dst: e.src,
                ..*e
            })
            .collect();
        SLabeledDigraph::new(self.system.clone(), self.vertices.clone(), edges)
    }

    /// `Γ_→`: every dashed edge replaced by the solid edge with the same ends.
    pub fn to_solid(&self) -> SLabeledDigraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                style: EdgeStyle::Solid,
                ..*e
            })
            .collect();
        SLabeledDigraph::new(self.system.clone(), self.vertices.clone(), edges)
    }

    /// Disjoint union; vertex names of `other` get the given prefix.
    pub fn disjoint_union(&self, other: &SLabeledDigraph, prefix: &str) -> Result<SLabeledDigraph, DigraphError> {
        if *self.system != *other.system {
            return Err(DigraphError::Format("disjoint union of digraphs over different systems".into()));
        }
        let off = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| format!("{prefix}{v}")));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            src: e.src + off,
            dst: e.dst + off,
            ..*e
        }));
        Ok(SLabeledDigraph::new(self.system.clone(), vertices, edges))
    }

    /// Out-neighbours in `Γ_dir`, with multiplicity.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            out[e.src].push(e.dst);
        }
        out
    }

    pub fn undirected_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            out[e.src].push(e.dst);
            out[e.dst].push(e.src);
        }
        out
    }

    /// Connected components of `Γ_undir`, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_neighbors();
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                for &w in &adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.dst] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.src] += 1;
        }
        d
    }

    /// Topological order of the vertices in `vs`, or `None` if they span a circuit.
    fn topological_order(&self, vs: &[usize]) -> Option<Vec<usize>> {
        let inside: BTreeSet<usize> = vs.iter().copied().collect();
        let mut indeg: BTreeMap<usize, usize> = vs.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            if inside.contains(&e.src) && inside.contains(&e.dst) {
                *indeg.get_mut(&e.dst).unwrap() += 1;
            }
        }
        let adj = self.out_neighbors();
        let mut queue: VecDeque<usize> = vs.iter().copied().filter(|v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if let Some(d) = indeg.get_mut(&w) {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        (order.len() == vs.len()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.topological_order(&all).is_some()
    }

    pub fn analyze(&self) -> ComponentAnalysis {
        let indeg = self.in_degrees();
        let outdeg = self.out_degrees();
        let components = self
            .components()
            .into_iter()
            .map(|vs| ComponentInfo {
                sources: vs.iter().copied().filter(|&v| indeg[v] == 0).collect(),
                sinks: vs.iter().copied().filter(|&v| outdeg[v] == 0).collect(),
                acyclic: self.topological_order(&vs).is_some(),
                vertices: vs,
            })
            .collect();
        ComponentAnalysis { components }
    }

    /// Shortest directed path lengths from `a`.
    pub fn distances_from(&self, a: usize) -> Vec<Option<usize>> {
        let adj = self.out_neighbors();
        let mut dist = vec![None; self.vertices.len()];
        dist[a] = Some(0);
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `μ(a, b)`: the length of a shortest directed path.
    pub fn path_length_mu(&self, a: usize, b: usize) -> Option<usize> {
        self.distances_from(a)[b]
    }

    /// Compares shortest and longest directed paths between every ordered pair.
    /// A circuit yields a counterexample from one of its vertices to itself.
    pub fn equal_path_lengths_check(&self) -> Result<(), PathLengthViolation> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let Some(order) = self.topological_order(&all) else {
            return Err(self.circuit_counterexample());
        };
        let adj = self.out_neighbors();
        for a in 0..self.vertices.len() {
            let short = self.distances_from(a);
            let mut long: Vec<Option<usize>> = vec![None; self.vertices.len()];
            long[a] = Some(0);
            for &v in &order {
                let Some(d) = long[v] else { continue };
                for &w in &adj[v] {
                    if long[w].is_none_or(|x| x < d + 1) {
                        long[w] = Some(d + 1);
                    }
                }
            }
            for b in 0..self.vertices.len() {
                if let (Some(x), Some(y)) = (short[b], long[b]) {
                    if x != y {
                        return Err(PathLengthViolation {
                            from: a,
                            to: b,
                            shortest: x,
                            longest: y,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn circuit_counterexample(&self) -> PathLengthViolation {
        let adj = self.out_neighbors();
        for v in 0..self.vertices.len() {
            // Shortest return path to v, if any.
            let mut dist = vec![None; self.vertices.len()];
            let mut queue = VecDeque::new();
            for &w in &adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(1);
                    queue.push_back(w);
                }
            }
            while let Some(x) = queue.pop_front() {
                if x == v {
                    break;
                }
                let d = dist[x].unwrap();
                for &w in &adj[x] {
                    if dist[w].is_none() {
                        dist[w] = Some(d + 1);
                        queue.push_back(w);
                    }
                }
            }
            if let Some(len) = dist[v] {
                return PathLengthViolation {
                    from: v,
                    to: v,
                    shortest: 0,
                    longest: len,
                };
            }
        }
        unreachable!("called only on digraphs with a circuit")
    }

    /// Labels of incoming edges at `b`, either style.
    pub fn in_label_set(&self, b: usize) -> BTreeSet<usize> {
        self.edges.iter().filter(|e| e.dst == b).map(|e| e.label).collect()
    }

    /// `J ↦ N_Γ(J) = |{β : In(β) = J}|`, listing only nonzero counts.
    pub fn descent_counts(&self) -> BTreeMap<BTreeSet<usize>, usize> {
        let mut out = BTreeMap::new();
        for b in 0..self.vertices.len() {
            *out.entry(self.in_label_set(b)).or_insert(0) += 1;
        }
        out
    }

    pub fn format_label_set(&self, set: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = set.iter().map(|&s| self.system.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }
}
