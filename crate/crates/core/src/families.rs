//! Constructors: the eight two-generator families, the Lusztig-Vogan digraph
//! on twisted involutions, the regular digraph, and a few hand-entered examples.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, DiagramAutomorphism, GroupElement, Side};
use crate::digraph::{DigraphError, Edge, EdgeStyle, SLabeledDigraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family: {0}")]
    InvalidSpec(String),
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

pub type Result<T> = std::result::Result<T, FamilyError>;

pub const EXAMPLE_NAMES: [&str; 5] = ["affine_a2_cycle", "b3_no_bar", "h3_nonselfassoc", "ex_fig2", "ex_fig3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub figure: u8,
    pub m: usize,
    pub s: usize,
    pub t: usize,
}

impl FamilySpec {
    pub fn new(figure: u8, m: usize) -> Self {
        FamilySpec { figure, m, s: 0, t: 1 }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self.figure {
            1..=6 => self.m >= 2,
            7 | 8 => self.m == 1,
            _ => false,
        };
        if !ok || self.s == self.t {
            return Err(FamilyError::InvalidSpec(format!("figure {}, m = {}", self.figure, self.m)));
        }
        Ok(())
    }

    /// Divisibility condition for `n = m(s,t)`.
    pub fn admits(&self, n: u32) -> bool {
        let n = n as usize;
        match self.figure {
            1..=3 => n.is_multiple_of(self.m),
            4 | 5 => n.is_multiple_of(2 * self.m - 1),
            6 => n.is_multiple_of(2 * self.m - 2),
            _ => true,
        }
    }

    /// Least admissible `n`, at least 2.
    pub fn smallest_n(&self) -> u32 {
        (2..).find(|&n| self.admits(n)).expect("some n is admissible")
    }
}

/// Family digraph over a rank-two system whose generators are `spec.s`, `spec.t`.
pub fn build_family(system: &Arc<CoxeterSystem>, spec: &FamilySpec) -> Result<SLabeledDigraph> {
    spec.validate()?;
    if system.rank() != 2 || spec.s > 1 || spec.t > 1 {
        return Err(FamilyError::InvalidSpec("family digraphs need a rank-two system".into()));
    }
    let (s, t, m) = (spec.s, spec.t, spec.m);
    let mut names: Vec<String> = (0..m).map(|j| format!("α{j}")).collect();
    names.extend((1..=m).map(|j| format!("β{j}")));
    let alpha = |j: usize| j;
    let beta = |j: usize| m + j - 1;
    let style = |dashed: bool| if dashed { EdgeStyle::Dashed } else { EdgeStyle::Solid };
    let mut edges = Vec::new();
    if m == 1 {
        let st = style(spec.figure == 8);
        for label in [s, t] {
            edges.push(Edge {
                label,
                src: alpha(0),
                dst: beta(1),
                style: st,
            });
        }
        return Ok(SLabeledDigraph::new(system.clone(), names, edges));
    }
    // (left first, left last, right first, right last)
    let (lf, ll, rf, rl) = match spec.figure {
        1 => (false, false, false, false),
        2 => (true, false, false, true),
        3 => (false, true, true, false),
        4 => (true, false, true, false),
        5 => (false, true, false, true),
        _ => (true, true, true, true),
    };
    for j in 0..m {
        let src = alpha(j);
        let dst = if j + 1 < m { alpha(j + 1) } else { beta(m) };
        edges.push(Edge {
            label: if j % 2 == 0 { s } else { t },
            src,
            dst,
            style: style((j == 0 && lf) || (j == m - 1 && ll)),
        });
    }
    for j in 0..m {
        let src = if j == 0 { alpha(0) } else { beta(j) };
        edges.push(Edge {
            label: if j % 2 == 0 { t } else { s },
            src,
            dst: beta(j + 1),
            style: style((j == 0 && rf) || (j == m - 1 && rl)),
        });
    }
    Ok(SLabeledDigraph::new(system.clone(), names, edges))
}

/// Family digraph over `I2(n)` on generators `s, t`; `n` defaults to the
/// least admissible value.
pub fn build_family_dihedral(figure: u8, m: usize, n: Option<u32>) -> Result<SLabeledDigraph> {
    let spec = FamilySpec::new(figure, m);
    spec.validate()?;
    let n = n.unwrap_or_else(|| spec.smallest_n());
    let system = Arc::new(CoxeterSystem::dihedral(Some(n))?);
    build_family(&system, &spec)
}

/// Lusztig-Vogan digraph `Γ_*` on the twisted involutions `{x : x* = x⁻¹}`.
pub fn build_lv(
    system: &Arc<CoxeterSystem>,
    star: &DiagramAutomorphism,
    bound: Option<usize>,
) -> Result<SLabeledDigraph> {
    let inv = system.twisted_involutions(star, bound)?;
    let index: HashMap<GroupElement, usize> = inv.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, w) in inv.iter().enumerate() {
        for s in 0..system.rank() {
            let (sw, up) = system.mul_gen(w, s, Side::Left)?;
            if !up {
                continue;
            }
            let ws = system.mul_gen(w, star.image(s), Side::Right)?.0;
            let (target, style) = if sw == ws {
                (sw, EdgeStyle::Dashed)
            } else {
                (system.mul_gen(&sw, star.image(s), Side::Right)?.0, EdgeStyle::Solid)
            };
            if let Some(&j) = index.get(&target) {
                edges.push(Edge {
                    label: s,
                    src: i,
                    dst: j,
                    style,
                });
            }
        }
    }
    let names = inv.iter().map(|w| system.format(w)).collect();
    Ok(SLabeledDigraph::new(system.clone(), names, edges))
}

/// Solid digraph on `W` with `x -> sx` whenever `sx > x`.
pub fn build_regular(system: &Arc<CoxeterSystem>, bound: Option<usize>) -> Result<SLabeledDigraph> {
    let all = system.enumerate(bound)?.elements;
    let index: HashMap<GroupElement, usize> = all.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, x) in all.iter().enumerate() {
        for s in 0..system.rank() {
            let (sx, up) = system.mul_gen(x, s, Side::Left)?;
            if let (true, Some(&j)) = (up, index.get(&sx)) {
                edges.push(Edge {
                    label: s,
                    src: i,
                    dst: j,
                    style: EdgeStyle::Solid,
                });
            }
        }
    }
    let names = all.iter().map(|w| system.format(w)).collect();
    Ok(SLabeledDigraph::new(system.clone(), names, edges))
}

pub fn affine_a2() -> Arc<CoxeterSystem> {
    Arc::new(
        CoxeterSystem::new(
            &["r", "s", "t"],
            &[("r", "s", Some(3)), ("s", "t", Some(3)), ("r", "t", Some(3))],
        )
        .expect("valid system"),
    )
}

pub fn type_a3() -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::new(&["r", "s", "t"], &[("r", "s", Some(3)), ("s", "t", Some(3))]).expect("valid system"))
}

pub fn type_b3() -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::new(&["r", "s", "t"], &[("r", "s", Some(3)), ("s", "t", Some(4))]).expect("valid system"))
}

pub fn type_h3() -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::new(&["r", "s", "t"], &[("r", "s", Some(3)), ("s", "t", Some(5))]).expect("valid system"))
}

pub fn build_example(name: &str) -> Result<SLabeledDigraph> {
    use EdgeStyle::{Dashed as D, Solid as S};
    let g = match name {
        "affine_a2_cycle" => SLabeledDigraph::from_names(
            affine_a2(),
            &["a1", "a2", "a3", "b1", "b2", "b3"],
            &[
                ("a1", "a3", "s", S),
                ("a3", "a2", "t", S),
                ("a2", "a1", "r", S),
                ("a1", "b1", "t", S),
                ("a2", "b2", "s", S),
                ("a3", "b3", "r", S),
                ("b1", "b3", "s", S),
                ("b3", "b2", "t", S),
                ("b2", "b1", "r", S),
            ],
        )?,
        "b3_no_bar" => {
            let names: Vec<String> = (0..12).map(|i| format!("v{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            SLabeledDigraph::from_names(
                type_b3(),
                &refs,
                &[
                    ("v0", "v2", "s", S),
                    ("v2", "v4", "r", S),
                    ("v2", "v4", "t", S),
                    ("v4", "v6", "s", S),
                    ("v0", "v1", "t", S),
                    ("v1", "v3", "s", S),
                    ("v3", "v5", "r", S),
                    ("v3", "v5", "t", S),
                    ("v5", "v7", "s", S),
                    ("v6", "v7", "t", S),
                    ("v0", "v8", "r", S),
                    ("v8", "v9", "t", S),
                    ("v1", "v9", "r", S),
                    ("v8", "v10", "s", S),
                    ("v10", "v6", "r", S),
                    ("v9", "v11", "s", S),
                    ("v10", "v11", "t", S),
                    ("v11", "v7", "r", S),
                ],
            )?
        }
        "h3_nonselfassoc" => SLabeledDigraph::from_names(
            type_h3(),
            &["a1", "a2", "a3", "b1", "b2", "b3"],
            &[
                ("a1", "a2", "s", D),
                ("a1", "b1", "r", D),
                ("a1", "b1", "t", D),
                ("a2", "b2", "r", S),
                ("b1", "b2", "s", S),
                ("a2", "a3", "t", S),
                ("b2", "b3", "t", S),
                ("a3", "b3", "r", S),
                ("a3", "b3", "s", S),
            ],
        )?,
        "ex_fig2" => SLabeledDigraph::from_names(
            Arc::new(CoxeterSystem::dihedral(Some(3))?),
            &["γ1", "γ2", "γ3", "γ4", "γ5", "γ6"],
            &[
                ("γ1", "γ2", "s", D),
                ("γ2", "γ3", "t", S),
                ("γ3", "γ4", "s", S),
                ("γ1", "γ6", "t", S),
                ("γ6", "γ5", "s", S),
                ("γ5", "γ4", "t", D),
            ],
        )?,
        "ex_fig3" => SLabeledDigraph::from_names(
            type_a3(),
            &["γ1", "γ2", "γ3", "γ4"],
            &[
                ("γ4", "γ1", "t", S),
                ("γ3", "γ1", "s", S),
                ("γ3", "γ4", "r", D),
                ("γ2", "γ1", "r", D),
                ("γ4", "γ2", "s", S),
                ("γ3", "γ2", "t", S),
            ],
        )?,
        other => return Err(FamilyError::UnknownExample(other.to_string())),
    };
    Ok(g)
}
