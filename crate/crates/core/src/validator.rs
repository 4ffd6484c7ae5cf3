//! Deciding whether an S-labeled digraph is a W-digraph: classification of
//! every dihedral component against the eight families, and a brute-force
//! check of the Hecke relations on the τ matrices.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coxeter::CoxeterSystem;
use crate::digraph::{DigraphError, Edge, EdgeStyle, SLabeledDigraph};
use crate::exactalg::{RatFunc, RatMatrix};
use crate::families::FamilySpec;
use crate::modrep::{ModRepError, ModuleRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMatch {
    pub figure: u8,
    pub m: usize,
    /// `(vertex, template name)`, using the vertex names of `build_family`.
    pub witness: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    Malformed(String),
    Orientation(String),
    DashPattern(String),
    Divisibility { figure: u8, m: usize, n: u32 },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Malformed(m) => write!(f, "malformed component: {m}"),
            Rejection::Orientation(m) => write!(f, "orientation: {m}"),
            Rejection::DashPattern(m) => write!(f, "dashed edges: {m}"),
            Rejection::Divisibility { figure, m, n } => {
                write!(f, "figure {figure} with m = {m} is not allowed for n = {n}")
            }
        }
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "figure {}, m = {}", self.figure, self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub vertices: Vec<String>,
    pub result: Result<FamilyMatch, Rejection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub s: String,
    pub t: String,
    pub n: u32,
    pub components: Vec<ComponentVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub is_w_digraph: bool,
    pub pairs: Vec<PairVerdict>,
}

impl Verdict {
    pub fn first_rejection(&self) -> Option<(&PairVerdict, &ComponentVerdict, &Rejection)> {
        self.pairs.iter().find_map(|p| {
            p.components.iter().find_map(|c| match &c.result {
                Err(r) => Some((p, c, r)),
                Ok(_) => None,
            })
        })
    }
}

/// Classifies a connected digraph over a rank-two system (labels 0 and 1)
/// against the families for `n = m(0,1)`.
pub fn classify_component(c: &SLabeledDigraph, n: u32) -> Result<FamilyMatch, Rejection> {
    if c.system().rank() != 2 {
        return Err(Rejection::Malformed("expected two labels".into()));
    }
    let violations = c.validate_structure();
    if let Some(v) = violations.first() {
        return Err(Rejection::Malformed(v.to_string()));
    }
    if c.components().len() != 1 {
        return Err(Rejection::Malformed("not connected".into()));
    }
    let size = c.vertex_count();
    let m = size / 2;
    let name = |v: usize| c.name(v).to_string();
    if m == 1 {
        let (e0, e1) = (&c.edges()[0], &c.edges()[1]);
        if e0.src != e1.src {
            return Err(Rejection::Orientation("the two edges point in opposite directions".into()));
        }
        let figure = match (e0.style, e1.style) {
            (EdgeStyle::Solid, EdgeStyle::Solid) => 7,
            (EdgeStyle::Dashed, EdgeStyle::Dashed) => 8,
            _ => return Err(Rejection::DashPattern("exactly one of two parallel edges is dashed".into())),
        };
        return Ok(FamilyMatch {
            figure,
            m: 1,
            witness: vec![(name(e0.src), "α0".into()), (name(e0.dst), "β1".into())],
        });
    }

    let indeg = c.in_degrees();
    let outdeg = c.out_degrees();
    let sources: Vec<usize> = (0..size).filter(|&v| indeg[v] == 0).collect();
    let sinks: Vec<usize> = (0..size).filter(|&v| outdeg[v] == 0).collect();
    if sources.len() != 1 || sinks.len() != 1 {
        return Err(Rejection::Orientation(format!(
            "{} sources and {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    let (sigma, omega) = (sources[0], sinks[0]);

    // Walk each arc from σ; with one source and one sink every step is forward.
    let mut arcs: [Vec<Edge>; 2] = [Vec::new(), Vec::new()];
    for (label, arc) in arcs.iter_mut().enumerate() {
        let mut v = sigma;
        let mut l = label;
        while v != omega {
            let e = *c.edge_at(v, l).expect("structure checked");
            arc.push(e);
            v = e.dst;
            l = 1 - l;
        }
    }
    if arcs[0].len() != m || arcs[1].len() != m {
        return Err(Rejection::Orientation(format!(
            "arcs from {} to {} have lengths {} and {}",
            name(sigma),
            name(omega),
            arcs[0].len(),
            arcs[1].len()
        )));
    }

    let dashed = |e: &Edge| e.style == EdgeStyle::Dashed;
    let interior = arcs
        .iter()
        .flat_map(|a| a[1..m - 1].iter())
        .find(|e| dashed(e));
    if let Some(e) = interior {
        return Err(Rejection::DashPattern(format!(
            "interior edge {} -> {} is dashed",
            name(e.src),
            name(e.dst)
        )));
    }
    let pattern = (
        dashed(&arcs[0][0]),
        dashed(&arcs[0][m - 1]),
        dashed(&arcs[1][0]),
        dashed(&arcs[1][m - 1]),
    );
    let figure = match pattern {
        (false, false, false, false) => 1,
        (true, false, false, true) => 2,
        (false, true, true, false) => 3,
        (true, false, true, false) => 4,
        (false, true, false, true) => 5,
        (true, true, true, true) => 6,
        _ => {
            return Err(Rejection::DashPattern(
                "dashed edges at the source and sink lie on the same arc or are unbalanced".into(),
            ))
        }
    };
    let spec = FamilySpec::new(figure, m);
    if !spec.admits(n) {
        return Err(Rejection::Divisibility { figure, m, n });
    }

    let mut witness = vec![(name(sigma), "α0".to_string())];
    for (j, e) in arcs[0][..m - 1].iter().enumerate() {
        witness.push((name(e.dst), format!("α{}", j + 1)));
    }
    for (j, e) in arcs[1][..m - 1].iter().enumerate() {
        witness.push((name(e.dst), format!("β{}", j + 1)));
    }
    witness.push((name(omega), format!("β{m}")));
    Ok(FamilyMatch { figure, m, witness })
}

pub fn is_w_digraph(g: &SLabeledDigraph) -> Result<Verdict, DigraphError> {
    g.check_structure()?;
    let system = g.system();
    let mut pairs = Vec::new();
    for s in 0..system.rank() {
        for t in s + 1..system.rank() {
            let Some(n) = system.m(s, t) else { continue };
            let restricted = g.restrict(&[s, t])?;
            let components = restricted
                .components()
                .into_iter()
                .map(|vs| {
                    let c = restricted.induced(&vs);
                    ComponentVerdict {
                        vertices: c.vertices().to_vec(),
                        result: classify_component(&c, n),
                    }
                })
                .collect();
            pairs.push(PairVerdict {
                s: system.name(s).to_string(),
                t: system.name(t).to_string(),
                n,
                components,
            });
        }
    }
    let is_w_digraph = pairs.iter().all(|p| p.components.iter().all(|c| c.result.is_ok()));
    Ok(Verdict { is_w_digraph, pairs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Quadratic { s: String },
    Braid { s: String, t: String, n: u32 },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Quadratic { s } => write!(f, "(τ_{s} - u^2)(τ_{s} + 1) = 0"),
            Relation::Braid { s, t, n } => write!(f, "braid relation of length {n} for {s}, {t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    pub relation: Relation,
    /// Left side minus right side.
    pub difference: RatMatrix,
}

fn alternating(a: usize, b: usize, n: u32) -> Vec<usize> {
    (0..n as usize).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

/// Exact check of the quadratic and braid relations; pairs with infinite
/// `m(s,t)` are skipped.
pub fn brute_force_check(g: &SLabeledDigraph) -> Result<Option<RelationWitness>, ModRepError> {
    let rep = ModuleRep::new(g)?;
    let system = g.system();
    let u2 = RatFunc::u_pow(2);
    let c = &u2 - &RatFunc::one();
    for s in 0..system.rank() {
        let tau = rep.tau(s);
        let sq = rep.apply_gen_matrix(s, tau);
        let diff = &(&sq - &tau.scale(&c)) - &RatMatrix::scalar(rep.dim(), &u2);
        if !diff.is_zero() {
            return Ok(Some(RelationWitness {
                relation: Relation::Quadratic {
                    s: system.name(s).to_string(),
                },
                difference: diff,
            }));
        }
    }
    for s in 0..system.rank() {
        for t in s + 1..system.rank() {
            let Some(n) = system.m(s, t) else { continue };
            let lhs = rep.rho_word(&alternating(s, t, n));
            let rhs = rep.rho_word(&alternating(t, s, n));
            if lhs != rhs {
                return Ok(Some(RelationWitness {
                    relation: Relation::Braid {
                        s: system.name(s).to_string(),
                        t: system.name(t).to_string(),
                        n,
                    },
                    difference: &lhs - &rhs,
                }));
            }
        }
    }
    Ok(None)
}

/// Random `{s,t}`-labeled 2-regular digraph over `I2(n)`, from two random
/// perfect matchings with uniformly random orientations and styles.
pub fn random_two_regular<R: Rng>(rng: &mut R, vertices: usize, n: u32) -> SLabeledDigraph {
    assert!(vertices >= 2 && vertices.is_multiple_of(2), "need a positive even vertex count");
    let system = Arc::new(CoxeterSystem::dihedral(Some(n)).expect("valid dihedral system"));
    let names: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for label in 0..2 {
        let mut order: Vec<usize> = (0..vertices).collect();
        order.shuffle(rng);
        for pair in order.chunks(2) {
            let (a, b) = if rng.gen() { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
            let style = if rng.gen() { EdgeStyle::Dashed } else { EdgeStyle::Solid };
            edges.push(Edge {
                label,
                src: a,
                dst: b,
                style,
            });
        }
    }
    SLabeledDigraph::new(system, names, edges)
}
