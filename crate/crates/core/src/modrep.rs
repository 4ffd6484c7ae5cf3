//! The module `M(Γ)` afforded by an S-labeled digraph: τ matrices, the
//! representation ρ, characters, linear-character eigenspaces, reversal
//! identities, the 0-Hecke action, bar propagation and theorem checks.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement};
use crate::digraph::{DigraphError, Edge, EdgeStyle, SLabeledDigraph};
use crate::exactalg::{solve_simultaneous_eigenspace, AlgError, Poly, RatFunc, RatMatrix, RatVector};
use crate::hecke::{HeckeElt, HeckeError};
use crate::validator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModRepError {
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("the digraph has no source")]
    NoSource,
    #[error("the digraph has {0} sources")]
    MultipleSources(usize),
    #[error("the digraph is not connected")]
    Disconnected,
    #[error("vertex {0} is not reachable from the source")]
    Unreachable(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
}

pub type Result<T> = std::result::Result<T, ModRepError>;

fn poly(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(c))
}

/// Column data of τ_s at a vertex: `τ_s(α) = diag·α + off·partner(α)`.
#[derive(Clone, Debug)]
struct Local {
    partner: usize,
    diag: RatFunc,
    off: RatFunc,
}

fn local_coefficients(is_src: bool, style: EdgeStyle) -> (RatFunc, RatFunc) {
    match (is_src, style) {
        (true, EdgeStyle::Solid) => (RatFunc::zero(), RatFunc::one()),
        (false, EdgeStyle::Solid) => (poly(&[-1, 0, 1]), poly(&[0, 0, 1])),
        (true, EdgeStyle::Dashed) => (RatFunc::u(), poly(&[1, 1])),
        (false, EdgeStyle::Dashed) => (poly(&[-1, -1, 1]), poly(&[0, -1, 1])),
    }
}

#[derive(Clone, Debug)]
pub struct ModuleRep {
    digraph: SLabeledDigraph,
    local: Vec<Vec<Local>>,
    tau: Vec<RatMatrix>,
    memo: Arc<Mutex<HashMap<Vec<usize>, RatMatrix>>>,
}

impl ModuleRep {
    pub fn new(digraph: &SLabeledDigraph) -> Result<Self> {
        digraph.check_structure()?;
        let n = digraph.vertex_count();
        let k = digraph.system().rank();
        let mut local = Vec::with_capacity(k);
        let mut tau = Vec::with_capacity(k);
        for s in 0..k {
            let mut col = Vec::with_capacity(n);
            let mut m = RatMatrix::zero(n, n);
            for v in 0..n {
                let e = digraph.edge_at(v, s).expect("structure checked");
                let is_src = e.src == v;
                let partner = if is_src { e.dst } else { e.src };
                let (diag, off) = local_coefficients(is_src, e.style);
                m.set(v, v, diag.clone());
                m.set(partner, v, off.clone());
                col.push(Local { partner, diag, off });
            }
            local.push(col);
            tau.push(m);
        }
        Ok(ModuleRep {
            digraph: digraph.clone(),
            local,
            tau,
            memo: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn digraph(&self) -> &SLabeledDigraph {
        &self.digraph
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        self.digraph.system()
    }

    pub fn dim(&self) -> usize {
        self.digraph.vertex_count()
    }

    pub fn tau(&self, s: usize) -> &RatMatrix {
        &self.tau[s]
    }

    /// `τ_s v` in `O(|V|)`.
    pub fn apply_gen(&self, s: usize, v: &[RatFunc]) -> RatVector {
        let loc = &self.local[s];
        (0..v.len())
            .map(|i| {
                let p = loc[i].partner;
                let mut acc = &loc[i].diag * &v[i];
                if !v[p].is_zero() {
                    acc += &(&loc[p].off * &v[p]);
                }
                acc
            })
            .collect()
    }

    /// `τ_s M` by row operations.
    pub fn apply_gen_matrix(&self, s: usize, m: &RatMatrix) -> RatMatrix {
        let loc = &self.local[s];
        let n = self.dim();
        let mut out = RatMatrix::zero(n, m.cols());
        for i in 0..n {
            let p = loc[i].partner;
            for j in 0..m.cols() {
                let mut acc = &loc[i].diag * m.get(i, j);
                let x = m.get(p, j);
                if !x.is_zero() {
                    acc += &(&loc[p].off * x);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `ρ(T_x)` for the word `x`, read as `τ_{x_1} ⋯ τ_{x_k}`.
    pub fn rho_word(&self, word: &[usize]) -> RatMatrix {
        let mut m = RatMatrix::identity(self.dim());
        for &s in word.iter().rev() {
            m = self.apply_gen_matrix(s, &m);
        }
        m
    }

    pub fn rho(&self, w: &GroupElement) -> RatMatrix {
        self.rho_word(w.word())
    }

    pub fn character(&self, w: &GroupElement) -> RatFunc {
        self.rho(w).trace().expect("square")
    }

    /// Linear extension of ρ to a Hecke algebra element.
    pub fn rho_hecke(&self, h: &HeckeElt) -> RatMatrix {
        let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
        memo.entry(Vec::new()).or_insert_with(|| RatMatrix::identity(self.dim()));
        let mut acc = RatMatrix::zero(self.dim(), self.dim());
        for (x, c) in h.terms() {
            let m = self.rho_memo(x.word(), &mut memo);
            acc = &acc + &m.scale(c);
        }
        acc
    }

    fn rho_memo(&self, word: &[usize], memo: &mut HashMap<Vec<usize>, RatMatrix>) -> RatMatrix {
        if let Some(m) = memo.get(word) {
            return m.clone();
        }
        let rest = self.rho_memo(&word[1..], memo);
        let m = self.apply_gen_matrix(word[0], &rest);
        memo.insert(word.to_vec(), m.clone());
        m
    }

    /// ρ(T_w⁻¹) as the image of the expansion of `T_w⁻¹`, summed with the
    /// polynomial coefficients of `u^{2ℓ(w)} T_w⁻¹`.
    pub fn rho_inverse(&self, w: &GroupElement) -> Result<RatMatrix> {
        let shift = 2 * w.length() as i32;
        let h = HeckeElt::tw_inverse(self.system(), w)?.scale(&RatFunc::u_pow(shift));
        Ok(self.rho_hecke(&h).scale(&RatFunc::u_pow(-shift)))
    }

    /// ρ(T_w⁻¹) as the product of `ρ(T_s)⁻¹ = u⁻²(τ_s - (u² - 1))` along the word.
    pub fn rho_inverse_product(&self, w: &GroupElement) -> RatMatrix {
        let c = poly(&[-1, 0, 1]);
        let mut m = RatMatrix::identity(self.dim());
        for &s in w.word() {
            m = &self.apply_gen_matrix(s, &m) - &m.scale(&c);
        }
        m.scale(&RatFunc::u_pow(-2 * w.length() as i32))
    }
}

/// Dimensions of the `ind` and `sgn` eigenspaces with their predictions.
#[derive(Clone, Debug)]
pub struct LinearCharDims {
    pub dim_ind: usize,
    pub dim_sgn: usize,
    pub predicted_ind: usize,
    /// `None` unless every `m(s,t)` is finite.
    pub predicted_sgn: Option<usize>,
    /// One weight vector per component with a source, built from edge weights
    /// `-1/u²` (solid) and `-(u+1)/(u²-u)` (dashed) along directed paths.
    pub sgn_weights: Vec<RatVector>,
}

pub fn all_finite(system: &CoxeterSystem) -> bool {
    (0..system.rank()).all(|s| (0..system.rank()).all(|t| system.m(s, t).is_some()))
}

pub fn linear_char_dims(rep: &ModuleRep) -> Result<LinearCharDims> {
    let k = rep.system().rank();
    let n = rep.dim();
    let u2 = RatFunc::u_pow(2);
    let minus = RatFunc::from_int(-1);
    let ind_pairs: Vec<(&RatMatrix, RatFunc)> = (0..k).map(|s| (rep.tau(s), u2.clone())).collect();
    let sgn_pairs: Vec<(&RatMatrix, RatFunc)> = (0..k).map(|s| (rep.tau(s), minus.clone())).collect();
    let dim_ind = solve_simultaneous_eigenspace(n, &ind_pairs)?.len();
    let dim_sgn = solve_simultaneous_eigenspace(n, &sgn_pairs)?.len();
    let analysis = rep.digraph().analyze();
    let predicted_ind = analysis.components.len();
    let predicted_sgn = all_finite(rep.system())
        .then(|| analysis.components.iter().filter(|c| c.acyclic).count());

    let solid_w = -RatFunc::u_pow(-2);
    let dashed_w = -(poly(&[1, 1]) * poly(&[0, -1, 1]).inv()?);
    let g = rep.digraph();
    let mut sgn_weights = Vec::new();
    for comp in &analysis.components {
        let Some(&src) = comp.sources.first() else { continue };
        let mut v = vec![RatFunc::zero(); n];
        let mut seen = vec![false; n];
        v[src] = RatFunc::one();
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            for e in g.edges().iter().filter(|e| e.src == a) {
                if !seen[e.dst] {
                    seen[e.dst] = true;
                    let w = if e.style == EdgeStyle::Solid { &solid_w } else { &dashed_w };
                    v[e.dst] = &v[a] * w;
                    queue.push_back(e.dst);
                }
            }
        }
        sgn_weights.push(v);
    }
    Ok(LinearCharDims {
        dim_ind,
        dim_sgn,
        predicted_ind,
        predicted_sgn,
        sgn_weights,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Holds,
    Fails { lhs: String, rhs: String },
    NotApplicable(String),
}

impl Check {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    fn compare<T: PartialEq + std::fmt::Debug>(lhs: &T, rhs: &T) -> Check {
        if lhs == rhs {
            Check::Holds
        } else {
            Check::Fails {
                lhs: format!("{lhs:?}"),
                rhs: format!("{rhs:?}"),
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub word: String,
    /// `ρ_rev(T_w) = σ(ρ(T_{w⁻¹}⁻¹))`
    pub matrix_sigma: Check,
    /// `ρ_rev(T_w) = ε_w u_w ρ′(T_w⁻¹)^T`
    pub matrix_sign: Check,
    /// `χ_rev(T_w) = σ(χ(T_{w⁻¹}⁻¹))`
    pub char_sigma: Check,
    /// `χ_rev(T_w) = ε_w u_w χ(T_w⁻¹)`; evaluated even when its hypotheses fail.
    pub char_sign: Check,
    pub char_sign_hypotheses: bool,
    pub chi_rev: RatFunc,
    pub sigma_side: RatFunc,
    pub sign_side: RatFunc,
}

/// Sign diagonal `ε_α = (-1)^{μ(σ_α, α)}`; `None` unless every component is
/// acyclic with a source.
pub fn vertex_signs(g: &SLabeledDigraph) -> Option<Vec<i64>> {
    let analysis = g.analyze();
    let mut signs = vec![0i64; g.vertex_count()];
    for comp in &analysis.components {
        if !comp.acyclic || comp.sources.len() != 1 {
            return None;
        }
        let dist = g.distances_from(comp.sources[0]);
        for &v in &comp.vertices {
            signs[v] = if dist[v]? % 2 == 0 { 1 } else { -1 };
        }
    }
    Some(signs)
}

pub fn reversal_identities(rep: &ModuleRep, words: &[GroupElement]) -> Result<Vec<IdentityReport>> {
    let g = rep.digraph();
    let system = rep.system().clone();
    let rev = ModuleRep::new(&g.reverse())?;
    let finite = all_finite(&system);
    let signs = vertex_signs(g);
    let hyp = finite && signs.is_some();
    let mut out = Vec::new();
    for w in words {
        let l = w.length() as i32;
        let scale = &RatFunc::from_int(if l % 2 == 0 { 1 } else { -1 }) * &RatFunc::u_pow(2 * l);
        let rho_rev = rev.rho(w);
        let winv = system.inverse(w)?;
        let a = rep.rho_inverse(&winv)?.apply_field_map(crate::exactalg::FieldMap::Sigma);
        let b = rep.rho_inverse(w)?;
        let matrix_sigma = Check::compare(&rho_rev, &a);
        let matrix_sign = match (&signs, finite) {
            (Some(d), true) => {
                // ρ′ = DρD with D = diag(ε_α)
                let mut prime = b.clone();
                for i in 0..d.len() {
                    for j in 0..d.len() {
                        if d[i] != d[j] {
                            let x = -prime.get(i, j).clone();
                            prime.set(i, j, x);
                        }
                    }
                }
                Check::compare(&rho_rev, &prime.transpose().scale(&scale))
            }
            (None, _) => Check::NotApplicable("digraph is not acyclic with one source per component".into()),
            (_, false) => Check::NotApplicable("some m(s,t) is infinite".into()),
        };
        let chi_rev = rho_rev.trace()?;
        let sigma_side = a.trace()?;
        let sign_side = &b.trace()? * &scale;
        out.push(IdentityReport {
            word: system.format(w),
            matrix_sigma,
            matrix_sign,
            char_sigma: Check::compare(&chi_rev, &sigma_side),
            char_sign: Check::compare(&chi_rev, &sign_side),
            char_sign_hypotheses: hyp,
            chi_rev,
            sigma_side,
            sign_side,
        });
    }
    Ok(out)
}

/// `a_w α` in the 0-Hecke action: `(sign, vertex)`.
pub fn zero_hecke_action(g: &SLabeledDigraph, w: &GroupElement, alpha: usize) -> Result<(i8, usize)> {
    g.check_structure()?;
    let mut sign = 1i8;
    let mut v = alpha;
    for &s in w.word().iter().rev() {
        let e = g.edge_at(v, s).expect("structure checked");
        if e.src == v {
            v = e.dst;
        } else {
            sign = -sign;
        }
    }
    Ok((sign, v))
}

#[derive(Clone, Debug)]
pub struct BarWitness {
    pub edge: Edge,
    /// Image of the edge's target from the spanning tree.
    pub tree_image: RatVector,
    /// Image forced on the target through this edge.
    pub edge_image: RatVector,
}

#[derive(Clone, Debug)]
pub struct BarSolution {
    pub source: usize,
    pub images: Vec<RatVector>,
    pub consistent: bool,
    pub witness: Option<BarWitness>,
    pub failing_edges: usize,
}

fn edge_bar_image(rep: &ModuleRep, e: &Edge, v: &[RatFunc]) -> Result<RatVector> {
    // T_s⁻¹ v = u⁻²(τ_s v - (u²-1) v)
    let tv = rep.apply_gen(e.label, v);
    let u_2 = RatFunc::u_pow(-2);
    let c = poly(&[-1, 0, 1]);
    let tinv: RatVector = tv.iter().zip(v).map(|(a, b)| &u_2 * &(a - &(&c * b))).collect();
    match e.style {
        EdgeStyle::Solid => Ok(tinv),
        EdgeStyle::Dashed => {
            // (u⁻¹+1)⁻¹ (T_s⁻¹ - u⁻¹)
            let ui = RatFunc::u_pow(-1);
            let k = (&ui + &RatFunc::one()).inv()?;
            Ok(tinv.iter().zip(v).map(|(a, b)| &k * &(a - &(&ui * b))).collect())
        }
    }
}

/// Source-fixing bar operator: `φ(σ) = σ`, propagated along a breadth-first
/// spanning tree of `Γ_→`; every other edge is then checked.
pub fn bar_from_source(rep: &ModuleRep) -> Result<BarSolution> {
    let g = rep.digraph();
    if g.components().len() > 1 {
        return Err(ModRepError::Disconnected);
    }
    let analysis = g.analyze();
    let sources = &analysis.components.first().ok_or(ModRepError::NoSource)?.sources;
    let source = match sources.as_slice() {
        [] => return Err(ModRepError::NoSource),
        [s] => *s,
        many => return Err(ModRepError::MultipleSources(many.len())),
    };
    let n = g.vertex_count();
    let mut images: Vec<Option<RatVector>> = vec![None; n];
    let mut unit = vec![RatFunc::zero(); n];
    unit[source] = RatFunc::one();
    images[source] = Some(unit);
    let mut queue = VecDeque::from([source]);
    let mut pending = Vec::new();
    while let Some(a) = queue.pop_front() {
        for e in g.edges().iter().filter(|e| e.src == a) {
            if images[e.dst].is_none() {
                let img = edge_bar_image(rep, e, images[a].as_ref().unwrap())?;
                images[e.dst] = Some(img);
                queue.push_back(e.dst);
            } else {
                pending.push(*e);
            }
        }
    }
    if let Some(v) = images.iter().position(Option::is_none) {
        return Err(ModRepError::Unreachable(g.name(v).to_string()));
    }
    let images: Vec<RatVector> = images.into_iter().map(Option::unwrap).collect();
    let mut witness = None;
    let mut failing = 0;
    for e in pending {
        let forced = edge_bar_image(rep, &e, &images[e.src])?;
        if forced != images[e.dst] {
            failing += 1;
            if witness.is_none() {
                witness = Some(BarWitness {
                    edge: e,
                    tree_image: images[e.dst].clone(),
                    edge_image: forced,
                });
            }
        }
    }
    Ok(BarSolution {
        source,
        images,
        consistent: failing == 0,
        witness,
        failing_edges: failing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    NotApplicable(String),
}

#[derive(Clone, Debug)]
pub struct TheoremItem {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGraphEvidence {
    pub has_sink: bool,
    pub dim_sgn: usize,
    pub n_empty: usize,
    pub n_full: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WGraphItem {
    NotApplicable(String),
    /// Γ is acyclic, so the obstruction says nothing.
    NoObstruction,
    /// No W-graph over ℚ affords `M(Γ)`.
    Obstruction(WGraphEvidence),
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub items: Vec<TheoremItem>,
    pub wgraph: WGraphItem,
}

fn item(name: &'static str, ok: bool, detail: String) -> TheoremItem {
    TheoremItem {
        name,
        status: if ok { Status::Pass } else { Status::Fail(detail.clone()) },
        detail,
    }
}

fn not_applicable(name: &'static str, why: &str) -> TheoremItem {
    TheoremItem {
        name,
        status: Status::NotApplicable(why.to_string()),
        detail: String::new(),
    }
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0..1u32 << k)
        .map(|mask| (0..k).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

pub fn theorem_checkers(rep: &ModuleRep) -> Result<TheoremReport> {
    let g = rep.digraph();
    let system = rep.system().clone();
    let finite = system.is_finite();
    let analysis = g.analyze();
    let mut items = Vec::new();

    let multi: Vec<String> = analysis
        .components
        .iter()
        .filter(|c| c.sources.len() > 1 || c.sinks.len() > 1)
        .map(|c| g.name(c.vertices[0]).to_string())
        .collect();
    items.push(item(
        "at most one source and one sink per component",
        multi.is_empty(),
        if multi.is_empty() {
            format!("{} components", analysis.components.len())
        } else {
            format!("components containing {} violate it", multi.join(", "))
        },
    ));

    if finite {
        let good = analysis
            .components
            .iter()
            .all(|c| c.sources.len() == 1 && c.sinks.len() == 1 && c.acyclic);
        items.push(item(
            "finite W: every component acyclic with a source and a sink",
            good,
            format!("{} components checked", analysis.components.len()),
        ));
        let sources: usize = analysis.components.iter().map(|c| c.sources.len()).sum();
        let sinks: usize = analysis.components.iter().map(|c| c.sinks.len()).sum();
        let k = analysis.components.len();
        items.push(item(
            "number of sources = number of sinks = number of components",
            sources == k && sinks == k,
            format!("{sources} sources, {sinks} sinks, {k} components"),
        ));
        let order = system.order()?;
        let mut worst = String::new();
        let mut ok = true;
        let mut checked = 0;
        for j in subsets(system.rank()) {
            let sub = system.subsystem(&j)?;
            let index = order / sub.order()?;
            let gj = g.restrict(&j)?;
            for c in &analysis.components {
                let cj = gj.induced(&c.vertices).components().len();
                checked += 1;
                if cj > index {
                    ok = false;
                    worst = format!("J = {{{}}}: {} components > index {}", sub.names().join(","), cj, index);
                }
            }
        }
        items.push(item(
            "components of Γ_J at most |W : W_J|",
            ok,
            if ok { format!("{checked} (component, J) pairs checked") } else { worst },
        ));
        let biggest = analysis.components.iter().map(|c| c.vertices.len()).max().unwrap_or(0);
        items.push(item(
            "|V| at most |W| for each component",
            biggest <= order,
            format!("largest component {biggest}, |W| = {order}"),
        ));
    } else {
        for name in [
            "finite W: every component acyclic with a source and a sink",
            "number of sources = number of sinks = number of components",
            "components of Γ_J at most |W : W_J|",
            "|V| at most |W| for each component",
        ] {
            items.push(not_applicable(name, "W is infinite"));
        }
    }

    let mut bad = None;
    let mut tested = 0;
    for c in &analysis.components {
        if c.sources.is_empty() && c.sinks.is_empty() {
            continue;
        }
        tested += 1;
        let sub = g.induced(&c.vertices);
        if let Err(v) = sub.equal_path_lengths_check() {
            bad = Some(format!(
                "{} to {}: lengths {} and {}",
                sub.name(v.from),
                sub.name(v.to),
                v.shortest,
                v.longest
            ));
            break;
        }
    }
    if tested == 0 {
        items.push(not_applicable("equal directed path lengths", "no component has a source or sink"));
    } else {
        let ok = bad.is_none();
        items.push(item(
            "equal directed path lengths",
            ok,
            bad.unwrap_or_else(|| format!("{tested} components checked")),
        ));
    }

    let dims = linear_char_dims(rep)?;
    items.push(item(
        "dim M_ind = number of components",
        dims.dim_ind == dims.predicted_ind,
        format!("{} vs {}", dims.dim_ind, dims.predicted_ind),
    ));
    match dims.predicted_sgn {
        Some(p) => items.push(item(
            "dim M_sgn = number of acyclic components",
            dims.dim_sgn == p,
            format!("{} vs {}", dims.dim_sgn, p),
        )),
        None => items.push(not_applicable("dim M_sgn = number of acyclic components", "some m(s,t) is infinite")),
    }

    let wgraph = wgraph_item(rep, &analysis, dims.dim_sgn)?;
    Ok(TheoremReport { items, wgraph })
}

fn wgraph_item(rep: &ModuleRep, analysis: &crate::digraph::ComponentAnalysis, dim_sgn: usize) -> Result<WGraphItem> {
    let g = rep.digraph();
    let system = rep.system();
    if analysis.components.len() != 1 {
        return Ok(WGraphItem::NotApplicable("Γ is not connected".into()));
    }
    let k = system.rank();
    for s in 0..k {
        let j: Vec<usize> = (0..k).filter(|&x| x != s).collect();
        if !system.subsystem(&j)?.is_finite() {
            return Ok(WGraphItem::NotApplicable("a proper parabolic subgroup is infinite".into()));
        }
    }
    let verdict = validator::is_w_digraph(g).map_err(ModRepError::Digraph)?;
    if !verdict.is_w_digraph {
        return Ok(WGraphItem::NotApplicable("Γ is not a W-digraph".into()));
    }
    if analysis.components[0].acyclic {
        return Ok(WGraphItem::NoObstruction);
    }
    let counts = g.descent_counts();
    let full: BTreeSet<usize> = (0..k).collect();
    Ok(WGraphItem::Obstruction(WGraphEvidence {
        has_sink: !analysis.components[0].sinks.is_empty(),
        dim_sgn,
        n_empty: counts.get(&BTreeSet::new()).copied().unwrap_or(0),
        n_full: counts.get(&full).copied().unwrap_or(0),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_family_dihedral;

    #[test]
    fn tau_blocks() {
        let sys = Arc::new(CoxeterSystem::new(&["s"], &[]).unwrap());
        let solid = SLabeledDigraph::from_names(sys.clone(), &["a", "b"], &[("a", "b", "s", EdgeStyle::Solid)]).unwrap();
        let rep = ModuleRep::new(&solid).unwrap();
        let expected =
            RatMatrix::from_rows(vec![vec![poly(&[0]), poly(&[0, 0, 1])], vec![poly(&[1]), poly(&[-1, 0, 1])]]).unwrap();
        assert_eq!(rep.tau(0), &expected);
        let dashed = SLabeledDigraph::from_names(sys, &["a", "b"], &[("a", "b", "s", EdgeStyle::Dashed)]).unwrap();
        let rep = ModuleRep::new(&dashed).unwrap();
        let expected = RatMatrix::from_rows(vec![
            vec![poly(&[0, 1]), poly(&[0, -1, 1])],
            vec![poly(&[1, 1]), poly(&[-1, -1, 1])],
        ])
        .unwrap();
        assert_eq!(rep.tau(0), &expected);
    }

    #[test]
    fn sparse_application_matches_dense() {
        let g = build_family_dihedral(6, 3, None).unwrap();
        let rep = ModuleRep::new(&g).unwrap();
        let m = rep.rho_word(&[0, 1, 0]);
        let dense = &(rep.tau(0) * rep.tau(1)) * rep.tau(0);
        assert_eq!(m, dense);
    }

    #[test]
    fn inverse_agrees_with_hecke_expansion() {
        let g = build_family_dihedral(4, 2, None).unwrap();
        let rep = ModuleRep::new(&g).unwrap();
        let w = g.system().parse_element("sts").unwrap();
        let h = HeckeElt::tw_inverse(g.system(), &w).unwrap();
        assert_eq!(rep.rho_inverse(&w).unwrap(), rep.rho_hecke(&h));
        assert_eq!(rep.rho_inverse(&w).unwrap(), rep.rho_inverse_product(&w));
        assert_eq!(&rep.rho_inverse(&w).unwrap() * &rep.rho(&w), RatMatrix::identity(4));
    }

    #[test]
    fn identity_character_is_dimension() {
        let g = build_family_dihedral(2, 3, None).unwrap();
        let rep = ModuleRep::new(&g).unwrap();
        assert_eq!(rep.character(&GroupElement::identity()), RatFunc::from_int(6));
    }

    #[test]
    fn zero_hecke_on_sink() {
        let g = build_family_dihedral(1, 2, None).unwrap();
        let sink = g.vertex("β2").unwrap();
        let s = g.system().generator_element(0);
        assert_eq!(zero_hecke_action(&g, &s, sink).unwrap(), (-1, sink));
    }
}
