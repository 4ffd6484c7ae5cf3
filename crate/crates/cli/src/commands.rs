use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wdigraph::coxeter::{CoxeterSystem, DiagramAutomorphism, GroupElement};
use wdigraph::digraph::{EdgeStyle, SLabeledDigraph};
use wdigraph::exactalg::{BigRational, RatFunc, RatMatrix};
use wdigraph::families;
use wdigraph::modrep::{self, Check, ModRepError, ModuleRep, Status, WGraphItem};
use wdigraph::validator::{self, Verdict};

use crate::{load, Cli, CliConfig, Command, Format};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn new(cfg: &CliConfig, text: String, value: Value, code: u8) -> Output {
        let text = match cfg.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        };
        Output { text, code }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Family { figure, m, n, output } => {
            let g = families::build_family_dihedral(*figure, *m, *n)?;
            write_out(output.as_deref(), g.to_json() + "\n")
        }
        Command::Lv { star, output } => {
            let w = load::system(cfg)?;
            let star = parse_star(&w, star.as_deref())?;
            let g = families::build_lv(&w, &star, bound_for(&w, cfg))?;
            write_out(output.as_deref(), g.to_json() + "\n")
        }
        Command::Regular { output } => {
            let w = load::system(cfg)?;
            let g = families::build_regular(&w, bound_for(&w, cfg))?;
            write_out(output.as_deref(), g.to_json() + "\n")
        }
        Command::Example { name, output } => {
            let g = families::build_example(name)?;
            write_out(output.as_deref(), g.to_json() + "\n")
        }
        Command::Validate {
            file,
            explain,
            oracle,
            both,
        } => validate(cfg, file, *explain, *oracle, *both),
        Command::Analyze { file } => analyze(cfg, file),
        Command::Character {
            file,
            words,
            charpoly,
            at,
        } => character(cfg, file, words, *charpoly, at.as_deref()),
        Command::Identities {
            file,
            words,
            max_length,
        } => identities(cfg, file, words, *max_length),
        Command::BarOp { file } => bar_op(cfg, file),
        Command::Theorems { file } => theorems(cfg, file),
        Command::ExportDot { file, output } => {
            let g = load::digraph(file, cfg)?;
            write_out(output.as_deref(), g.to_dot())
        }
        Command::Oracle {
            file: Some(file), ..
        } => oracle_file(cfg, file),
        Command::Oracle {
            file: None,
            count,
            max_vertices,
            n_min,
            n_max,
        } => oracle_random(cfg, *count, *max_vertices, *n_min, *n_max),
    }
}

fn write_out(path: Option<&Path>, content: String) -> Result<Output> {
    match path {
        Some(p) => {
            std::fs::write(p, content).with_context(|| format!("cannot write {}", p.display()))?;
            Ok(Output {
                text: String::new(),
                code: 0,
            })
        }
        None => Ok(Output { text: content, code: 0 }),
    }
}

fn bound_for(w: &CoxeterSystem, cfg: &CliConfig) -> Option<usize> {
    (!w.is_finite()).then_some(cfg.length_bound as usize)
}

fn parse_star(w: &CoxeterSystem, star: Option<&str>) -> Result<DiagramAutomorphism> {
    let Some(text) = star.filter(|s| !s.trim().is_empty()) else {
        return Ok(DiagramAutomorphism::identity(w.rank()));
    };
    let mut swaps = Vec::new();
    for part in text.split(',') {
        let Some((a, b)) = part.split_once(':') else {
            bail!("--star: '{part}' is not of the form a:b");
        };
        swaps.push((a.trim(), b.trim()));
    }
    Ok(w.automorphism_from_swaps(&swaps)?)
}

/// Loads a digraph and stops with exit code 1 when it is not S-labeled.
fn checked(cfg: &CliConfig, file: &Path) -> Result<std::result::Result<SLabeledDigraph, Output>> {
    let g = load::digraph(file, cfg)?;
    let violations = g.validate_structure();
    if violations.is_empty() {
        return Ok(Ok(g));
    }
    let mut text = String::from("not an S-labeled digraph:\n");
    for v in &violations {
        let _ = writeln!(text, "  - {v}");
    }
    let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    Ok(Err(Output::new(
        cfg,
        text,
        json!({"structure_violations": list}),
        1,
    )))
}

fn names(g: &SLabeledDigraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

fn check_json(c: &Check) -> Value {
    match c {
        Check::Holds => json!({"status": "holds"}),
        Check::Fails { lhs, rhs } => json!({"status": "fails", "lhs": lhs, "rhs": rhs}),
        Check::NotApplicable(why) => json!({"status": "not applicable", "reason": why}),
    }
}

fn check_text(c: &Check) -> &'static str {
    match c {
        Check::Holds => "holds",
        Check::Fails { .. } => "FAILS",
        Check::NotApplicable(_) => "n/a",
    }
}

fn verdict_text(v: &Verdict, explain: bool, out: &mut String) {
    for p in &v.pairs {
        let _ = writeln!(out, "pair {{{}, {}}} (n = {}):", p.s, p.t, p.n);
        for c in &p.components {
            let vs = c.vertices.join(" ");
            match &c.result {
                Ok(fm) => {
                    let _ = writeln!(out, "  [{}] {}", vs, fm);
                    if explain {
                        for (a, b) in &fm.witness {
                            let _ = writeln!(out, "      {a} = {b}");
                        }
                    }
                }
                Err(r) => {
                    let _ = writeln!(out, "  [{}] rejected: {r}", vs);
                }
            }
        }
    }
}

fn verdict_json(v: &Verdict) -> Value {
    let pairs: Vec<Value> = v
        .pairs
        .iter()
        .map(|p| {
            let comps: Vec<Value> = p
                .components
                .iter()
                .map(|c| match &c.result {
                    Ok(fm) => json!({
                        "vertices": c.vertices,
                        "figure": fm.figure,
                        "m": fm.m,
                        "witness": fm.witness.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
                    }),
                    Err(r) => json!({"vertices": c.vertices, "rejection": r.to_string()}),
                })
                .collect();
            json!({"s": p.s, "t": p.t, "n": p.n, "components": comps})
        })
        .collect();
    json!({"is_w_digraph": v.is_w_digraph, "pairs": pairs})
}

fn first_nonzero(m: &RatMatrix) -> Option<(usize, usize, String)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())
        .map(|(i, j)| (i, j, m.get(i, j).to_string()))
}

fn validate(cfg: &CliConfig, file: &Path, explain: bool, oracle: bool, both: bool) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let mut text = String::new();
    let mut value = json!({});
    let classified = if !oracle || both {
        let v = validator::is_w_digraph(&g)?;
        verdict_text(&v, explain, &mut text);
        let _ = writeln!(text, "classification: {}", if v.is_w_digraph { "W-digraph" } else { "not a W-digraph" });
        value["classification"] = verdict_json(&v);
        Some(v.is_w_digraph)
    } else {
        None
    };
    let relations = if oracle || both {
        let w = validator::brute_force_check(&g)?;
        match &w {
            None => {
                let _ = writeln!(text, "relation check: all relations hold");
                value["relations"] = json!({"hold": true});
            }
            Some(rw) => {
                let _ = writeln!(text, "relation check: {} fails", rw.relation);
                let entry = first_nonzero(&rw.difference);
                if explain {
                    if let Some((i, j, x)) = &entry {
                        let _ = writeln!(text, "      entry ({}, {}) of the difference is {x}", g.name(*i), g.name(*j));
                    }
                }
                value["relations"] = json!({
                    "hold": false,
                    "relation": rw.relation.to_string(),
                    "entry": entry.map(|(i, j, x)| json!([g.name(i), g.name(j), x])),
                });
            }
        }
        Some(w.is_none())
    } else {
        None
    };
    let accepted = match (classified, relations) {
        (Some(a), Some(b)) => {
            let _ = writeln!(text, "deciders agree: {}", if a == b { "yes" } else { "NO" });
            value["agree"] = json!(a == b);
            a && b
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => unreachable!(),
    };
    value["accepted"] = json!(accepted);
    Ok(Output::new(cfg, text, value, if accepted { 0 } else { 1 }))
}

fn analyze(cfg: &CliConfig, file: &Path) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let w = g.system().clone();
    let mut text = String::new();
    let _ = writeln!(text, "vertices: {}", g.vertex_count());
    let _ = writeln!(text, "edges: {}", g.edges().len());
    let dashed = g.edges().iter().filter(|e| e.style == EdgeStyle::Dashed).count();
    let _ = writeln!(text, "dashed edges: {dashed}");
    let analysis = g.analyze();
    let mut comps = Vec::new();
    for (i, c) in analysis.components.iter().enumerate() {
        let _ = writeln!(
            text,
            "component {}: {} vertices, sources [{}], sinks [{}], {}",
            i + 1,
            c.vertices.len(),
            names(&g, &c.sources).join(" "),
            names(&g, &c.sinks).join(" "),
            if c.acyclic { "acyclic" } else { "has a directed circuit" }
        );
        comps.push(json!({
            "vertices": names(&g, &c.vertices),
            "sources": names(&g, &c.sources),
            "sinks": names(&g, &c.sinks),
            "acyclic": c.acyclic,
        }));
    }
    let lengths = match g.equal_path_lengths_check() {
        Ok(()) => {
            let _ = writeln!(text, "directed path lengths: equal");
            Value::Null
        }
        Err(v) => {
            let _ = writeln!(
                text,
                "directed path lengths: {} to {} has paths of length {} and {}",
                g.name(v.from),
                g.name(v.to),
                v.shortest,
                v.longest
            );
            json!({"from": g.name(v.from), "to": g.name(v.to), "shortest": v.shortest, "longest": v.longest})
        }
    };
    let rep = ModuleRep::new(&g)?;
    let dims = modrep::linear_char_dims(&rep)?;
    let _ = writeln!(text, "dim M_ind = {} (components: {})", dims.dim_ind, dims.predicted_ind);
    match dims.predicted_sgn {
        Some(p) => {
            let _ = writeln!(text, "dim M_sgn = {} (acyclic components: {p})", dims.dim_sgn);
        }
        None => {
            let _ = writeln!(text, "dim M_sgn = {}", dims.dim_sgn);
        }
    }
    let mut zero_hecke = Value::Null;
    if w.is_finite() {
        let w0 = w.longest_element()?;
        let mut images = BTreeMap::new();
        let _ = writeln!(text, "a_w0 action:");
        for v in 0..g.vertex_count() {
            let (sign, target) = modrep::zero_hecke_action(&g, &w0, v)?;
            let sign = if sign < 0 { "-" } else { "" };
            let _ = writeln!(text, "  a_w0 {} = {sign}{}", g.name(v), g.name(target));
            images.insert(g.name(v).to_string(), format!("{sign}{}", g.name(target)));
        }
        zero_hecke = json!(images);
    }
    let value = json!({
        "vertices": g.vertex_count(),
        "edges": g.edges().len(),
        "dashed_edges": dashed,
        "components": comps,
        "path_length_violation": lengths,
        "dim_ind": dims.dim_ind,
        "dim_sgn": dims.dim_sgn,
        "predicted_ind": dims.predicted_ind,
        "predicted_sgn": dims.predicted_sgn,
        "a_w0": zero_hecke,
    });
    Ok(Output::new(cfg, text, value, 0))
}

fn parse_words(w: &CoxeterSystem, words: &[String]) -> Result<Vec<GroupElement>> {
    words
        .iter()
        .map(|s| {
            w.parse_element(s.trim())
                .with_context(|| format!("cannot read word '{}'", s.trim()))
        })
        .collect()
}

fn character(cfg: &CliConfig, file: &Path, words: &[String], charpoly: bool, at: Option<&str>) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let q = at
        .map(|s| BigRational::from_str(s.trim()).map_err(|_| anyhow::anyhow!("--at: '{s}' is not a rational number")))
        .transpose()?;
    let w = g.system().clone();
    let rep = ModuleRep::new(&g)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for x in parse_words(&w, words)? {
        let m = rep.rho(&x);
        let chi = m.trace()?;
        let name = w.format(&x);
        let _ = writeln!(text, "{name}:");
        let _ = writeln!(text, "  χ(T_w) = {chi}");
        let mut row = json!({"word": name, "character": chi.to_string()});
        let cp = if charpoly { Some(m.char_poly()?) } else { None };
        if let Some(cp) = &cp {
            let _ = writeln!(text, "  det(λ - ρ(T_w)) = {cp}");
            row["charpoly"] = json!(cp.to_string());
        }
        if let Some(q) = &q {
            let v = chi.eval(q)?;
            let _ = writeln!(text, "  at u = {q}: χ = {v}");
            row["at"] = json!({"u": q.to_string(), "character": v.to_string()});
            if let Some(cp) = &cp {
                let e = cp.eval_u(q)?;
                let _ = writeln!(text, "  at u = {q}: det(λ - ρ(T_w)) = {e}");
                row["at"]["charpoly"] = json!(e.to_string());
            }
        }
        rows.push(row);
    }
    Ok(Output::new(cfg, text, json!({"words": rows}), 0))
}

fn identities(cfg: &CliConfig, file: &Path, words: &[String], max_length: usize) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let w = g.system().clone();
    let list = if words.is_empty() {
        let mut list = w.enumerate(Some(max_length))?.elements;
        if w.is_finite() {
            let w0 = w.longest_element()?;
            if !list.contains(&w0) {
                list.push(w0);
            }
        }
        list
    } else {
        parse_words(&w, words)?
    };
    let rep = ModuleRep::new(&g)?;
    let reports = modrep::reversal_identities(&rep, &list)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failures = 0;
    for r in &reports {
        let sign_fails = matches!(r.char_sign, Check::Fails { .. });
        let counted = [&r.matrix_sigma, &r.matrix_sign, &r.char_sigma]
            .iter()
            .filter(|c| matches!(c, Check::Fails { .. }))
            .count()
            + usize::from(sign_fails && r.char_sign_hypotheses);
        failures += counted;
        let _ = writeln!(
            text,
            "{}: ρ σ-form {}, ρ sign-form {}, χ σ-form {}, χ sign-form {}{}",
            r.word,
            check_text(&r.matrix_sigma),
            check_text(&r.matrix_sign),
            check_text(&r.char_sigma),
            check_text(&r.char_sign),
            if r.char_sign_hypotheses { "" } else { " (hypotheses not met)" }
        );
        if sign_fails || matches!(r.char_sigma, Check::Fails { .. }) {
            let _ = writeln!(
                text,
                "    χ_rev = {}, σ side = {}, sign side = {}",
                r.chi_rev, r.sigma_side, r.sign_side
            );
        }
        rows.push(json!({
            "word": r.word,
            "matrix_sigma": check_json(&r.matrix_sigma),
            "matrix_sign": check_json(&r.matrix_sign),
            "char_sigma": check_json(&r.char_sigma),
            "char_sign": check_json(&r.char_sign),
            "char_sign_hypotheses": r.char_sign_hypotheses,
            "chi_rev": r.chi_rev.to_string(),
            "sigma_side": r.sigma_side.to_string(),
            "sign_side": r.sign_side.to_string(),
        }));
    }
    let _ = writeln!(text, "{} words, {} failures where the identity applies", reports.len(), failures);
    let value = json!({"words": rows, "failures": failures});
    Ok(Output::new(cfg, text, value, u8::from(failures > 0)))
}

fn vector_text(g: &SLabeledDigraph, v: &[RatFunc]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if c.is_one() { g.name(i).to_string() } else { format!("({c})·{}", g.name(i)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn vector_json(g: &SLabeledDigraph, v: &[RatFunc]) -> Value {
    let map: BTreeMap<String, String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (g.name(i).to_string(), c.to_string()))
        .collect();
    json!(map)
}

fn bar_op(cfg: &CliConfig, file: &Path) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let rep = ModuleRep::new(&g)?;
    let sol = match modrep::bar_from_source(&rep) {
        Ok(sol) => sol,
        Err(e @ (ModRepError::NoSource | ModRepError::MultipleSources(_) | ModRepError::Disconnected)) => {
            let text = format!("no source-fixing bar operator: {e}\n");
            let value = json!({"error": e.to_string()});
            return Ok(Output::new(cfg, text, value, 1));
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = String::new();
    let _ = writeln!(text, "source: {}", g.name(sol.source));
    for (i, img) in sol.images.iter().enumerate() {
        let _ = writeln!(text, "  φ({}) = {}", g.name(i), vector_text(&g, img));
    }
    let mut value = json!({
        "source": g.name(sol.source),
        "consistent": sol.consistent,
        "failing_edges": sol.failing_edges,
        "images": sol.images.iter().enumerate().map(|(i, v)| (g.name(i).to_string(), vector_json(&g, v))).collect::<BTreeMap<_, _>>(),
    });
    if sol.consistent {
        let _ = writeln!(text, "consistent: yes");
    } else {
        let _ = writeln!(text, "consistent: no ({} failing edges)", sol.failing_edges);
    }
    if let Some(wit) = &sol.witness {
        let e = &wit.edge;
        let edge = format!(
            "{} -{}-> {} ({})",
            g.name(e.src),
            g.system().name(e.label),
            g.name(e.dst),
            e.style.as_str()
        );
        let _ = writeln!(text, "witness: {edge}");
        let _ = writeln!(text, "  from the tree: {}", vector_text(&g, &wit.tree_image));
        let _ = writeln!(text, "  through the edge: {}", vector_text(&g, &wit.edge_image));
        value["witness"] = json!({
            "edge": edge,
            "target": g.name(e.dst),
            "tree_image": vector_json(&g, &wit.tree_image),
            "edge_image": vector_json(&g, &wit.edge_image),
        });
    }
    Ok(Output::new(cfg, text, value, u8::from(!sol.consistent)))
}

fn theorems(cfg: &CliConfig, file: &Path) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let rep = ModuleRep::new(&g)?;
    let report = modrep::theorem_checkers(&rep)?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut failed = false;
    for it in &report.items {
        let (tag, reason) = match &it.status {
            Status::Pass => ("pass", None),
            Status::Fail(r) => {
                failed = true;
                ("FAIL", Some(r.as_str()))
            }
            Status::NotApplicable(r) => ("n/a", Some(r.as_str())),
        };
        let _ = write!(text, "[{tag}] {}", it.name);
        if !it.detail.is_empty() {
            let _ = write!(text, ": {}", it.detail);
        }
        if let Some(r) = reason {
            let _ = write!(text, " ({r})");
        }
        text.push('\n');
        items.push(json!({"name": it.name, "status": tag, "reason": reason, "detail": it.detail}));
    }
    let wgraph = match &report.wgraph {
        WGraphItem::NotApplicable(r) => {
            let _ = writeln!(text, "[n/a] W-graph obstruction ({r})");
            json!({"status": "n/a", "reason": r})
        }
        WGraphItem::NoObstruction => {
            let _ = writeln!(text, "[pass] W-graph obstruction: none, the digraph is acyclic");
            json!({"status": "none"})
        }
        WGraphItem::Obstruction(ev) => {
            let _ = writeln!(
                text,
                "[obstruction] no W-graph over Q affords M(Γ): sink {}, dim M_sgn = {}, N(∅) = {}, N(S) = {}",
                if ev.has_sink { "present" } else { "absent" },
                ev.dim_sgn,
                ev.n_empty,
                ev.n_full
            );
            json!({
                "status": "obstruction",
                "has_sink": ev.has_sink,
                "dim_sgn": ev.dim_sgn,
                "n_empty": ev.n_empty,
                "n_full": ev.n_full,
            })
        }
    };
    let value = json!({"items": items, "wgraph": wgraph});
    Ok(Output::new(cfg, text, value, u8::from(failed)))
}

fn oracle_file(cfg: &CliConfig, file: &Path) -> Result<Output> {
    let g = match checked(cfg, file)? {
        Ok(g) => g,
        Err(out) => return Ok(out),
    };
    let w = validator::brute_force_check(&g)?;
    let (text, value) = match &w {
        None => (
            "all quadratic and braid relations hold\n".to_string(),
            json!({"hold": true}),
        ),
        Some(rw) => (
            format!("relation {} fails\n", rw.relation),
            json!({"hold": false, "relation": rw.relation.to_string()}),
        ),
    };
    Ok(Output::new(cfg, text, value, u8::from(w.is_some())))
}

fn oracle_random(cfg: &CliConfig, count: usize, max_vertices: usize, n_min: u32, n_max: u32) -> Result<Output> {
    if max_vertices < 2 {
        bail!("--max-vertices must be at least 2");
    }
    if n_min < 2 || n_max < n_min {
        bail!("need 2 <= --n-min <= --n-max");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for n in n_min..=n_max {
        let mut accepted = 0;
        let mut disagree = 0;
        for i in 0..count {
            let v = 2 * rng.gen_range(1..=max_vertices / 2);
            let g = validator::random_two_regular(&mut rng, v, n);
            let a = validator::is_w_digraph(&g)?.is_w_digraph;
            let b = validator::brute_force_check(&g)?.is_none();
            accepted += usize::from(a);
            if a != b {
                disagree += 1;
                disagreements.push(json!({"n": n, "index": i, "digraph": serde_json::from_str::<Value>(&g.to_json())?}));
            }
        }
        let _ = writeln!(
            text,
            "n = {n}: {count} digraphs, {accepted} accepted, {disagree} disagreements"
        );
        rows.push(json!({"n": n, "count": count, "accepted": accepted, "disagreements": disagree}));
    }
    let code = u8::from(!disagreements.is_empty());
    let _ = writeln!(text, "seed {:#x}: {}", cfg.seed, if code == 0 { "deciders agree" } else { "deciders DISAGREE" });
    let value = json!({"seed": cfg.seed, "per_n": rows, "disagreements": disagreements});
    Ok(Output::new(cfg, text, value, code))
}
