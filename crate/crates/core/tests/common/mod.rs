#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use wdigraph::coxeter::{CoxeterSystem, DiagramAutomorphism, GroupElement};
use wdigraph::digraph::{EdgeStyle, SLabeledDigraph};
use wdigraph::families::{
    build_family_dihedral, build_lv, build_example, build_regular, type_a3, type_b3, FamilySpec,
};

pub type EdgeSet = BTreeSet<(String, String, String, EdgeStyle)>;

const S: EdgeStyle = EdgeStyle::Solid;
const D: EdgeStyle = EdgeStyle::Dashed;

/// Lusztig-Vogan digraph of A3 with trivial twist, as drawn: words with
/// `w0` standing for the longest element on the right.
pub const A3_TRIVIAL: [(&str, &str, &str, EdgeStyle); 15] = [
    ("e", "s", "s", D),
    ("e", "r", "r", D),
    ("e", "t", "t", D),
    ("r", "rt", "t", D),
    ("t", "rt", "r", D),
    ("s", "srs", "r", S),
    ("r", "srs", "s", S),
    ("s", "sts", "t", S),
    ("t", "sts", "s", S),
    ("rt", "srts", "s", S),
    ("srts", "w0", "t", S),
    ("srts", "w0", "r", S),
    ("srs", "rtstr", "t", S),
    ("sts", "rtstr", "r", S),
    ("rtstr", "w0", "s", D),
];

pub const A3_TWISTED: [(&str, &str, &str, EdgeStyle); 15] = [
    ("e", "s", "s", D),
    ("e", "rt", "r", S),
    ("e", "rt", "t", S),
    ("rt", "srts", "s", S),
    ("srts", "rsrts", "r", D),
    ("rst", "rsrts", "s", S),
    ("s", "rst", "r", S),
    ("srts", "tsrts", "t", D),
    ("tsr", "tsrts", "s", S),
    ("s", "tsr", "t", S),
    ("rsrts", "w0", "t", D),
    ("tsrts", "w0", "r", D),
    ("rst", "rtstr", "t", S),
    ("tsr", "rtstr", "r", S),
    ("rtstr", "w0", "s", D),
];

pub const B3_TRIVIAL: [(&str, &str, &str, EdgeStyle); 30] = [
    ("ststw0", "stsw0", "t", D),
    ("sts", "ststw0", "r", S),
    ("sts", "stst", "t", D),
    ("stst", "stsw0", "r", S),
    ("ststw0", "tstw0", "s", D),
    ("tstw0", "sw0", "t", S),
    ("sw0", "w0", "s", D),
    ("tw0", "w0", "t", D),
    ("stsw0", "tw0", "s", S),
    ("t", "sts", "s", S),
    ("e", "t", "t", D),
    ("e", "s", "s", D),
    ("tst", "stst", "s", D),
    ("s", "tst", "t", S),
    ("t", "rt", "r", D),
    ("rtstrw0", "tstw0", "r", S),
    ("rt", "rtstrw0", "s", S),
    ("r", "rt", "t", D),
    ("e", "r", "r", D),
    ("r", "srs", "s", S),
    ("s", "srs", "r", S),
    ("srs", "rtstr", "t", S),
    ("tst", "rtstr", "r", S),
    ("rtstrw0", "srsw0", "t", S),
    ("srsw0", "sw0", "r", S),
    ("srsw0", "rw0", "s", S),
    ("rw0", "w0", "r", D),
    ("rtw0", "rw0", "t", D),
    ("rtw0", "tw0", "r", D),
    ("rtstr", "rtw0", "s", S),
];

/// Canonical name of a drawn word, reading a trailing `w0` as the longest element.
pub fn canonical_name(system: &CoxeterSystem, word: &str) -> String {
    let (prefix, longest) = match word.strip_suffix("w0") {
        Some(p) => (p, true),
        None => (word, false),
    };
    let mut w = system.parse_element(if prefix.is_empty() { "e" } else { prefix }).unwrap();
    if longest {
        w = system.mul(&w, &system.longest_element().unwrap()).unwrap();
    }
    system.format(&w)
}

pub fn transcribed(system: &CoxeterSystem, edges: &[(&str, &str, &str, EdgeStyle)]) -> EdgeSet {
    edges
        .iter()
        .map(|(a, b, l, st)| (canonical_name(system, a), canonical_name(system, b), l.to_string(), *st))
        .collect()
}

pub fn edge_set(g: &SLabeledDigraph) -> EdgeSet {
    g.edges()
        .iter()
        .map(|e| {
            (
                g.name(e.src).to_string(),
                g.name(e.dst).to_string(),
                g.system().name(e.label).to_string(),
                e.style,
            )
        })
        .collect()
}

pub fn lv_a3_trivial() -> SLabeledDigraph {
    build_lv(&type_a3(), &DiagramAutomorphism::identity(3), None).unwrap()
}

pub fn a3_twist(system: &CoxeterSystem) -> DiagramAutomorphism {
    system.automorphism_from_swaps(&[("r", "t")]).unwrap()
}

pub fn lv_a3_twisted() -> SLabeledDigraph {
    let a3 = type_a3();
    let star = a3_twist(&a3);
    build_lv(&a3, &star, None).unwrap()
}

pub fn lv_b3() -> SLabeledDigraph {
    build_lv(&type_b3(), &DiagramAutomorphism::identity(3), None).unwrap()
}

pub fn family_fixtures() -> Vec<(String, SLabeledDigraph)> {
    let mut out = Vec::new();
    for figure in 1..=8u8 {
        let ms: Vec<usize> = if figure >= 7 { vec![1] } else { (2..=5).collect() };
        for m in ms {
            let spec = FamilySpec::new(figure, m);
            let n = spec.smallest_n().max(2);
            out.push((
                format!("figure {figure}, m = {m}, n = {n}"),
                build_family_dihedral(figure, m, Some(n)).unwrap(),
            ));
        }
    }
    out
}

/// W-digraphs over finite groups used by the structural checks.
pub fn finite_fixtures() -> Vec<(String, SLabeledDigraph)> {
    let mut out = family_fixtures();
    let a = lv_a3_trivial();
    let b = lv_a3_twisted();
    out.push(("Γ_* of A3".into(), a.clone()));
    out.push(("Γ_# of A3".into(), b.clone()));
    out.push(("Γ_* of B3".into(), lv_b3()));
    out.push(("regular digraph of A3".into(), build_regular(&type_a3(), None).unwrap()));
    out.push(("Γ_* ⊔ Γ_# of A3".into(), a.disjoint_union(&b, "#").unwrap()));
    let f1 = build_family_dihedral(1, 3, Some(3)).unwrap();
    let f4 = build_family_dihedral(4, 2, Some(3)).unwrap();
    let f7 = build_family_dihedral(7, 1, Some(3)).unwrap();
    out.push((
        "figures 1 ⊔ 4 ⊔ 7 over I2(3)".into(),
        f1.disjoint_union(&f4, "x").unwrap().disjoint_union(&f7, "y").unwrap(),
    ));
    for name in ["b3_no_bar", "h3_nonselfassoc"] {
        out.push((name.into(), build_example(name).unwrap()));
    }
    out
}

pub fn affine_cycle() -> SLabeledDigraph {
    build_example("affine_a2_cycle").unwrap()
}

pub fn words_up_to(system: &Arc<CoxeterSystem>, len: usize) -> Vec<GroupElement> {
    let mut words = system.enumerate(Some(len)).unwrap().elements;
    if system.is_finite() {
        let w0 = system.longest_element().unwrap();
        if !words.contains(&w0) {
            words.push(w0);
        }
    }
    words
}
