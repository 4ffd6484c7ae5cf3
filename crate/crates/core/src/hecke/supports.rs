use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::digraph::{Edge, EdgeStyle, SLabeledDigraph};
use crate::exactalg::{Poly, RatFunc, RatMatrix};

use super::{HeckeElt, HeckeError};

/// Sparse coordinate vector; zero coordinates are never stored.
pub type SparseVec<K> = BTreeMap<K, RatFunc>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SupportsError {
    #[error("the given vectors are linearly dependent")]
    Dependent,
    #[error("names and vectors differ in number")]
    NameCount,
    #[error("vertex {vertex}, generator {generator}: {hits} of T_s α, T_s⁻¹ α, T°_s α, (T°_s)⁻¹ α lie in the set (expected exactly one)")]
    NotSupported {
        vertex: String,
        generator: String,
        hits: usize,
    },
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

fn combine<K: Ord + Clone>(a: &RatFunc, v: &SparseVec<K>, b: &RatFunc, w: &SparseVec<K>) -> SparseVec<K> {
    let mut out: SparseVec<K> = BTreeMap::new();
    for (k, x) in v {
        let y = a * x;
        if !y.is_zero() {
            out.insert(k.clone(), y);
        }
    }
    for (k, x) in w {
        let y = b * x;
        let entry = out.entry(k.clone()).or_insert_with(RatFunc::zero);
        *entry += &y;
        if entry.is_zero() {
            out.remove(k);
        }
    }
    out
}

/// Supports digraph of a set `X` of vectors in an `H`-module, given the action
/// of each `T_s`.
///
/// For every `α ∈ X` and `s`, exactly one of `T_s α`, `T_s⁻¹ α`, `T°_s α`,
/// `(T°_s)⁻¹ α` must lie in `X`; the hit determines one edge.
pub fn supports_digraph_sparse<K, F>(
    system: &Arc<CoxeterSystem>,
    names: &[String],
    basis: &[SparseVec<K>],
    act: F,
) -> Result<SLabeledDigraph, SupportsError>
where
    K: Ord + Clone,
    F: Fn(usize, &SparseVec<K>) -> Result<SparseVec<K>, HeckeError>,
{
    if names.len() != basis.len() {
        return Err(SupportsError::NameCount);
    }
    let keys: Vec<K> = basis
        .iter()
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<K>>()
        .into_iter()
        .collect();
    let mut m = RatMatrix::zero(basis.len(), keys.len());
    for (i, v) in basis.iter().enumerate() {
        for (j, k) in keys.iter().enumerate() {
            if let Some(x) = v.get(k) {
                m.set(i, j, x.clone());
            }
        }
    }
    if m.rank() != basis.len() {
        return Err(SupportsError::Dependent);
    }

    let u = RatFunc::u();
    let inv = |p: &[i64]| RatFunc::from_poly(Poly::from_ints(p)).inv().expect("nonzero");
    let ts_inv = (RatFunc::u_pow(-2), RatFunc::from_poly(Poly::from_ints(&[1, 0, -1])) * RatFunc::u_pow(-2));
    let circ = (inv(&[1, 1]), -(&u * &inv(&[1, 1])));
    let circ_inv = (
        inv(&[0, -1, 1]),
        -(RatFunc::from_poly(Poly::from_ints(&[-1, -1, 1])) * inv(&[0, -1, 1])),
    );

    let mut edges = BTreeSet::new();
    for (a, alpha) in basis.iter().enumerate() {
        for s in 0..system.rank() {
            let ts = act(s, alpha)?;
            let candidates = [
                (ts.clone(), false, EdgeStyle::Solid),
                (combine(&ts_inv.0, &ts, &ts_inv.1, alpha), true, EdgeStyle::Solid),
                (combine(&circ.0, &ts, &circ.1, alpha), false, EdgeStyle::Dashed),
                (combine(&circ_inv.0, &ts, &circ_inv.1, alpha), true, EdgeStyle::Dashed),
            ];
            let mut hits = Vec::new();
            for (cand, reversed, style) in &candidates {
                for (b, beta) in basis.iter().enumerate() {
                    if cand == beta {
                        hits.push((b, *reversed, *style));
                    }
                }
            }
            match hits.as_slice() {
                [(b, reversed, style)] if *b != a => {
                    let (src, dst) = if *reversed { (*b, a) } else { (a, *b) };
                    edges.insert(Edge {
                        src,
                        dst,
                        label: s,
                        style: *style,
                    });
                }
                _ => {
                    return Err(SupportsError::NotSupported {
                        vertex: names[a].clone(),
                        generator: system.name(s).to_string(),
                        hits: hits.len(),
                    })
                }
            }
        }
    }
    Ok(SLabeledDigraph::new(system.clone(), names.to_vec(), edges.into_iter().collect()))
}

/// Supports digraph of a set of Hecke algebra elements under left multiplication.
pub fn supports_digraph(names: &[String], basis: &[HeckeElt]) -> Result<SLabeledDigraph, SupportsError> {
    let Some(first) = basis.first() else {
        return Err(SupportsError::Dependent);
    };
    let system = first.system().clone();
    let sparse: Vec<SparseVec<GroupElement>> = basis.iter().map(HeckeElt::to_sparse).collect();
    let sys = system.clone();
    supports_digraph_sparse(&system, names, &sparse, move |s, v| {
        let h = HeckeElt {
            system: sys.clone(),
            terms: v.clone(),
        };
        Ok(h.left_mul_gen(s)?.terms)
    })
}
