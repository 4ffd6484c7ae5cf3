//! Generic Iwahori-Hecke algebra over `Q(u)` with the quadratic relation
//! `(T_s - u^2)(T_s + 1) = 0`, its bar involution, and the dihedral
//! elements used to realise the two-generator families.

mod dihedral;
mod supports;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, DiagramAutomorphism, GroupElement, Side};
use crate::exactalg::{AlgError, FieldMap, Poly, RatFunc};

pub use dihedral::{case_basis, CaseBasis, Dihedral};
pub use supports::{supports_digraph, supports_digraph_sparse, SparseVec, SupportsError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, HeckeError>;

/// `Σ γ_w T_w` with finitely many nonzero coefficients.
#[derive(Clone)]
pub struct HeckeElt {
    system: Arc<CoxeterSystem>,
    terms: BTreeMap<GroupElement, RatFunc>,
}

impl PartialEq for HeckeElt {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.system == *other.system
    }
}

impl Eq for HeckeElt {}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(c)·T[w] + ...` in (length, ShortLex) order; zero prints as `0`.
impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})·T[{}]", self.system.format(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn u2() -> RatFunc {
    RatFunc::u_pow(2)
}

impl HeckeElt {
    pub fn zero(system: &Arc<CoxeterSystem>) -> Self {
        HeckeElt {
            system: system.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(system: &Arc<CoxeterSystem>, c: RatFunc) -> Self {
        HeckeElt::monomial(system, GroupElement::identity(), c)
    }

    pub fn one(system: &Arc<CoxeterSystem>) -> Self {
        HeckeElt::scalar(system, RatFunc::one())
    }

    pub fn t(system: &Arc<CoxeterSystem>, w: GroupElement) -> Self {
        HeckeElt::monomial(system, w, RatFunc::one())
    }

    pub fn t_gen(system: &Arc<CoxeterSystem>, s: usize) -> Self {
        HeckeElt::t(system, system.generator_element(s))
    }

    /// `T_w` for the element spelled by an arbitrary word.
    pub fn t_word(system: &Arc<CoxeterSystem>, word: &[usize]) -> Result<Self> {
        Ok(HeckeElt::t(system, system.element(word)?))
    }

    pub fn monomial(system: &Arc<CoxeterSystem>, w: GroupElement, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElt {
            system: system.clone(),
            terms,
        }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, RatFunc> {
        &self.terms
    }

    pub fn coefficient(&self, w: &GroupElement) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: GroupElement, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    fn check_same(&self, other: &HeckeElt) -> Result<()> {
        if Arc::ptr_eq(&self.system, &other.system) || *self.system == *other.system {
            Ok(())
        } else {
            Err(HeckeError::SystemMismatch)
        }
    }

    pub fn add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HeckeElt {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> HeckeElt {
        let mut out = HeckeElt::zero(&self.system);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), x * c);
        }
        out
    }

    /// `self + c` where `c` is a scalar multiple of `T_e`.
    pub fn add_scalar(&self, c: &RatFunc) -> HeckeElt {
        let mut out = self.clone();
        out.add_term(GroupElement::identity(), c);
        out
    }

    /// `T_s · self`
    pub fn left_mul_gen(&self, s: usize) -> Result<HeckeElt> {
        self.mul_gen(s, Side::Left)
    }

    /// `self · T_s`
    pub fn right_mul_gen(&self, s: usize) -> Result<HeckeElt> {
        self.mul_gen(s, Side::Right)
    }

    fn mul_gen(&self, s: usize, side: Side) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero(&self.system);
        let q = u2();
        let q1 = &q - &RatFunc::one();
        for (w, c) in &self.terms {
            let (sw, up) = self.system.mul_gen(w, s, side)?;
            if up {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &(c * &q));
                out.add_term(w.clone(), &(c * &q1));
            }
        }
        Ok(out)
    }

    /// `T_w · self`
    pub fn left_mul_t(&self, w: &GroupElement) -> Result<HeckeElt> {
        let mut out = self.clone();
        for &s in w.word().iter().rev() {
            out = out.left_mul_gen(s)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_same(other)?;
        let mut out = HeckeElt::zero(&self.system);
        for (x, c) in &self.terms {
            let part = other.left_mul_t(x)?.scale(c);
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// `T_s^{-1} = u^{-2} T_s + (u^{-2} - 1) T_e`
    pub fn ts_inverse(system: &Arc<CoxeterSystem>, s: usize) -> HeckeElt {
        let a = RatFunc::u_pow(-2);
        let b = &a - &RatFunc::one();
        HeckeElt::monomial(system, system.generator_element(s), a).add_scalar(&b)
    }

    /// `T°_s = (u+1)^{-1}(T_s - u)`
    pub fn ts_circ(system: &Arc<CoxeterSystem>, s: usize) -> HeckeElt {
        let k = RatFunc::from_poly(Poly::from_ints(&[1, 1])).inv().expect("u+1 is nonzero");
        HeckeElt::t_gen(system, s)
            .add_scalar(&-RatFunc::u())
            .scale(&k)
    }

    /// `(T°_s)^{-1} = (u^2-u)^{-1}(T_s - (u^2-u-1))`
    pub fn ts_circ_inverse(system: &Arc<CoxeterSystem>, s: usize) -> HeckeElt {
        let k = RatFunc::from_poly(Poly::from_ints(&[0, -1, 1])).inv().expect("u^2-u is nonzero");
        HeckeElt::t_gen(system, s)
            .add_scalar(&-RatFunc::from_poly(Poly::from_ints(&[-1, -1, 1])))
            .scale(&k)
    }

    /// `T_w^{-1} = T_{s_k}^{-1} ⋯ T_{s_1}^{-1}` for `w = s_1 ⋯ s_k`.
    pub fn tw_inverse(system: &Arc<CoxeterSystem>, w: &GroupElement) -> Result<HeckeElt> {
        let mut out = HeckeElt::one(system);
        let a = RatFunc::u_pow(-2);
        let b = &a - &RatFunc::one();
        for &s in w.word() {
            let ts = out.left_mul_gen(s)?;
            out = ts.scale(&a).add(&out.scale(&b))?;
        }
        Ok(out)
    }

    /// `Σ γ_w T_w ↦ Σ γ̄_w T_{w^{-1}}^{-1}`
    pub fn bar(&self) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero(&self.system);
        for (w, c) in &self.terms {
            let winv = self.system.inverse(w)?;
            let part = HeckeElt::tw_inverse(&self.system, &winv)?.scale(&c.bar());
            out = out.add(&part)?;
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, map: FieldMap) -> HeckeElt {
        let mut out = HeckeElt::zero(&self.system);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.apply(map));
        }
        out
    }

    /// Ring automorphism induced by a diagram automorphism.
    pub fn apply_automorphism(&self, a: &DiagramAutomorphism) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero(&self.system);
        for (w, c) in &self.terms {
            let aw = self.system.apply_automorphism(a, w)?;
            out.add_term(aw, c);
        }
        Ok(out)
    }

    /// Coordinates keyed by group element.
    pub fn to_sparse(&self) -> SparseVec<GroupElement> {
        self.terms.clone()
    }
}
