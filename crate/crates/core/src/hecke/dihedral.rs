use std::sync::Arc;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::exactalg::{p_poly, rational, RatFunc};

use super::{HeckeElt, HeckeError, Result};

/// The parabolic subalgebra generated by `T_s, T_t` with `n = m(s,t)` finite.
///
/// `s_k = ⋯sts` has `k` factors with `s` on the right; `t_k` likewise.
#[derive(Clone, Debug)]
pub struct Dihedral {
    system: Arc<CoxeterSystem>,
    s: usize,
    t: usize,
    n: usize,
}

impl Dihedral {
    pub fn new(system: &Arc<CoxeterSystem>, s: usize, t: usize) -> Result<Self> {
        if s == t || s >= system.rank() || t >= system.rank() {
            return Err(HeckeError::Invalid("need two distinct generators".into()));
        }
        let n = system
            .m(s, t)
            .ok_or_else(|| HeckeError::Invalid("m(s,t) is infinite".into()))?;
        Ok(Dihedral {
            system: system.clone(),
            s,
            t,
            n: n as usize,
        })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Same subalgebra with the roles of `s` and `t` exchanged.
    pub fn swapped(&self) -> Dihedral {
        Dihedral {
            system: self.system.clone(),
            s: self.t,
            t: self.s,
            n: self.n,
        }
    }

    fn alternating(&self, right: usize, other: usize, k: usize) -> Result<GroupElement> {
        if k > self.n {
            return Err(HeckeError::Invalid(format!("length {k} exceeds n = {}", self.n)));
        }
        let word: Vec<usize> = (0..k)
            .map(|i| if (k - 1 - i).is_multiple_of(2) { right } else { other })
            .collect();
        Ok(self.system.element(&word)?)
    }

    pub fn s_k(&self, k: usize) -> Result<GroupElement> {
        self.alternating(self.s, self.t, k)
    }

    pub fn t_k(&self, k: usize) -> Result<GroupElement> {
        self.alternating(self.t, self.s, k)
    }

    pub fn longest(&self) -> Result<GroupElement> {
        self.s_k(self.n)
    }

    /// `σ_k = Σ_{ℓ(w) = k} T_w` over the dihedral subgroup.
    pub fn sigma(&self, k: usize) -> Result<HeckeElt> {
        let a = HeckeElt::t(&self.system, self.s_k(k)?);
        if k == 0 || k == self.n {
            return Ok(a);
        }
        a.add(&HeckeElt::t(&self.system, self.t_k(k)?))
    }

    /// `φ̃_j = Σ_{i=0}^{j} p_{j-i} σ_i`
    pub fn phi_tilde(&self, j: usize) -> Result<HeckeElt> {
        let mut acc = HeckeElt::zero(&self.system);
        for i in 0..=j {
            acc = acc.add(&self.sigma(i)?.scale(&RatFunc::from_poly(p_poly(j - i))))?;
        }
        Ok(acc)
    }

    fn weighted_phi(&self, j: usize, base: &RatFunc) -> Result<HeckeElt> {
        let mut acc = HeckeElt::zero(&self.system);
        for i in 0..=j {
            acc = acc.add(&self.phi_tilde(j - i)?.scale(&base.pow(i as i32)?))?;
        }
        Ok(acc)
    }

    /// `η̃_j = Σ_i u^i φ̃_{j-i}`
    pub fn eta_tilde(&self, j: usize) -> Result<HeckeElt> {
        self.weighted_phi(j, &RatFunc::u())
    }

    /// `γ̃_j = Σ_i (-u)^i φ̃_{j-i}`
    pub fn gamma_tilde(&self, j: usize) -> Result<HeckeElt> {
        self.weighted_phi(j, &-RatFunc::u())
    }

    /// `δ̃_j = (η̃_j + γ̃_j)/2`
    pub fn delta_tilde(&self, j: usize) -> Result<HeckeElt> {
        Ok(self
            .eta_tilde(j)?
            .add(&self.gamma_tilde(j)?)?
            .scale(&RatFunc::from_rational(rational(1, 2))))
    }

    /// `Σ_w (-u)^{n-ℓ(w)} T_w` over the dihedral subgroup.
    pub fn signed_sum(&self) -> Result<HeckeElt> {
        let mut acc = HeckeElt::zero(&self.system);
        let mu = -RatFunc::u();
        for k in 0..=self.n {
            acc = acc.add(&self.sigma(k)?.scale(&mu.pow((self.n - k) as i32)?))?;
        }
        Ok(acc)
    }
}

/// Explicit basis of a left ideal realising one of the figures 1-6.
#[derive(Clone, Debug)]
pub struct CaseBasis {
    pub dihedral: Dihedral,
    pub figure: u8,
    pub m: usize,
    /// `α_0..α_{m-1}, β_1..β_m`, the last reached along the right arc.
    pub vectors: Vec<HeckeElt>,
    pub names: Vec<String>,
    /// `β_m` as reached along the left arc.
    pub sink_from_left: HeckeElt,
}

/// Basis for figure `1..=6` with parameter `m`, inside `I2(n)` where `n` is
/// `m`, `2m-1` or `2m-2` according to the figure.
///
/// Both arcs start from the same generator and apply `T_x` or `T°_x` edge by
/// edge; the two resulting sinks are returned so that they can be compared.
pub fn case_basis(figure: u8, m: usize) -> Result<CaseBasis> {
    if m < 2 || !(1..=6).contains(&figure) {
        return Err(HeckeError::Invalid(format!("no case basis for figure {figure}, m = {m}")));
    }
    let n = match figure {
        1..=3 => m,
        4 | 5 => 2 * m - 1,
        _ => 2 * m - 2,
    };
    let system = Arc::new(CoxeterSystem::dihedral(Some(n as u32))?);
    let d = Dihedral::new(&system, 0, 1)?;
    let start = match figure {
        1..=3 => HeckeElt::one(&system),
        4 => d.eta_tilde(m - 1)?,
        5 => d.gamma_tilde(m - 1)?,
        _ => d.delta_tilde(m - 2)?,
    };
    // (left first, left last, right first, right last)
    let dashes = match figure {
        1 => (false, false, false, false),
        2 => (true, false, false, true),
        3 => (false, true, true, false),
        4 => (true, false, true, false),
        5 => (false, true, false, true),
        _ => (true, true, true, true),
    };
    let step = |v: &HeckeElt, x: usize, dashed: bool| -> Result<HeckeElt> {
        if dashed {
            HeckeElt::ts_circ(&system, x).mul(v)
        } else {
            v.left_mul_gen(x)
        }
    };
    let mut left = vec![start.clone()];
    for j in 0..m {
        let x = if j % 2 == 0 { d.s } else { d.t };
        let dashed = (j == 0 && dashes.0) || (j == m - 1 && dashes.1);
        let next = step(left.last().unwrap(), x, dashed)?;
        left.push(next);
    }
    let mut right = vec![start];
    for j in 0..m {
        let x = if j % 2 == 0 { d.t } else { d.s };
        let dashed = (j == 0 && dashes.2) || (j == m - 1 && dashes.3);
        let next = step(right.last().unwrap(), x, dashed)?;
        right.push(next);
    }
    let sink_from_left = left.pop().expect("m >= 1 steps");
    let mut vectors = left;
    vectors.extend(right.into_iter().skip(1));
    let names = (0..m)
        .map(|j| format!("α{j}"))
        .chain((1..=m).map(|j| format!("β{j}")))
        .collect();
    Ok(CaseBasis {
        dihedral: d,
        figure,
        m,
        vectors,
        names,
        sink_from_left,
    })
}
