//! Coxeter systems given by a Coxeter matrix, with group elements stored as
//! ShortLex-minimal reduced words.
//!
//! Words are canonicalised by exploring the braid-move orbit of a reduced word,
//! which by Tits' solution of the word problem is the full set of reduced
//! expressions of the element. Orbits are memoised per system.

mod classify;
mod io;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

pub use classify::{classify_components, ComponentType};
pub use io::{SystemFile, SystemValue};

pub const DEFAULT_ORBIT_BOUND: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("invalid generator name '{0}'")]
    InvalidName(String),
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("invalid Coxeter matrix entry for ({0}, {1}): {2}")]
    InvalidEntry(String, String, String),
    #[error("braid orbit exceeded the safety bound of {0} words")]
    OrbitBound(usize),
    #[error("the group is infinite; a length bound is required")]
    Infinite,
    #[error("not a diagram automorphism: {0}")]
    NotAutomorphism(String),
    #[error("cannot parse word '{0}'")]
    BadWord(String),
    #[error("system file: {0}")]
    File(String),
}

pub type Result<T> = std::result::Result<T, CoxeterError>;

/// Reduced word in canonical (ShortLex-minimal) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupElement {
    word: Vec<usize>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { word: Vec::new() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Length first, then lexicographic in generator declaration order.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Default)]
struct Cache {
    orbits: HashMap<Vec<usize>, Arc<Vec<Vec<usize>>>>,
    products: HashMap<(Vec<usize>, usize, Side), (GroupElement, bool)>,
}

pub struct CoxeterSystem {
    names: Vec<String>,
    m: Vec<Vec<Option<u32>>>,
    orbit_bound: usize,
    cache: Mutex<Cache>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("names", &self.names)
            .field("m", &self.m)
            .finish()
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.m == other.m
    }
}

impl Eq for CoxeterSystem {}

impl Clone for CoxeterSystem {
    fn clone(&self) -> Self {
        CoxeterSystem {
            names: self.names.clone(),
            m: self.m.clone(),
            orbit_bound: self.orbit_bound,
            cache: Mutex::new(Cache::default()),
        }
    }
}

/// Finite group data returned by [`CoxeterSystem::enumerate`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Sorted by length, then ShortLex.
    pub elements: Vec<GroupElement>,
    /// True when every element of the group is listed.
    pub complete: bool,
    pub longest: Option<GroupElement>,
}

#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub j: Vec<usize>,
    pub w_j: Vec<GroupElement>,
    /// `{ w : ℓ(sw) > ℓ(w) for all s in J }`
    pub x_j: Vec<GroupElement>,
}

/// Permutation of the generators preserving the Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..rank).collect(),
        }
    }

    pub fn image(&self, s: usize) -> usize {
        self.perm[s]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl CoxeterSystem {
    /// `m` must be symmetric with ones on the diagonal; `None` means ∞.
    pub fn from_matrix(names: Vec<String>, m: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for n in &names {
            if !valid_name(n) {
                return Err(CoxeterError::InvalidName(n.clone()));
            }
            if !seen.insert(n.clone()) {
                return Err(CoxeterError::DuplicateGenerator(n.clone()));
            }
        }
        let k = names.len();
        if m.len() != k || m.iter().any(|r| r.len() != k) {
            return Err(CoxeterError::File("matrix size does not match generators".into()));
        }
        for i in 0..k {
            for j in 0..k {
                let ok = if i == j {
                    m[i][j] == Some(1)
                } else {
                    m[i][j] == m[j][i] && m[i][j].is_none_or(|v| v >= 2)
                };
                if !ok {
                    return Err(CoxeterError::InvalidEntry(
                        names[i].clone(),
                        names[j].clone(),
                        format!("{:?}", m[i][j]),
                    ));
                }
            }
        }
        Ok(CoxeterSystem {
            names,
            m,
            orbit_bound: DEFAULT_ORBIT_BOUND,
            cache: Mutex::new(Cache::default()),
        })
    }

    /// Pairs not listed commute.
    pub fn new(names: &[&str], pairs: &[(&str, &str, Option<u32>)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let k = names.len();
        let mut m = vec![vec![Some(2); k]; k];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        let idx = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| CoxeterError::UnknownGenerator(n.to_string()))
        };
        for &(a, b, v) in pairs {
            let (i, j) = (idx(a)?, idx(b)?);
            if i == j {
                return Err(CoxeterError::InvalidEntry(a.into(), b.into(), "diagonal".into()));
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        CoxeterSystem::from_matrix(names, m)
    }

    /// `I2(n)` on generators `s, t`; `None` gives the infinite dihedral group.
    pub fn dihedral(n: Option<u32>) -> Result<Self> {
        CoxeterSystem::new(&["s", "t"], &[("s", "t", n)])
    }

    pub fn with_orbit_bound(mut self, bound: usize) -> Self {
        self.orbit_bound = bound;
        self
    }

    pub fn orbit_bound(&self) -> usize {
        self.orbit_bound
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn generator(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CoxeterError::UnknownGenerator(name.to_string()))
    }

    /// `m(s,t)`, `None` for ∞.
    pub fn m(&self, s: usize, t: usize) -> Option<u32> {
        self.m[s][t]
    }

    pub fn matrix(&self) -> &[Vec<Option<u32>>] {
        &self.m
    }

    /// The parabolic subsystem `(W_J, J)` with generators in the order given.
    pub fn subsystem(&self, j: &[usize]) -> Result<CoxeterSystem> {
        let names = j.iter().map(|&s| self.names[s].clone()).collect();
        let m = j.iter().map(|&a| j.iter().map(|&b| self.m[a][b]).collect()).collect();
        Ok(CoxeterSystem::from_matrix(names, m)?.with_orbit_bound(self.orbit_bound))
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|&s| self.names[s].as_str()).collect()
    }

    pub fn format(&self, w: &GroupElement) -> String {
        self.format_word(&w.word)
    }

    /// Splits a word into generator names by longest match; `e` is the empty word.
    /// Whitespace, `.`, `*` and `,` are accepted as separators.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let t = text.trim();
        if t == "e" || t.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let c = rest.chars().next().unwrap();
            if c.is_whitespace() || matches!(c, '.' | '*' | ',') {
                rest = &rest[c.len_utf8()..];
                continue;
            }
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    out.push(i);
                    rest = &rest[n.len()..];
                }
                None => return Err(CoxeterError::BadWord(text.to_string())),
            }
        }
        Ok(out)
    }

    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let w = self.parse_word(text)?;
        self.element(&w)
    }

    pub fn generator_element(&self, s: usize) -> GroupElement {
        GroupElement { word: vec![s] }
    }

    /// All reduced words equal to the reduced word `word`, sorted.
    pub fn braid_orbit(&self, word: &[usize]) -> Result<Arc<Vec<Vec<usize>>>> {
        if let Some(o) = self.cache.lock().unwrap().orbits.get(word) {
            return Ok(o.clone());
        }
        let orbit = Arc::new(self.compute_orbit(word)?);
        let canonical = orbit[0].clone();
        let mut cache = self.cache.lock().unwrap();
        cache.orbits.insert(canonical, orbit.clone());
        Ok(orbit)
    }

    fn compute_orbit(&self, word: &[usize]) -> Result<Vec<Vec<usize>>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a == b {
                    continue;
                }
                let Some(k) = self.m[a][b] else { continue };
                let k = k as usize;
                if i + k > w.len() {
                    continue;
                }
                let alternates = (0..k).all(|j| w[i + j] == if j % 2 == 0 { a } else { b });
                if !alternates {
                    continue;
                }
                let mut v = w.clone();
                for j in 0..k {
                    v[i + j] = if j % 2 == 0 { b } else { a };
                }
                if seen.insert(v.clone()) {
                    if seen.len() > self.orbit_bound {
                        return Err(CoxeterError::OrbitBound(self.orbit_bound));
                    }
                    queue.push_back(v);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Product with a generator on the given side; the flag is true when the
    /// length goes up.
    pub fn mul_gen(&self, w: &GroupElement, s: usize, side: Side) -> Result<(GroupElement, bool)> {
        let key = (w.word.clone(), s, side);
        if let Some(r) = self.cache.lock().unwrap().products.get(&key) {
            return Ok(r.clone());
        }
        let orbit = self.braid_orbit(&w.word)?;
        let shorter = orbit
            .iter()
            .filter_map(|v| match side {
                Side::Right if v.last() == Some(&s) => Some(v[..v.len() - 1].to_vec()),
                Side::Left if v.first() == Some(&s) => Some(v[1..].to_vec()),
                _ => None,
            })
            .min();
        let result = match shorter {
            Some(v) => (GroupElement { word: v }, false),
            None => {
                let mut v = w.word.clone();
                match side {
                    Side::Right => v.push(s),
                    Side::Left => v.insert(0, s),
                }
                let o = self.braid_orbit(&v)?;
                (GroupElement { word: o[0].clone() }, true)
            }
        };
        self.cache.lock().unwrap().products.insert(key, result.clone());
        Ok(result)
    }

    pub fn is_descent(&self, w: &GroupElement, s: usize, side: Side) -> Result<bool> {
        Ok(!self.mul_gen(w, s, side)?.1)
    }

    /// Element represented by an arbitrary word.
    pub fn element(&self, word: &[usize]) -> Result<GroupElement> {
        for &s in word {
            if s >= self.rank() {
                return Err(CoxeterError::UnknownGenerator(format!("#{s}")));
            }
        }
        let mut w = GroupElement::identity();
        for &s in word {
            w = self.mul_gen(&w, s, Side::Right)?.0;
        }
        Ok(w)
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let mut w = x.clone();
        for &s in &y.word {
            w = self.mul_gen(&w, s, Side::Right)?.0;
        }
        Ok(w)
    }

    pub fn inverse(&self, w: &GroupElement) -> Result<GroupElement> {
        let orbit = self.braid_orbit(&w.word)?;
        let word = orbit
            .iter()
            .map(|v| v.iter().rev().copied().collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        Ok(GroupElement { word })
    }

    pub fn support(&self, w: &GroupElement) -> BTreeSet<usize> {
        w.word.iter().copied().collect()
    }

    pub fn is_finite(&self) -> bool {
        classify_components(self).iter().all(|(_, t)| t.is_some())
    }

    /// Elements of length at most `bound` (all of them when `bound` is `None`).
    pub fn enumerate(&self, bound: Option<usize>) -> Result<Enumeration> {
        if bound.is_none() && !self.is_finite() {
            return Err(CoxeterError::Infinite);
        }
        let mut elements = vec![GroupElement::identity()];
        let mut layer = vec![GroupElement::identity()];
        let mut complete = false;
        loop {
            if bound.is_some_and(|b| layer[0].length() >= b) {
                break;
            }
            let mut next = BTreeSet::new();
            for w in &layer {
                for s in 0..self.rank() {
                    let (ws, up) = self.mul_gen(w, s, Side::Right)?;
                    if up {
                        next.insert(ws);
                    }
                }
            }
            if next.is_empty() {
                complete = true;
                break;
            }
            layer = next.into_iter().collect();
            elements.extend(layer.iter().cloned());
        }
        if !complete && self.is_finite() {
            // The next layer may still be empty.
            complete = layer.iter().all(|w| {
                (0..self.rank()).all(|s| matches!(self.mul_gen(w, s, Side::Right), Ok((_, false))))
            });
        }
        let longest = complete.then(|| elements.last().cloned()).flatten();
        Ok(Enumeration {
            elements,
            complete,
            longest,
        })
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.enumerate(None)?.elements.len())
    }

    pub fn longest_element(&self) -> Result<GroupElement> {
        self.enumerate(None)?.longest.ok_or(CoxeterError::Infinite)
    }

    /// Bruhat order by the subword property, testing each reduced word of `x`
    /// against the canonical word of `y`.
    pub fn bruhat_leq(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        if x.length() > y.length() {
            return Ok(false);
        }
        if x.length() == y.length() {
            return Ok(x == y);
        }
        let orbit = self.braid_orbit(&x.word)?;
        Ok(orbit.iter().any(|v| is_subsequence(v, &y.word)))
    }

    pub fn parabolic_data(&self, j: &[usize], bound: Option<usize>) -> Result<ParabolicData> {
        let all = self.enumerate(bound)?;
        let jset: BTreeSet<usize> = j.iter().copied().collect();
        let mut w_j = Vec::new();
        let mut x_j = Vec::new();
        for w in &all.elements {
            if w.word.iter().all(|s| jset.contains(s)) {
                w_j.push(w.clone());
            }
            let mut distinguished = true;
            for &s in j {
                if self.is_descent(w, s, Side::Left)? {
                    distinguished = false;
                    break;
                }
            }
            if distinguished {
                x_j.push(w.clone());
            }
        }
        Ok(ParabolicData {
            j: j.to_vec(),
            w_j,
            x_j,
        })
    }

    pub fn automorphism(&self, perm: Vec<usize>) -> Result<DiagramAutomorphism> {
        let k = self.rank();
        if perm.len() != k {
            return Err(CoxeterError::NotAutomorphism("wrong length".into()));
        }
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || seen[p] {
                return Err(CoxeterError::NotAutomorphism("not a permutation".into()));
            }
            seen[p] = true;
        }
        for i in 0..k {
            for j in 0..k {
                if self.m[i][j] != self.m[perm[i]][perm[j]] {
                    return Err(CoxeterError::NotAutomorphism(format!(
                        "m({}, {}) is not preserved",
                        self.names[i], self.names[j]
                    )));
                }
            }
            if perm[perm[i]] != i {
                return Err(CoxeterError::NotAutomorphism("not an involution".into()));
            }
        }
        Ok(DiagramAutomorphism { perm })
    }

    /// Automorphism given as a list of `(a, b)` name swaps.
    pub fn automorphism_from_swaps(&self, swaps: &[(&str, &str)]) -> Result<DiagramAutomorphism> {
        let mut perm: Vec<usize> = (0..self.rank()).collect();
        for (a, b) in swaps {
            let (i, j) = (self.generator(a)?, self.generator(b)?);
            perm[i] = j;
            perm[j] = i;
        }
        self.automorphism(perm)
    }

    pub fn apply_automorphism(&self, a: &DiagramAutomorphism, w: &GroupElement) -> Result<GroupElement> {
        let word: Vec<usize> = w.word.iter().map(|&s| a.perm[s]).collect();
        let orbit = self.braid_orbit(&word)?;
        Ok(GroupElement {
            word: orbit[0].clone(),
        })
    }

    /// `{ x : x* = x⁻¹ }`, up to the length bound.
    pub fn twisted_involutions(
        &self,
        star: &DiagramAutomorphism,
        bound: Option<usize>,
    ) -> Result<Vec<GroupElement>> {
        let all = self.enumerate(bound)?;
        let mut out = Vec::new();
        for x in all.elements {
            if self.apply_automorphism(star, &x)? == self.inverse(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// `s ↦ w0 s* w0`.
    pub fn conjugate_by_longest(&self, star: &DiagramAutomorphism) -> Result<DiagramAutomorphism> {
        let w0 = self.longest_element()?;
        let mut perm = Vec::with_capacity(self.rank());
        for s in 0..self.rank() {
            let x = self.mul(&w0, &self.generator_element(star.perm[s]))?;
            let x = self.mul(&x, &w0)?;
            if x.length() != 1 {
                return Err(CoxeterError::NotAutomorphism("conjugate is not a generator".into()));
            }
            perm.push(x.word[0]);
        }
        self.automorphism(perm)
    }
}

fn valid_name(n: &str) -> bool {
    !n.is_empty()
        && n != "e"
        && n.chars().all(|c| !c.is_whitespace() && !matches!(c, '.' | '*' | ',' | '"'))
}

fn is_subsequence(needle: &[usize], hay: &[usize]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|x| it.any(|y| y == x))
}
