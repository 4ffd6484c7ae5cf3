use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::BigRational;

use super::ratfunc::{FieldMap, RatFunc};
use super::AlgError;

pub type RatVector = Vec<RatFunc>;

/// Dense row-major matrix over `Q(u)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &RatFunc) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self, AlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgError::Ragged);
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(d: &[RatFunc]) -> Self {
        let mut m = RatMatrix::zero(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RatFunc) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut RatFunc {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Result<RatFunc, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        let mut acc = RatFunc::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn apply_field_map(&self, map: FieldMap) -> RatMatrix {
        self.map(|x| x.apply(map))
    }

    /// Entrywise value at `u = q`, as a matrix of constants.
    pub fn eval(&self, q: &BigRational) -> Result<RatMatrix, AlgError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for x in &self.entries {
            entries.push(RatFunc::from_rational(x.eval(q)?));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &RatFunc) -> RatMatrix {
        self.map(|x| x * c)
    }

    pub fn checked_add(&self, rhs: &RatMatrix) -> Result<RatMatrix, AlgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgError::DimensionMismatch);
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &RatMatrix) -> Result<RatMatrix, AlgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgError::DimensionMismatch);
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix, AlgError> {
        if self.cols != rhs.rows {
            return Err(AlgError::DimensionMismatch);
        }
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<RatVector, AlgError> {
        if self.cols != v.len() {
            return Err(AlgError::DimensionMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Result<RatMatrix, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Reduced row echelon form, pivoting on the first nonzero entry in column order.
    /// Returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pr = m.get(r, j);
                    if pr.is_zero() {
                        continue;
                    }
                    let d = &f * pr;
                    *m.get_mut(i, j) -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<RatVector> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![RatFunc::zero(); self.cols];
            v[free] = RatFunc::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<RatMatrix, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        let n = self.rows;
        let mut aug = RatMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, RatFunc::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(AlgError::Singular);
        }
        let mut out = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(λI - M)` by the division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> Result<LambdaPoly, AlgError> {
        if !self.is_square() {
            return Err(AlgError::NotSquare);
        }
        let n = self.rows;
        // Highest-degree-first coefficient vector of the trailing block's polynomial.
        let mut p: Vec<RatFunc> = vec![RatFunc::one()];
        for k in (0..n).rev() {
            let size = n - k;
            let a = self.get(k, k);
            let r: Vec<&RatFunc> = (k + 1..n).map(|j| self.get(k, j)).collect();
            let mut col: RatVector = (k + 1..n).map(|i| self.get(i, k).clone()).collect();
            let mut t = Vec::with_capacity(size + 1);
            t.push(RatFunc::one());
            t.push(-a);
            for i in 2..=size {
                let mut dot = RatFunc::zero();
                for (x, y) in r.iter().zip(&col) {
                    if !x.is_zero() && !y.is_zero() {
                        dot += &(*x * y);
                    }
                }
                t.push(-dot);
                if i < size {
                    col = (k + 1..n)
                        .map(|ii| {
                            let mut acc = RatFunc::zero();
                            for (jj, y) in (k + 1..n).zip(&col) {
                                let x = self.get(ii, jj);
                                if !x.is_zero() && !y.is_zero() {
                                    acc += &(x * y);
                                }
                            }
                            acc
                        })
                        .collect();
                }
            }
            let mut next = vec![RatFunc::zero(); size + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && !pj.is_zero() && !t[i - j].is_zero() {
                        *slot += &(&t[i - j] * pj);
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(LambdaPoly::new(p))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add<&RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_add(rhs).expect("matrix dimensions differ")
    }
}

impl Sub<&RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_sub(rhs).expect("matrix dimensions differ")
    }
}

/// Panics on incompatible shapes; [`RatMatrix::checked_mul`] reports them instead.
impl Mul<&RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix dimensions differ")
    }
}

/// Polynomial in `λ` over `Q(u)`; `coeffs[i]` multiplies `λ^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LambdaPoly {
    coeffs: Vec<RatFunc>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `λ - root`
    pub fn linear(root: &RatFunc) -> Self {
        LambdaPoly::new(vec![-root, RatFunc::one()])
    }

    pub fn mul(&self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LambdaPoly::new(Vec::new());
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        LambdaPoly::new(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, AlgError>) -> Result<LambdaPoly, AlgError> {
        Ok(LambdaPoly::new(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// Coefficients evaluated at `u = q`.
    pub fn eval_u(&self, q: &BigRational) -> Result<LambdaPoly, AlgError> {
        self.map_coeffs(|c| Ok(RatFunc::from_rational(c.eval(q)?)))
    }

    /// `Σ c_i M^i`, for checking Cayley-Hamilton.
    pub fn eval_matrix(&self, m: &RatMatrix) -> Result<RatMatrix, AlgError> {
        if !m.is_square() {
            return Err(AlgError::NotSquare);
        }
        let mut acc = RatMatrix::zero(m.rows(), m.cols());
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(m)?.checked_add(&RatMatrix::scalar(m.rows(), c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{i}"),
            };
            if i == 0 {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        Ok(())
    }
}

/// Basis of `∩_i ker(M_i - λ_i I)` inside `Q(u)^dim`.
pub fn solve_simultaneous_eigenspace(
    dim: usize,
    pairs: &[(&RatMatrix, RatFunc)],
) -> Result<Vec<RatVector>, AlgError> {
    let mut stacked = RatMatrix::zero(dim * pairs.len(), dim);
    for (b, (m, lambda)) in pairs.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(AlgError::DimensionMismatch);
        }
        for i in 0..dim {
            for j in 0..dim {
                let mut x = m.get(i, j).clone();
                if i == j {
                    x -= lambda;
                }
                stacked.set(b * dim + i, j, x);
            }
        }
    }
    if pairs.is_empty() {
        return Ok((0..dim)
            .map(|i| {
                let mut v = vec![RatFunc::zero(); dim];
                v[i] = RatFunc::one();
                v
            })
            .collect());
    }
    Ok(stacked.nullspace())
}
