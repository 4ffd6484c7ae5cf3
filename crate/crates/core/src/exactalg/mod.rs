//! Exact arithmetic over `Q(u)`: polynomials, rational functions, dense matrices,
//! characteristic polynomials and simultaneous eigenspaces.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{solve_simultaneous_eigenspace, LambdaPoly, RatMatrix, RatVector};
pub use num::BigRational;
pub use poly::Poly;
pub use ratfunc::{FieldMap, RatFunc};

use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    Pole,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("rows of unequal length")]
    Ragged,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p_d = 1 + 2 Σ_{i=1}^{d-1} (-u^2)^i + (-u^2)^d`, with `p_0 = 1`.
pub fn p_poly(d: usize) -> Poly {
    if d == 0 {
        return Poly::one();
    }
    let mut c = vec![0i64; 2 * d + 1];
    c[0] = 1;
    for i in 1..d {
        c[2 * i] = if i % 2 == 0 { 2 } else { -2 };
    }
    c[2 * d] = if d.is_multiple_of(2) { 1 } else { -1 };
    Poly::from_ints(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_p_values() {
        assert_eq!(p_poly(0), Poly::one());
        assert_eq!(p_poly(1), Poly::from_ints(&[1, 0, -1]));
        assert_eq!(p_poly(2), Poly::from_ints(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn p_matches_sum() {
        let mu2 = Poly::from_ints(&[0, 0, -1]);
        for d in 1..8 {
            let mut direct = Poly::one();
            for i in 1..d {
                direct += &mu2.pow(i as u32).scale(&rational(2, 1));
            }
            direct += &mu2.pow(d as u32);
            assert_eq!(p_poly(d), direct);
        }
    }
}
