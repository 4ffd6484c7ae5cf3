use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use super::poly::Poly;
use super::AlgError;

/// Element of the field `Q(u)`.
///
/// Always stored in lowest terms with a monic denominator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Field automorphisms of `Q(u)` used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMap {
    /// `u -> -1/u`
    Sigma,
    /// `u -> 1/u`
    Bar,
    /// `u -> -u`
    Zeta,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn u() -> Self {
        RatFunc::from_poly(Poly::u())
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(Poly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `u^k` for any integer `k`.
    pub fn u_pow(k: i32) -> Self {
        let m = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFunc::from_poly(m)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `num/den` brought to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            let c = den.leading().recip();
            return RatFunc {
                num: num.scale(&c),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c = den.leading().recip();
        RatFunc {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFunc, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc, AlgError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc::reduce(self.num.scale(c), self.den.clone())
    }

    /// Value at `u = q`; fails at a pole.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational, AlgError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(AlgError::Pole);
        }
        Ok(self.num.eval(q) / d)
    }

    pub fn apply(&self, map: FieldMap) -> RatFunc {
        match map {
            FieldMap::Zeta => RatFunc::from_coprime(self.num.negate_var(), self.den.negate_var()),
            FieldMap::Bar => self.invert_variable(),
            FieldMap::Sigma => self.apply(FieldMap::Zeta).invert_variable(),
        }
    }

    /// Canonical form of `num/den` for coprime `num`, `den` up to a common power of `u`.
    fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let k = num.valuation().unwrap_or(0).min(den.valuation().unwrap_or(0));
        let (num, den) = if k > 0 {
            (Poly::from_coeffs(num.coeffs()[k..].to_vec()), Poly::from_coeffs(den.coeffs()[k..].to_vec()))
        } else {
            (num, den)
        };
        let c = den.leading().recip();
        RatFunc {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    fn invert_variable(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let num = self.num.reversed().shift(dd);
        let den = self.den.reversed().shift(dn);
        RatFunc::from_coprime(num, den)
    }

    pub fn sigma(&self) -> RatFunc {
        self.apply(FieldMap::Sigma)
    }

    pub fn bar(&self) -> RatFunc {
        self.apply(FieldMap::Bar)
    }

    pub fn zeta(&self) -> RatFunc {
        self.apply(FieldMap::Zeta)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        if rhs.is_zero() {
            return;
        }
        if self.den == rhs.den {
            let mut num = std::mem::take(&mut self.num);
            num += &rhs.num;
            let den = std::mem::take(&mut self.den);
            *self = if den.is_one() {
                RatFunc { num, den }
            } else {
                RatFunc::reduce(num, den)
            };
            return;
        }
        *self = RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        );
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self += &(-rhs);
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: Poly::one(),
            };
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to handle it.
impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(u)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl FromStr for Poly {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<Self, AlgError> {
        let mut p = Parser::new(s);
        let poly = p.poly()?;
        p.finish()?;
        Ok(poly)
    }
}

/// Accepts the output of `Display`: a polynomial, or `(poly)/(poly)`.
impl FromStr for RatFunc {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<Self, AlgError> {
        let mut p = Parser::new(s);
        let out = if p.peek() == Some('(') {
            p.bump();
            let num = p.poly()?;
            p.expect(')')?;
            p.expect('/')?;
            p.expect('(')?;
            let den = p.poly()?;
            p.expect(')')?;
            RatFunc::new(num, den)?
        } else {
            RatFunc::from_poly(p.poly()?)
        };
        p.finish()?;
        Ok(out)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err(&self, what: &str) -> AlgError {
        AlgError::Parse {
            position: self.pos,
            message: what.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), AlgError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn finish(&self) -> Result<(), AlgError> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("bad integer"))
    }

    fn poly(&mut self) -> Result<Poly, AlgError> {
        let mut acc = Poly::zero();
        let mut negative = false;
        if self.peek() == Some('-') {
            negative = true;
            self.bump();
        }
        loop {
            let term = self.term()?;
            if negative {
                acc -= &term;
            } else {
                acc += &term;
            }
            match self.peek() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Poly, AlgError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.integer()?;
            let d = if self.peek() == Some('/') && self.chars.get(self.pos + 1) != Some(&'(') {
                self.bump();
                self.integer()?
            } else {
                BigInt::one()
            };
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            let c = BigRational::new(n, d);
            if self.peek() == Some('*') {
                self.bump();
                if self.peek() != Some('u') {
                    return Err(self.err("expected 'u'"));
                }
            } else {
                return Ok(Poly::constant(c));
            }
            c
        } else {
            BigRational::one()
        };
        self.expect('u')?;
        let mut degree = 1usize;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.integer()?;
            degree = e.try_into().map_err(|_| self.err("exponent too large"))?;
        }
        Ok(Poly::monomial(coeff, degree))
    }
}
