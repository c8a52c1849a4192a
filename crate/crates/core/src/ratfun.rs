//! Rational functions in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::gcd::gcd;
use crate::poly::Poly;
use crate::space::VarSpace;

/// `num / den` with `gcd(num, den) = 1` and the lexicographically leading
/// coefficient of `den` equal to 1. Zero is `0 / 1`. The representation is
/// unique, so `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Normalizing constructor.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.space() != den.space() {
            return Err(Error::SpaceMismatch(num.space(), den.space()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        let space = num.space();
        if num.is_zero() {
            return RatFun::zero(space);
        }
        if let Some(c) = den.constant_value() {
            let inv = c.inv().unwrap();
            return RatFun {
                num: num.scale(&inv),
                den: Poly::one(space),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        Self::from_coprime(num, den)
    }

    /// Only rescales; caller guarantees coprimality.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.inv().unwrap();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero(space: VarSpace) -> Self {
        RatFun {
            num: Poly::zero(space),
            den: Poly::one(space),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        RatFun::from_poly(Poly::one(space))
    }

    pub fn from_poly(p: Poly) -> Self {
        let space = p.space();
        RatFun {
            num: p,
            den: Poly::one(space),
        }
    }

    pub fn constant(space: VarSpace, c: GaussRat) -> Self {
        RatFun::from_poly(Poly::constant(space, c))
    }

    pub fn from_i64(space: VarSpace, c: i64) -> Self {
        RatFun::from_poly(Poly::from_i64(space, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn space(&self) -> VarSpace {
        self.num.space()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<Poly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn uses_second_block(&self) -> bool {
        self.num.uses_second_block() || self.den.uses_second_block()
    }

    pub fn uses_first_block(&self) -> bool {
        self.num.uses_first_block() || self.den.uses_first_block()
    }

    pub fn scale(&self, c: &GaussRat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero(self.space());
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn powi(&self, e: i32) -> Result<RatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFun::from_coprime(base.num.pow(k), base.den.pow(k)))
    }

    fn check_space(&self, o: &RatFun) -> Result<()> {
        if self.space() != o.space() {
            return Err(Error::SpaceMismatch(self.space(), o.space()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &RatFun) -> Result<RatFun> {
        self.check_space(o)?;
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.den == o.den {
            return Ok(Self::normalize(&self.num + &o.num, self.den.clone()));
        }
        let g = gcd(&self.den, &o.den);
        let a = self.den.exact_div(&g).unwrap();
        let b = o.den.exact_div(&g).unwrap();
        let num = &(&self.num * &b) + &(&o.num * &a);
        let den = &a * &o.den;
        Ok(Self::normalize(num, den))
    }

    pub fn try_sub(&self, o: &RatFun) -> Result<RatFun> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &RatFun) -> Result<RatFun> {
        self.check_space(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(RatFun::zero(self.space()));
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Ok(RatFun::from_poly(&self.num * &o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let num = &self.num.exact_div(&g1).unwrap() * &o.num.exact_div(&g2).unwrap();
        let den = &self.den.exact_div(&g2).unwrap() * &o.den.exact_div(&g1).unwrap();
        Ok(Self::from_coprime(num, den))
    }

    pub fn try_div(&self, o: &RatFun) -> Result<RatFun> {
        self.try_mul(&o.inv()?)
    }

    pub fn derivative(&self, var: usize) -> RatFun {
        if self.is_polynomial() {
            return RatFun::from_poly(self.num.derivative(var));
        }
        let num = &(&self.num.derivative(var) * &self.den) - &(&self.num * &self.den.derivative(var));
        Self::normalize(num, self.den.pow(2))
    }

    /// Apply a coefficient-level polynomial map to both parts (conjugation,
    /// mirroring, relabelling); the result is renormalized.
    pub(crate) fn map_parts(&self, f: impl Fn(&Poly) -> Poly) -> RatFun {
        Self::from_coprime(f(&self.num), f(&self.den))
    }

    pub fn conj(&self) -> Result<RatFun> {
        Ok(Self::from_coprime(self.num.conj()?, self.den.conj()?))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        self.try_add(o).expect("ratfun add")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self.try_sub(o).expect("ratfun sub")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        self.try_mul(o).expect("ratfun mul")
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self.try_div(o).expect("ratfun div")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Entry point matching the normalization contract: `num / den` reduced.
pub fn ratfun_normalize(num: Poly, den: Poly) -> Result<RatFun> {
    RatFun::new(num, den)
}
