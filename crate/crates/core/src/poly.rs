//! Sparse multivariate polynomials over ℚ(i) in paired variable blocks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::space::{Flavor, VarSpace};

/// Exponent vector over all `2n` variables of a space: the first `n` entries
/// are `μ` (z-block), the last `n` are `ν` (z̄- or w-block).
///
/// The derived ordering is lexicographic with `z_1` most significant, which
/// is the monomial order used for leading terms everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[var] = exp;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn mu(&self, n: usize) -> &[u32] {
        &self.0[..n]
    }

    pub fn nu(&self, n: usize) -> &[u32] {
        &self.0[n..]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn bidegree(&self, n: usize) -> (u32, u32) {
        (self.mu(n).iter().sum(), self.nu(n).iter().sum())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect()))
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Exchange the two variable blocks: `z^μ w^ν ↦ z^ν w^μ`.
    pub fn swap_blocks(&self, n: usize) -> Monomial {
        let mut e = Vec::with_capacity(2 * n);
        e.extend_from_slice(&self.0[n..]);
        e.extend_from_slice(&self.0[..n]);
        Monomial(e)
    }
}

/// Polynomial in the variables of a [`VarSpace`]; zero coefficients are
/// never stored, so the term map is a canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    space: VarSpace,
    terms: BTreeMap<Monomial, GaussRat>,
}

/// Result of [`Poly::bidegree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bidegree {
    Pure(u32, u32),
    Mixed,
}

impl Poly {
    pub fn zero(space: VarSpace) -> Self {
        Poly {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        Poly::constant(space, GaussRat::one())
    }

    pub fn constant(space: VarSpace, c: GaussRat) -> Self {
        Poly::monomial(space, Monomial::one(space.nvars()), c)
    }

    pub fn from_i64(space: VarSpace, c: i64) -> Self {
        Poly::constant(space, GaussRat::from_i64(c))
    }

    pub fn monomial(space: VarSpace, m: Monomial, c: GaussRat) -> Self {
        assert_eq!(m.exps().len(), space.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { space, terms }
    }

    /// The coordinate function of variable `var` (0-based over both blocks).
    pub fn var(space: VarSpace, var: usize) -> Self {
        Poly::monomial(space, Monomial::var(space.nvars(), var, 1), GaussRat::one())
    }

    pub fn from_terms(space: VarSpace, terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut p = Poly::zero(space);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// `Some(c)` for constants (including zero).
    pub fn constant_value(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> GaussRat {
        self.terms
            .get(&Monomial::one(self.space.nvars()))
            .cloned()
            .unwrap_or_else(GaussRat::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically leading term. Panics on zero.
    pub fn leading_term(&self) -> (&Monomial, &GaussRat) {
        self.terms.iter().next_back().expect("leading term of zero polynomial")
    }

    pub fn leading_coeff(&self) -> GaussRat {
        self.leading_term().1.clone()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// True when some term involves a second-block variable (z̄ or w).
    pub fn uses_second_block(&self) -> bool {
        let n = self.space.n;
        (n..2 * n).any(|v| self.uses_var(v))
    }

    pub fn uses_first_block(&self) -> bool {
        (0..self.space.n).any(|v| self.uses_var(v))
    }

    /// Total degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn bidegree(&self) -> Result<Bidegree> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.space.n;
        let mut bds = self.terms.keys().map(|m| m.bidegree(n));
        let first = bds.next().unwrap();
        if bds.all(|b| b == first) {
            Ok(Bidegree::Pure(first.0, first.1))
        } else {
            Ok(Bidegree::Mixed)
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_space(&self, o: &Poly) -> Result<()> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch(self.space, o.space));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly> {
        self.check_space(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c);
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly> {
        self.check_space(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly> {
        self.check_space(o)?;
        let mut r = Poly::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.space);
        }
        Poly {
            space: self.space,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.space);
        }
        Poly {
            space: self.space,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.space);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / b`, or [`Error::NotDivisible`].
    pub fn exact_div(&self, b: &Poly) -> Result<Poly> {
        self.check_space(b)?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = b.constant_value() {
            return Ok(self.scale(&c.inv().unwrap()));
        }
        let (lm_b, lc_b) = b.leading_term();
        let lc_inv = lc_b.inv().unwrap();
        let mut q = Poly::zero(self.space);
        let mut r = self.clone();
        while !r.is_zero() {
            let (lm_r, lc_r) = r.leading_term();
            let m = lm_r.div(lm_b).ok_or(Error::NotDivisible)?;
            let c = lc_r * &lc_inv;
            r = &r - &b.mul_monomial(&m, &c);
            q.add_term(m, &c);
        }
        Ok(q)
    }

    /// Rescale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv().unwrap())
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut r = Poly::zero(self.space);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            r.add_term(Monomial::from_exps(exps), &(c * &GaussRat::from_i64(e as i64)));
        }
        r
    }

    /// Conjugate every coefficient and exchange the variable blocks. This is
    /// complex conjugation on `(z, z̄)` data and the mirror operator on
    /// `(z, w)` data.
    pub(crate) fn swap_conj(&self) -> Poly {
        let n = self.space.n;
        Poly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_blocks(n), c.conj()))
                .collect(),
        }
    }

    /// Complex conjugate of a real-paired polynomial: `a_{μν} z^μ z̄^ν ↦ ā_{μν} z^ν z̄^μ`.
    pub fn conj(&self) -> Result<Poly> {
        if self.space.flavor != Flavor::RealPaired {
            return Err(Error::WrongFlavor {
                expected: Flavor::RealPaired,
                found: self.space.flavor,
            });
        }
        Ok(self.swap_conj())
    }

    /// Same coefficients, relabelled into another space with identical
    /// variable count.
    pub(crate) fn with_space(&self, space: VarSpace) -> Poly {
        assert_eq!(space.nvars(), self.space.nvars());
        Poly {
            space,
            terms: self.terms.clone(),
        }
    }

    /// Coefficients of `self` as a polynomial in `var`: entry `k` multiplies
    /// `var^k`, and no entry involves `var`.
    pub fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.space); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            let k = exps[var] as usize;
            exps[var] = 0;
            out[k].add_term(Monomial::from_exps(exps), c);
        }
        out
    }

    /// The largest monomial dividing every term (component-wise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.space.nvars()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(k.div(m)?, c.clone());
        }
        Some(Poly {
            space: self.space,
            terms,
        })
    }

    /// Substitute `images[v]` for variable `v`; all images share a target
    /// space, which becomes the result's space.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.space.nvars());
        let target = images[0].space;
        for im in images {
            if im.space != target {
                return Err(Error::SpaceMismatch(target, im.space));
            }
        }
        let mut cache: Vec<Vec<Poly>> = vec![vec![Poly::one(target)]; images.len()];
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[v].len() <= e as usize {
                    let next = cache[v].last().unwrap() * &images[v];
                    cache[v].push(next);
                }
                t = &t * &cache[v][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Sub-sum of the terms whose monomials satisfy `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Poly arithmetic entry point mirroring the three ring operations.
    pub fn arith(&self, o: &Poly, op: ArithOp) -> Result<Poly> {
        match op {
            ArithOp::Add => self.try_add(o),
            ArithOp::Sub => self.try_sub(o),
            ArithOp::Mul => self.try_mul(o),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

// Operator impls panic on space mismatch; the `try_*` methods report it.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.try_add(o).expect("poly add")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.try_sub(o).expect("poly sub")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.try_mul(o).expect("poly mul")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&GaussRat::from_i64(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_monomial(space: &VarSpace, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(space.var_name(v)),
            _ => parts.push(format!("{}^{}", space.var_name(v), e)),
        }
    }
    parts.join("*")
}

/// Print `c * m` as a signed term: returns (negative, body).
pub(crate) fn fmt_term(space: &VarSpace, m: &Monomial, c: &GaussRat) -> (bool, String) {
    let neg = c.prints_negative();
    let c = if neg { -c } else { c.clone() };
    let mon = fmt_monomial(space, m);
    let body = if mon.is_empty() {
        c.to_string()
    } else if c.is_one() {
        mon
    } else {
        format!("{}*{}", c, mon)
    };
    (neg, body)
}

pub(crate) fn join_signed(parts: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s = join_signed(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| fmt_term(&self.space, m, c)),
        );
        write!(f, "{}", s)
    }
}
