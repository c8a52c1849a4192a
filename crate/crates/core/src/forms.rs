//! Differential forms with rational-function coefficients.
//!
//! Basis differentials are numbered like variables: `k < n` is `dz_k`,
//! `n + k` is `dz̄_k` (or `dw_k`). A wedge monomial is a strictly increasing
//! index list, so signs are canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::poly::{fmt_term, join_signed, Poly};
use crate::ratfun::RatFun;
use crate::space::{Flavor, VarSpace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DForm {
    space: VarSpace,
    degree: usize,
    terms: BTreeMap<Vec<usize>, RatFun>,
}

/// Sign of the permutation sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    Some(sign)
}

impl DForm {
    pub fn zero(space: VarSpace, degree: usize) -> Self {
        DForm {
            space,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A function viewed as a 0-form.
    pub fn function(f: RatFun) -> Self {
        let mut out = DForm::zero(f.space(), 0);
        out.add_term(Vec::new(), f);
        out
    }

    pub fn from_poly(p: Poly) -> Self {
        DForm::function(RatFun::from_poly(p))
    }

    /// The basis differential `d(var)`.
    pub fn basis(space: VarSpace, var: usize) -> Self {
        DForm::monomial(space, vec![var], RatFun::one(space)).unwrap()
    }

    /// `f · dx_{idx[0]} ∧ … ∧ dx_{idx[p-1]}`; the indices may be in any order.
    pub fn monomial(space: VarSpace, mut idx: Vec<usize>, f: RatFun) -> Result<Self> {
        if f.space() != space {
            return Err(Error::SpaceMismatch(space, f.space()));
        }
        let mut out = DForm::zero(space, idx.len());
        if let Some(s) = sort_sign(&mut idx) {
            out.add_term(idx, if s < 0 { -&f } else { f });
        }
        Ok(out)
    }

    /// One-form `Σ coeffs[k] d(var_k)` over all `2n` basis differentials.
    pub fn one_form(space: VarSpace, coeffs: Vec<RatFun>) -> Self {
        assert_eq!(coeffs.len(), space.nvars());
        let mut out = DForm::zero(space, 1);
        for (k, c) in coeffs.into_iter().enumerate() {
            out.add_term(vec![k], c);
        }
        out
    }

    fn add_term(&mut self, idx: Vec<usize>, f: RatFun) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            None => {
                self.terms.insert(idx, f);
            }
            Some(old) => {
                let s = &old + &f;
                if !s.is_zero() {
                    self.terms.insert(idx, s);
                }
            }
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RatFun)> {
        self.terms.iter()
    }

    /// Coefficient of the given (sorted) wedge monomial.
    pub fn coeff(&self, idx: &[usize]) -> RatFun {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(self.space))
    }

    /// Coefficient vector of a 1-form.
    pub fn coeffs1(&self) -> Vec<RatFun> {
        (0..self.space.nvars()).map(|k| self.coeff(&[k])).collect()
    }

    /// The function of a 0-form.
    pub fn as_function(&self) -> Option<RatFun> {
        (self.degree == 0).then(|| self.coeff(&[]))
    }

    fn check(&self, o: &DForm) -> Result<()> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch(self.space, o.space));
        }
        if self.degree != o.degree && !self.is_zero() && !o.is_zero() {
            return Err(Error::DegreeMismatch(self.degree, o.degree));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &DForm) -> Result<DForm> {
        self.check(o)?;
        if self.is_zero() {
            return Ok(o.clone());
        }
        let mut out = self.clone();
        for (idx, f) in &o.terms {
            out.add_term(idx.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &DForm) -> Result<DForm> {
        self.try_add(&-o)
    }

    /// Multiply by a function.
    pub fn scale_fun(&self, f: &RatFun) -> DForm {
        let mut out = DForm::zero(self.space, self.degree);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c * f);
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> DForm {
        let mut out = DForm::zero(self.space, self.degree);
        for (idx, f) in &self.terms {
            out.add_term(idx.clone(), f.scale(c));
        }
        out
    }

    pub fn wedge(&self, o: &DForm) -> Result<DForm> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch(self.space, o.space));
        }
        let mut out = DForm::zero(self.space, self.degree + o.degree);
        for (i, f) in &self.terms {
            for (j, g) in &o.terms {
                let mut idx: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
                if let Some(s) = sort_sign(&mut idx) {
                    let c = f * g;
                    out.add_term(idx, if s < 0 { -&c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative restricted to the variables selected by `keep`.
    fn d_over(&self, keep: impl Fn(usize) -> bool) -> DForm {
        let mut out = DForm::zero(self.space, self.degree + 1);
        for (idx, f) in &self.terms {
            for k in 0..self.space.nvars() {
                if !keep(k) || idx.contains(&k) {
                    continue;
                }
                let df = f.derivative(k);
                if df.is_zero() {
                    continue;
                }
                let pos = idx.iter().filter(|&&i| i < k).count();
                let mut new_idx = idx.clone();
                new_idx.insert(pos, k);
                out.add_term(new_idx, if pos % 2 == 1 { -&df } else { df });
            }
        }
        out
    }

    pub fn ext_d(&self) -> DForm {
        self.d_over(|_| true)
    }

    /// `(∂_z a, ∂_w a)` on complexified forms.
    pub fn split_d(&self) -> Result<(DForm, DForm)> {
        if self.space.flavor != Flavor::Complexified {
            return Err(Error::WrongFlavor {
                expected: Flavor::Complexified,
                found: self.space.flavor,
            });
        }
        let n = self.space.n;
        Ok((self.d_over(|k| k < n), self.d_over(|k| k >= n)))
    }

    /// Interior product `i_v a`.
    pub fn contract(&self, v: &VField) -> Result<DForm> {
        if self.space != v.space {
            return Err(Error::SpaceMismatch(self.space, v.space));
        }
        if self.degree == 0 {
            return Err(Error::Precondition("contraction needs degree at least 1".into()));
        }
        let mut out = DForm::zero(self.space, self.degree - 1);
        for (idx, f) in &self.terms {
            for (j, &k) in idx.iter().enumerate() {
                let vk = &v.components[k];
                if vk.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(j);
                let c = f * vk;
                out.add_term(rest, if j % 2 == 1 { -&c } else { c });
            }
        }
        Ok(out)
    }

    /// Terms with `p` first-block and `q` second-block differentials.
    pub fn type_part(&self, p: usize, q: usize) -> Result<DForm> {
        if p + q != self.degree {
            return Err(Error::Precondition(format!(
                "type ({},{}) does not match degree {}",
                p, q, self.degree
            )));
        }
        let n = self.space.n;
        let mut out = DForm::zero(self.space, self.degree);
        for (idx, f) in &self.terms {
            if idx.iter().filter(|&&i| i < n).count() == p {
                out.terms.insert(idx.clone(), f.clone());
            }
        }
        Ok(out)
    }

    /// Apply `f` to every coefficient and send basis index `k` to `perm(k)`,
    /// re-sorting with signs.
    pub(crate) fn map_terms(
        &self,
        space: VarSpace,
        f: impl Fn(&RatFun) -> RatFun,
        perm: impl Fn(usize) -> usize,
    ) -> DForm {
        let mut out = DForm::zero(space, self.degree);
        for (idx, c) in &self.terms {
            let mut new_idx: Vec<usize> = idx.iter().map(|&k| perm(k)).collect();
            let s = sort_sign(&mut new_idx).expect("permutation keeps indices distinct");
            let c = f(c);
            out.add_term(new_idx, if s < 0 { -&c } else { c });
        }
        out
    }

    /// Conjugate coefficients and exchange `dz ↔ dz̄` (or `dz ↔ dw`).
    pub(crate) fn swap_conj(&self) -> DForm {
        let space = self.space;
        self.map_terms(
            space,
            |c| c.map_parts(|p| p.swap_conj()),
            |k| space.partner(k),
        )
    }

    /// Complex conjugate of a real-paired form.
    pub fn conj(&self) -> Result<DForm> {
        if self.space.flavor != Flavor::RealPaired {
            return Err(Error::WrongFlavor {
                expected: Flavor::RealPaired,
                found: self.space.flavor,
            });
        }
        Ok(self.swap_conj())
    }

    /// `(a + ā) / 2`.
    pub fn re(&self) -> Result<DForm> {
        Ok((self + &self.conj()?).scale(&GaussRat::from_ratio(1, 2)))
    }

    /// `(a − ā) / 2i`.
    pub fn im(&self) -> Result<DForm> {
        let c = GaussRat::from_parts(0, 2).inv().unwrap();
        Ok((self - &self.conj()?).scale(&c))
    }

    /// Same coefficients in a space with the other flavor.
    pub(crate) fn relabel(&self, flavor: Flavor) -> DForm {
        let space = self.space.with_flavor(flavor);
        self.map_terms(space, |c| c.map_parts(|p| p.with_space(space)), |k| k)
    }

    /// Whether every coefficient is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(RatFun::is_polynomial)
    }

    /// Whether some coefficient involves a second-block variable.
    pub fn uses_second_block(&self) -> bool {
        self.terms.values().any(RatFun::uses_second_block)
    }

    pub fn uses_first_block(&self) -> bool {
        self.terms.values().any(RatFun::uses_first_block)
    }

    /// Whether every monomial uses only first-block differentials.
    pub fn only_first_block_differentials(&self) -> bool {
        let n = self.space.n;
        self.terms.keys().all(|idx| idx.iter().all(|&k| k < n))
    }
}

impl Add for &DForm {
    type Output = DForm;
    fn add(self, o: &DForm) -> DForm {
        self.try_add(o).expect("form add")
    }
}

impl Sub for &DForm {
    type Output = DForm;
    fn sub(self, o: &DForm) -> DForm {
        self.try_sub(o).expect("form sub")
    }
}

impl Neg for &DForm {
    type Output = DForm;
    fn neg(self) -> DForm {
        DForm {
            space: self.space,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, f)| (k.clone(), -f)).collect(),
        }
    }
}

fn fmt_coeff_term(f: &RatFun, wedge: &str) -> (bool, String) {
    let space = f.space();
    if f.is_polynomial() && f.num().num_terms() == 1 {
        let (m, c) = f.num().leading_term();
        let (neg, body) = fmt_term(&space, m, c);
        if wedge.is_empty() {
            return (neg, body);
        }
        let body = if m.is_one() && c.is_one() || m.is_one() && (-c).is_one() {
            wedge.to_string()
        } else {
            format!("{}*{}", body, wedge)
        };
        return (neg, body);
    }
    let neg = f.num().leading_coeff().prints_negative();
    let num = if neg { -f.num() } else { f.num().clone() };
    let coeff = if f.is_polynomial() {
        format!("({})", num)
    } else {
        format!("({})/({})", num, f.den())
    };
    if wedge.is_empty() {
        (neg, coeff)
    } else {
        (neg, format!("{}*{}", coeff, wedge))
    }
}

impl fmt::Display for DForm {
    /// Canonical spelling, e.g. `z2*dz1 - (z1 + 1)*dz2` or `dz1/\dzb1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(idx, c)| {
            let wedge = idx
                .iter()
                .map(|&k| self.space.diff_name(k))
                .collect::<Vec<_>>()
                .join("/\\");
            fmt_coeff_term(c, &wedge)
        });
        write!(f, "{}", join_signed(parts))
    }
}

/// A vector field `Σ v_k ∂/∂x_k` over all basis directions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VField {
    space: VarSpace,
    components: Vec<RatFun>,
}

impl VField {
    pub fn new(space: VarSpace, components: Vec<RatFun>) -> Result<Self> {
        if components.len() != space.nvars() {
            return Err(Error::Precondition(format!(
                "vector field needs {} components, got {}",
                space.nvars(),
                components.len()
            )));
        }
        Ok(VField { space, components })
    }

    /// Complex radial field `Σ z_j ∂/∂z_j`.
    pub fn radial(space: VarSpace) -> Self {
        let components = (0..space.nvars())
            .map(|k| {
                if k < space.n {
                    RatFun::from_poly(Poly::var(space, k))
                } else {
                    RatFun::zero(space)
                }
            })
            .collect();
        VField { space, components }
    }

    /// Real radial field `Σ z_j ∂/∂z_j + z̄_j ∂/∂z̄_j`.
    pub fn real_radial(space: VarSpace) -> Self {
        let components = (0..space.nvars())
            .map(|k| RatFun::from_poly(Poly::var(space, k)))
            .collect();
        VField { space, components }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn components(&self) -> &[RatFun] {
        &self.components
    }
}
