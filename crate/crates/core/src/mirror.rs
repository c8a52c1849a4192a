//! The mirror operator, complexification, and the realness and symmetry
//! tests built on them.
//!
//! On `(z, z̄)` data the mirror is complex conjugation with the blocks read
//! as `(w, w̄)`; on `(z, w)` data it is `Σ a_{μν} z^μ w^ν ↦ Σ ā_{μν} z^ν w^μ`.
//! Both are the same coefficient-level operation, which makes mirroring
//! commute with complexification.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::DForm;
use crate::gauss::GaussRat;
use crate::gcd::gcd;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::space::Flavor;

fn require(p: &Poly, flavor: Flavor) -> Result<()> {
    if p.space().flavor != flavor {
        return Err(Error::WrongFlavor {
            expected: flavor,
            found: p.space().flavor,
        });
    }
    Ok(())
}

pub fn mirror_fun(p: &Poly) -> Poly {
    p.swap_conj()
}

pub fn mirror_ratfun(f: &RatFun) -> RatFun {
    f.map_parts(|p| p.swap_conj())
}

/// Mirror coefficients and exchange `dz ↔ dw`, re-sorting wedge monomials.
pub fn mirror_form(a: &DForm) -> DForm {
    a.swap_conj()
}

/// `z̄ ↦ w` coefficientwise.
pub fn complexify(p: &Poly) -> Result<Poly> {
    require(p, Flavor::RealPaired)?;
    Ok(p.with_space(p.space().with_flavor(Flavor::Complexified)))
}

/// Inverse of [`complexify`].
pub fn decomplexify(p: &Poly) -> Result<Poly> {
    require(p, Flavor::Complexified)?;
    Ok(p.with_space(p.space().with_flavor(Flavor::RealPaired)))
}

pub fn complexify_ratfun(f: &RatFun) -> Result<RatFun> {
    require(f.num(), Flavor::RealPaired)?;
    let space = f.space().with_flavor(Flavor::Complexified);
    Ok(f.map_parts(|p| p.with_space(space)))
}

pub fn decomplexify_ratfun(f: &RatFun) -> Result<RatFun> {
    require(f.num(), Flavor::Complexified)?;
    let space = f.space().with_flavor(Flavor::RealPaired);
    Ok(f.map_parts(|p| p.with_space(space)))
}

/// `dz̄ ↦ dw` together with the coefficient map.
pub fn complexify_form(a: &DForm) -> Result<DForm> {
    if a.space().flavor != Flavor::RealPaired {
        return Err(Error::WrongFlavor {
            expected: Flavor::RealPaired,
            found: a.space().flavor,
        });
    }
    Ok(a.relabel(Flavor::Complexified))
}

pub fn decomplexify_form(a: &DForm) -> Result<DForm> {
    if a.space().flavor != Flavor::Complexified {
        return Err(Error::WrongFlavor {
            expected: Flavor::Complexified,
            found: a.space().flavor,
        });
    }
    Ok(a.relabel(Flavor::RealPaired))
}

/// Outcome of a fixed-point test; `witness` is `F − F*` and vanishes
/// exactly when `symmetric` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub witness: Poly,
}

impl SymmetryReport {
    fn from_witness(witness: Poly) -> Self {
        SymmetryReport {
            symmetric: witness.is_zero(),
            witness,
        }
    }
}

/// Real-valuedness: `p = conj(p)`.
pub fn is_real(p: &Poly) -> Result<SymmetryReport> {
    require(p, Flavor::RealPaired)?;
    Ok(SymmetryReport::from_witness(p - &p.swap_conj()))
}

/// `p = p*` on complexified data.
pub fn is_star_symmetric(p: &Poly) -> Result<SymmetryReport> {
    require(p, Flavor::Complexified)?;
    Ok(SymmetryReport::from_witness(p - &p.swap_conj()))
}

/// Realness (or mirror symmetry) of a quotient, by cross-multiplication:
/// the witness is `num·den* − num*·den`.
pub fn ratfun_symmetry(f: &RatFun) -> SymmetryReport {
    let (n, d) = (f.num(), f.den());
    SymmetryReport::from_witness(&(n * &d.swap_conj()) - &(&n.swap_conj() * d))
}

/// Mirror symmetry of a form: the witness is the first nonzero coefficient
/// cross-product of `a − a*`, or zero.
pub fn form_symmetry(a: &DForm) -> SymmetryReport {
    let diff = a - &a.swap_conj();
    let witness = diff
        .terms()
        .next()
        .map(|(_, c)| c.num().clone())
        .unwrap_or_else(|| Poly::zero(a.space()));
    SymmetryReport::from_witness(witness)
}

/// A mirror-symmetric rewriting `G̃ / H̃` of a symmetric quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricQuotient {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub g_tilde: Poly,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub h_tilde: Poly,
    /// The unit `c = H*/H` when it has no square root in ℚ(i); the parts
    /// are then returned unscaled.
    #[serde(serialize_with = "crate::report::ser_opt_display")]
    pub obstruction: Option<GaussRat>,
}

/// Rebalance `g / h` so both parts are mirror-symmetric.
///
/// The pair is taken raw: normalizing it into a [`RatFun`] would discard the
/// constant unit this operation is about.
pub fn symmetric_quotient(g: &Poly, h: &Poly) -> Result<SymmetricQuotient> {
    if g.space() != h.space() {
        return Err(Error::SpaceMismatch(g.space(), h.space()));
    }
    if h.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let witness = &(&g.swap_conj() * h) - &(g * &h.swap_conj());
    if !witness.is_zero() {
        return Err(Error::NotSymmetric {
            witness: witness.to_string(),
        });
    }
    if g.is_zero() {
        return Ok(SymmetricQuotient {
            g_tilde: g.clone(),
            h_tilde: Poly::one(h.space()),
            obstruction: None,
        });
    }
    // Remove a common factor so that H*/H is a constant; the factor is monic,
    // so the units of the input survive.
    let common = gcd(g, h);
    let g = g.exact_div(&common)?;
    let h = h.exact_div(&common)?;
    let hs = h.swap_conj();
    let (m, lc) = h.leading_term();
    let c = &hs
        .terms()
        .find(|(k, _)| *k == m)
        .map(|(_, v)| v.clone())
        .unwrap_or_else(GaussRat::zero)
        / lc;
    if hs != h.scale(&c) {
        return Err(Error::NotSymmetric {
            witness: (&hs - &h.scale(&c)).to_string(),
        });
    }
    match c.sqrt() {
        Some(alpha) => Ok(SymmetricQuotient {
            g_tilde: g.scale(&alpha),
            h_tilde: h.scale(&alpha),
            obstruction: None,
        }),
        None => Ok(SymmetricQuotient {
            g_tilde: g,
            h_tilde: h,
            obstruction: Some(c),
        }),
    }
}

/// Rescale `p` by a constant so that it becomes mirror-fixed, given that
/// `p* = c·p` for a constant `c` of modulus one.
pub(crate) fn make_fixed(p: &Poly) -> Option<Poly> {
    let ps = p.swap_conj();
    let (m, lc) = p.leading_term();
    let c = &ps
        .terms()
        .find(|(k, _)| *k == m)
        .map(|(_, v)| v.clone())?
        / lc;
    if ps != p.scale(&c) {
        return None;
    }
    // (αp)* = ᾱc·p, so α = 1 + c works unless c = −1.
    let one = GaussRat::one();
    if c.is_one() {
        return Some(p.clone());
    }
    let alpha = if (&c + &one).is_zero() {
        GaussRat::i()
    } else {
        &c + &one
    };
    Some(p.scale(&alpha))
}

/// A nonconstant real-valued polynomial dividing `phi`, computed as
/// `gcd(φ_ℂ, φ*_ℂ)` brought back to `(z, z̄)`. `None` when that gcd is a unit.
pub fn common_real_factor(phi: &Poly) -> Result<Option<Poly>> {
    require(phi, Flavor::RealPaired)?;
    if phi.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pc = complexify(phi)?;
    let g = gcd(&pc, &mirror_fun(&pc));
    if g.is_constant() {
        return Ok(None);
    }
    let real = make_fixed(&g).expect("gcd of a mirror pair is mirror-fixed up to a unit");
    Ok(Some(decomplexify(&real)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::VarSpace;

    fn c2(i: usize) -> Poly {
        Poly::var(VarSpace::complexified(2), i)
    }

    fn r2(i: usize) -> Poly {
        Poly::var(VarSpace::real(2), i)
    }

    #[test]
    fn mirror_examples() {
        let p = c2(0).scale(&GaussRat::from_parts(2, 1)) * c2(3);
        assert_eq!(mirror_fun(&p), c2(1).scale(&GaussRat::from_parts(2, -1)) * c2(2));
        let s = &c2(0) * &c2(2);
        assert_eq!(mirror_fun(&s), s);
        assert_eq!(mirror_fun(&mirror_fun(&p)), p);
    }

    #[test]
    fn mirror_form_examples() {
        let s = VarSpace::complexified(2);
        assert_eq!(mirror_form(&DForm::basis(s, 0)), DForm::basis(s, 2));
        // z₂ dz₁∧dw₁ ↦ w₂ dw₁∧dz₁ = −w₂ dz₁∧dw₁
        let a = DForm::basis(s, 0)
            .wedge(&DForm::basis(s, 2))
            .unwrap()
            .scale_fun(&RatFun::from_poly(c2(1)));
        let expect = DForm::basis(s, 0)
            .wedge(&DForm::basis(s, 2))
            .unwrap()
            .scale_fun(&RatFun::from_poly(-c2(3)));
        assert_eq!(mirror_form(&a), expect);
    }

    #[test]
    fn complexify_examples() {
        let zz = &r2(0) * &r2(2);
        assert_eq!(complexify(&zz).unwrap(), &c2(0) * &c2(2));
        let x1 = (&r2(0) + &r2(2)).scale(&GaussRat::from_ratio(1, 2));
        let cx = complexify(&x1).unwrap();
        assert_eq!(cx, (&c2(0) + &c2(2)).scale(&GaussRat::from_ratio(1, 2)));
        assert_eq!(decomplexify(&cx).unwrap(), x1);
        assert!(complexify(&cx).is_err());
    }

    #[test]
    fn realness() {
        assert!(is_real(&(&r2(0) + &r2(2))).unwrap().symmetric);
        let iz = r2(0).scale(&GaussRat::i());
        let rep = is_real(&iz).unwrap();
        assert!(!rep.symmetric);
        assert_eq!(rep.witness, (&r2(0) + &r2(2)).scale(&GaussRat::i()));
        assert!(is_real(&(&r2(0) * &r2(2))).unwrap().symmetric);
        assert!(is_star_symmetric(&(&c2(0) * &c2(2))).unwrap().symmetric);
        assert!(!is_star_symmetric(&c2(0)).unwrap().symmetric);
    }

    #[test]
    fn symmetric_quotients() {
        let one = Poly::one(VarSpace::complexified(2));
        let g = &c2(0) * &c2(2);
        let h = &one + &(&c2(1) * &c2(3));
        let q = symmetric_quotient(&g, &h).unwrap();
        assert_eq!((q.g_tilde.clone(), q.h_tilde.clone(), q.obstruction), (g.clone(), h.clone(), None));

        // H* = −H: rebalanced by α = ±i.
        let i = GaussRat::i();
        let q = symmetric_quotient(&g.scale(&i), &h.scale(&i)).unwrap();
        assert!(q.obstruction.is_none());
        assert!(is_star_symmetric(&q.g_tilde).unwrap().symmetric);
        assert!(is_star_symmetric(&q.h_tilde).unwrap().symmetric);
        assert_eq!(&q.g_tilde * &h, &g * &q.h_tilde);

        // H* = i·H: no square root of i in ℚ(i).
        let u = GaussRat::from_parts(1, -1);
        let q = symmetric_quotient(&g.scale(&u), &h.scale(&u)).unwrap();
        assert_eq!(q.obstruction, Some(GaussRat::i()));

        let q = symmetric_quotient(&-&g, &-&one).unwrap();
        assert!(q.obstruction.is_none());
        assert!(is_star_symmetric(&q.g_tilde).unwrap().symmetric);

        assert!(matches!(symmetric_quotient(&c2(0), &one), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn real_factors() {
        let zz = &r2(0) * &r2(2);
        assert_eq!(common_real_factor(&(&zz * &r2(1))).unwrap(), Some(zz));
        assert_eq!(common_real_factor(&r2(0)).unwrap(), None);
        assert_eq!(common_real_factor(&(&r2(0) * &r2(3))).unwrap(), None);
        let y = (&r2(0) - &r2(2)).scale(&GaussRat::i());
        let f = common_real_factor(&(&y * &r2(1))).unwrap().unwrap();
        assert!(is_real(&f).unwrap().symmetric);
        assert!(f.exact_div(&y).unwrap().is_constant());
        assert_eq!(common_real_factor(&Poly::zero(VarSpace::real(2))), Err(Error::ZeroPolynomial));
    }
}
