//! Descent of real 1-forms on `ℂ^{n+1}` to projective space: radial
//! contraction, bihomogeneity, residue bookkeeping, and a generator for
//! forms `Re(κ dρ)` built from a rational first integral.

use num_traits::Zero;

use crate::classify::{model_b_form, LogDecomposition};
use crate::error::{Error, Result};
use crate::forms::{DForm, VField};
use crate::gauss::GaussRat;
use crate::gcd::gcd;
use crate::levi::{decompose, extract_holomorphic_sigma, form_witness, primitive_real_part};
use crate::poly::{Bidegree, Poly};
use crate::ratfun::RatFun;
use crate::report::Report;
use crate::space::{Flavor, VarSpace};

/// A real 1-form in homogeneous coordinates whose `η` part has
/// coefficients of bidegree `(d − 1, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveForm {
    pub omega: DForm,
    pub degree_d: u32,
}

fn require_type_10(eta: &DForm) -> Result<()> {
    if eta.degree() != 1 || !eta.only_first_block_differentials() {
        return Err(Error::Precondition("expected a 1-form of type (1,0)".into()));
    }
    Ok(())
}

/// `i_R η = 0` for the complex radial field `R = Σ z_j ∂/∂z_j`.
pub fn radial_check(eta: &DForm) -> Result<Report> {
    require_type_10(eta)?;
    let c = eta.contract(&VField::radial(eta.space()))?;
    let mut r = Report::new();
    r.check_zero("radial", "i_R eta = 0", c.is_zero(), form_witness(&c));
    Ok(r)
}

/// Every coefficient of `η` is a polynomial of bidegree exactly `(d − 1, d)`.
pub fn bidegree_check(eta: &DForm, d: u32) -> Result<Report> {
    if eta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut r = Report::new();
    let want = if d == 0 {
        None
    } else {
        Some(Bidegree::Pure(d - 1, d))
    };
    let mut bad = Vec::new();
    for (idx, c) in eta.terms() {
        let name = eta.space().diff_name(idx[0]);
        match c.as_poly() {
            None => bad.push(format!("{}: non-polynomial coefficient {}", name, c)),
            Some(p) => {
                let b = p.bidegree()?;
                if Some(b) != want {
                    bad.push(format!("{}: {} has bidegree {}", name, p, fmt_bidegree(b)));
                }
            }
        }
    }
    let detail = match want {
        Some(_) => format!("coefficients bihomogeneous of bidegree ({}, {})", d - 1, d),
        None => "d must be at least 1".to_string(),
    };
    r.check_zero("bidegree", &detail, bad.is_empty(), bad.join("; "));
    if d == 0 && bad.is_empty() {
        r.fail("bidegree.d", "d must be at least 1", "d = 0");
    }
    Ok(r)
}

fn fmt_bidegree(b: Bidegree) -> String {
    match b {
        Bidegree::Pure(p, q) => format!("({}, {})", p, q),
        Bidegree::Mixed => "mixed".into(),
    }
}

/// `Σ λ_j deg F_j = 0` and `deg G = Σ k_j deg F_j`.
pub fn residue_sum_check(dec: &LogDecomposition) -> Result<Report> {
    let mut degs = Vec::new();
    for f in &dec.pole_factors {
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::Precondition(format!("{} is not homogeneous", f)))?;
        degs.push(d);
    }
    let mut r = Report::new();
    let sum = dec
        .residues
        .iter()
        .zip(&degs)
        .fold(GaussRat::zero(), |acc, (l, &d)| &acc + &(l * &GaussRat::from_i64(d as i64)));
    r.check_zero(
        "residue_sum",
        "sum lambda_j deg F_j = 0",
        sum.is_zero(),
        &sum,
    );
    if dec.exact_num.is_zero() {
        r.info("exact_degree", "G = 0; degree condition vacuous");
    } else {
        let dg = dec
            .exact_num
            .homogeneous_degree()
            .ok_or_else(|| Error::Precondition(format!("{} is not homogeneous", dec.exact_num)))?;
        let want: u32 = dec.exponents.iter().zip(&degs).map(|(k, d)| k * d).sum();
        r.check_zero(
            "exact_degree",
            "deg G = sum k_j deg F_j",
            dg == want,
            format!("deg G = {}, sum k_j deg F_j = {}", dg, want),
        );
    }
    Ok(r)
}

/// Radial and bihomogeneity conditions for a real 1-form, with the degree
/// `d` inferred from the first coefficient of `η`.
pub fn descent_check(omega: &DForm) -> Result<(Option<ProjectiveForm>, Report)> {
    let dec = decompose(omega)?;
    let mut r = Report::new();
    r.absorb("radial", radial_check(&dec.eta)?);

    let rr = VField::real_radial(omega.space());
    let c1 = omega.contract(&rr)?;
    let c2 = dec.omega_sharp.contract(&rr)?;
    r.check_zero("real_radial.omega", "i_r omega = 0", c1.is_zero(), form_witness(&c1));
    r.check_zero("real_radial.omega_sharp", "i_r omega_sharp = 0", c2.is_zero(), form_witness(&c2));

    let first = dec
        .eta
        .terms()
        .next()
        .map(|(_, c)| c.clone())
        .ok_or(Error::ZeroPolynomial)?;
    let d = match first.as_poly().map(|p| p.bidegree()) {
        Some(Ok(Bidegree::Pure(_, q))) => q,
        _ => 0,
    };
    r.info("d", d.to_string());
    r.absorb("bidegree", bidegree_check(&dec.eta, d)?);

    if let Ok((phi, sigma)) = extract_holomorphic_sigma(&dec.eta) {
        let sdeg = sigma
            .terms()
            .map(|(_, c)| c.num().total_degree())
            .max()
            .unwrap_or(0);
        if sdeg >= 1 {
            let d0 = sdeg as i64 - 1;
            r.info("levi_degree", format!("d0 = {}", d0));
            if let Some(p) = phi.as_poly() {
                if let Ok(b) = p.bidegree() {
                    r.info("phi_bidegree", fmt_bidegree(b));
                }
            }
            let d = d as i64;
            r.info("bound.d0_le_d_plus_2", format!("{} <= {}: {}", d0, d + 2, d0 <= d + 2));
            r.info("bound.d0_le_d_minus_2", format!("{} <= {}: {}", d0, d - 2, d0 <= d - 2));
        }
    }
    let out = r.is_pass().then(|| ProjectiveForm {
        omega: omega.clone(),
        degree_d: d,
    });
    Ok((out, r))
}

/// Output of [`rational_integral_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalIntegral {
    pub omega: DForm,
    pub kappa: RatFun,
    pub rho: RatFun,
    /// `deg R(F, G)`.
    pub d: u32,
    /// Real factor divided out when cancellation was requested.
    pub removed: Poly,
}

fn holomorphic_homogeneous(p: &Poly, what: &str) -> Result<u32> {
    if p.uses_second_block() {
        return Err(Error::Precondition(format!("{} must be holomorphic", what)));
    }
    p.homogeneous_degree()
        .ok_or_else(|| Error::Precondition(format!("{} must be homogeneous", what)))
}

/// `ρ = F/G`, `κ = R(F,G)·conj(S(F,G))`, `ω = Re(κ dρ)`.
///
/// `F, G` live in homogeneous real-paired coordinates; `R, S` are binary
/// forms in a 2-variable space whose first-block variables play `u₁, u₂`.
pub fn rational_integral_form(f: &Poly, g: &Poly, r: &Poly, s: &Poly, cancel: bool) -> Result<RationalIntegral> {
    let space = f.space();
    if space.flavor != Flavor::RealPaired {
        return Err(Error::WrongFlavor {
            expected: Flavor::RealPaired,
            found: space.flavor,
        });
    }
    if g.space() != space {
        return Err(Error::SpaceMismatch(space, g.space()));
    }
    if r.space().n != 2 || s.space() != r.space() {
        return Err(Error::Precondition("R and S must be binary forms in u1, u2".into()));
    }
    let df = holomorphic_homogeneous(f, "F")?;
    let dg = holomorphic_homogeneous(g, "G")?;
    if df != dg {
        return Err(Error::Precondition("F and G must have the same degree".into()));
    }
    if !gcd(f, g).is_constant() {
        return Err(Error::Precondition("F and G must be coprime".into()));
    }
    let dr = holomorphic_homogeneous(r, "R")?;
    let ds = holomorphic_homogeneous(s, "S")?;
    if dr != ds {
        return Err(Error::Precondition("R and S must have the same degree".into()));
    }
    if !gcd(r, s).is_constant() {
        return Err(Error::Precondition("R and S must be coprime".into()));
    }
    let u2sq = Poly::var(r.space(), 1).pow(2);
    if r.exact_div(&u2sq).is_err() {
        return Err(Error::Precondition("u2^2 must divide R".into()));
    }
    let images = [f.clone(), g.clone(), f.conj()?, g.conj()?];
    let rfg = r.substitute(&images)?;
    let sfg = s.substitute(&images)?;
    let mut kappa = RatFun::from_poly(&rfg * &sfg.conj()?);
    let rho = RatFun::new(f.clone(), g.clone())?;
    let mut omega = model_b_form(&kappa, &rho)?;
    if !omega.is_polynomial() {
        return Err(Error::Precondition(
            "R(F,G) d(rho) did not clear to a polynomial form".into(),
        ));
    }
    let mut removed = Poly::one(space);
    if cancel {
        let (reduced, factor) = primitive_real_part(&omega)?;
        omega = reduced;
        kappa = &kappa / &RatFun::from_poly(factor.clone());
        removed = factor;
    }
    Ok(RationalIntegral {
        omega,
        kappa,
        rho,
        d: rfg.total_degree(),
        removed,
    })
}

/// The binary-form space for `R, S`.
pub fn binary_space() -> VarSpace {
    VarSpace::real(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::verify_model_b;
    use crate::levi::is_integrable;

    fn hs() -> VarSpace {
        VarSpace::homogeneous(3, Flavor::RealPaired)
    }

    fn z(i: usize) -> RatFun {
        RatFun::from_poly(Poly::var(hs(), i))
    }

    fn dz(i: usize) -> DForm {
        DForm::basis(hs(), i)
    }

    /// `z̄₁²(z₀dz₁ − z₁dz₀)`
    fn eta_model() -> DForm {
        (&dz(1).scale_fun(&z(0)) - &dz(0).scale_fun(&z(1))).scale_fun(&(&z(4) * &z(4)))
    }

    #[test]
    fn radial() {
        assert!(radial_check(&(&dz(2).scale_fun(&z(1)) - &dz(1).scale_fun(&z(2)))).unwrap().is_pass());
        assert!(!radial_check(&dz(1)).unwrap().is_pass());
        assert!(radial_check(&eta_model()).unwrap().is_pass());
    }

    #[test]
    fn bidegrees() {
        assert!(bidegree_check(&eta_model(), 2).unwrap().is_pass());
        assert!(!bidegree_check(&dz(0).scale_fun(&(&z(1) * &z(4))), 2).unwrap().is_pass());
        assert!(!bidegree_check(&dz(0), 1).unwrap().is_pass());
    }

    #[test]
    fn residues() {
        let p = |i| Poly::var(hs(), i);
        let l = |a: i64, b: i64| vec![GaussRat::from_i64(a), GaussRat::from_i64(b)];
        assert!(residue_sum_check(&LogDecomposition::logarithmic(l(1, -1), vec![p(0), p(1)])).unwrap().is_pass());
        assert!(!residue_sum_check(&LogDecomposition::logarithmic(l(1, 1), vec![p(0), p(1)])).unwrap().is_pass());
        assert!(residue_sum_check(&LogDecomposition::logarithmic(l(2, -1), vec![p(0), p(1).pow(2)])).unwrap().is_pass());
    }

    #[test]
    fn descent() {
        let omega = eta_model().re().unwrap();
        let (pf, rep) = descent_check(&omega).unwrap();
        assert!(rep.is_pass(), "{:?}", rep);
        assert_eq!(pf.unwrap().degree_d, 2);
        let (pf, rep) = descent_check(&dz(1).re().unwrap()).unwrap();
        assert!(pf.is_none());
        assert_eq!(rep.clause("radial.radial").unwrap().status, crate::report::Status::Fail);
        let (pf, rep) = descent_check(&(&dz(2).scale_fun(&z(1)) - &dz(1).scale_fun(&z(2))).re().unwrap()).unwrap();
        assert!(pf.is_none());
        assert_eq!(rep.clause("radial.radial").unwrap().status, crate::report::Status::Pass);
        assert!(!rep.is_pass());
    }

    #[test]
    fn rational_integral() {
        let b = binary_space();
        let u = |i| Poly::var(b, i);
        let f = Poly::var(hs(), 1);
        let g = Poly::var(hs(), 0);
        let ex = rational_integral_form(&f, &g, &u(1).pow(2), &u(0).pow(2), false).unwrap();
        assert_eq!(ex.kappa, &(&z(0) * &z(0)) * &(&z(4) * &z(4)));
        assert_eq!(ex.omega, eta_model().re().unwrap());
        assert_eq!(ex.d, 2);
        assert!(is_integrable(&ex.omega).unwrap().is_pass());
        assert!(verify_model_b(&ex.omega, &ex.kappa, &ex.rho).unwrap().is_pass());
        let (_, rep) = descent_check(&ex.omega).unwrap();
        assert!(rep.is_pass());

        let ex = rational_integral_form(&f, &g, &u(1).pow(2), &u(1).pow(2), false);
        assert!(ex.is_err(), "R and S share a factor");
        let ex = rational_integral_form(&f, &g, &u(1).pow(2), &(&u(0).pow(2) + &u(1).pow(2)), true).unwrap();
        assert!(verify_model_b(&ex.omega, &ex.kappa, &ex.rho).unwrap().is_pass());
        assert!(matches!(
            rational_integral_form(&f, &g, &u(0).pow(2), &u(1).pow(2), false),
            Err(Error::Precondition(_))
        ));
    }
}
