//! Levi decomposition of real 1-forms and the tests built on it.
//!
//! A real 1-form is `ω = (η + η̄)/2` with `η` of type (1,0); the Levi
//! distribution is `η = η̄ = 0`, and `ω♯ = (η − η̄)/2i`.

use crate::error::{Error, Result};
use crate::forms::DForm;
use crate::gauss::GaussRat;
use crate::gcd::{gcd, poly_lcm};
use crate::mirror::{common_real_factor, form_symmetry, ratfun_symmetry};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::report::Report;
use crate::space::{Flavor, VarSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub eta: DForm,
    pub omega_sharp: DForm,
    /// Present once a holomorphic `σ` with `η = φσ` has been extracted.
    pub phi: Option<RatFun>,
    pub sigma: Option<DForm>,
}

fn require_real_paired(space: VarSpace) -> Result<()> {
    if space.flavor != Flavor::RealPaired {
        return Err(Error::WrongFlavor {
            expected: Flavor::RealPaired,
            found: space.flavor,
        });
    }
    Ok(())
}

/// First nonzero coefficient numerator of a form, as a printable witness.
pub(crate) fn form_witness(a: &DForm) -> String {
    a.to_string()
}

/// Check `ω = ω̄`, reporting the conjugate difference otherwise.
pub fn require_real_form(omega: &DForm) -> Result<()> {
    require_real_paired(omega.space())?;
    let rep = form_symmetry(omega);
    if !rep.symmetric {
        return Err(Error::NotReal {
            witness: (omega - &omega.swap_conj()).to_string(),
        });
    }
    Ok(())
}

pub fn decompose(omega: &DForm) -> Result<LeviDecomposition> {
    if omega.degree() != 1 {
        return Err(Error::DegreeMismatch(1, omega.degree()));
    }
    require_real_form(omega)?;
    let eta = omega.type_part(1, 0)?.scale(&GaussRat::from_i64(2));
    let eta_bar = eta.conj()?;
    let inv_2i = GaussRat::from_parts(0, 2).inv().unwrap();
    let omega_sharp = (&eta - &eta_bar).scale(&inv_2i);
    debug_assert_eq!(&(&eta + &eta_bar).scale(&GaussRat::from_ratio(1, 2)), omega);
    Ok(LeviDecomposition {
        eta,
        omega_sharp,
        phi: None,
        sigma: None,
    })
}

/// Frobenius test `a ∧ da = 0`; the witness is the 3-form.
pub fn is_integrable(a: &DForm) -> Result<Report> {
    if a.degree() != 1 {
        return Err(Error::DegreeMismatch(1, a.degree()));
    }
    let w = a.wedge(&a.ext_d())?;
    let mut r = Report::new();
    r.check_zero("frobenius", "a /\\ da = 0", w.is_zero(), form_witness(&w));
    Ok(r)
}

/// The 2-form `η ∧ η̄`.
pub fn levi_distribution(dec: &LeviDecomposition) -> Result<DForm> {
    dec.eta.wedge(&dec.eta.conj()?)
}

/// Write `η = φσ` with `σ` holomorphic and coprime polynomial coefficients.
pub fn extract_holomorphic_sigma(eta: &DForm) -> Result<(RatFun, DForm)> {
    let space = eta.space();
    if eta.degree() != 1 || !eta.only_first_block_differentials() {
        return Err(Error::Precondition("expected a 1-form of type (1,0)".into()));
    }
    if eta.is_zero() {
        return Err(Error::Precondition("η vanishes identically".into()));
    }
    let coeffs = eta.coeffs1();
    let pivot = coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
    for c in &coeffs {
        let ratio = c / &pivot;
        if ratio.uses_second_block() {
            return Err(Error::NotHolomorphic {
                ratio: ratio.to_string(),
            });
        }
    }
    let l = coeffs
        .iter()
        .fold(Poly::one(space), |acc, c| poly_lcm(&acc, c.den()));
    let cleared: Vec<Poly> = coeffs
        .iter()
        .map(|c| (c * &RatFun::from_poly(l.clone())).into_poly())
        .collect::<Result<_>>()?;
    let g = cleared
        .iter()
        .fold(Poly::zero(space), |acc, p| gcd(&acc, p));
    let sigma_coeffs: Vec<RatFun> = cleared
        .iter()
        .map(|p| p.exact_div(&g).map(RatFun::from_poly))
        .collect::<Result<_>>()?;
    let sigma = DForm::one_form(space, sigma_coeffs);
    if sigma.uses_second_block() {
        return Err(Error::NotHolomorphic {
            ratio: sigma.to_string(),
        });
    }
    let phi = RatFun::new(g, l)?;
    debug_assert_eq!(sigma.scale_fun(&phi), *eta);
    Ok((phi, sigma))
}

/// [`decompose`] followed by [`extract_holomorphic_sigma`].
pub fn decompose_holomorphic(omega: &DForm) -> Result<LeviDecomposition> {
    let mut dec = decompose(omega)?;
    let (phi, sigma) = extract_holomorphic_sigma(&dec.eta)?;
    dec.phi = Some(phi);
    dec.sigma = Some(sigma);
    Ok(dec)
}

/// Whether the levels of the real function `f` contain the leaves of
/// `σ = 0`: `df ∧ σ ∧ σ̄ = 0`.
pub fn tangent_to_levels(f: &RatFun, sigma: &DForm) -> Result<Report> {
    require_real_paired(f.space())?;
    if f.space() != sigma.space() {
        return Err(Error::SpaceMismatch(f.space(), sigma.space()));
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let sym = ratfun_symmetry(f);
    if !sym.symmetric {
        return Err(Error::NotReal {
            witness: sym.witness.to_string(),
        });
    }
    if sigma.degree() != 1 || !sigma.only_first_block_differentials() {
        return Err(Error::Precondition("σ must be a 1-form of type (1,0)".into()));
    }
    let w = DForm::function(f.clone())
        .ext_d()
        .wedge(sigma)?
        .wedge(&sigma.conj()?)?;
    let mut r = Report::new();
    r.check_zero(
        "tangency",
        "df /\\ sigma /\\ conj(sigma) = 0",
        w.is_zero(),
        form_witness(&w),
    );
    Ok(r)
}

/// Divide a real 1-form by its real common factors until none is left.
/// Returns the reduced form and the product of the removed factors.
pub fn primitive_real_part(omega: &DForm) -> Result<(DForm, Poly)> {
    require_real_form(omega)?;
    let space = omega.space();
    let mut form = omega.clone();
    let mut removed = Poly::one(space);
    loop {
        let g = form
            .terms()
            .fold(Poly::zero(space), |acc, (_, c)| gcd(&acc, c.num()));
        if g.is_zero() || g.is_constant() {
            break;
        }
        match common_real_factor(&g)? {
            None => break,
            Some(r) => {
                let inv = RatFun::from_poly(r.clone()).inv()?;
                form = form.scale_fun(&inv);
                removed = &removed * &r;
            }
        }
    }
    Ok((form, removed))
}

/// Both sides of the logarithmic identity for `G: z₂dz₁ − λz₁dz₂`, `λ < 0`
/// an integer: `|z₁z₂|²·dP/P` with `P = |z₁ z₂^{−λ}|²`, and the expanded
/// real 1-form `z̄₁|z₂|²dz₁ + z₁|z₂|²dz̄₁ − λ|z₁|²z̄₂dz₂ − λ|z₁|²z₂dz̄₂`.
pub fn log_identity_sides(lambda: i64) -> Result<(DForm, DForm)> {
    if lambda >= 0 {
        return Err(Error::Precondition("λ must be a negative integer".into()));
    }
    let m = (-lambda) as u32;
    let s = VarSpace::real(2);
    let v = |i| Poly::var(s, i);
    let (z1, z2, zb1, zb2) = (v(0), v(1), v(2), v(3));
    let abs1 = &z1 * &zb1;
    let abs2 = &z2 * &zb2;
    let p = RatFun::from_poly(&abs1 * &abs2.pow(m));
    let dlog = DForm::function(p.clone()).ext_d().scale_fun(&p.inv()?);
    let lhs = dlog.scale_fun(&RatFun::from_poly(&abs1 * &abs2));
    let c = |p: Poly| RatFun::from_poly(p);
    let lam = GaussRat::from_i64(lambda);
    let rhs = DForm::one_form(
        s,
        vec![
            c(&zb1 * &abs2),
            c((&abs1 * &zb2).scale(&-&lam)),
            c(&z1 * &abs2),
            c((&abs1 * &z2).scale(&-&lam)),
        ],
    );
    Ok((lhs, rhs))
}

pub fn log_identity_check(lambda: i64) -> Result<Report> {
    let (lhs, rhs) = log_identity_sides(lambda)?;
    let diff = &lhs - &rhs;
    let mut r = Report::new();
    r.check_zero("identity", "expanded log-derivative matches", diff.is_zero(), diff);
    r.output("lhs", &lhs).output("rhs", &rhs);
    Ok(r)
}
