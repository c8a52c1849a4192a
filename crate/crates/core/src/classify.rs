//! From a real Levi-flat 1-form to its complexified pencil, and verifiers
//! for the two normal forms: `h|ψ|² Re(τ)` with `τ` closed, and `Re(κ dρ)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::DForm;
use crate::gauss::GaussRat;
use crate::gcd::gcd;
use crate::levi::{decompose, extract_holomorphic_sigma, form_witness, is_integrable, primitive_real_part};
use crate::mirror::{common_real_factor, complexify_form, form_symmetry, mirror_form, ratfun_symmetry};
use crate::pencil::{axis, certify, k_constancy, verify_theta, Pencil, PencilCert, SolverParams};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::report::Report;
use crate::space::Flavor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexifiedPencil {
    pub omega_c: DForm,
    pub eta_c: DForm,
    pub eta_c_star: DForm,
    pub pencil: Pencil,
    pub phi: RatFun,
    pub sigma: DForm,
}

/// `θ = Σ λ_j dF_j/F_j + d(G / Π F_j^{k_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDecomposition {
    pub residues: Vec<GaussRat>,
    pub pole_factors: Vec<Poly>,
    pub exact_num: Poly,
    pub exponents: Vec<u32>,
}

impl LogDecomposition {
    /// Residues only, no exact part.
    pub fn logarithmic(residues: Vec<GaussRat>, pole_factors: Vec<Poly>) -> Self {
        let space = pole_factors[0].space();
        let exponents = vec![0; pole_factors.len()];
        LogDecomposition {
            residues,
            pole_factors,
            exact_num: Poly::zero(space),
            exponents,
        }
    }

    /// The assembled right-hand side.
    pub fn assemble(&self) -> Result<DForm> {
        let n = self.pole_factors.len();
        if self.residues.len() != n || self.exponents.len() != n {
            return Err(Error::Precondition(
                "residues, pole factors and exponents must have equal length".into(),
            ));
        }
        let space = self.exact_num.space();
        let mut out = DForm::zero(space, 1);
        let mut den = Poly::one(space);
        for ((lam, f), &k) in self.residues.iter().zip(&self.pole_factors).zip(&self.exponents) {
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            let fr = RatFun::from_poly(f.clone());
            let dlog = DForm::function(fr.clone()).ext_d().scale_fun(&fr.inv()?);
            out = &out + &dlog.scale(lam);
            den = &den * &f.pow(k);
        }
        let exact = RatFun::new(self.exact_num.clone(), den)?;
        Ok(&out + &DForm::function(exact).ext_d())
    }
}

fn require_primitive(omega: &DForm) -> Result<()> {
    let (_, removed) = primitive_real_part(omega)?;
    if !removed.is_constant() {
        return Err(Error::NotPrimitive {
            factor: removed.to_string(),
        });
    }
    Ok(())
}

/// Complexify a real Levi-flat 1-form and split it into the pencil
/// `(η_ℂ, η*_ℂ)` with `ω_ℂ = (η_ℂ + η*_ℂ)/2`.
pub fn build_pencil(omega: &DForm) -> Result<ComplexifiedPencil> {
    let dec = decompose(omega)?;
    let integ = is_integrable(omega)?;
    if !integ.is_pass() {
        return Err(Error::Precondition(format!(
            "ω is not integrable: {}",
            integ.witness.unwrap_or_default()
        )));
    }
    require_primitive(omega)?;
    let (phi, sigma) = extract_holomorphic_sigma(&dec.eta)?;
    if !phi.num().is_constant() {
        if let Some(f) = common_real_factor(phi.num())? {
            return Err(Error::NotPrimitive { factor: f.to_string() });
        }
    }
    let omega_c = complexify_form(omega)?;
    let eta_c = complexify_form(&dec.eta)?;
    let eta_c_star = mirror_form(&eta_c);
    debug_assert_eq!(
        (&eta_c + &eta_c_star).scale(&GaussRat::from_ratio(1, 2)),
        omega_c
    );
    debug_assert!(form_symmetry(&omega_c).symmetric);
    let pencil = Pencil::new(eta_c.clone(), eta_c_star.clone())?;
    Ok(ComplexifiedPencil {
        omega_c,
        eta_c,
        eta_c_star,
        pencil,
        phi,
        sigma,
    })
}

/// `h ψψ̄ (τ + τ̄)/2`.
pub fn model_a_form(tau: &DForm, psi: &Poly, h: &RatFun) -> Result<DForm> {
    let abs = RatFun::from_poly(psi * &psi.conj()?);
    Ok(tau.re()?.scale_fun(&(h * &abs)))
}

/// `(κ dρ + κ̄ dρ̄)/2`.
pub fn model_b_form(kappa: &RatFun, rho: &RatFun) -> Result<DForm> {
    let drho = DForm::function(rho.clone()).ext_d();
    drho.scale_fun(kappa).re()
}

fn is_z_only_form(a: &DForm) -> bool {
    a.only_first_block_differentials() && !a.uses_second_block()
}

pub fn verify_model_a(omega: &DForm, tau: &DForm, psi: &Poly, h: &RatFun) -> Result<Report> {
    let space = omega.space();
    if space.flavor != Flavor::RealPaired {
        return Err(Error::WrongFlavor {
            expected: Flavor::RealPaired,
            found: space.flavor,
        });
    }
    let mut r = Report::new();
    let sym = ratfun_symmetry(h);
    r.check_zero("precondition.h_real", "h is real-valued", sym.symmetric, &sym.witness);
    let unit = !h.num().constant_term().is_zero() && !h.den().constant_term().is_zero();
    r.check_zero("precondition.h_unit", "h(0) != 0", unit, h);
    r.check_zero("precondition.tau_holomorphic", "tau depends on z only", is_z_only_form(tau), tau);

    let dtau = tau.ext_d();
    r.check_zero("closed", "d(tau) = 0", dtau.is_zero(), form_witness(&dtau));

    let psi_tau = tau.scale_fun(&RatFun::from_poly(psi.clone()));
    let pole_ok = psi_tau.is_polynomial()
        && gcd(
            &psi_tau.terms().fold(Poly::zero(space), |acc, (_, c)| gcd(&acc, c.num())),
            psi,
        )
        .is_constant();
    r.check_zero(
        "pole_equation",
        "psi*tau is polynomial and shares no factor with psi",
        pole_ok,
        &psi_tau,
    );

    let model = model_a_form(tau, psi, h)?;
    let diff = omega - &model;
    r.check_zero(
        "reconstruction",
        "omega = h |psi|^2 Re(tau)",
        diff.is_zero(),
        form_witness(&diff),
    );
    Ok(r)
}

pub fn verify_model_b(omega: &DForm, kappa: &RatFun, rho: &RatFun) -> Result<Report> {
    let mut r = Report::new();
    let rho_ok = !rho.is_constant() && !rho.uses_second_block();
    r.check_zero("precondition.rho", "rho is nonconstant and depends on z only", rho_ok, rho);

    let model = model_b_form(kappa, rho)?;
    let diff = omega - &model;
    r.check_zero(
        "reconstruction",
        "omega = Re(kappa d(rho))",
        diff.is_zero(),
        form_witness(&diff),
    );

    let ratio = kappa / &kappa.conj()?;
    let drho = DForm::function(rho.clone()).ext_d();
    let w = DForm::function(ratio)
        .ext_d()
        .wedge(&drho)?
        .wedge(&drho.conj()?)?;
    r.check_zero(
        "constancy",
        "d(kappa/conj(kappa)) /\\ d(rho) /\\ d(conj(rho)) = 0",
        w.is_zero(),
        form_witness(&w),
    );
    Ok(r)
}

pub fn verify_log_decomposition(theta: &DForm, dec: &LogDecomposition) -> Result<Report> {
    let mut r = Report::new();
    let fs = &dec.pole_factors;
    let mut coprime = true;
    let mut bad = String::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let g = gcd(&fs[i], &fs[j]);
            if !g.is_constant() && coprime {
                coprime = false;
                bad = g.to_string();
            }
        }
    }
    r.check_zero("precondition.coprime", "pole factors pairwise coprime", coprime, &bad);
    let rhs = dec.assemble()?;
    let diff = theta - &rhs;
    r.check_zero(
        "decomposition",
        "theta = sum lambda_j dF_j/F_j + d(G/prod F_j^k_j)",
        diff.is_zero(),
        form_witness(&diff),
    );
    let dtheta = theta.ext_d();
    r.check_zero("closed", "d(theta) = 0", dtheta.is_zero(), form_witness(&dtheta));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `dθ = 0`: candidate for `h|ψ|² Re(τ)`.
    ZeroCurvature,
    /// `dθ ≠ 0`: candidate for `Re(κ dρ)`.
    NonzeroCurvature,
}

#[derive(Clone, Debug)]
pub struct DichotomyReport {
    pub branch: Branch,
    pub pencil: ComplexifiedPencil,
    pub cert: PencilCert,
    pub theta_symmetric: bool,
    pub report: Report,
}

/// Build the pencil, solve its connection form and report which curvature
/// case holds.
pub fn curvature_dichotomy(omega: &DForm, params: &SolverParams) -> Result<DichotomyReport> {
    let cp = build_pencil(omega)?;
    let cert = certify(&cp.pencil, params)?;
    let mut r = Report::new();
    r.absorb("theta", verify_theta(&cp.pencil, &cert.theta)?);
    let theta_symmetric = form_symmetry(&cert.theta).symmetric;
    r.check_zero(
        "theta_symmetric",
        "theta = theta*",
        theta_symmetric,
        form_witness(&(&cert.theta - &mirror_form(&cert.theta))),
    );
    r.info("kernel_dim", cert.kernel_dim.to_string());
    r.output("theta", &cert.theta).output("curvature", &cert.curvature);
    let branch = if cert.curvature.is_zero() {
        r.info("branch", "zero curvature: closed-form model candidate");
        Branch::ZeroCurvature
    } else {
        let alpha = cert.alpha_or_zero();
        r.output("alpha", &alpha);
        if alpha.is_constant() {
            r.info("branch", "nonzero curvature with constant alpha");
        } else {
            r.info("branch", "nonzero curvature with nonconstant alpha: first-integral model candidate");
            if let Some(k) = &cert.k {
                r.output("k1", &k.0).output("k2", &k.1);
                r.absorb("k", k_constancy(&alpha, k, &cp.pencil)?);
            }
        }
        Branch::NonzeroCurvature
    };
    if let Some(mu) = &cert.mu {
        r.output("mu1", &mu.0).output("mu2", &mu.1);
    }
    r.output("axis", axis(&cp.pencil)?);
    Ok(DichotomyReport {
        branch,
        pencil: cp,
        cert,
        theta_symmetric,
        report: r,
    })
}
