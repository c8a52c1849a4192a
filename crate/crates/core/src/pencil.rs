//! Pencils of integrable 1-forms `aη₁ + bη₂`: the pencil condition, the
//! connection form `θ` with `dη_i = θ ∧ η_i`, its curvature `dθ`, the axis
//! `η₁ ∧ η₂`, and the coefficient certificates of the curvature cases.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::DForm;
use crate::gauss::GaussRat;
use crate::gcd::{coprime_base, poly_lcm};
use crate::levi::{form_witness, is_integrable};
use crate::linsolve::{Eliminator, SparseRow};
use crate::mirror::form_symmetry;
use crate::poly::{Monomial, Poly};
use crate::ratfun::RatFun;
use crate::report::Report;
use crate::space::VarSpace;

/// Two 1-forms spanning an integrable pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub eta1: DForm,
    pub eta2: DForm,
}

impl Pencil {
    /// Validates degrees, independence, integrability of both members and the
    /// pencil condition.
    pub fn new(eta1: DForm, eta2: DForm) -> Result<Self> {
        let rep = pencil_condition(&eta1, &eta2)?;
        if !rep.is_pass() {
            return Err(Error::Precondition(format!(
                "not an integrable pencil: {}",
                rep.witness.unwrap_or_default()
            )));
        }
        let p = Pencil { eta1, eta2 };
        if p.axis_form()?.is_zero() {
            return Err(Error::Precondition("η₁ ∧ η₂ = 0".into()));
        }
        Ok(p)
    }

    pub fn space(&self) -> VarSpace {
        self.eta1.space()
    }

    fn axis_form(&self) -> Result<DForm> {
        self.eta1.wedge(&self.eta2)
    }
}

/// Connection form and the data derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilCert {
    pub theta: DForm,
    pub curvature: DForm,
    /// `dθ = α · η₁∧η₂`.
    pub alpha: Option<RatFun>,
    /// `θ = μ₁η₁ + μ₂η₂` (constant `α`).
    pub mu: Option<(RatFun, RatFun)>,
    /// `½dα/α + θ = k₁η₁ + k₂η₂` (nonconstant `α`).
    pub k: Option<(RatFun, RatFun)>,
    /// Dimension of the homogenized ansatz kernel; 1 means unique.
    pub kernel_dim: usize,
    pub denominator: Poly,
    pub degree_bound: u32,
}

impl PencilCert {
    /// A certificate for a given `θ`, with curvature computed.
    pub fn from_theta(theta: DForm) -> Self {
        let curvature = theta.ext_d();
        let space = theta.space();
        PencilCert {
            theta,
            curvature,
            alpha: None,
            mu: None,
            k: None,
            kernel_dim: 0,
            denominator: Poly::one(space),
            degree_bound: 0,
        }
    }
}

fn check_pair(eta1: &DForm, eta2: &DForm) -> Result<()> {
    if eta1.space() != eta2.space() {
        return Err(Error::SpaceMismatch(eta1.space(), eta2.space()));
    }
    for e in [eta1, eta2] {
        if e.degree() != 1 {
            return Err(Error::DegreeMismatch(1, e.degree()));
        }
    }
    Ok(())
}

/// `η₁∧dη₂ + η₂∧dη₁ = 0`, with each member's integrability as its own clause.
pub fn pencil_condition(eta1: &DForm, eta2: &DForm) -> Result<Report> {
    check_pair(eta1, eta2)?;
    let mut r = Report::new();
    r.absorb("eta1", is_integrable(eta1)?);
    r.absorb("eta2", is_integrable(eta2)?);
    let w = &eta1.wedge(&eta2.ext_d())? + &eta2.wedge(&eta1.ext_d())?;
    r.check_zero(
        "pencil",
        "eta1 /\\ d(eta2) + eta2 /\\ d(eta1) = 0",
        w.is_zero(),
        form_witness(&w),
    );
    Ok(r)
}

/// Integrability of the member `aη₁ + bη₂`.
pub fn member_integrability(p: &Pencil, a: &GaussRat, b: &GaussRat) -> Result<Report> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Precondition("(a, b) = (0, 0)".into()));
    }
    let m = &p.eta1.scale(a) + &p.eta2.scale(b);
    is_integrable(&m)
}

/// The 2-form `η₁ ∧ η₂`.
pub fn axis(p: &Pencil) -> Result<DForm> {
    let ax = p.axis_form()?;
    if ax.is_zero() {
        return Err(Error::Precondition("η₁ ∧ η₂ = 0".into()));
    }
    Ok(ax)
}

/// Ansatz parameters for [`solve_theta_with`].
#[derive(Clone, Debug, Default)]
pub struct SolverParams {
    pub degree_bound: Option<u32>,
    pub denominator: Option<Poly>,
    /// Extra attempts, each raising the degree bound by one.
    pub retries: u32,
}

fn ratfun_degree(f: &RatFun) -> u32 {
    f.num().total_degree().max(f.den().total_degree())
}

/// One more than the largest coefficient degree among `η₁, η₂`.
pub fn default_degree_bound(p: &Pencil) -> u32 {
    let d = [&p.eta1, &p.eta2]
        .iter()
        .flat_map(|e| e.terms().map(|(_, c)| ratfun_degree(c)))
        .max()
        .unwrap_or(0);
    d + 1
}

/// Product of the coprime, square-free factors of the axis coefficients and
/// of the denominators of `η₁, η₂`.
pub fn default_denominator(p: &Pencil) -> Result<Poly> {
    let ax = axis(p)?;
    let mut polys: Vec<Poly> = ax.terms().map(|(_, c)| c.num().clone()).collect();
    for e in [&p.eta1, &p.eta2] {
        polys.extend(e.terms().map(|(_, c)| c.den().clone()));
    }
    let base = coprime_base(&polys);
    Ok(base
        .iter()
        .fold(Poly::one(p.space()), |acc, f| &acc * f))
}

/// All monomials in `nvars` variables of total degree at most `bound`.
fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    fn rec(v: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == cur.len() {
            out.push(Monomial::from_exps(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[v] = e;
            rec(v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    rec(0, bound, &mut vec![0; nvars], &mut out);
    out
}

/// Multiply every coefficient by `m`, which must clear all denominators.
fn clear(a: &DForm, m: &Poly) -> Result<BTreeMap<Vec<usize>, Poly>> {
    let mf = RatFun::from_poly(m.clone());
    a.terms()
        .map(|(idx, c)| Ok((idx.clone(), (c * &mf).into_poly()?)))
        .collect()
}

fn lcm_of_dens(forms: &[&DForm]) -> Poly {
    let space = forms[0].space();
    forms
        .iter()
        .flat_map(|f| f.terms().map(|(_, c)| c.den().clone()))
        .fold(Poly::one(space), |acc, d| poly_lcm(&acc, &d))
}

/// Solve `dη_i = θ ∧ η_i` for `θ = Θ / denominator`, with `Θ` a 1-form of
/// polynomial coefficients of degree at most `degree_bound`.
///
/// The unknowns are the coefficients of `Θ` together with a scale `t`, and
/// the equations are `Θ ∧ η_i = t·denominator·dη_i`. A one-dimensional kernel
/// with `t ≠ 0` is the unique solution.
pub fn solve_theta(p: &Pencil, degree_bound: u32, denominator: &Poly) -> Result<PencilCert> {
    let space = p.space();
    if denominator.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if denominator.space() != space {
        return Err(Error::SpaceMismatch(space, denominator.space()));
    }
    let nvars = space.nvars();
    let monos = monomials_up_to(nvars, degree_bound);
    let nm = monos.len();
    let tcol = nvars * nm;

    let mut eqs: BTreeMap<(usize, Vec<usize>, Monomial), SparseRow> = BTreeMap::new();
    for (i, eta) in [&p.eta1, &p.eta2].into_iter().enumerate() {
        let deta = eta.ext_d();
        let m = lcm_of_dens(&[eta, &deta]);
        let eta_c = clear(eta, &m)?;
        let deta_c = clear(&deta, &(denominator * &m))?;
        for (idx, poly) in &eta_c {
            let j = idx[0];
            for k in 0..nvars {
                if k == j {
                    continue;
                }
                let (pair, sign) = if k < j { (vec![k, j], 1) } else { (vec![j, k], -1) };
                for (mono, c) in poly.terms() {
                    let c = if sign < 0 { -c } else { c.clone() };
                    for (mi, m) in monos.iter().enumerate() {
                        let key = (i, pair.clone(), mono.mul(m));
                        let e = eqs.entry(key).or_default();
                        let col = k * nm + mi;
                        let slot = e.entry(col).or_insert_with(GaussRat::zero);
                        *slot += &c;
                    }
                }
            }
        }
        for (idx, poly) in &deta_c {
            for (mono, c) in poly.terms() {
                let key = (i, idx.clone(), mono.clone());
                let e = eqs.entry(key).or_default();
                let slot = e.entry(tcol).or_insert_with(GaussRat::zero);
                *slot -= c;
            }
        }
    }

    let mut elim = Eliminator::new(tcol + 1);
    for (_, row) in eqs {
        elim.push(row);
    }
    let kernel = elim.kernel();
    let to_theta = |v: &[GaussRat]| -> DForm {
        let den = RatFun::from_poly(denominator.clone());
        let coeffs = (0..nvars)
            .map(|k| {
                let num = Poly::from_terms(
                    space,
                    monos
                        .iter()
                        .enumerate()
                        .map(|(mi, m)| (m.clone(), v[k * nm + mi].clone())),
                );
                &RatFun::from_poly(num) / &den
            })
            .collect();
        DForm::one_form(space, coeffs)
    };
    match kernel.len() {
        0 => Err(Error::NoSolution(format!(
            "no θ with numerator degree ≤ {} over denominator {}",
            degree_bound, denominator
        ))),
        1 => {
            let v = &kernel[0];
            let t = v[tcol].clone();
            if t.is_zero() {
                return Err(Error::NoSolution(
                    "ansatz kernel forces the scale to vanish".into(),
                ));
            }
            let inv = t.inv().unwrap();
            let scaled: Vec<GaussRat> = v.iter().map(|x| x * &inv).collect();
            let theta = to_theta(&scaled);
            for eta in [&p.eta1, &p.eta2] {
                debug_assert_eq!(theta.wedge(eta)?, eta.ext_d());
            }
            let mut cert = PencilCert::from_theta(theta);
            cert.kernel_dim = 1;
            cert.denominator = denominator.clone();
            cert.degree_bound = degree_bound;
            Ok(cert)
        }
        dim => Err(Error::Ambiguous {
            dimension: dim,
            basis: kernel
                .iter()
                .map(|v| format!("t = {}; Θ/denominator = {}", v[tcol], to_theta(v)))
                .collect(),
        }),
    }
}

/// [`solve_theta`] with default bound and denominator, retrying with larger
/// bounds on `NoSolution`.
pub fn solve_theta_with(p: &Pencil, params: &SolverParams) -> Result<PencilCert> {
    let den = match &params.denominator {
        Some(d) => d.clone(),
        None => default_denominator(p)?,
    };
    let mut bound = params.degree_bound.unwrap_or_else(|| default_degree_bound(p));
    let mut attempts = params.retries;
    loop {
        match solve_theta(p, bound, &den) {
            Err(Error::NoSolution(_)) if attempts > 0 => {
                attempts -= 1;
                bound += 1;
            }
            other => return other,
        }
    }
}

/// Check `dη_i = θ ∧ η_i` for both members, and `dθ ∧ η_i = 0`.
pub fn verify_theta(p: &Pencil, theta: &DForm) -> Result<Report> {
    let mut r = Report::new();
    for (name, eta) in [("eta1", &p.eta1), ("eta2", &p.eta2)] {
        let diff = &eta.ext_d() - &theta.wedge(eta)?;
        r.check_zero(
            &format!("connection.{}", name),
            "d(eta) = theta /\\ eta",
            diff.is_zero(),
            form_witness(&diff),
        );
    }
    let dtheta = theta.ext_d();
    for (name, eta) in [("eta1", &p.eta1), ("eta2", &p.eta2)] {
        let w = dtheta.wedge(eta)?;
        r.check_zero(
            &format!("curvature_wedge.{}", name),
            "d(theta) /\\ eta = 0",
            w.is_zero(),
            form_witness(&w),
        );
    }
    Ok(r)
}

/// `α` with `curvature = α · axis`.
pub fn collinearity_alpha(cert: &PencilCert, ax: &DForm) -> Result<RatFun> {
    let space = ax.space();
    if cert.curvature.is_zero() {
        return Ok(RatFun::zero(space));
    }
    let (idx, a0) = ax
        .terms()
        .next()
        .ok_or_else(|| Error::Precondition("axis is zero".into()))?;
    let alpha = &cert.curvature.coeff(idx) / a0;
    for (j, c) in cert.curvature.terms() {
        let expect = &ax.coeff(j) * &alpha;
        if &expect != c {
            let other = if ax.coeff(j).is_zero() {
                format!("{} against a zero axis coefficient", c)
            } else {
                (c / &ax.coeff(j)).to_string()
            };
            return Err(Error::NotCollinear(alpha.to_string(), other));
        }
    }
    for (j, _) in ax.terms() {
        if cert.curvature.coeff(j).is_zero() && !alpha.is_zero() {
            return Err(Error::NotCollinear(alpha.to_string(), "0".into()));
        }
    }
    Ok(alpha)
}

/// `dF ∧ η₁ ∧ η₂ = 0`: the axis is tangent to the levels of `F`.
pub fn axis_first_integral_check(f: &RatFun, p: &Pencil) -> Result<Report> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if f.space() != p.space() {
        return Err(Error::SpaceMismatch(f.space(), p.space()));
    }
    let w = DForm::function(f.clone()).ext_d().wedge(&axis(p)?)?;
    let mut r = Report::new();
    r.check_zero(
        "axis_first_integral",
        "dF /\\ eta1 /\\ eta2 = 0",
        w.is_zero(),
        form_witness(&w),
    );
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubcaseMode {
    /// `θ = μ₁η₁ + μ₂η₂`, for constant `α`.
    Mu,
    /// `½dα/α + θ = k₁η₁ + k₂η₂`, for nonconstant `α`.
    K,
}

/// Express `target = c₁η₁ + c₂η₂` via a nonvanishing 2×2 minor, then check
/// by substitution.
pub fn span_coefficients(target: &DForm, p: &Pencil) -> Result<(RatFun, RatFun)> {
    let a = p.eta1.coeffs1();
    let b = p.eta2.coeffs1();
    let t = target.coeffs1();
    let n = a.len();
    let mut minor = None;
    'outer: for j in 0..n {
        for l in j + 1..n {
            let det = &(&a[j] * &b[l]) - &(&a[l] * &b[j]);
            if !det.is_zero() {
                minor = Some((j, l, det));
                break 'outer;
            }
        }
    }
    let (j, l, det) = minor.ok_or_else(|| Error::Precondition("η₁ ∧ η₂ = 0".into()))?;
    let c1 = &(&(&t[j] * &b[l]) - &(&t[l] * &b[j])) / &det;
    let c2 = &(&(&a[j] * &t[l]) - &(&a[l] * &t[j])) / &det;
    let rebuilt = &p.eta1.scale_fun(&c1) + &p.eta2.scale_fun(&c2);
    let diff = target - &rebuilt;
    if !diff.is_zero() {
        return Err(Error::NoSolution(format!(
            "target is not in the span of the pencil; residual {}",
            diff
        )));
    }
    Ok((c1, c2))
}

/// The `μ` or `k` coefficient pair for `cert`, in the requested mode.
pub fn subcase_coefficients(cert: &PencilCert, p: &Pencil, mode: SubcaseMode) -> Result<(RatFun, RatFun)> {
    let space = p.space();
    let alpha = cert.alpha.clone().unwrap_or_else(|| RatFun::zero(space));
    match mode {
        SubcaseMode::Mu => {
            if !alpha.is_zero() && !alpha.is_constant() {
                return Err(Error::Precondition("mode MU needs a constant α".into()));
            }
            span_coefficients(&cert.theta, p)
        }
        SubcaseMode::K => {
            if alpha.is_constant() || alpha.is_zero() {
                return Err(Error::Precondition("mode K needs a nonconstant α".into()));
            }
            let dlog = DForm::function(alpha.clone())
                .ext_d()
                .scale_fun(&alpha.inv()?)
                .scale(&GaussRat::from_ratio(1, 2));
            span_coefficients(&(&dlog + &cert.theta), p)
        }
    }
}

/// Constancy of `k₁²/α` and `k₂²/α` along the axis.
pub fn k_constancy(alpha: &RatFun, k: &(RatFun, RatFun), p: &Pencil) -> Result<Report> {
    let ax = axis(p)?;
    let mut r = Report::new();
    for (name, ki) in [("k1_sq_over_alpha", &k.0), ("k2_sq_over_alpha", &k.1)] {
        let q = &(ki * ki) / alpha;
        let w = DForm::function(q).ext_d().wedge(&ax)?;
        r.check_zero(name, "d(k^2/alpha) /\\ eta1 /\\ eta2 = 0", w.is_zero(), form_witness(&w));
    }
    r.info(
        "third_quantity",
        "the third quantity in the constancy statement is unspecified; not checked",
    );
    Ok(r)
}

/// `θ ↦ θ + dh/h`, the connection form of the rescaled pencil.
pub fn unit_rescale_theta(cert: &PencilCert, h: &RatFun) -> Result<PencilCert> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dlog = DForm::function(h.clone()).ext_d().scale_fun(&h.inv()?);
    let theta = &cert.theta + &dlog;
    let mut out = PencilCert::from_theta(theta);
    out.kernel_dim = cert.kernel_dim;
    out.denominator = cert.denominator.clone();
    out.degree_bound = cert.degree_bound;
    Ok(out)
}

/// Solve `θ`, then fill curvature, `α` and the matching coefficient pair.
pub fn certify(p: &Pencil, params: &SolverParams) -> Result<PencilCert> {
    let mut cert = solve_theta_with(p, params)?;
    let ax = axis(p)?;
    let alpha = collinearity_alpha(&cert, &ax)?;
    if alpha.is_constant() || alpha.is_zero() {
        cert.mu = Some(subcase_coefficients(
            &PencilCert {
                alpha: Some(alpha.clone()),
                ..cert.clone()
            },
            p,
            SubcaseMode::Mu,
        )?);
    } else {
        cert.k = Some(subcase_coefficients(
            &PencilCert {
                alpha: Some(alpha.clone()),
                ..cert.clone()
            },
            p,
            SubcaseMode::K,
        )?);
    }
    cert.alpha = Some(alpha);
    Ok(cert)
}

/// Whether `θ = θ*`.
pub fn theta_is_symmetric(theta: &DForm) -> bool {
    form_symmetry(theta).symmetric
}

impl PencilCert {
    pub fn alpha_or_zero(&self) -> RatFun {
        self.alpha
            .clone()
            .unwrap_or_else(|| RatFun::zero(self.theta.space()))
    }

    pub fn is_flat(&self) -> bool {
        self.curvature.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mirror::mirror_form;
    use num_traits::One;

    fn cs() -> VarSpace {
        VarSpace::complexified(2)
    }

    fn v(i: usize) -> RatFun {
        RatFun::from_poly(Poly::var(cs(), i))
    }

    fn dx(i: usize) -> DForm {
        DForm::basis(cs(), i)
    }

    /// `η_ℂ = w₁w₂(z₂dz₁ + z₁dz₂)` and its mirror.
    fn closed_pencil() -> Pencil {
        let eta = (&dx(0).scale_fun(&v(1)) + &dx(1).scale_fun(&v(0))).scale_fun(&(&v(2) * &v(3)));
        let star = mirror_form(&eta);
        Pencil::new(eta, star).unwrap()
    }

    #[test]
    fn pencil_condition_examples() {
        assert!(pencil_condition(&dx(0), &dx(1)).unwrap().is_pass());
        let p = closed_pencil();
        assert!(pencil_condition(&p.eta1, &p.eta2).unwrap().is_pass());
        let s3 = VarSpace::complexified(3);
        let e2 = &DForm::basis(s3, 1).scale_fun(&RatFun::from_poly(Poly::var(s3, 0))) + &DForm::basis(s3, 2);
        let r = pencil_condition(&DForm::basis(s3, 0), &e2).unwrap();
        assert!(!r.is_pass());
        assert!(r.witness.is_some());
    }

    #[test]
    fn members() {
        let p = closed_pencil();
        for (a, b) in [(1, 0), (1, 1), (2, -3)] {
            let rep = member_integrability(&p, &GaussRat::from_i64(a), &GaussRat::from_i64(b)).unwrap();
            assert!(rep.is_pass());
        }
    }

    #[test]
    fn theta_of_closed_pencil() {
        let p = closed_pencil();
        let den = default_denominator(&p).unwrap();
        assert_eq!(den, Poly::from_terms(cs(), [(Monomial::from_exps(vec![1, 1, 1, 1]), GaussRat::one())]));
        let cert = certify(&p, &SolverParams::default()).unwrap();
        let psi = &(&v(0) * &v(1)) * &(&v(2) * &v(3));
        let expect = DForm::function(psi.clone()).ext_d().scale_fun(&psi.inv().unwrap());
        assert_eq!(cert.theta, expect);
        assert!(cert.curvature.is_zero());
        assert_eq!(cert.kernel_dim, 1);
        assert!(theta_is_symmetric(&cert.theta));
        assert!(verify_theta(&p, &cert.theta).unwrap().is_pass());
    }

    #[test]
    fn theta_of_closed_members_is_zero() {
        let p = Pencil::new(dx(0), dx(2)).unwrap();
        let cert = solve_theta_with(&p, &SolverParams::default()).unwrap();
        assert!(cert.theta.is_zero());
        assert_eq!(subcase_coefficients(&cert, &p, SubcaseMode::Mu).unwrap(), (RatFun::zero(cs()), RatFun::zero(cs())));
    }

    #[test]
    fn axis_examples() {
        let p = Pencil::new(dx(0), dx(1)).unwrap();
        assert_eq!(axis(&p).unwrap(), dx(0).wedge(&dx(1)).unwrap());
        let p = closed_pencil();
        let ax = axis(&p).unwrap();
        assert!(ax.wedge(&p.eta1).unwrap().is_zero());
        let psi = &(&v(0) * &v(1)) * &(&v(2) * &v(3));
        let expect = (&dx(0).scale_fun(&v(1)) + &dx(1).scale_fun(&v(0)))
            .wedge(&(&dx(2).scale_fun(&v(3)) + &dx(3).scale_fun(&v(2))))
            .unwrap()
            .scale_fun(&psi);
        assert_eq!(ax, expect);
        assert!(Pencil::new(dx(0), dx(0).scale(&GaussRat::from_i64(2))).is_err());
    }

    #[test]
    fn collinearity() {
        let p = Pencil::new(dx(0), dx(2)).unwrap();
        let ax = axis(&p).unwrap();
        let zero = PencilCert::from_theta(DForm::zero(cs(), 1));
        assert!(collinearity_alpha(&zero, &ax).unwrap().is_zero());
        let mut cert = PencilCert::from_theta(DForm::zero(cs(), 1));
        cert.curvature = ax.clone();
        assert!(collinearity_alpha(&cert, &ax).unwrap().is_one());
        cert.curvature = &ax + &dx(1).wedge(&dx(3)).unwrap();
        assert!(matches!(collinearity_alpha(&cert, &ax), Err(Error::NotCollinear(..))));
    }

    #[test]
    fn axis_first_integrals() {
        let s = VarSpace::complexified(2);
        let p = Pencil::new(dx(0).scale_fun(&v(2)), dx(2).scale_fun(&v(0))).unwrap();
        let f = &v(0) * &v(2);
        assert!(axis_first_integral_check(&f, &p).unwrap().is_pass());
        assert!(!axis_first_integral_check(&v(1), &p).unwrap().is_pass());
        let sym = (&f + &crate::mirror::mirror_ratfun(&f)).scale(&GaussRat::from_ratio(1, 2));
        assert!(axis_first_integral_check(&sym, &p).unwrap().is_pass());
        assert!(axis_first_integral_check(&RatFun::one(s), &p).is_err());
    }

    #[test]
    fn subcases() {
        let p = Pencil::new(dx(0), dx(2)).unwrap();
        let cert = PencilCert::from_theta(dx(0));
        assert_eq!(subcase_coefficients(&cert, &p, SubcaseMode::Mu).unwrap(), (RatFun::one(cs()), RatFun::zero(cs())));
        // synthetic certificate: α = z₁w₁, θ = z₂dz₁
        let mut cert = PencilCert::from_theta(dx(0).scale_fun(&v(1)));
        cert.alpha = Some(&v(0) * &v(2));
        let (k1, k2) = subcase_coefficients(&cert, &p, SubcaseMode::K).unwrap();
        let half = GaussRat::from_ratio(1, 2);
        assert_eq!(k1, &v(0).inv().unwrap().scale(&half) + &v(1));
        assert_eq!(k2, v(2).inv().unwrap().scale(&half));
        assert!(subcase_coefficients(&cert, &p, SubcaseMode::Mu).is_err());
        let off_span = PencilCert::from_theta(dx(1));
        assert!(matches!(subcase_coefficients(&off_span, &p, SubcaseMode::Mu), Err(Error::NoSolution(_))));
    }

    #[test]
    fn rescaling() {
        let cert = PencilCert::from_theta(DForm::zero(cs(), 1));
        assert_eq!(unit_rescale_theta(&cert, &RatFun::one(cs())).unwrap().theta, cert.theta);
        let h = &v(0) * &v(2);
        let r = unit_rescale_theta(&cert, &h).unwrap();
        assert_eq!(r.theta, &dx(0).scale_fun(&v(0).inv().unwrap()) + &dx(2).scale_fun(&v(2).inv().unwrap()));
        assert!(r.curvature.is_zero());
    }
}
