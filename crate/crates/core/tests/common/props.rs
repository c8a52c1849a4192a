//! Property suites as named runner functions, so that both the test harness
//! and the acceptance target can drive them.

use super::*;
use lfk_core::levi::is_integrable;
use lfk_core::mirror::{
    complexify, complexify_form, decomplexify, decomplexify_form, is_real, is_star_symmetric,
    mirror_form, mirror_fun, mirror_ratfun,
};
use lfk_core::pencil::{member_integrability, pencil_condition, unit_rescale_theta, Pencil, PencilCert};
use lfk_core::{poly_gcd, DForm, GaussRat, Poly, RatFun, VField};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{TestError, TestRunner};

pub type Suite = fn(u32) -> Result<(), String>;

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    TestRunner::new(config(cases)).run(&strategy, test).map_err(|e| match e {
        TestError::Abort(why) => format!("aborted: {}", why),
        TestError::Fail(why, input) => format!("{} on {:?}", why, input),
    })
}

pub fn d_squared_vanishes(cases: u32) -> Result<(), String> {
    run(cases, form(real2()), |a| {
        prop_assert!(a.ext_d().ext_d().is_zero());
        Ok(())
    })?;
    run(cases, one_form(cplx2()), |a| {
        prop_assert!(a.ext_d().ext_d().is_zero());
        Ok(())
    })
}

pub fn leibniz(cases: u32) -> Result<(), String> {
    run(cases, (form(cplx2()), form(cplx2())), |(a, b)| {
        let lhs = a.wedge(&b).unwrap().ext_d();
        let sign = if a.degree() % 2 == 0 {
            GaussRat::from_i64(1)
        } else {
            GaussRat::from_i64(-1)
        };
        let rhs = &a.ext_d().wedge(&b).unwrap() + &a.wedge(&b.ext_d()).unwrap().scale(&sign);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn mirror_involution(cases: u32) -> Result<(), String> {
    let s = (poly(cplx2()), ratfun(cplx2()), form(cplx2()), form(real2()));
    run(cases, s, |(p, f, a, b)| {
        prop_assert_eq!(mirror_fun(&mirror_fun(&p)), p);
        prop_assert_eq!(mirror_ratfun(&mirror_ratfun(&f)), f);
        prop_assert_eq!(mirror_form(&mirror_form(&a)), a);
        prop_assert_eq!(mirror_form(&mirror_form(&b)), b);
        Ok(())
    })
}

pub fn complexify_round_trip(cases: u32) -> Result<(), String> {
    run(cases, (poly(real2()), form(real2())), |(p, a)| {
        prop_assert_eq!(decomplexify(&complexify(&p).unwrap()).unwrap(), p);
        prop_assert_eq!(decomplexify_form(&complexify_form(&a).unwrap()).unwrap(), a);
        Ok(())
    })
}

pub fn complexify_commutes_with_mirror(cases: u32) -> Result<(), String> {
    run(cases, poly(real2()), |p| {
        let lhs = complexify(&mirror_fun(&p)).unwrap();
        let rhs = mirror_fun(&complexify(&p).unwrap());
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn real_iff_star_symmetric(cases: u32) -> Result<(), String> {
    run(cases, (poly(real2()), any::<bool>()), |(p, symmetrize)| {
        let p = if symmetrize { &p + &p.conj().unwrap() } else { p };
        let real = is_real(&p).unwrap().symmetric;
        let sym = is_star_symmetric(&complexify(&p).unwrap()).unwrap().symmetric;
        prop_assert_eq!(real, sym);
        if symmetrize {
            prop_assert!(real);
        }
        Ok(())
    })
}

/// `(h df, h dg)` always spans an integrable pencil.
fn pencil_instance() -> impl Strategy<Value = (DForm, DForm)> {
    let s = cplx2();
    (poly_with(s, 3, 2), poly_with(s, 3, 2), poly_with(s, 2, 1)).prop_map(move |(f, g, h)| {
        let h = RatFun::from_poly(&Poly::one(s) + &h);
        let d = |p: Poly| DForm::from_poly(p).ext_d().scale_fun(&h);
        (d(f), d(g))
    })
}

pub fn pencil_members_are_integrable(cases: u32) -> Result<(), String> {
    let coeffs = prop::collection::vec((gauss(), gauss()), 20);
    run(cases, (pencil_instance(), coeffs), |((eta1, eta2), coeffs)| {
        prop_assert!(pencil_condition(&eta1, &eta2).unwrap().is_pass());
        let Ok(p) = Pencil::new(eta1, eta2) else {
            // η₁ ∧ η₂ = 0: not a pencil in the strict sense
            return Ok(());
        };
        for (a, b) in coeffs.iter().filter(|(a, b)| !(a.is_zero() && b.is_zero())) {
            prop_assert!(member_integrability(&p, a, b).unwrap().is_pass());
        }
        Ok(())
    })?;
    run(cases, (poly_one_form(cplx2()), poly_one_form(cplx2())), |(a, b)| {
        if pencil_condition(&a, &b).unwrap().is_pass() {
            prop_assert!(is_integrable(&a).unwrap().is_pass());
            prop_assert!(is_integrable(&b).unwrap().is_pass());
            prop_assert!(is_integrable(&(&a + &b)).unwrap().is_pass());
        }
        Ok(())
    })
}

pub fn curvature_invariant_under_unit_rescale(cases: u32) -> Result<(), String> {
    run(cases, (poly_one_form(cplx2()), poly_with(cplx2(), 2, 2)), |(theta, h)| {
        let h = RatFun::from_poly(&Poly::one(cplx2()) + &h);
        let cert = PencilCert::from_theta(theta);
        let scaled = unit_rescale_theta(&cert, &h).unwrap();
        prop_assert_eq!(scaled.curvature, cert.curvature);
        Ok(())
    })
}

pub fn conj_involution(cases: u32) -> Result<(), String> {
    run(cases, (poly(real2()), form(real2())), |(p, a)| {
        prop_assert_eq!(p.conj().unwrap().conj().unwrap(), p);
        prop_assert_eq!(a.conj().unwrap().conj().unwrap(), a);
        Ok(())
    })
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (poly(real2()), poly(real2()), poly(real2())), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
        Ok(())
    })
}

pub fn exact_division(cases: u32) -> Result<(), String> {
    run(cases, (poly(real2()), nonzero_poly(real2())), |(a, b)| {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        Ok(())
    })
}

pub fn gcd_divides_both(cases: u32) -> Result<(), String> {
    let s = (nonzero_poly(real2()), nonzero_poly(real2()), nonzero_poly(real2()));
    run(cases, s, |(a, b, c)| {
        let (a, b) = (&a * &c, &b * &c);
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(a.exact_div(&g).is_ok());
        prop_assert!(b.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c.monic()).is_ok(), "common factor {} not in gcd {}", c, g);
        Ok(())
    })
}

pub fn rational_field_axioms(cases: u32) -> Result<(), String> {
    run(cases, (ratfun(real2()), ratfun(real2())), |(f, g)| {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) / &g, f);
        }
        Ok(())
    })
}

pub fn contraction_is_an_antiderivation(cases: u32) -> Result<(), String> {
    let s = (
        poly_one_form(cplx2()),
        form(cplx2()).prop_filter("positive degree", |b| b.degree() > 0),
        prop::collection::vec(poly(cplx2()), 4),
    );
    run(cases, s, |(a, b, v)| {
        let v = VField::new(cplx2(), v.into_iter().map(RatFun::from_poly).collect()).unwrap();
        let lhs = a.wedge(&b).unwrap().contract(&v).unwrap();
        let rhs = &a.contract(&v).unwrap().wedge(&b).unwrap() - &a.wedge(&b.contract(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// The suites named by the acceptance criteria.
pub const ACCEPTANCE: [(&str, Suite); 8] = [
    ("d(d a) = 0", d_squared_vanishes),
    ("Leibniz rule for d over wedge", leibniz),
    ("mirror involution", mirror_involution),
    ("complexify/decomplexify round trip", complexify_round_trip),
    ("complexify commutes with mirror", complexify_commutes_with_mirror),
    ("is_real iff star-symmetric after complexify", real_iff_star_symmetric),
    ("pencil_condition implies member integrability", pencil_members_are_integrable),
    ("curvature invariant under unit rescale", curvature_invariant_under_unit_rescale),
];
