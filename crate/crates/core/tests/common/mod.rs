//! Seeded proptest strategies over small polynomials, rational functions and
//! forms.

#![allow(dead_code)]

pub mod oracle;
pub mod props;

use lfk_core::{DForm, Flavor, GaussRat, Monomial, Poly, RatFun, VarSpace};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_1e71),
        failure_persistence: None,
        max_shrink_iters: 256,
        ..Config::default()
    }
}

pub fn gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, -2i64..=2).prop_map(|(a, b)| GaussRat::from_parts(a, b))
}

pub fn poly_with(space: VarSpace, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
    let nv = space.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_exp, nv), gauss()), 0..=max_terms)
        .prop_map(move |terms| Poly::from_terms(space, terms.into_iter().map(|(e, c)| (Monomial::from_exps(e), c))))
}

pub fn poly(space: VarSpace) -> impl Strategy<Value = Poly> {
    poly_with(space, 3, 2)
}

pub fn nonzero_poly(space: VarSpace) -> impl Strategy<Value = Poly> {
    poly(space).prop_filter("nonzero", |p| !p.is_zero())
}

/// Denominators are kept to `1 + small` so that they never vanish identically.
pub fn ratfun(space: VarSpace) -> impl Strategy<Value = RatFun> {
    (poly(space), poly_with(space, 1, 1), any::<bool>()).prop_map(move |(n, d, polynomial)| {
        if polynomial {
            RatFun::from_poly(n)
        } else {
            RatFun::new(n, &Poly::one(space) + &d).unwrap_or_else(|_| RatFun::zero(space))
        }
    })
}

pub fn one_form(space: VarSpace) -> impl Strategy<Value = DForm> {
    prop::collection::vec(ratfun(space), space.nvars()).prop_map(move |c| DForm::one_form(space, c))
}

pub fn poly_one_form(space: VarSpace) -> impl Strategy<Value = DForm> {
    prop::collection::vec(poly(space), space.nvars())
        .prop_map(move |c| DForm::one_form(space, c.into_iter().map(RatFun::from_poly).collect()))
}

/// A function, 1-form or 2-form with polynomial coefficients.
pub fn form(space: VarSpace) -> impl Strategy<Value = DForm> {
    prop_oneof![
        poly(space).prop_map(DForm::from_poly),
        poly_one_form(space),
        (poly_one_form(space), poly_one_form(space)).prop_map(|(a, b)| a.wedge(&b).unwrap()),
    ]
}

pub fn real2() -> VarSpace {
    VarSpace::real(2)
}

pub fn cplx2() -> VarSpace {
    VarSpace::new(2, Flavor::Complexified)
}
