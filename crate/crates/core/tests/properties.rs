//! Algebraic invariants checked on seeded random instances.

mod common;

use common::props;

const CASES: u32 = 256;

macro_rules! suites {
    ($($name:ident),* $(,)?) => {$(
        #[test]
        fn $name() {
            if let Err(e) = props::$name(CASES) {
                panic!("{}", e);
            }
        }
    )*};
}

suites!(
    d_squared_vanishes,
    leibniz,
    mirror_involution,
    complexify_round_trip,
    complexify_commutes_with_mirror,
    real_iff_star_symmetric,
    pencil_members_are_integrable,
    curvature_invariant_under_unit_rescale,
    conj_involution,
    ring_axioms,
    exact_division,
    gcd_divides_both,
    rational_field_axioms,
    contraction_is_an_antiderivation,
);
