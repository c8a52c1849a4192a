//! Exact symbolic toolkit for Levi-flat foliations: polynomial and
//! rational-function algebra over ℚ(i), differential forms on ℂⁿ, the
//! mirror/complexification dictionary, Levi decompositions, pencils and
//! their curvature, and projective checks.

pub mod classify;
pub mod error;
pub mod expr;
pub mod forms;
pub mod gauss;
pub mod gcd;
pub mod levi;
pub mod linsolve;
pub mod mirror;
pub mod pencil;
pub mod poly;
pub mod projective;
pub mod ratfun;
pub mod report;
pub mod space;

pub use error::{Error, Result};
pub use forms::{DForm, VField};
pub use expr::{parse_form, parse_poly, parse_ratfun, ParseError};
pub use gauss::GaussRat;
pub use gcd::{coprime_base, poly_gcd, poly_lcm, squarefree_part};
pub use poly::{Bidegree, Monomial, Poly};
pub use ratfun::RatFun;
pub use space::{Flavor, VarSpace};
pub use report::{Clause, Report, Status, Verdict};
