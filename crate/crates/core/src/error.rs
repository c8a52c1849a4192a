use thiserror::Error;

use crate::space::{Flavor, VarSpace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable space mismatch: {0} vs {1}")]
    SpaceMismatch(VarSpace, VarSpace),
    #[error("operation requires {expected:?} flavor, got {found:?}")]
    WrongFlavor { expected: Flavor, found: Flavor },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("form degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("expected a polynomial, got a rational function with nonconstant denominator")]
    NotPolynomial,
    #[error("input is not real-valued; conjugate difference {witness}")]
    NotReal { witness: String },
    #[error("input is not (*)-symmetric; mirror difference {witness}")]
    NotSymmetric { witness: String },
    #[error("function is constant")]
    ConstantFunction,
    #[error("Levi foliation is not holomorphic: ratio {ratio} depends on the second block")]
    NotHolomorphic { ratio: String },
    #[error("form has the real factor {factor}")]
    NotPrimitive { factor: String },
    #[error("no solution within the ansatz: {0}")]
    NoSolution(String),
    #[error("ansatz solution space has dimension {dimension}")]
    Ambiguous { dimension: usize, basis: Vec<String> },
    #[error("2-forms are not collinear: {0} vs {1}")]
    NotCollinear(String, String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
