use thiserror::Error;

use super::symbol::Sym;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("exponent {exp} of {sym} is not cleared by root {root}")]
    NonClearedExponent { sym: Sym, exp: String, root: i64 },
    #[error("no value supplied for {0}")]
    Unbound(Sym),
    #[error("all {0} random specializations hit a pole")]
    DegenerateSpecialization(usize),
    #[error("expression is not subtraction-free")]
    NotSubtractionFree,
    #[error("parameter {0} has a non-monomial binding under a fractional power")]
    NonMonomialParamBinding(Sym),
    #[error("at least {0} trials required")]
    TooFewTrials(usize),
}
