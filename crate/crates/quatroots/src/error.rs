use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("all input polynomials are zero")]
    AllZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("max(deg P, deg Q) must be at least 1")]
    DegreeTooSmall,
    #[error("deg Q_{index} = {found} exceeds the allowed bound {bound}")]
    DegreeViolation {
        index: usize,
        found: usize,
        bound: usize,
    },
    #[error("constant polynomial has no roots to classify")]
    DegreeZero,
    #[error("quadratic has no complex root (resultant condition is nonzero)")]
    ConditionFails,
    #[error("quadratic has a real factor; the complex-root formula does not apply")]
    HasRealFactor,
    #[error("polynomial lies in C[t]; the quadratic formula assumes a genuinely quaternionic input")]
    NotQuaternionic,
    #[error("root iteration did not converge within {iters} iterations")]
    NoConvergence { iters: usize },
    #[error("conjugate pairing is ambiguous near root {re}+{im}i")]
    PairingAmbiguity { re: f64, im: f64 },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not a polynomial: {0}")]
    NonPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
