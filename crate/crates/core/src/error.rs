use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is excluded (need p > 3)")]
    CharTwoOrThree(u64),
    #[error("field size {p}^{k} does not fit below 2^63")]
    Overflow { p: u64, k: usize },
    #[error("extension degree {0} is unsupported (need 1 <= k <= 3)")]
    InvalidDegree(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial degree is too low")]
    DegreeTooLow,
    #[error("affine substitution needs a nonzero scale")]
    ZeroScale,
    #[error("expected a monic quartic")]
    NotMonicQuartic,
    #[error("brute force over q = {q} exceeds the budget {budget}")]
    BudgetExceeded { q: u64, budget: u64 },
    #[error("wrong degree: {0}")]
    WrongDegree(String),
    #[error("all three polynomials are zero")]
    AllZero,
    #[error("b^2 = 4c: the biquadratic is a perfect square")]
    DegenerateDiscriminant,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("parameters must satisfy (a,c) != (0,0) and (b,c) != (0,0)")]
    DegenerateParameters,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("{a} is not a quadratic residue mod {p}")]
    NonResidue { a: u64, p: u64 },
    #[error("p = {p} is outside the residue class required for this representation")]
    WrongResidueClass { p: u64 },
    #[error("lambda must be nonzero mod p")]
    LambdaZero,
    #[error("p = 19 is excluded from this family")]
    PIs19,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
