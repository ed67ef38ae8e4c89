use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not invertible")]
    ZeroNotInvertible,
    #[error("p-th roots need positive characteristic")]
    CharacteristicZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("resultant with a zero operand")]
    ZeroOperand,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is already separable")]
    AlreadySeparable,
    #[error("derivative vanishes; take a p-th root first")]
    ZeroDerivative,
    #[error("derivative is nonzero")]
    DerivativeNonzero,
    #[error("every irreducible factor is repeated, no coprime splitting with a separable part")]
    NoSimpleFactor,

    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("Groebner pair budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("ideal contains 1")]
    TrivialIdeal,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants violate {0}")]
    InvalidStructure(String),
    #[error("minimal polynomial has a repeated root at 0")]
    RepeatedZeroRoot { witness: Vec<String> },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent is 0 or 1")]
    TrivialIdempotent,

    #[error("algebra is not etale (discriminant is zero)")]
    NotEtale,
    #[error("nonzero nilpotent found in an algebra assumed etale")]
    NonEtaleWitness { witness: Vec<String> },
    #[error("no primitive element after {0} attempts")]
    SearchExhausted(usize),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
