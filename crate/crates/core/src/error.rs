use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a bijection on {degree} points")]
    NotBijection { degree: usize },
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("bad section: {0}")]
    BadSection(&'static str),
    #[error("operation needs a nontrivial group")]
    TrivialGroup,
    #[error("chief factor is not abelian")]
    NotAbelianFactor,
    #[error("section is not a chief factor: {0}")]
    NotChief(&'static str),
    #[error("modules are defined over different primes ({0} and {1})")]
    DifferentPrime(u64, u64),
    #[error("commutant is not a field; module is not irreducible")]
    NotIrreducible,
    #[error("derivation search space {size} exceeds cap {cap}")]
    SearchCapExceeded { size: u128, cap: u128 },
    #[error("{r} sieves exceed the inclusion-exclusion cap of {cap}")]
    TooManySieves { r: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("waiting-time trial exceeded {0} draws")]
    TrialCapExceeded(u64),
    #[error("probability must lie in (0, 1]")]
    BadProbability,
    #[error("ratio fails outside every listed exceptional case (delta={delta}, q^n={qn}, lambda={lambda})")]
    UnexpectedException { delta: u32, qn: u64, lambda: String },
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not invertible over F_{0}")]
    NotInvertibleMatrix(u64),
}
