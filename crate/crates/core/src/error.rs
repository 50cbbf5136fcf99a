use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants are grouped by the module that raises them. The CLI maps
/// [`Error::is_usage`] errors to exit code 1 and everything else to 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exact scalars
    #[error("pi exponent {0} is outside the supported range -1..=1")]
    ExponentOverflow(i32),
    #[error("cannot order values with pi exponents {left} and {right}")]
    IncomparableExponents { left: i8, right: i8 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a rational value, found a multiple of pi^{0}")]
    NotRational(i8),

    // Fuchsian side
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature {0} has non-positive Gauss-Bonnet area")]
    NonHyperbolic(String),
    #[error("weight {0} is odd; the dimension formula covers even weights only")]
    OddWeight(i64),
    #[error("m = {0} must be odd for PSL(2,R)")]
    ParityViolation(i64),
    #[error("m = {0} must be at least 1")]
    NonPositiveWeight(i64),
    #[error("D_{m} does not occur in L^2 of the first lattice; smallest occurring m is {minimal}")]
    NoOccurrence { m: i64, minimal: i64 },
    #[error("no occurring discrete series with m <= {0}")]
    ScanCapExceeded(i64),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    // factor toolkit
    #[error("matrix sizes must be positive")]
    ZeroSize,
    #[error("coupling constants must be positive")]
    NonPositive,
    #[error("free group ranks must be at least 2")]
    RankTooSmall,
    #[error("F_{sub} is not a finite-index subgroup of F_{ambient}")]
    NotFiniteIndex { ambient: u64, sub: u64 },

    // finite fields
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {0} is even; odd residue characteristic required")]
    EvenResidue(u64),
    #[error("q = {q} exceeds the enumeration guard {guard}")]
    TooLarge { q: u64, guard: u64 },
    #[error("character index {index} is out of range for modulus {modulus}")]
    CharacterOutOfRange { index: u64, modulus: u64 },

    // p-adic side
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ramification index {0} is not 1 or 2")]
    BadRamification(u32),
    #[error("level {0} is out of range (must be >= 1)")]
    LevelOutOfRange(i64),
    #[error("no free lattice of rank {n} in PGL(2,F) with residue field of order {q}")]
    NoSuchLattice { q: u64, n: u64 },
    #[error("ramified cuspidal classes need even conductor, got j = {0}")]
    OddRamifiedConductor(u64),
    #[error("conductor must be positive")]
    InvalidConductor,
    #[error("q = {0} is a proper prime power; this operation works over Q_p only")]
    NotPrimeField(u64),

    // CLI
    #[error("unknown table {0:?}; expected one of: {1}")]
    UnknownTable(String, &'static str),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidSignature(_) | Error::UnknownTable(..) | Error::Parse(_)
        )
    }
}
