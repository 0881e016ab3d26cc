use thiserror::Error;

/// Every failure a computation in this crate can report.
///
/// Variants carry element indices (0-based) where a witness exists, so
/// callers can render a precise diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // table construction
    #[error("associativity fails: ({0}*{1})*{2} != {0}*({1}*{2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("table entry {value} at ({row},{col}) is out of range for {n} elements")]
    IndexOutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`")]
    InvalidName(String),
    #[error("declared zero {0} is not a zero element")]
    DeclaredZeroNotZero(usize),
    #[error("declared identity {0} is not an identity element")]
    DeclaredIdentityNotIdentity(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("result would have {size} elements, above the cap of {cap}")]
    SizeOverflow { size: usize, cap: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("enumeration size {0} is too large (at most 4)")]
    SizeTooLarge(usize),

    // exact algebra
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("matrix dimension {dim} exceeds the symbolic cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("no substitution given for variable x{0}")]
    MissingVariable(usize),
    #[error("variable universes differ: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("matrix is not unitriangular under the given order")]
    NotUnitriangular,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian: {0}*{1} != {1}*{0}")]
    NotAbelian(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),

    // orders
    #[error("{mode} order hypothesis failed: {reason}")]
    ModeHypothesisFailed { mode: &'static str, reason: String },
    #[error("not a semilattice: {0}")]
    NotSemilattice(String),

    // determinant engine
    #[error("semigroup has no zero element")]
    NoZero,
    #[error("cocycle does not match the semigroup: {0}")]
    CocycleDomainMismatch(String),
    #[error("change-of-basis matrix is singular")]
    SingularP,
    #[error("representation dimension mismatch: {0}")]
    RepDimensionMismatch(String),
    #[error("representation is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("group is not abelian and no representations were supplied")]
    NotAbelianWithoutReps,
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    // inverse semigroups
    #[error("not an inverse semigroup: element {element} has {count} generalized inverses")]
    NotInverse { element: usize, count: usize },
    #[error("not a Clifford semigroup: {0}")]
    NotClifford(String),
    #[error("maximal subgroup at idempotent {0} is nonabelian and no representations were supplied")]
    NonabelianWithoutReps(usize),

    // nilpotent-adjoined
    #[error("not a nilpotent semigroup with adjoined identity: {0}")]
    NotNilpotentAdjoined(String),
    #[error("no unique annihilating element")]
    NoUniqueAnnihilator,

    // commutative pipeline
    #[error("S^2 != S")]
    NotIdempotentSemigroup,
    #[error("idempotent {0} is not central")]
    IdempotentsNotCentral(usize),
    #[error("not a local monoid: {0}")]
    NotLocalShape(String),
    #[error("ideals of nonunits do not form a chain: {0}")]
    NotChain(String),
    #[error("semigroup is not commutative: {0}*{1} != {1}*{0}")]
    NotCommutative(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
