use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported subfield degree k = {0} (expected 1 <= k <= 16)")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#x} is not a primitive polynomial of degree {m}")]
    NonPrimitiveModulus { modulus: u64, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0:#x} is not in the subfield GF(2^k)")]
    NotInSubfield(u32),
    #[error("no noncube r with r^(2^k+1) = 1 is available: {0}")]
    NoncubeUnavailable(String),
    #[error("decimation {d} is not coprime to 2^{k}-1")]
    BadDecimation { d: u64, k: u32 },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("no i >= 0 satisfies d(2^l+1) = 2^i mod 2^k-1 for d = {d}, l = {l}, k = {k}")]
    InvalidPair { d: u64, l: u32, k: u32 },
    #[error("l = {l} is not coprime to k = {k} or out of range 0 < l < k")]
    NotCoprime { k: u32, l: u32 },
    #[error("x0 = {0:#x} is degenerate (x0 in {{0, 1}} or x0^(2^l+1) + x0 = 0)")]
    DegenerateX0(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("k = {0} is even; this operation requires odd k")]
    EvenK(u32),
    #[error("no nonnegative integer solution for k = {k}, s + t = {s_plus_t}")]
    NoSolution { k: u32, s_plus_t: u64 },
    #[error("unknown theorem identifier `{0}`")]
    UnknownTheorem(String),
    #[error("internal cross-check failed: {0}")]
    Mismatch(String),
    #[error("configuration error: {0}")]
    Config(String),
}
