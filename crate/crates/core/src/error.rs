use core::fmt;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Type label with an unsupported family/rank combination, or unparsable.
    InvalidType(String),
    IndexOutOfRange { index: usize, rank: usize },
    DimensionMismatch { left: usize, right: usize },
    /// Elements or vectors from different root systems were combined.
    SystemMismatch,
    NotReduced { word_len: usize, length: usize },
    NotAReflection,
    NotDominant,
    NotIntegral,
    NotACore,
    InvalidModulus(usize),
    NotAdequate,
    NotAPermutation,
    UnsupportedType(String),
    PreconditionViolation(&'static str),
    /// A configured enumeration cap was exceeded.
    SubgroupTooLarge { cap: usize },
    OrbitTooLarge { cap: usize },
    SizeTooLarge { max: usize, cap: usize },
    RadiusTooLarge { radius: u64, cap: u64 },
    /// The Cartan matrix does not describe a finite root system.
    NotFiniteType,
}

impl Error {
    /// Errors raised because a computation would exceed a configured cap.
    pub fn is_cap_error(&self) -> bool {
        matches!(
            self,
            Error::SubgroupTooLarge { .. }
                | Error::OrbitTooLarge { .. }
                | Error::SizeTooLarge { .. }
                | Error::RadiusTooLarge { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType(s) => write!(f, "invalid type label: {s}"),
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "index {index} out of range for rank {rank}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::SystemMismatch => f.write_str("operands belong to different root systems"),
            Error::NotReduced { word_len, length } => {
                write!(f, "word of length {word_len} is not reduced (element length {length})")
            }
            Error::NotAReflection => f.write_str("generator is not a reflection"),
            Error::NotDominant => f.write_str("weight is not dominant"),
            Error::NotIntegral => f.write_str("weight is not integral"),
            Error::NotACore => f.write_str("partition is not a core for this modulus"),
            Error::InvalidModulus(m) => write!(f, "invalid modulus {m} (need at least 2)"),
            Error::NotAdequate => f.write_str("point is not adequate"),
            Error::NotAPermutation => f.write_str("sequence is not a permutation of 1..n"),
            Error::UnsupportedType(s) => write!(f, "unsupported type: {s}"),
            Error::PreconditionViolation(s) => write!(f, "precondition violated: {s}"),
            Error::SubgroupTooLarge { cap } => write!(f, "subgroup exceeds cap of {cap} elements"),
            Error::OrbitTooLarge { cap } => write!(f, "orbit exceeds cap of {cap} states"),
            Error::SizeTooLarge { max, cap } => write!(f, "size bound {max} exceeds cap {cap}"),
            Error::RadiusTooLarge { radius, cap } => write!(f, "radius {radius} exceeds cap {cap}"),
            Error::NotFiniteType => f.write_str("Cartan matrix is not of finite type"),
        }
    }
}
