use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::symfun::Basis;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts must be positive and weakly decreasing.
    InvalidPartition(Vec<usize>),
    /// `λ_i ≤ n - i` fails for some `i`, or `n = 0`.
    NotInStaircase {
        n: usize,
        parts: Vec<usize>,
    },
    BasisMismatch {
        left: Basis,
        right: Basis,
    },
    InvalidCrossing {
        i: usize,
        j: usize,
        strands: usize,
    },
    InvalidWeights {
        expected: usize,
        found: usize,
    },
    InvalidPermutation(Vec<usize>),
    InvalidPattern(Vec<usize>),
    /// A brute-force enumeration would exceed its size guard.
    GuardExceeded {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// The trace calculus does not apply to this diagram.
    NonTraceable(String),
    /// The shape contains the pattern 2+1+1.
    Contains211 {
        n: usize,
        parts: Vec<usize>,
    },
    NoStrands,
    /// A single-crossing closed form was requested for fewer than two strands.
    CrossingTooSmall(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(parts) => {
                write!(
                    f,
                    "not a partition (parts must be positive and weakly decreasing): {parts:?}"
                )
            }
            Error::NotInStaircase { n, parts } => {
                write!(f, "partition {parts:?} does not fit inside stair({n})")
            }
            Error::BasisMismatch { left, right } => {
                write!(f, "basis mismatch: {left} vs {right}")
            }
            Error::InvalidCrossing { i, j, strands } => {
                write!(f, "crossing [{i},{j}] is not valid on {strands} strands")
            }
            Error::InvalidWeights { expected, found } => {
                write!(f, "expected {expected} weights, found {found}")
            }
            Error::InvalidPermutation(images) => write!(f, "not a permutation: {images:?}"),
            Error::InvalidPattern(p) => write!(f, "invalid chain pattern {p:?}"),
            Error::GuardExceeded {
                what,
                limit,
                requested,
            } => write!(f, "{what}: {requested} exceeds the guard of {limit}"),
            Error::NonTraceable(reason) => write!(f, "trace is not defined: {reason}"),
            Error::Contains211 { n, parts } => {
                write!(f, "P({parts:?}) on [{n}] contains the pattern 2+1+1")
            }
            Error::NoStrands => f.write_str("diagram has no strands"),
            Error::CrossingTooSmall(n) => {
                write!(
                    f,
                    "closed form needs a crossing of size at least 2, got {n}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
