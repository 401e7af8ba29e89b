use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u32>),
    #[error("{0:?} is not an involution")]
    NotAnInvolution(Vec<u32>),
    #[error("{0:?} is not a fixed-point-free involution of even length")]
    NotFpf(Vec<u32>),
    #[error("letters must be positive")]
    ZeroLetter,
    #[error("{0:?} is not a strict partition")]
    NotStrictPartition(Vec<usize>),
    #[error("{0:?} is not a partition")]
    NotPartition(Vec<usize>),
    #[error("cap exceeded: {what} (limit {limit})")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("tableau has an odd entry and cannot be halved")]
    OddEntry,
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),
    #[error("not a symplectic Hecke word")]
    NotSymplectic,
    #[error("recording tableau is empty")]
    EmptyQ,
    #[error("state is not admissible: {0}")]
    NotAdmissible(String),
    #[error("bad seed: {0}")]
    BadSeed(String),
    #[error("state is terminal")]
    Terminal,
    #[error("state is initial")]
    Initial,
    #[error("sequence is not a weakly increasing factorization of the word")]
    NotAFactorization,
    #[error("not a reduced (FPF-)involution word")]
    NotReducedWord,
    #[error("tableau is not an increasing shifted tableau")]
    NotIncreasingShifted,
    #[error("P and Q have different shapes")]
    ShapeMismatch,
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
