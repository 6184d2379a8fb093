use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("k = {k} exceeds the shorter sequence (|A| = {len_a}, |B| = {len_b})")]
    KTooLarge {
        k: usize,
        len_a: usize,
        len_b: usize,
    },
    #[error("start {index} in sequence {which} leaves fewer than k = {k} symbols (length {len})")]
    OutOfRange {
        which: char,
        index: usize,
        k: usize,
        len: usize,
    },
}

/// Raised when inputs to a closed-form identity are mutually inconsistent.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("inconsistent inputs: |A| = {len_a}, |B| = {len_b}, k = {k}, LCSk = {lcsk}")]
pub struct ContractError {
    pub len_a: usize,
    pub len_b: usize,
    pub k: usize,
    pub lcsk: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "input too large for exhaustive enumeration: |A| = {len_a}, |B| = {len_b}, limit {limit}"
    )]
    TooLarge {
        len_a: usize,
        len_b: usize,
        limit: usize,
    },
}

/// A witness (chain or edit script) that fails its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("span {index} has length {len}, expected k = {k}")]
    WrongLength { index: usize, len: usize, k: usize },
    #[error("span {index} does not match or runs past the end")]
    Mismatch { index: usize },
    #[error("span {index} overlaps or precedes the previous span")]
    Order { index: usize },
    #[error("declared length {declared} but chain has {actual} spans")]
    Count { declared: usize, actual: usize },
    #[error("op {index} is malformed or out of order")]
    BadOp { index: usize },
    #[error("script covers A[..{a}] and B[..{b}] instead of the whole inputs")]
    Coverage { a: usize, b: usize },
    #[error("declared distance {declared} but script has {actual} edit ops")]
    Distance { declared: usize, actual: usize },
    #[error("replaying the script does not reproduce B")]
    Replay,
}
