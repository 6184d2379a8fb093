//! LCSk similarity and EDk edit distance over k-length substring matches.
//!
//! LCSk counts the largest number of common substrings of length `k` that
//! appear in the same order in both inputs without overlapping; with `k = 1`
//! it is the ordinary LCS. EDk is the matching edit distance: the fewest
//! insertions, deletions and substitutions such that every symbol left
//! unedited belongs to one of those k-length matches.
//!
//! Both come in a score-only form that keeps `k + 1` rolling rows, and a
//! full-table form that also returns a witness (a chain of [`KMatchSpan`]s or
//! an edit script). [`oracle`] holds exhaustive reference versions for short
//! inputs.
//!
//! All positions are 0-based.
//!
//! ```
//! use lcsk_core::{lcsk_score, lcsk_traceback, Params};
//!
//! let k = Params::new(2).unwrap();
//! assert_eq!(lcsk_score(b"TGCGTGTG", b"GTTGTGCC", k), 2);
//! let chain = lcsk_traceback(b"TGCGTGTG", b"GTTGTGCC", k);
//! assert_eq!(chain.matches.len(), 2);
//! ```
#![no_std]

extern crate alloc;

pub mod edk;
mod error;
pub mod lcsk;
pub mod oracle;
pub mod seq;

pub use edk::{
    edk_from_lcsk_identity, edk_score, edk_score_with_workspace, edk_traceback, EditKind, EditOp,
    EdkMatrix, EdkResult, OpsMode,
};
pub use error::{ContractError, OracleError, SeqError, WitnessError};
pub use lcsk::{
    lcsk_score, lcsk_score_with_workspace, lcsk_traceback, update_pred, LcskCell, LcskMatrix,
    LcskResult, Workspace,
};
pub use seq::{dcount_cell, k_match, normalize, KMatchSpan, NormalizeOptions, Params, Sequence};
