//! Sequences, the `k` parameter, k-match detection and the diagonal counter.
//!
//! All positions are 0-based. A k-match starting at `(i, j)` here is the
//! k-match written `(i + 1, j + 1)` in 1-based notation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroUsize;
use core::ops::Deref;

use crate::error::SeqError;

/// An immutable byte string with an identifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    id: String,
    symbols: Vec<u8>,
}

impl Sequence {
    pub fn new(id: impl Into<String>, symbols: impl Into<Vec<u8>>) -> Self {
        Sequence {
            id: id.into(),
            symbols: symbols.into(),
        }
    }

    /// A sequence with an empty id, handy for inline literals.
    pub fn anonymous(symbols: impl Into<Vec<u8>>) -> Self {
        Self::new(String::new(), symbols)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.symbols
    }
}

impl Deref for Sequence {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.symbols
    }
}

impl AsRef<[u8]> for Sequence {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

/// Load-time normalization options.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NormalizeOptions {
    /// Fold ASCII letters to uppercase.
    pub uppercase: bool,
}

/// Builds a [`Sequence`] from raw bytes. Only ASCII letters are touched, and
/// only when `uppercase` is set.
pub fn normalize(id: impl Into<String>, raw: &[u8], options: NormalizeOptions) -> Sequence {
    let symbols = if options.uppercase {
        raw.to_ascii_uppercase()
    } else {
        raw.to_vec()
    };
    Sequence::new(id, symbols)
}

/// The substring match length `k`, always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    k: NonZeroUsize,
}

impl Params {
    pub fn new(k: usize) -> Result<Self, SeqError> {
        NonZeroUsize::new(k)
            .map(|k| Params { k })
            .ok_or(SeqError::ZeroK)
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k.get()
    }
}

impl TryFrom<usize> for Params {
    type Error = SeqError;

    fn try_from(k: usize) -> Result<Self, SeqError> {
        Params::new(k)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.k)
    }
}

/// One matched pair of k-length substrings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KMatchSpan {
    pub a_start: usize,
    pub b_start: usize,
    pub len: usize,
}

impl KMatchSpan {
    pub fn new(a_start: usize, b_start: usize, len: usize) -> Self {
        KMatchSpan {
            a_start,
            b_start,
            len,
        }
    }

    #[inline]
    pub fn a_end(&self) -> usize {
        self.a_start + self.len
    }

    #[inline]
    pub fn b_end(&self) -> usize {
        self.b_start + self.len
    }

    /// True when the span lies inside both sequences and the two substrings
    /// are equal.
    pub fn is_valid_in(&self, a: &[u8], b: &[u8]) -> bool {
        self.a_end() <= a.len()
            && self.b_end() <= b.len()
            && a[self.a_start..self.a_end()] == b[self.b_start..self.b_end()]
    }
}

/// Whether `a[i..i+k]` equals `b[j..j+k]`.
pub fn k_match(a: &[u8], b: &[u8], i: usize, j: usize, k: usize) -> Result<bool, SeqError> {
    if k == 0 {
        return Err(SeqError::ZeroK);
    }
    if k > a.len().min(b.len()) {
        return Err(SeqError::KTooLarge {
            k,
            len_a: a.len(),
            len_b: b.len(),
        });
    }
    if i > a.len() - k {
        return Err(SeqError::OutOfRange {
            which: 'A',
            index: i,
            k,
            len: a.len(),
        });
    }
    if j > b.len() - k {
        return Err(SeqError::OutOfRange {
            which: 'B',
            index: j,
            k,
            len: b.len(),
        });
    }
    Ok(a[i..i + k] == b[j..j + k])
}

/// One step of the diagonal counter: the length of the common suffix grows by
/// one on a symbol match and resets on a mismatch.
#[inline]
pub fn dcount_cell(prev_diag: usize, a_sym: u8, b_sym: u8) -> usize {
    if a_sym == b_sym {
        prev_diag + 1
    } else {
        0
    }
}

/// A single dcount row, advanced one symbol of `A` at a time.
///
/// Column `j` (1-based, column 0 is the boundary) holds the length of the
/// longest common suffix of `A[..i]` and `B[..j]` after `i` calls to
/// [`DcountRow::advance`].
#[derive(Debug, Clone)]
pub(crate) struct DcountRow {
    cells: Vec<u32>,
}

impl DcountRow {
    pub(crate) fn new(cols: usize) -> Self {
        DcountRow {
            cells: alloc::vec![0; cols + 1],
        }
    }

    /// Moves from row `i - 1` to row `i`, updating in place from right to left
    /// so that `cells[j - 1]` still holds the previous row's diagonal.
    pub(crate) fn advance(&mut self, a_sym: u8, b: &[u8]) {
        for j in (1..self.cells.len()).rev() {
            self.cells[j] = dcount_cell(self.cells[j - 1] as usize, a_sym, b[j - 1]) as u32;
        }
    }

    #[inline]
    pub(crate) fn get(&self, j: usize) -> usize {
        self.cells[j] as usize
    }

    pub(crate) fn len(&self) -> usize {
        self.cells.len()
    }
}
