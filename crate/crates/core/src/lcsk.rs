//! LCSk: the maximal number of non-overlapping, order-preserving common
//! substrings of length `k`.
//!
//! Cells are indexed by k-match start. Logical cell `(i, j)` with `i, j >= 1`
//! covers the prefixes `A[..i + k - 1]` and `B[..j + k - 1]`, and its own
//! k-match candidate is the one starting at 0-based `(i - 1, j - 1)`. Row and
//! column 0 are the empty boundary. The recurrence is
//!
//! ```text
//! S[i][j] = max(S[i][j-1], S[i-1][j], S[i-k][j-k] + kmatch(i, j))
//! ```
//!
//! with `S` taken as 0 at any negative index. `kmatch(i, j)` reads the diagonal
//! counter at symbol position `(i + k - 1, j + k - 1)`, so the dcount row runs
//! `k - 1` rows ahead of the score row being filled.
//!
//! Each full-mode cell keeps a single predecessor: the start of the last
//! k-match of one optimal chain for its prefixes. Among equal-length chains any
//! one can stand in for the others, so ties are broken diagonal first, then
//! left, then up.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::WitnessError;
use crate::seq::{DcountRow, KMatchSpan, Params};

/// One finalized cell of the full LCSk table.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LcskCell {
    pub score: u32,
    /// 0-based start `(a, b)` of the last k-match of the retained chain.
    pub pred: Option<(u32, u32)>,
}

impl LcskCell {
    pub const EMPTY: LcskCell = LcskCell {
        score: 0,
        pred: None,
    };
}

/// Combines the three sources of the recurrence into one cell.
///
/// `at` is the 0-based start of the k-match belonging to the cell being
/// filled. Sources scoring below the maximum are dropped; among those that
/// reach it, the diagonal k-match wins, then `left`, then `up`.
pub fn update_pred(
    at: (usize, usize),
    left: LcskCell,
    up: LcskCell,
    diag_k: LcskCell,
    is_k_match: bool,
) -> LcskCell {
    let through_match = if is_k_match {
        Some(diag_k.score + 1)
    } else {
        None
    };
    let best = left.score.max(up.score).max(through_match.unwrap_or(0));
    if through_match == Some(best) {
        LcskCell {
            score: best,
            pred: Some((at.0 as u32, at.1 as u32)),
        }
    } else if left.score == best {
        left
    } else {
        up
    }
}

/// An LCSk score with one witness chain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LcskResult {
    pub length: usize,
    pub matches: Vec<KMatchSpan>,
}

impl LcskResult {
    /// Checks length, span equality, and strict non-overlapping order.
    pub fn validate(&self, a: &[u8], b: &[u8], params: Params) -> Result<(), WitnessError> {
        if self.length != self.matches.len() {
            return Err(WitnessError::Count {
                declared: self.length,
                actual: self.matches.len(),
            });
        }
        validate_chain(&self.matches, a, b, params)
    }
}

/// Checks that `spans` is a legal chain of k-matches between `a` and `b`.
pub fn validate_chain(
    spans: &[KMatchSpan],
    a: &[u8],
    b: &[u8],
    params: Params,
) -> Result<(), WitnessError> {
    let k = params.k();
    let mut prev: Option<&KMatchSpan> = None;
    for (index, span) in spans.iter().enumerate() {
        if span.len != k {
            return Err(WitnessError::WrongLength {
                index,
                len: span.len,
                k,
            });
        }
        if !span.is_valid_in(a, b) {
            return Err(WitnessError::Mismatch { index });
        }
        if let Some(p) = prev {
            if span.a_start < p.a_end() || span.b_start < p.b_end() {
                return Err(WitnessError::Order { index });
            }
        }
        prev = Some(span);
    }
    Ok(())
}

/// Number of rows (or columns) of the score table for a sequence of length
/// `len`, boundary included.
#[inline]
pub fn table_extent(len: usize, k: usize) -> usize {
    (len + 1).saturating_sub(k) + 1
}

/// Cells held by a score-only computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Workspace {
    pub score_cells: usize,
    pub dcount_cells: usize,
}

impl Workspace {
    pub fn total_cells(&self) -> usize {
        self.score_cells + self.dcount_cells
    }

    /// Every cell is a `u32`.
    pub fn bytes(&self) -> usize {
        self.total_cells() * core::mem::size_of::<u32>()
    }
}

/// LCSk score in `O(k * min(|A|, |B|))` memory.
pub fn lcsk_score(a: &[u8], b: &[u8], params: Params) -> usize {
    lcsk_score_with_workspace(a, b, params).0
}

/// Like [`lcsk_score`], also reporting the cells it allocated.
pub fn lcsk_score_with_workspace(a: &[u8], b: &[u8], params: Params) -> (usize, Workspace) {
    // The score is symmetric; keep the shorter sequence along the columns.
    let (a, b) = if b.len() > a.len() { (b, a) } else { (a, b) };
    let k = params.k();
    if b.len() < k {
        return (0, Workspace::default());
    }

    let cols = table_extent(b.len(), k);
    let slots = k + 1;
    let mut ring = vec![0u32; slots * cols];
    let mut dcount = DcountRow::new(b.len());
    let workspace = Workspace {
        score_cells: ring.len(),
        dcount_cells: dcount.len(),
    };

    let mut last = 0usize;
    for (r, &sym) in a.iter().enumerate() {
        dcount.advance(sym, b);
        let symbol_row = r + 1;
        if symbol_row < k {
            continue;
        }
        let i = symbol_row + 1 - k;
        let cur = (i % slots) * cols;
        let up = ((i - 1) % slots) * cols;
        let diag = if i >= k {
            Some(((i - k) % slots) * cols)
        } else {
            None
        };
        ring[cur] = 0;
        for j in 1..cols {
            let mut best = ring[cur + j - 1].max(ring[up + j]);
            if dcount.get(j + k - 1) >= k {
                let before = match diag {
                    Some(d) if j >= k => ring[d + j - k],
                    _ => 0,
                };
                best = best.max(before + 1);
            }
            ring[cur + j] = best;
        }
        last = ring[cur + cols - 1] as usize;
    }
    (last, workspace)
}

/// The whole LCSk table with one predecessor per cell.
#[derive(Debug, Clone)]
pub struct LcskMatrix {
    k: usize,
    rows: usize,
    cols: usize,
    cells: Vec<LcskCell>,
}

impl LcskMatrix {
    pub fn build(a: &[u8], b: &[u8], params: Params) -> Self {
        let k = params.k();
        let rows = table_extent(a.len(), k);
        let cols = table_extent(b.len(), k);
        let mut m = LcskMatrix {
            k,
            rows,
            cols,
            cells: vec![LcskCell::EMPTY; rows * cols],
        };
        if rows == 1 || cols == 1 {
            return m;
        }

        let mut dcount = DcountRow::new(b.len());
        for (r, &sym) in a.iter().enumerate() {
            dcount.advance(sym, b);
            let symbol_row = r + 1;
            if symbol_row < k {
                continue;
            }
            let i = symbol_row + 1 - k;
            for j in 1..cols {
                let diag_k = if i >= k && j >= k {
                    m.cell(i - k, j - k)
                } else {
                    LcskCell::EMPTY
                };
                let cell = update_pred(
                    (i - 1, j - 1),
                    m.cell(i, j - 1),
                    m.cell(i - 1, j),
                    diag_k,
                    dcount.get(j + k - 1) >= k,
                );
                m.cells[i * cols + j] = cell;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> LcskCell {
        self.cells[i * self.cols + j]
    }

    pub fn score(&self) -> usize {
        self.cell(self.rows - 1, self.cols - 1).score as usize
    }

    /// Walks predecessors back from the bottom-right cell.
    ///
    /// A cell whose predecessor is its own k-match emits that match and jumps
    /// `k` back on both axes; any other predecessor is followed directly.
    pub fn traceback(&self) -> LcskResult {
        let k = self.k;
        let mut matches = Vec::new();
        let (mut i, mut j) = (self.rows - 1, self.cols - 1);
        while i > 0 && j > 0 {
            let Some((x, y)) = self.cell(i, j).pred else {
                break;
            };
            let (x, y) = (x as usize, y as usize);
            if (x, y) == (i - 1, j - 1) {
                matches.push(KMatchSpan::new(x, y, k));
                i = i.saturating_sub(k);
                j = j.saturating_sub(k);
            } else {
                debug_assert!(x < i && y < j);
                i = x + 1;
                j = y + 1;
            }
        }
        matches.reverse();
        LcskResult {
            length: matches.len(),
            matches,
        }
    }
}

/// LCSk score plus a witness chain. Needs the full `O(|A| * |B|)` table.
pub fn lcsk_traceback(a: &[u8], b: &[u8], params: Params) -> LcskResult {
    LcskMatrix::build(a, b, params).traceback()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize) -> Params {
        Params::new(k).unwrap()
    }

    #[test]
    fn worked_example_scores() {
        let a = b"TGCGTGTG";
        let b = b"GTTGTGCC";
        assert_eq!(lcsk_score(a, b, p(2)), 2);
        assert_eq!(lcsk_score(a, b, p(3)), 1);
        assert_eq!(lcsk_score(a, b, p(4)), 1);
        assert_eq!(lcsk_score(b"CTGCTTTG", b"CTTGCTTT", p(2)), 3);
        assert_eq!(lcsk_score(b"GCGTC", b"CGCGT", p(2)), 2);
    }

    #[test]
    fn self_and_disjoint() {
        let x = b"ACGTTGCAAC";
        assert_eq!(lcsk_score(x, x, p(1)), 10);
        assert_eq!(lcsk_score(x, x, p(2)), 5);
        assert_eq!(lcsk_score(x, x, p(5)), 2);
        assert_eq!(lcsk_score(b"GTGGTGGTG", b"TCCTCCTCC", p(2)), 0);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(lcsk_score(b"", b"ACGT", p(1)), 0);
        assert_eq!(lcsk_score(b"AB", b"AB", p(5)), 0);
        let r = lcsk_traceback(b"", b"ACGT", p(1));
        assert_eq!(r, LcskResult::default());
        assert_eq!(lcsk_traceback(b"AB", b"AB", p(3)).length, 0);
        assert_eq!(
            lcsk_traceback(b"AB", b"AB", p(2)).matches,
            [KMatchSpan::new(0, 0, 2)]
        );
    }

    #[test]
    fn golden_lcs2_table() {
        let m = LcskMatrix::build(b"CTGCTTTG", b"CTTGCTTT", p(2));
        assert_eq!((m.rows(), m.cols()), (8, 8));
        // Frozen from exhaustive chain enumeration on every prefix pair. The
        // 2-match GC at 0-based (2, 3) lifts the block from (3, 4) onward.
        let expected: [[u32; 7]; 7] = [
            [1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 2, 2, 2, 2],
            [1, 1, 1, 2, 2, 2, 2],
            [1, 1, 1, 2, 2, 3, 3],
            [1, 1, 1, 2, 2, 3, 3],
            [1, 1, 2, 2, 2, 3, 3],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, &score) in row.iter().enumerate() {
                assert_eq!(
                    m.cell(i + 1, j + 1).score,
                    score,
                    "cell ({}, {})",
                    i + 1,
                    j + 1
                );
            }
        }
        for t in 0..8 {
            assert_eq!(m.cell(0, t), LcskCell::EMPTY);
            assert_eq!(m.cell(t, 0), LcskCell::EMPTY);
        }
        // Cells with their own 2-match that extends the best chain keep it.
        assert_eq!(m.cell(1, 1).pred, Some((0, 0)));
        assert_eq!(m.cell(3, 4).pred, Some((2, 3)));
        assert_eq!(m.cell(5, 6).pred, Some((4, 5)));
    }

    #[test]
    fn golden_traceback() {
        let (a, b) = (b"CTGCTTTG", b"CTTGCTTT");
        let r = lcsk_traceback(a, b, p(2));
        assert_eq!(r.length, 3);
        r.validate(a, b, p(2)).unwrap();
    }

    #[test]
    fn traceback_avoids_dead_end_match() {
        let (a, b) = (b"GCGTC", b"CGCGT");
        let r = lcsk_traceback(a, b, p(2));
        assert_eq!(
            r.matches,
            [KMatchSpan::new(0, 1, 2), KMatchSpan::new(2, 3, 2)]
        );
    }

    #[test]
    fn update_pred_cases() {
        let c = |score, pred| LcskCell { score, pred };
        // Equal-length sources: the own k-match wins the tie.
        let out = update_pred(
            (4, 4),
            c(1, Some((0, 0))),
            c(1, Some((1, 2))),
            c(0, None),
            true,
        );
        assert_eq!(out, c(1, Some((4, 4))));
        // Nothing anywhere.
        let out = update_pred(
            (2, 2),
            LcskCell::EMPTY,
            LcskCell::EMPTY,
            LcskCell::EMPTY,
            false,
        );
        assert_eq!(out, LcskCell::EMPTY);
        // The shorter up branch never contributes.
        let left = c(2, Some((3, 1)));
        let up = c(1, Some((0, 5)));
        let out = update_pred((6, 6), left, up, c(1, Some((0, 0))), true);
        assert_eq!(out, c(2, Some((6, 6))));
        let out = update_pred((6, 6), left, up, c(1, Some((0, 0))), false);
        assert_eq!(out, left);
        let out = update_pred((6, 6), c(1, None), c(2, Some((2, 2))), c(0, None), false);
        assert_eq!(out.pred, Some((2, 2)));
    }

    #[test]
    fn full_matrix_size_for_equal_lengths() {
        for (n, k) in [(8, 2), (10, 3), (5, 5)] {
            let a = vec![b'A'; n];
            let m = LcskMatrix::build(&a, &a, p(k));
            assert_eq!((m.rows() - 1) * (m.cols() - 1), (n - k + 1) * (n - k + 1));
        }
    }

    #[test]
    fn validate_rejects_bad_chains() {
        let (a, b) = (b"ACACAC", b"ACACAC");
        let ok = LcskResult {
            length: 2,
            matches: vec![KMatchSpan::new(0, 0, 2), KMatchSpan::new(2, 2, 2)],
        };
        ok.validate(a, b, p(2)).unwrap();
        let overlap = LcskResult {
            length: 2,
            matches: vec![KMatchSpan::new(0, 0, 2), KMatchSpan::new(1, 3, 2)],
        };
        assert_eq!(
            overlap.validate(a, b, p(2)),
            Err(WitnessError::Order { index: 1 })
        );
        let overlap = LcskResult {
            length: 2,
            matches: vec![KMatchSpan::new(0, 0, 2), KMatchSpan::new(2, 1, 2)],
        };
        assert_eq!(
            overlap.validate(a, b, p(2)),
            Err(WitnessError::Mismatch { index: 1 })
        );
        let overlap = LcskResult {
            length: 2,
            matches: vec![KMatchSpan::new(2, 2, 2), KMatchSpan::new(2, 4, 2)],
        };
        assert_eq!(
            overlap.validate(a, b, p(2)),
            Err(WitnessError::Order { index: 1 })
        );
        let miscount = LcskResult {
            length: 3,
            ..ok.clone()
        };
        assert!(matches!(
            miscount.validate(a, b, p(2)),
            Err(WitnessError::Count { .. })
        ));
    }

    #[test]
    fn workspace_is_linear_in_k() {
        let a = vec![b'A'; 300];
        let b = vec![b'C'; 200];
        let (_, w2) = lcsk_score_with_workspace(&a, &b, p(2));
        let (_, w8) = lcsk_score_with_workspace(&b, &a, p(8));
        assert_eq!(w2.score_cells, 3 * 200);
        assert_eq!(w8.score_cells, 9 * 194);
        assert_eq!(w2.dcount_cells, 201);
    }
}
