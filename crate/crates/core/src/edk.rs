//! EDk: edit distance in which every unedited symbol belongs to a chain of
//! non-overlapping k-matches.
//!
//! `D[i][j]` is the distance between `A[..i]` and `B[..j]`, with
//! `D[i][0] = i` and `D[0][j] = j`. For `i, j >= 1`:
//!
//! ```text
//! D[i][j] = min(D[i-1][j] + 1,                  delete a_i
//!               D[i][j-1] + 1,                  insert b_j
//!               D[i-k][j-k]      if dcount >= k k-match ending at (i, j)
//!               D[i-1][j-1] + 1  otherwise)     substitute
//! ```
//!
//! Equal symbols outside a k-match still cost one substitution. With
//! [`OpsMode::IndelOnly`] the substitute branch is removed and the distance
//! equals `|A| + |B| - 2k * LCSk`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{ContractError, WitnessError};
use crate::lcsk::{validate_chain, Workspace};
use crate::seq::{DcountRow, KMatchSpan, Params};

/// Which edit operations are allowed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum OpsMode {
    #[default]
    Full,
    /// Insertions and deletions only.
    IndelOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditKind {
    Insert,
    Delete,
    Substitute,
    KMatch,
}

/// One step of an edit script. Insertions and substitutions carry the symbol
/// taken from `B` so a script can be replayed against `A` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditOp {
    Insert { b_pos: usize, sym: u8 },
    Delete { a_pos: usize },
    Substitute { a_pos: usize, b_pos: usize, sym: u8 },
    KMatch(KMatchSpan),
}

impl EditOp {
    pub fn kind(&self) -> EditKind {
        match self {
            EditOp::Insert { .. } => EditKind::Insert,
            EditOp::Delete { .. } => EditKind::Delete,
            EditOp::Substitute { .. } => EditKind::Substitute,
            EditOp::KMatch(_) => EditKind::KMatch,
        }
    }

    pub fn a_pos(&self) -> Option<usize> {
        match *self {
            EditOp::Insert { .. } => None,
            EditOp::Delete { a_pos } | EditOp::Substitute { a_pos, .. } => Some(a_pos),
            EditOp::KMatch(span) => Some(span.a_start),
        }
    }

    pub fn b_pos(&self) -> Option<usize> {
        match *self {
            EditOp::Delete { .. } => None,
            EditOp::Insert { b_pos, .. } | EditOp::Substitute { b_pos, .. } => Some(b_pos),
            EditOp::KMatch(span) => Some(span.b_start),
        }
    }

    /// Number of symbols the operation spans: `k` for a k-match, else 1.
    pub fn span(&self) -> usize {
        match self {
            EditOp::KMatch(span) => span.len,
            _ => 1,
        }
    }

    pub fn is_edit(&self) -> bool {
        !matches!(self, EditOp::KMatch(_))
    }
}

/// An EDk distance with one optimal edit script, ordered left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdkResult {
    pub distance: usize,
    pub script: Vec<EditOp>,
}

impl EdkResult {
    pub fn kmatches(&self) -> impl Iterator<Item = KMatchSpan> + '_ {
        self.script.iter().filter_map(|op| match op {
            EditOp::KMatch(span) => Some(*span),
            _ => None,
        })
    }

    /// Applies the script to `a`.
    pub fn replay(&self, a: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(a.len());
        for op in &self.script {
            match *op {
                EditOp::Insert { sym, .. } | EditOp::Substitute { sym, .. } => out.push(sym),
                EditOp::Delete { .. } => {}
                EditOp::KMatch(span) => out.extend_from_slice(&a[span.a_start..span.a_end()]),
            }
        }
        out
    }

    /// Checks coverage, ordering, the k-match chain, the edit count, and that
    /// replaying against `a` yields `b`.
    pub fn validate(&self, a: &[u8], b: &[u8], params: Params) -> Result<(), WitnessError> {
        let k = params.k();
        let (mut pa, mut pb) = (0usize, 0usize);
        let mut edits = 0usize;
        for (index, op) in self.script.iter().enumerate() {
            let bad = WitnessError::BadOp { index };
            match *op {
                EditOp::Insert { b_pos, sym } => {
                    if b_pos != pb || b.get(b_pos) != Some(&sym) {
                        return Err(bad);
                    }
                    pb += 1;
                }
                EditOp::Delete { a_pos } => {
                    if a_pos != pa || a_pos >= a.len() {
                        return Err(bad);
                    }
                    pa += 1;
                }
                EditOp::Substitute { a_pos, b_pos, sym } => {
                    if a_pos != pa || b_pos != pb || a_pos >= a.len() || b.get(b_pos) != Some(&sym)
                    {
                        return Err(bad);
                    }
                    pa += 1;
                    pb += 1;
                }
                EditOp::KMatch(span) => {
                    if span.a_start != pa || span.b_start != pb || span.len != k {
                        return Err(bad);
                    }
                    if !span.is_valid_in(a, b) {
                        return Err(WitnessError::Mismatch { index });
                    }
                    pa += k;
                    pb += k;
                }
            }
            if op.is_edit() {
                edits += 1;
            }
        }
        if pa != a.len() || pb != b.len() {
            return Err(WitnessError::Coverage { a: pa, b: pb });
        }
        if edits != self.distance {
            return Err(WitnessError::Distance {
                declared: self.distance,
                actual: edits,
            });
        }
        let chain: Vec<KMatchSpan> = self.kmatches().collect();
        validate_chain(&chain, a, b, params)?;
        if self.replay(a) != b {
            return Err(WitnessError::Replay);
        }
        Ok(())
    }
}

/// `|A| + |B| - 2k * LCSk`: the indel-only EDk, computed from an LCSk value.
pub fn edk_from_lcsk_identity(
    len_a: usize,
    len_b: usize,
    k: usize,
    lcsk: usize,
) -> Result<usize, ContractError> {
    let err = ContractError {
        len_a,
        len_b,
        k,
        lcsk,
    };
    let covered = k.checked_mul(lcsk).ok_or(err.clone())?;
    if covered > len_a.min(len_b) {
        return Err(err);
    }
    (len_a + len_b).checked_sub(2 * covered).ok_or(err)
}

/// EDk score in `O(k * min(|A|, |B|))` memory.
pub fn edk_score(a: &[u8], b: &[u8], params: Params, mode: OpsMode) -> usize {
    edk_score_with_workspace(a, b, params, mode).0
}

/// Like [`edk_score`], also reporting the cells it allocated.
pub fn edk_score_with_workspace(
    a: &[u8],
    b: &[u8],
    params: Params,
    mode: OpsMode,
) -> (usize, Workspace) {
    // Swapping A and B swaps insertions with deletions; the distance is unchanged.
    let (a, b) = if b.len() > a.len() { (b, a) } else { (a, b) };
    let k = params.k();
    let cols = b.len() + 1;
    let slots = k + 1;
    let mut ring = vec![0u32; slots * cols];
    let mut dcount = DcountRow::new(b.len());
    let workspace = Workspace {
        score_cells: ring.len(),
        dcount_cells: dcount.len(),
    };

    for (j, cell) in ring[..cols].iter_mut().enumerate() {
        *cell = j as u32;
    }
    for (r, &sym) in a.iter().enumerate() {
        dcount.advance(sym, b);
        let i = r + 1;
        let cur = (i % slots) * cols;
        let up = ((i - 1) % slots) * cols;
        ring[cur] = i as u32;
        for j in 1..cols {
            let mut best = ring[up + j].min(ring[cur + j - 1]) + 1;
            if dcount.get(j) >= k {
                // dcount >= k forces i, j >= k.
                let before = ((i - k) % slots) * cols;
                best = best.min(ring[before + j - k]);
            } else if mode == OpsMode::Full {
                best = best.min(ring[up + j - 1] + 1);
            }
            ring[cur + j] = best;
        }
    }
    let last = (a.len() % slots) * cols + cols - 1;
    (ring[last] as usize, workspace)
}

/// Source of a cell's minimum in the full EDk table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Row 0 or column 0.
    Boundary,
    KMatch,
    Substitute,
    Delete,
    Insert,
}

/// The whole EDk table with one back-pointer per cell.
#[derive(Debug, Clone)]
pub struct EdkMatrix {
    k: usize,
    rows: usize,
    cols: usize,
    scores: Vec<u32>,
    steps: Vec<Step>,
}

impl EdkMatrix {
    /// Ties go to k-match, then substitution, then deletion, then insertion.
    pub fn build(a: &[u8], b: &[u8], params: Params, mode: OpsMode) -> Self {
        let k = params.k();
        let rows = a.len() + 1;
        let cols = b.len() + 1;
        let mut scores = vec![0u32; rows * cols];
        let mut steps = vec![Step::Boundary; rows * cols];
        for (j, s) in scores[..cols].iter_mut().enumerate() {
            *s = j as u32;
        }
        for i in 0..rows {
            scores[i * cols] = i as u32;
        }

        let mut dcount = DcountRow::new(b.len());
        for (r, &sym) in a.iter().enumerate() {
            dcount.advance(sym, b);
            let i = r + 1;
            for j in 1..cols {
                let diag = if dcount.get(j) >= k {
                    Some((scores[(i - k) * cols + j - k], Step::KMatch))
                } else if mode == OpsMode::Full {
                    Some((scores[(i - 1) * cols + j - 1] + 1, Step::Substitute))
                } else {
                    None
                };
                let del = (scores[(i - 1) * cols + j] + 1, Step::Delete);
                let ins = (scores[i * cols + j - 1] + 1, Step::Insert);
                let mut best = del;
                if let Some(d) = diag {
                    if d.0 <= best.0 {
                        best = d;
                    }
                }
                if ins.0 < best.0 {
                    best = ins;
                }
                scores[i * cols + j] = best.0;
                steps[i * cols + j] = best.1;
            }
        }
        EdkMatrix {
            k,
            rows,
            cols,
            scores,
            steps,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn score_at(&self, i: usize, j: usize) -> usize {
        self.scores[i * self.cols + j] as usize
    }

    pub fn step_at(&self, i: usize, j: usize) -> Step {
        self.steps[i * self.cols + j]
    }

    pub fn score(&self) -> usize {
        self.score_at(self.rows - 1, self.cols - 1)
    }

    /// Follows back-pointers from `(|A|, |B|)`; the remaining prefix on the
    /// boundary becomes deletions or insertions.
    pub fn traceback(&self, b: &[u8]) -> EdkResult {
        let k = self.k;
        let mut script = Vec::new();
        let (mut i, mut j) = (self.rows - 1, self.cols - 1);
        while i > 0 && j > 0 {
            match self.step_at(i, j) {
                Step::KMatch => {
                    script.push(EditOp::KMatch(KMatchSpan::new(i - k, j - k, k)));
                    i -= k;
                    j -= k;
                }
                Step::Substitute => {
                    script.push(EditOp::Substitute {
                        a_pos: i - 1,
                        b_pos: j - 1,
                        sym: b[j - 1],
                    });
                    i -= 1;
                    j -= 1;
                }
                Step::Delete => {
                    script.push(EditOp::Delete { a_pos: i - 1 });
                    i -= 1;
                }
                Step::Insert => {
                    script.push(EditOp::Insert {
                        b_pos: j - 1,
                        sym: b[j - 1],
                    });
                    j -= 1;
                }
                Step::Boundary => unreachable!("interior cell without a step"),
            }
        }
        script.extend((0..i).rev().map(|a_pos| EditOp::Delete { a_pos }));
        script.extend((0..j).rev().map(|b_pos| EditOp::Insert {
            b_pos,
            sym: b[b_pos],
        }));
        script.reverse();
        EdkResult {
            distance: self.score(),
            script,
        }
    }
}

/// EDk distance plus an edit script. Needs the full `O(|A| * |B|)` table.
pub fn edk_traceback(a: &[u8], b: &[u8], params: Params, mode: OpsMode) -> EdkResult {
    EdkMatrix::build(a, b, params, mode).traceback(b)
}
