//! Reference implementations that follow the definitions directly.
//!
//! These enumerate chains of k-matches rather than filling a prefix table, and
//! are only meant for short inputs: they back the property tests and the
//! `oracle-check` discrepancy harness.
//!
//! EDk for a fixed chain is a sum over the gaps it leaves. A gap with `ga`
//! unmatched symbols of `A` and `gb` of `B` needs every one of them edited. An
//! edit op touches at most one symbol of each side, so at least
//! `max(ga, gb)` ops are needed, and `min(ga, gb)` substitutions plus
//! `|ga - gb|` indels reach that bound. Substitutions cannot cross a k-match
//! without breaking order, so gaps are independent. Without substitutions the
//! gap costs `ga + gb`.

use alloc::vec;
use alloc::vec::Vec;

use crate::edk::OpsMode;
use crate::error::{OracleError, WitnessError};
use crate::lcsk::validate_chain;
use crate::seq::{KMatchSpan, Params};

/// Length limit for [`brute_lcsk`].
pub const LCSK_LIMIT: usize = 14;
/// Length limit for [`brute_edk`].
pub const EDK_LIMIT: usize = 12;
/// Length limit for [`enumerate_chains`], which materializes every chain.
pub const ENUMERATION_LIMIT: usize = 10;

fn guard(a: &[u8], b: &[u8], limit: usize) -> Result<(), OracleError> {
    if a.len() > limit || b.len() > limit {
        Err(OracleError::TooLarge {
            len_a: a.len(),
            len_b: b.len(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Every k-match between `a` and `b`, by direct substring comparison.
pub fn all_kmatches(a: &[u8], b: &[u8], params: Params) -> Vec<KMatchSpan> {
    let k = params.k();
    let mut out = Vec::new();
    if a.len() < k || b.len() < k {
        return out;
    }
    for s in 0..=a.len() - k {
        for t in 0..=b.len() - k {
            if a[s..s + k] == b[t..t + k] {
                out.push(KMatchSpan::new(s, t, k));
            }
        }
    }
    out
}

/// Search over "which k-match comes next", memoized on the first free
/// position of each sequence.
struct ChainSearch<'a> {
    matches: &'a [KMatchSpan],
    cols: usize,
    memo: Vec<Option<usize>>,
}

impl<'a> ChainSearch<'a> {
    fn new(matches: &'a [KMatchSpan], len_a: usize, len_b: usize) -> Self {
        ChainSearch {
            matches,
            cols: len_b + 1,
            memo: vec![None; (len_a + 1) * (len_b + 1)],
        }
    }

    fn solve(
        &mut self,
        i: usize,
        j: usize,
        score: &dyn Fn(usize, usize, Option<usize>) -> usize,
        pick_max: bool,
    ) -> usize {
        if let Some(v) = self.memo[i * self.cols + j] {
            return v;
        }
        // The option of placing no further k-match.
        let mut best = score(i, j, None);
        for idx in 0..self.matches.len() {
            let m = self.matches[idx];
            if m.a_start < i || m.b_start < j {
                continue;
            }
            let rest = self.solve(m.a_end(), m.b_end(), score, pick_max);
            let v = score(i, j, Some(idx)) + rest;
            best = if pick_max { best.max(v) } else { best.min(v) };
        }
        self.memo[i * self.cols + j] = Some(best);
        best
    }
}

/// LCSk by exhaustive chain search.
pub fn brute_lcsk(a: &[u8], b: &[u8], params: Params) -> Result<usize, OracleError> {
    guard(a, b, LCSK_LIMIT)?;
    let matches = all_kmatches(a, b, params);
    let mut search = ChainSearch::new(&matches, a.len(), b.len());
    let score = |_: usize, _: usize, next: Option<usize>| usize::from(next.is_some());
    Ok(search.solve(0, 0, &score, true))
}

fn gap_cost(ga: usize, gb: usize, mode: OpsMode) -> usize {
    match mode {
        OpsMode::Full => ga.max(gb),
        OpsMode::IndelOnly => ga + gb,
    }
}

/// EDk by minimizing the gap cost over every chain, the empty one included.
pub fn brute_edk(a: &[u8], b: &[u8], params: Params, mode: OpsMode) -> Result<usize, OracleError> {
    guard(a, b, EDK_LIMIT)?;
    let matches = all_kmatches(a, b, params);
    let (n, m) = (a.len(), b.len());
    let mut search = ChainSearch::new(&matches, n, m);
    let score = |i: usize, j: usize, next: Option<usize>| match next {
        Some(idx) => gap_cost(matches[idx].a_start - i, matches[idx].b_start - j, mode),
        None => gap_cost(n - i, m - j, mode),
    };
    Ok(search.solve(0, 0, &score, false))
}

/// Edit cost of the script whose unedited symbols are exactly `chain`.
pub fn chain_edit_cost(
    a: &[u8],
    b: &[u8],
    params: Params,
    chain: &[KMatchSpan],
    mode: OpsMode,
) -> Result<usize, WitnessError> {
    validate_chain(chain, a, b, params)?;
    let (mut pa, mut pb, mut cost) = (0, 0, 0);
    for span in chain {
        cost += gap_cost(span.a_start - pa, span.b_start - pb, mode);
        pa = span.a_end();
        pb = span.b_end();
    }
    Ok(cost + gap_cost(a.len() - pa, b.len() - pb, mode))
}

/// All chains that cannot be extended by inserting another k-match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChainEnumeration {
    pub chains: Vec<Vec<KMatchSpan>>,
}

impl ChainEnumeration {
    pub fn longest(&self) -> usize {
        self.chains.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn fits_after(prev: Option<&KMatchSpan>, next: &KMatchSpan) -> bool {
    prev.is_none_or(|p| next.a_start >= p.a_end() && next.b_start >= p.b_end())
}

fn is_extendable(chain: &[KMatchSpan], candidates: &[KMatchSpan]) -> bool {
    candidates.iter().any(|m| {
        if chain.contains(m) {
            return false;
        }
        let pos = chain.partition_point(|c| (c.a_start, c.b_start) < (m.a_start, m.b_start));
        let before = pos.checked_sub(1).map(|p| &chain[p]);
        fits_after(before, m)
            && chain
                .get(pos)
                .is_none_or(|after| fits_after(Some(m), after))
    })
}

/// Lists every maximal legal chain.
pub fn enumerate_chains(
    a: &[u8],
    b: &[u8],
    params: Params,
) -> Result<ChainEnumeration, OracleError> {
    guard(a, b, ENUMERATION_LIMIT)?;
    let matches = all_kmatches(a, b, params);
    let mut out = ChainEnumeration::default();
    let mut stack = Vec::new();
    extend(&matches, &mut stack, &mut out);
    Ok(out)
}

fn extend(matches: &[KMatchSpan], chain: &mut Vec<KMatchSpan>, out: &mut ChainEnumeration) {
    let mut grew = false;
    for m in matches {
        if fits_after(chain.last(), m) {
            grew = true;
            chain.push(*m);
            extend(matches, chain, out);
            chain.pop();
        }
    }
    if !grew && !is_extendable(chain, matches) {
        out.chains.push(chain.clone());
    }
}

/// Textbook LCS length.
pub fn classic_lcs(a: &[u8], b: &[u8]) -> usize {
    let mut t = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            t[i][j] = if a[i - 1] == b[j - 1] {
                t[i - 1][j - 1] + 1
            } else {
                t[i - 1][j].max(t[i][j - 1])
            };
        }
    }
    t[a.len()][b.len()]
}

/// Textbook Levenshtein distance with unit costs.
pub fn levenshtein(a: &[u8], b: &[u8]) -> usize {
    let mut t = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in t[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = t[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]);
            t[i][j] = sub.min(t[i - 1][j] + 1).min(t[i][j - 1] + 1);
        }
    }
    t[a.len()][b.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize) -> Params {
        Params::new(k).unwrap()
    }

    #[test]
    fn brute_lcsk_examples() {
        assert_eq!(brute_lcsk(b"TGCGTGTG", b"GTTGTGCC", p(2)), Ok(2));
        assert_eq!(brute_lcsk(b"TGCGTGTG", b"GTTGTGCC", p(3)), Ok(1));
        assert_eq!(brute_lcsk(b"", b"", p(3)), Ok(0));
        assert!(brute_lcsk(&[b'A'; 15], b"A", p(1)).is_err());
    }

    #[test]
    fn brute_edk_examples() {
        let full = OpsMode::Full;
        assert_eq!(brute_edk(b"CTGCTTTG", b"CTTGCTTT", p(2), full), Ok(3));
        assert_eq!(brute_edk(b"TGCGTGTG", b"GTTGTGCC", p(2), full), Ok(6));
        assert_eq!(brute_edk(b"X", b"Y", p(2), full), Ok(1));
        assert_eq!(brute_edk(b"AB", b"BA", p(2), full), Ok(2));
        assert!(brute_edk(&[b'A'; 13], b"", p(2), full).is_err());
    }

    #[test]
    fn fixed_chain_costs() {
        let (a, b) = (b"TGCGTGTG", b"GTTGTGCC");
        let k = p(2);
        let chain = [KMatchSpan::new(3, 0, 2), KMatchSpan::new(6, 4, 2)];
        assert_eq!(chain_edit_cost(a, b, k, &chain, OpsMode::Full), Ok(7));
        let chain = [KMatchSpan::new(4, 2, 2), KMatchSpan::new(6, 4, 2)];
        assert_eq!(chain_edit_cost(a, b, k, &chain, OpsMode::Full), Ok(6));
        let chain = [KMatchSpan::new(0, 2, 2), KMatchSpan::new(6, 4, 2)];
        assert_eq!(chain_edit_cost(a, b, k, &chain, OpsMode::Full), Ok(8));
        assert_eq!(chain_edit_cost(a, b, k, &[], OpsMode::Full), Ok(8));
        let bad = [KMatchSpan::new(0, 0, 2)];
        assert!(chain_edit_cost(a, b, k, &bad, OpsMode::Full).is_err());
    }

    #[test]
    fn classic_examples() {
        assert_eq!(classic_lcs(b"TGCGTGTG", b"GTTGTGCC"), 5);
        assert_eq!(classic_lcs(b"", b"ACGT"), 0);
        assert_eq!(classic_lcs(b"GTGGTG", b"TCCTCC"), 2);
        assert_eq!(levenshtein(b"kitten", b"sitting"), 3);
        assert_eq!(levenshtein(b"", b"abc"), 3);
    }

    #[test]
    fn enumeration_agrees_with_search() {
        let (a, b) = (b"GCGTC", b"CGCGT");
        let e = enumerate_chains(a, b, p(2)).unwrap();
        assert_eq!(e.longest(), 2);
        // (1,0) and (1,2) are dead ends of length 1; (0,1),(2,3) is the only pair.
        assert!(e
            .chains
            .contains(&vec![KMatchSpan::new(0, 1, 2), KMatchSpan::new(2, 3, 2)]));
        assert!(e.chains.contains(&vec![KMatchSpan::new(1, 0, 2)]));
        for c in &e.chains {
            validate_chain(c, a, b, p(2)).unwrap();
        }
        let (a, b) = (b"TGCGTGTG", b"GTTGTGCC");
        for k in 1..=4 {
            let e = enumerate_chains(a, b, p(k)).unwrap();
            assert_eq!(e.longest(), brute_lcsk(a, b, p(k)).unwrap());
        }
    }

    #[test]
    fn enumeration_of_unmatched_is_single_empty_chain() {
        let e = enumerate_chains(b"AAAA", b"CCCC", p(1)).unwrap();
        assert_eq!(e.chains, vec![Vec::<KMatchSpan>::new()]);
    }
}
