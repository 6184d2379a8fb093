use lcsk_core::{edk_score, edk_traceback, lcsk_score, lcsk_traceback, Params, Sequence};

use crate::error::CliError;
use crate::report::{Format, Metric, Mode, PairReport};

#[derive(Debug, Clone)]
pub struct PairwiseCmd {
    pub metric: Metric,
    pub k: usize,
    pub mode: Mode,
    pub a: Sequence,
    pub b: Sequence,
    pub traceback: bool,
    pub format: Format,
}

/// Scores one pair and returns the rendered report.
pub fn run_pairwise(cmd: &PairwiseCmd) -> Result<(PairReport, String), CliError> {
    let params = Params::new(cmd.k)?;
    let (a, b) = (cmd.a.as_bytes(), cmd.b.as_bytes());
    if cmd.k > a.len().min(b.len()) {
        log::warn!(
            "k = {} exceeds the shorter input (|A| = {}, |B| = {}); no k-match is possible",
            cmd.k,
            a.len(),
            b.len()
        );
    }
    if cmd.metric == Metric::Lcsk && cmd.mode != Mode::Full {
        log::warn!("--mode only applies to edk; ignored");
    }

    let ops = cmd.mode.into();
    let report = match (cmd.metric, cmd.traceback) {
        (Metric::Lcsk, true) => PairReport::lcsk(cmd.k, &lcsk_traceback(a, b, params)),
        (Metric::Lcsk, false) => {
            PairReport::score_only(Metric::Lcsk, cmd.k, None, lcsk_score(a, b, params))
        }
        (Metric::Edk, true) => PairReport::edk(cmd.k, cmd.mode, &edk_traceback(a, b, params, ops)),
        (Metric::Edk, false) => PairReport::score_only(
            Metric::Edk,
            cmd.k,
            Some(cmd.mode),
            edk_score(a, b, params, ops),
        ),
    };

    let text = match cmd.format {
        Format::Json => report.to_json() + "\n",
        Format::Tsv => report.to_tsv(),
    };
    Ok((report, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cmd(metric: Metric, k: usize, a: &str, b: &str, traceback: bool) -> PairwiseCmd {
        PairwiseCmd {
            metric,
            k,
            mode: Mode::Full,
            a: Sequence::new("a", a.as_bytes()),
            b: Sequence::new("b", b.as_bytes()),
            traceback,
            format: Format::Json,
        }
    }

    #[test]
    fn scores() {
        let (r, _) = run_pairwise(&cmd(Metric::Lcsk, 2, "TGCGTGTG", "GTTGTGCC", false)).unwrap();
        assert_eq!(r.score, 2);
        assert!(r.matches.is_none());
        let (r, _) = run_pairwise(&cmd(Metric::Edk, 2, "CTGCTTTG", "CTTGCTTT", true)).unwrap();
        assert_eq!(r.score, 3);
        let (r, text) = run_pairwise(&cmd(Metric::Lcsk, 5, "AB", "AB", true)).unwrap();
        assert_eq!(r.score, 0);
        assert_eq!(r.matches, Some(vec![]));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn json_round_trip_revalidates() {
        let params = Params::new(2).unwrap();
        let (a, b) = ("CTGCTTTG", "CTTGCTTT");
        let (_, text) = run_pairwise(&cmd(Metric::Lcsk, 2, a, b, true)).unwrap();
        let back: PairReport = serde_json::from_str(&text).unwrap();
        let chain = back.lcsk_result().unwrap();
        assert_eq!(chain.length, 3);
        chain.validate(a.as_bytes(), b.as_bytes(), params).unwrap();

        let (_, text) = run_pairwise(&cmd(Metric::Edk, 2, a, b, true)).unwrap();
        let back: PairReport = serde_json::from_str(&text).unwrap();
        let script = back.edk_result().unwrap().unwrap();
        script.validate(a.as_bytes(), b.as_bytes(), params).unwrap();
    }

    #[test]
    fn tsv_output() {
        let mut c = cmd(Metric::Edk, 2, "CTGCTTTG", "CTTGCTTT", false);
        c.format = Format::Tsv;
        let (_, text) = run_pairwise(&c).unwrap();
        assert_eq!(text, "metric\tk\tscore\nedk\t2\t3\n");
    }

    #[test]
    fn zero_k_is_rejected() {
        let err = run_pairwise(&cmd(Metric::Lcsk, 0, "A", "A", false)).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
