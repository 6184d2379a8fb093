//! JSON and TSV reports for single comparisons.
//!
//! JSON schema (all positions 0-based):
//!
//! ```text
//! { "metric": "lcsk" | "edk",
//!   "k": int,
//!   "mode": "full" | "indel",                     edk only
//!   "score": int,
//!   "matches": [{"a_start", "b_start", "len"}],   lcsk --traceback
//!   "script": [{"op", "a_pos"?, "b_pos"?, "len", "sym"?}] }  edk --traceback
//! ```
//!
//! `op` is one of `insert`, `delete`, `substitute`, `kmatch`. `sym` is the
//! symbol written by an insert or substitute, as a one-character string whose
//! code point is the byte value.

use clap::ValueEnum;
use lcsk_core::{EditOp, EdkResult, KMatchSpan, LcskResult, OpsMode};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Lcsk,
    Edk,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Lcsk => "lcsk",
            Metric::Edk => "edk",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Full,
    Indel,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Indel => "indel",
        }
    }
}

impl From<Mode> for OpsMode {
    fn from(m: Mode) -> OpsMode {
        match m {
            Mode::Full => OpsMode::Full,
            Mode::Indel => OpsMode::IndelOnly,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanJson {
    pub a_start: usize,
    pub b_start: usize,
    pub len: usize,
}

impl From<KMatchSpan> for SpanJson {
    fn from(s: KMatchSpan) -> Self {
        SpanJson {
            a_start: s.a_start,
            b_start: s.b_start,
            len: s.len,
        }
    }
}

impl From<SpanJson> for KMatchSpan {
    fn from(s: SpanJson) -> Self {
        KMatchSpan::new(s.a_start, s.b_start, s.len)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpName {
    Insert,
    Delete,
    Substitute,
    Kmatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpJson {
    pub op: OpName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_pos: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_pos: Option<usize>,
    pub len: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym: Option<char>,
}

impl From<&EditOp> for OpJson {
    fn from(op: &EditOp) -> Self {
        let (name, sym) = match *op {
            EditOp::Insert { sym, .. } => (OpName::Insert, Some(sym)),
            EditOp::Delete { .. } => (OpName::Delete, None),
            EditOp::Substitute { sym, .. } => (OpName::Substitute, Some(sym)),
            EditOp::KMatch(_) => (OpName::Kmatch, None),
        };
        OpJson {
            op: name,
            a_pos: op.a_pos(),
            b_pos: op.b_pos(),
            len: op.span(),
            sym: sym.map(char::from),
        }
    }
}

impl TryFrom<&OpJson> for EditOp {
    type Error = String;

    fn try_from(j: &OpJson) -> Result<Self, String> {
        let sym = || -> Result<u8, String> {
            let c = j.sym.ok_or("missing sym")?;
            u8::try_from(c).map_err(|_| format!("sym {c:?} is not a byte"))
        };
        let a = || j.a_pos.ok_or("missing a_pos");
        let b = || j.b_pos.ok_or("missing b_pos");
        Ok(match j.op {
            OpName::Insert => EditOp::Insert {
                b_pos: b()?,
                sym: sym()?,
            },
            OpName::Delete => EditOp::Delete { a_pos: a()? },
            OpName::Substitute => EditOp::Substitute {
                a_pos: a()?,
                b_pos: b()?,
                sym: sym()?,
            },
            OpName::Kmatch => EditOp::KMatch(KMatchSpan::new(a()?, b()?, j.len)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub metric: Metric,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    pub score: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches: Option<Vec<SpanJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub script: Option<Vec<OpJson>>,
}

impl PairReport {
    pub fn score_only(metric: Metric, k: usize, mode: Option<Mode>, score: usize) -> Self {
        PairReport {
            metric,
            k,
            mode,
            score,
            matches: None,
            script: None,
        }
    }

    pub fn lcsk(k: usize, result: &LcskResult) -> Self {
        PairReport {
            metric: Metric::Lcsk,
            k,
            mode: None,
            score: result.length,
            matches: Some(result.matches.iter().copied().map(SpanJson::from).collect()),
            script: None,
        }
    }

    pub fn edk(k: usize, mode: Mode, result: &EdkResult) -> Self {
        PairReport {
            metric: Metric::Edk,
            k,
            mode: Some(mode),
            score: result.distance,
            matches: None,
            script: Some(result.script.iter().map(OpJson::from).collect()),
        }
    }

    /// The chain carried by an lcsk report, if any.
    pub fn lcsk_result(&self) -> Option<LcskResult> {
        let matches: Vec<KMatchSpan> = self
            .matches
            .as_ref()?
            .iter()
            .copied()
            .map(KMatchSpan::from)
            .collect();
        Some(LcskResult {
            length: self.score,
            matches,
        })
    }

    /// The script carried by an edk report, if any.
    pub fn edk_result(&self) -> Option<Result<EdkResult, String>> {
        let script = self.script.as_ref()?;
        Some(
            script
                .iter()
                .map(EditOp::try_from)
                .collect::<Result<Vec<_>, _>>()
                .map(|script| EdkResult {
                    distance: self.score,
                    script,
                }),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "metric\tk\tscore\n{}\t{}\t{}\n",
            self.metric.as_str(),
            self.k,
            self.score
        )
    }
}
