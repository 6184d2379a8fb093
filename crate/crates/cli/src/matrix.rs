//! All-pairs score matrices.

use std::fs;
use std::path::Path;

use lcsk_core::{edk_score, lcsk_score, OpsMode, Params};
use rayon::prelude::*;

use crate::error::CliError;
use crate::fasta::Dataset;
use crate::report::{Metric, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixReport {
    pub metric: Metric,
    pub k: usize,
    pub mode: Mode,
    pub ids: Vec<String>,
    /// Row-major `ids.len()` x `ids.len()` scores.
    pub scores: Vec<usize>,
}

impl MatrixReport {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.scores[i * self.ids.len() + j]
    }

    /// Header row and first column carry the record ids; the corner cell is
    /// `id`.
    pub fn to_tsv(&self) -> String {
        let n = self.ids.len();
        let mut out = String::from("id");
        for id in &self.ids {
            out.push('\t');
            out.push_str(id);
        }
        out.push('\n');
        for (i, id) in self.ids.iter().enumerate() {
            out.push_str(id);
            for j in 0..n {
                out.push('\t');
                out.push_str(&self.get(i, j).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Scores every unordered pair once (both metrics are symmetric) on a pool
/// of `jobs` threads; cell order never depends on scheduling.
pub fn compute_matrix(
    dataset: &Dataset,
    metric: Metric,
    k: usize,
    mode: Mode,
    jobs: usize,
) -> Result<MatrixReport, CliError> {
    let params = Params::new(k)?;
    if dataset.is_empty() {
        return Err(CliError::Usage(format!("{}: no records", dataset.source)));
    }
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let n = dataset.len();
    let ops: OpsMode = mode.into();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let score = |&(i, j): &(usize, usize)| {
        let (a, b) = (dataset.records[i].as_bytes(), dataset.records[j].as_bytes());
        match metric {
            Metric::Lcsk => lcsk_score(a, b, params),
            Metric::Edk => edk_score(a, b, params, ops),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let values: Vec<usize> = pool.install(|| pairs.par_iter().map(score).collect());

    let mut scores = vec![0; n * n];
    for (&(i, j), v) in pairs.iter().zip(values) {
        scores[i * n + j] = v;
        scores[j * n + i] = v;
    }
    Ok(MatrixReport {
        metric,
        k,
        mode,
        ids: dataset.ids().map(str::to_string).collect(),
        scores,
    })
}

#[derive(Debug, Clone)]
pub struct MatrixCmd<'a> {
    pub metric: Metric,
    pub k: usize,
    pub mode: Mode,
    pub input: &'a Dataset,
    pub out: Option<&'a Path>,
    pub jobs: usize,
}

/// Computes the matrix and writes it to `out`, or returns it for stdout.
pub fn run_matrix(cmd: &MatrixCmd<'_>) -> Result<(MatrixReport, String), CliError> {
    let report = compute_matrix(cmd.input, cmd.metric, cmd.k, cmd.mode, cmd.jobs)?;
    let tsv = report.to_tsv();
    if let Some(path) = cmd.out {
        fs::write(path, &tsv).map_err(|e| CliError::io(path, e))?;
    }
    Ok((report, tsv))
}
