//! Wall-clock and working-memory scaling of the score-only paths.

use std::fmt::Write;
use std::hint::black_box;
use std::time::{Duration, Instant};

use lcsk_core::lcsk::table_extent;
use lcsk_core::{edk_score_with_workspace, lcsk_score_with_workspace, Params, Workspace};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::CliError;
use crate::report::{Metric, Mode};

#[derive(Debug, Clone)]
pub struct BenchCmd {
    pub metric: Metric,
    pub k: usize,
    pub mode: Mode,
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub median: Duration,
    pub workspace: Workspace,
    /// Cells a full (traceback) table would need at this size.
    pub full_table_cells: usize,
    /// `median / previous median`, when there is a previous row.
    pub ratio: Option<f64>,
}

fn random_dna(rng: &mut StdRng, n: usize) -> Vec<u8> {
    (0..n).map(|_| b"ACGT"[rng.random_range(0..4)]).collect()
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

pub fn run_bench(cmd: &BenchCmd) -> Result<Vec<BenchRow>, CliError> {
    let params = Params::new(cmd.k)?;
    if cmd.sizes.is_empty() {
        return Err(CliError::Usage("--sizes needs at least one value".into()));
    }
    if !cmd.sizes.is_sorted() {
        return Err(CliError::Usage("--sizes must be in ascending order".into()));
    }
    if cmd.repeats == 0 {
        return Err(CliError::Usage("--repeats must be at least 1".into()));
    }

    let mut rng = StdRng::seed_from_u64(cmd.seed);
    let mut rows: Vec<BenchRow> = Vec::with_capacity(cmd.sizes.len());
    for &n in &cmd.sizes {
        let a = random_dna(&mut rng, n);
        let b = random_dna(&mut rng, n);
        let mut samples = Vec::with_capacity(cmd.repeats);
        let mut workspace = Workspace::default();
        for _ in 0..cmd.repeats {
            let start = Instant::now();
            let (_, w) = match cmd.metric {
                Metric::Lcsk => lcsk_score_with_workspace(black_box(&a), black_box(&b), params),
                Metric::Edk => {
                    edk_score_with_workspace(black_box(&a), black_box(&b), params, cmd.mode.into())
                }
            };
            samples.push(start.elapsed());
            workspace = w;
        }
        let full_table_cells = match cmd.metric {
            Metric::Lcsk => table_extent(n, cmd.k).pow(2),
            Metric::Edk => (n + 1).pow(2),
        };
        let median = median(samples);
        let ratio = rows
            .last()
            .map(|prev| median.as_secs_f64() / prev.median.as_secs_f64().max(f64::MIN_POSITIVE));
        rows.push(BenchRow {
            n,
            median,
            workspace,
            full_table_cells,
            ratio,
        });
    }
    Ok(rows)
}

pub fn render(cmd: &BenchCmd, rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# metric={} k={} mode={} repeats={} seed={}",
        cmd.metric.as_str(),
        cmd.k,
        cmd.mode.as_str(),
        cmd.repeats,
        cmd.seed
    );
    out.push_str("n\tmedian_ms\tworkspace_cells\tworkspace_bytes\tfull_table_cells\tworkspace_fraction\ttime_ratio\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{:.3}\t{}\t{}\t{}\t{:.6}\t{}",
            r.n,
            r.median.as_secs_f64() * 1e3,
            r.workspace.total_cells(),
            r.workspace.bytes(),
            r.full_table_cells,
            r.workspace.total_cells() as f64 / r.full_table_cells as f64,
            r.ratio.map_or("-".to_string(), |x| format!("{x:.3}")),
        );
    }
    out
}
