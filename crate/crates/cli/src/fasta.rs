//! Sequence ingestion: FASTA, plain text, and inline `--a`/`--b` arguments.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use lcsk_core::{normalize, NormalizeOptions, Sequence};
use thiserror::Error;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FastaError {
    #[error("line {line}: sequence data before the first '>' header")]
    MissingHeader { line: usize },
    #[error("line {line}: header without an id")]
    EmptyId { line: usize },
    #[error("duplicate record id {id:?}")]
    DuplicateId { id: String },
}

/// Ordered records with unique ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dataset {
    pub records: Vec<Sequence>,
    pub source: String,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.records.iter().map(Sequence::id)
    }
}

/// Parses FASTA. The id is the header up to the first whitespace; sequence
/// lines are concatenated with all whitespace removed.
pub fn parse_fasta(
    bytes: &[u8],
    source: &str,
    options: NormalizeOptions,
) -> Result<Dataset, FastaError> {
    let mut records: Vec<(String, Vec<u8>)> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in bytes.split(|&c| c == b'\n').enumerate() {
        let line_no = idx + 1;
        if let Some(header) = line.strip_prefix(b">") {
            let header = String::from_utf8_lossy(header);
            let id = header.split_whitespace().next().unwrap_or("").to_string();
            if id.is_empty() {
                return Err(FastaError::EmptyId { line: line_no });
            }
            if !seen.insert(id.clone()) {
                return Err(FastaError::DuplicateId { id });
            }
            records.push((id, Vec::new()));
        } else {
            let data = line.iter().filter(|c| !c.is_ascii_whitespace());
            match records.last_mut() {
                Some((_, seq)) => seq.extend(data),
                None if data.clone().next().is_some() => {
                    return Err(FastaError::MissingHeader { line: line_no })
                }
                None => {}
            }
        }
    }

    let records = records
        .into_iter()
        .map(|(id, raw)| {
            if raw.is_empty() {
                log::warn!("{source}: record {id:?} has an empty sequence");
            }
            normalize(id, &raw, options)
        })
        .collect();
    Ok(Dataset {
        records,
        source: source.to_string(),
    })
}

/// The whole input as one sequence, minus a single trailing line break.
pub fn parse_plain(id: &str, bytes: &[u8], options: NormalizeOptions) -> Sequence {
    let body = bytes
        .strip_suffix(b"\r\n")
        .or_else(|| bytes.strip_suffix(b"\n"))
        .unwrap_or(bytes);
    normalize(id, body, options)
}

fn is_fasta(bytes: &[u8]) -> bool {
    bytes.iter().find(|c| !c.is_ascii_whitespace()) == Some(&b'>')
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

/// Loads a dataset file: FASTA when its first non-blank byte is '>',
/// otherwise a single plain-text record named after the file stem.
pub fn load_dataset(path: &Path, options: NormalizeOptions) -> Result<Dataset, CliError> {
    let bytes = read(path)?;
    let source = path.display().to_string();
    if is_fasta(&bytes) || bytes.iter().all(u8::is_ascii_whitespace) {
        return parse_fasta(&bytes, &source, options).map_err(|error| CliError::Fasta {
            source_name: source,
            error,
        });
    }
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "seq".to_string());
    Ok(Dataset {
        records: vec![parse_plain(&id, &bytes, options)],
        source,
    })
}

/// Resolves a `--a`/`--b` argument: `@path` reads a file (first FASTA record
/// or plain text), anything else is the sequence itself.
pub fn resolve_sequence(
    arg: &str,
    fallback_id: &str,
    options: NormalizeOptions,
) -> Result<Sequence, CliError> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(normalize(fallback_id, arg.as_bytes(), options));
    };
    let path = Path::new(path);
    let bytes = read(path)?;
    if is_fasta(&bytes) {
        let source = path.display().to_string();
        let dataset = parse_fasta(&bytes, &source, options).map_err(|error| CliError::Fasta {
            source_name: source.clone(),
            error,
        })?;
        if dataset.len() > 1 {
            log::warn!("{source}: using the first of {} records", dataset.len());
        }
        return dataset
            .records
            .into_iter()
            .next()
            .ok_or_else(|| CliError::Usage(format!("{source}: no records")));
    }
    Ok(parse_plain(fallback_id, &bytes, options))
}
