//! Corpus files.
//!
//! Two line-oriented formats are accepted:
//!
//! * TSV: `<doc_id>\t<term>|<term>|...`. Pipes separate terms because
//!   descriptors routinely contain commas and spaces.
//! * JSON lines: `{"id": "...", "terms": ["...", ...]}` per line.
//!
//! In both, blank lines and lines starting with `#` are skipped.

use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;

use pennant_core::{Corpus, NormalizationPolicy};
use serde::Deserialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    /// JSON lines when the first record starts with `{`, TSV otherwise.
    #[default]
    Auto,
    Tsv,
    JsonLines,
}

impl FromStr for CorpusFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "tsv" => Ok(Self::Tsv),
            "jsonl" | "ndjson" => Ok(Self::JsonLines),
            other => Err(format!(
                "unknown corpus format {other:?} (auto, tsv, jsonl)"
            )),
        }
    }
}

#[derive(Deserialize)]
struct JsonRecord {
    id: Option<serde_json::Value>,
    terms: Option<Vec<String>>,
}

pub fn read_corpus_file(
    path: &Path,
    format: CorpusFormat,
    norm: NormalizationPolicy,
) -> Result<Corpus> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus(std::io::BufReader::new(file), format, norm).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

pub fn read_corpus<R: BufRead>(
    reader: R,
    format: CorpusFormat,
    norm: NormalizationPolicy,
) -> Result<Corpus> {
    let mut corpus = Corpus::new(norm);
    let mut format = format;
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::io("<corpus>", e))?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        if format == CorpusFormat::Auto {
            format = if line.trim_start().starts_with('{') {
                CorpusFormat::JsonLines
            } else {
                CorpusFormat::Tsv
            };
        }
        let (id, terms) = match format {
            CorpusFormat::JsonLines => parse_json_line(line, lineno)?,
            _ => parse_tsv_line(line, lineno)?,
        };
        corpus.push(&id, &terms).map_err(|source| Error::Ingest {
            line: lineno,
            source,
        })?;
    }
    Ok(corpus)
}

fn parse_tsv_line(line: &str, lineno: usize) -> Result<(String, Vec<String>)> {
    let (id, terms) = line.split_once('\t').ok_or_else(|| Error::Parse {
        line: lineno,
        message: "missing terms field (expected <doc_id>\\t<term>|<term>...)".into(),
    })?;
    if id.trim().is_empty() {
        return Err(Error::Parse {
            line: lineno,
            message: "missing doc id".into(),
        });
    }
    Ok((
        id.to_string(),
        terms.split('|').map(str::to_string).collect(),
    ))
}

fn parse_json_line(line: &str, lineno: usize) -> Result<(String, Vec<String>)> {
    let parse_err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let rec: JsonRecord = serde_json::from_str(line).map_err(|e| parse_err(e.to_string()))?;
    let id = match rec.id {
        Some(serde_json::Value::String(s)) if !s.trim().is_empty() => s,
        Some(serde_json::Value::Number(n)) => n.to_string(),
        Some(_) => {
            return Err(parse_err(
                "id must be a non-empty string or a number".into(),
            ))
        }
        None => return Err(parse_err("missing id field".into())),
    };
    let terms = rec
        .terms
        .ok_or_else(|| parse_err("missing terms field".into()))?;
    Ok((id, terms))
}
