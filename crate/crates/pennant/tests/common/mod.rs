#![allow(dead_code)]

//! Shared test support: the C6 fixture, a random corpus generator and a
//! naive pennant oracle that never touches the index.

use std::collections::BTreeSet;

use pennant_core::{Corpus, NormalizationPolicy, Sector, TermIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type RawDoc = (String, Vec<String>);

pub const C6_TSV: &str = "d1\tA|B\nd2\tA|B|C\nd3\tA|C\nd4\tB|C\nd5\tA\nd6\tC|D\n";

pub fn c6_docs() -> Vec<RawDoc> {
    C6_TSV
        .lines()
        .map(|l| {
            let (id, terms) = l.split_once('\t').unwrap();
            (
                id.to_string(),
                terms.split('|').map(str::to_string).collect(),
            )
        })
        .collect()
}

pub fn build(docs: &[RawDoc]) -> TermIndex {
    let corpus = Corpus::ingest(docs.iter().cloned(), NormalizationPolicy::default()).unwrap();
    TermIndex::build(&corpus).unwrap()
}

/// Up to 50 documents with up to 12 terms each, drawn from a skewed
/// vocabulary so that broad, narrow and dominant terms all occur.
pub fn random_corpus(rng: &mut ChaCha8Rng) -> Vec<RawDoc> {
    let vocab_size = rng.random_range(3..=20);
    let n_docs = rng.random_range(1..=50);
    (0..n_docs)
        .map(|i| {
            let k = rng.random_range(0..=12);
            let terms = (0..k)
                .map(|_| {
                    // squaring skews draws toward low term numbers
                    let u: f64 = rng.random();
                    let t = ((u * u) * vocab_size as f64) as usize;
                    format!("t{t:02}")
                })
                .collect();
            (format!("doc{i:03}"), terms)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn shuffled(docs: &[RawDoc], rng: &mut ChaCha8Rng) -> Vec<RawDoc> {
    let mut v = docs.to_vec();
    v.shuffle(rng);
    v
}

#[derive(Debug, Clone, PartialEq)]
pub struct OraclePoint {
    pub term: String,
    pub co_count: u64,
    pub df: u64,
    pub x: f64,
    pub y: f64,
    pub sector: Sector,
    pub dominant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleDiagram {
    pub seed_df: u64,
    pub seed_x: f64,
    pub seed_y: f64,
    pub n: u64,
    pub points: Vec<OraclePoint>,
}

pub struct OracleParams {
    pub min_co: u64,
    pub top_k: Option<usize>,
    pub base: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub tau: f64,
}

impl Default for OracleParams {
    fn default() -> Self {
        Self {
            min_co: 1,
            top_k: None,
            base: 10.0,
            alpha: 0.5,
            gamma: 5.0,
            tau: 0.5,
        }
    }
}

fn log(x: f64, base: f64) -> f64 {
    if base == 10.0 {
        x.log10()
    } else if base == 2.0 {
        x.log2()
    } else if base == std::f64::consts::E {
        x.ln()
    } else {
        x.log(base)
    }
}

/// Document sets after the ingest rules: trimmed, deduplicated, empties dropped.
pub fn doc_sets(docs: &[RawDoc]) -> Vec<BTreeSet<String>> {
    docs.iter()
        .map(|(_, terms)| {
            terms
                .iter()
                .map(|t| t.trim().to_string())
                .filter(|t| !t.is_empty())
                .collect::<BTreeSet<_>>()
        })
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn naive_df(sets: &[BTreeSet<String>], term: &str) -> u64 {
    sets.iter().filter(|s| s.contains(term)).count() as u64
}

pub fn naive_co(sets: &[BTreeSet<String>], a: &str, b: &str) -> u64 {
    sets.iter()
        .filter(|s| s.contains(a) && s.contains(b))
        .count() as u64
}

/// Whole diagram by enumeration and the formulas evaluated directly.
pub fn oracle_pennant(docs: &[RawDoc], seed: &str, p: &OracleParams) -> Option<OracleDiagram> {
    let sets = doc_sets(docs);
    let n = sets.len() as u64;
    let seed_df = naive_df(&sets, seed);
    if seed_df == 0 {
        return None;
    }
    let vocab: BTreeSet<&String> = sets.iter().flatten().collect();

    let mut ranked: Vec<(String, u64)> = vocab
        .into_iter()
        .filter(|t| t.as_str() != seed)
        .map(|t| (t.clone(), naive_co(&sets, seed, t)))
        .filter(|(_, co)| *co >= p.min_co)
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    if let Some(k) = p.top_k {
        ranked.truncate(k);
    }

    let mut points: Vec<OraclePoint> = ranked
        .into_iter()
        .map(|(term, co)| {
            let df = naive_df(&sets, &term);
            let r = df as f64 / seed_df as f64;
            let sector = if r <= p.alpha {
                Sector::A
            } else if r >= p.gamma {
                Sector::C
            } else {
                Sector::B
            };
            OraclePoint {
                x: log(co as f64, p.base) + 1.0,
                y: log(n as f64 / df as f64, p.base),
                sector,
                dominant: df > seed_df && co as f64 / seed_df as f64 >= p.tau,
                term,
                co_count: co,
                df,
            }
        })
        .collect();
    points.sort_by(|a, b| {
        b.x.partial_cmp(&a.x)
            .unwrap()
            .then(b.y.partial_cmp(&a.y).unwrap())
            .then(a.term.cmp(&b.term))
    });
    Some(OracleDiagram {
        seed_df,
        seed_x: log(seed_df as f64, p.base) + 1.0,
        seed_y: log(n as f64 / seed_df as f64, p.base),
        n,
        points,
    })
}

/// Compares an engine diagram with the oracle: counts, sectors, flags and
/// order exactly, coordinates to `tol`. Returns a description of the first
/// difference.
pub fn diff_against_oracle(
    got: &pennant_core::PennantDiagram,
    want: &OracleDiagram,
    tol: f64,
) -> Result<(), String> {
    if got.seed_df != want.seed_df || got.n_docs != want.n {
        return Err(format!(
            "seed_df/N {}/{} vs {}/{}",
            got.seed_df, got.n_docs, want.seed_df, want.n
        ));
    }
    if (got.seed_x - want.seed_x).abs() > tol || (got.seed_y - want.seed_y).abs() > tol {
        return Err("seed coordinates".into());
    }
    if got.points.len() != want.points.len() {
        return Err(format!(
            "{} points vs {}",
            got.points.len(),
            want.points.len()
        ));
    }
    for (g, w) in got.points.iter().zip(&want.points) {
        if g.term != w.term
            || g.co_count != w.co_count
            || g.df != w.df
            || g.sector != w.sector
            || g.dominant != w.dominant
        {
            return Err(format!("point {g:?} vs {w:?}"));
        }
        if (g.x - w.x).abs() > tol || (g.y - w.y).abs() > tol {
            return Err(format!("coordinates of {}", g.term));
        }
    }
    Ok(())
}

/// Every distinct term of a corpus, ascending.
pub fn all_terms(docs: &[RawDoc]) -> Vec<String> {
    doc_sets(docs)
        .into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
