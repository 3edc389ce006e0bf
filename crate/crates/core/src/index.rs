//! Immutable inverted index over a [`Corpus`].
//!
//! Documents receive ordinals in doc-id order, so the same corpus always
//! produces the same index whatever order its records arrived in. Alongside
//! the postings the index keeps a forward table (ordinal to term ids) which
//! lets [`TermIndex::rank_cooccurring`] count every co-occurring term in one
//! pass over the seed's documents instead of intersecting against the whole
//! vocabulary.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::corpus::{Corpus, NormalizationPolicy};
use crate::{Error, Result};

/// Document ordinal inside an index.
pub type DocOrd = u32;

/// A term with its co-occurrence count against a seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoocEntry {
    pub term: String,
    pub co_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermIndex {
    n_docs: u64,
    norm: NormalizationPolicy,
    /// Sorted ascending; a term's id is its position here.
    terms: Vec<String>,
    /// Parallel to `terms`; strictly increasing ordinals.
    postings: Vec<Vec<DocOrd>>,
    /// Ordinal -> sorted term ids. Derived from `postings`.
    forward: Vec<Vec<u32>>,
}

impl TermIndex {
    pub fn build(corpus: &Corpus) -> Result<Self> {
        let mut docs: Vec<_> = corpus.docs().iter().collect();
        docs.sort_by(|a, b| a.doc_id.cmp(&b.doc_id));
        if docs.len() > DocOrd::MAX as usize {
            return Err(Error::TooManyDocuments);
        }

        let mut by_term: BTreeMap<&str, Vec<DocOrd>> = BTreeMap::new();
        for (ord, doc) in docs.iter().enumerate() {
            for term in &doc.terms {
                by_term
                    .entry(term.as_str())
                    .or_default()
                    .push(ord as DocOrd);
            }
        }
        let (terms, postings) = by_term
            .into_iter()
            .map(|(t, p)| (String::from(t), p))
            .unzip();
        Ok(Self::from_parts(
            docs.len() as u64,
            corpus.normalization(),
            terms,
            postings,
        ))
    }

    /// Assembles an index from already validated parts.
    pub(crate) fn from_parts(
        n_docs: u64,
        norm: NormalizationPolicy,
        terms: Vec<String>,
        postings: Vec<Vec<DocOrd>>,
    ) -> Self {
        let mut forward = vec![Vec::new(); n_docs as usize];
        for (id, list) in postings.iter().enumerate() {
            for &d in list {
                forward[d as usize].push(id as u32);
            }
        }
        Self {
            n_docs,
            norm,
            terms,
            postings,
            forward,
        }
    }

    /// Total number of indexed documents (N).
    pub fn n_docs(&self) -> u64 {
        self.n_docs
    }

    pub fn normalization(&self) -> NormalizationPolicy {
        self.norm
    }

    /// Applies the normalization the index was built with.
    pub fn normalize(&self, raw: &str) -> String {
        self.norm.normalize(raw)
    }

    pub fn vocab_len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending order with their document frequencies.
    pub fn terms(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.terms
            .iter()
            .zip(&self.postings)
            .map(|(t, p)| (t.as_str(), p.len() as u64))
    }

    pub fn contains(&self, term: &str) -> bool {
        self.term_id(term).is_some()
    }

    pub(crate) fn term_id(&self, term: &str) -> Option<usize> {
        self.terms.binary_search_by(|t| t.as_str().cmp(term)).ok()
    }

    fn require(&self, term: &str) -> Result<usize> {
        self.term_id(term)
            .ok_or_else(|| Error::UnknownTerm(String::from(term)))
    }

    pub(crate) fn term_at(&self, id: usize) -> &str {
        &self.terms[id]
    }

    pub(crate) fn df_at(&self, id: usize) -> u64 {
        self.postings[id].len() as u64
    }

    /// Document frequency of `term`.
    pub fn df(&self, term: &str) -> Result<u64> {
        self.require(term).map(|id| self.df_at(id))
    }

    pub fn postings(&self, term: &str) -> Result<&[DocOrd]> {
        self.require(term).map(|id| self.postings[id].as_slice())
    }

    /// Largest document frequency of any term; 0 for an empty index.
    pub fn max_df(&self) -> u64 {
        self.postings
            .iter()
            .map(|p| p.len() as u64)
            .max()
            .unwrap_or(0)
    }

    /// Number of documents carrying both `a` and `b`.
    pub fn cooccurrence(&self, a: &str, b: &str) -> Result<u64> {
        let pa = self.postings(a)?;
        let pb = self.postings(b)?;
        Ok(intersect_count(pa, pb))
    }

    /// Every term other than `seed` co-occurring with it at least `min_co`
    /// times, ordered by count descending then term ascending, cut to `top_k`.
    pub fn rank_cooccurring(
        &self,
        seed: &str,
        min_co: u64,
        top_k: Option<usize>,
    ) -> Result<Vec<CoocEntry>> {
        Ok(self
            .rank_ids(seed, min_co, top_k)?
            .into_iter()
            .map(|(id, co_count)| CoocEntry {
                term: self.terms[id].clone(),
                co_count,
            })
            .collect())
    }

    pub(crate) fn rank_ids(
        &self,
        seed: &str,
        min_co: u64,
        top_k: Option<usize>,
    ) -> Result<Vec<(usize, u64)>> {
        if min_co == 0 {
            return Err(Error::InvalidParams("min_co must be at least 1".into()));
        }
        let seed_id = self.require(seed)?;

        let mut counts = vec![0u32; self.terms.len()];
        let mut touched = Vec::new();
        for &d in &self.postings[seed_id] {
            for &t in &self.forward[d as usize] {
                let c = &mut counts[t as usize];
                if *c == 0 {
                    touched.push(t as usize);
                }
                *c += 1;
            }
        }

        let mut ranked: Vec<(usize, u64)> = touched
            .into_iter()
            .filter(|&t| t != seed_id)
            .map(|t| (t, counts[t] as u64))
            .filter(|&(_, c)| c >= min_co)
            .collect();
        // Term ids follow lexicographic order, so comparing ids breaks ties by term.
        ranked.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        if let Some(k) = top_k {
            ranked.truncate(k);
        }
        Ok(ranked)
    }

    /// Terms starting with `prefix` (compared verbatim; normalize first if
    /// needed), ascending, at most `limit` of them.
    pub fn terms_with_prefix<'a>(
        &'a self,
        prefix: &'a str,
        limit: usize,
    ) -> impl Iterator<Item = (&'a str, u64)> + 'a {
        let start = self.terms.partition_point(|t| t.as_str() < prefix);
        self.terms[start..]
            .iter()
            .zip(&self.postings[start..])
            .take_while(move |(t, _)| t.starts_with(prefix))
            .take(limit)
            .map(|(t, p)| (t.as_str(), p.len() as u64))
    }
}

/// Size of the intersection of two strictly increasing lists.
///
/// Uses a linear merge for similarly sized inputs and galloping search
/// through the longer list when the sizes are skewed.
pub fn intersect_count(a: &[DocOrd], b: &[DocOrd]) -> u64 {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return 0;
    }
    if long.len() / short.len() >= 16 {
        return gallop_count(short, long);
    }
    let (mut i, mut j, mut n) = (0, 0, 0u64);
    while i < short.len() && j < long.len() {
        match short[i].cmp(&long[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn gallop_count(short: &[DocOrd], long: &[DocOrd]) -> u64 {
    let mut rest = long;
    let mut n = 0u64;
    for &x in short {
        // Exponential probe for an upper bound, then binary search inside it.
        let mut hi = 1;
        while hi < rest.len() && rest[hi] < x {
            hi *= 2;
        }
        let window = &rest[..rest.len().min(hi + 1)];
        match window.binary_search(&x) {
            Ok(pos) => {
                n += 1;
                rest = &rest[pos + 1..];
            }
            Err(pos) => rest = &rest[pos..],
        }
        if rest.is_empty() {
            break;
        }
    }
    n
}
