//! Documents as sets of descriptor terms, and the normalization applied
//! while ingesting them.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// How raw descriptor strings are cleaned before indexing.
///
/// The default trims surrounding whitespace and preserves case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizationPolicy {
    pub trim: bool,
    pub case_fold: bool,
}

impl Default for NormalizationPolicy {
    fn default() -> Self {
        Self {
            trim: true,
            case_fold: false,
        }
    }
}

impl NormalizationPolicy {
    pub fn normalize(&self, raw: &str) -> String {
        let s = if self.trim { raw.trim() } else { raw };
        if self.case_fold {
            s.to_lowercase()
        } else {
            s.to_string()
        }
    }

    pub(crate) fn to_flags(self) -> u8 {
        (self.trim as u8) | ((self.case_fold as u8) << 1)
    }

    pub(crate) fn from_flags(flags: u8) -> Option<Self> {
        if flags & !0b11 != 0 {
            return None;
        }
        Some(Self {
            trim: flags & 1 != 0,
            case_fold: flags & 2 != 0,
        })
    }
}

/// One document: an identifier and its set of descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocRecord {
    pub doc_id: String,
    pub terms: BTreeSet<String>,
}

impl DocRecord {
    /// Builds a record, applying `norm` to the id and every term. Terms that
    /// normalize to the empty string are discarded and duplicates collapse.
    pub fn new<I, S>(doc_id: &str, terms: I, norm: NormalizationPolicy) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let doc_id = doc_id.trim();
        if doc_id.is_empty() {
            return Err(Error::EmptyDocId);
        }
        let terms = terms
            .into_iter()
            .map(|t| norm.normalize(t.as_ref()))
            .filter(|t| !t.is_empty())
            .collect();
        Ok(Self {
            doc_id: doc_id.to_string(),
            terms,
        })
    }
}

/// A validated collection of documents ready for indexing.
///
/// Doc ids are unique. Documents whose term set is empty are dropped and
/// counted in `dropped_empty`; they do not contribute to N.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    docs: Vec<DocRecord>,
    norm: NormalizationPolicy,
    dropped_empty: usize,
    seen_ids: BTreeSet<String>,
}

impl Corpus {
    pub fn new(norm: NormalizationPolicy) -> Self {
        Self {
            norm,
            ..Self::default()
        }
    }

    /// Ingests a stream of `(doc_id, terms)` pairs.
    pub fn ingest<I, T, S>(records: I, norm: NormalizationPolicy) -> Result<Self>
    where
        I: IntoIterator<Item = (String, T)>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut corpus = Self::new(norm);
        for (id, terms) in records {
            corpus.push(&id, terms)?;
        }
        Ok(corpus)
    }

    /// Adds one document. Fails on an empty or previously seen doc id.
    pub fn push<T, S>(&mut self, doc_id: &str, terms: T) -> Result<()>
    where
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let record = DocRecord::new(doc_id, terms, self.norm)?;
        if !self.seen_ids.insert(record.doc_id.clone()) {
            return Err(Error::DuplicateDocId(record.doc_id));
        }
        if record.terms.is_empty() {
            self.dropped_empty += 1;
        } else {
            self.docs.push(record);
        }
        Ok(())
    }

    pub fn docs(&self) -> &[DocRecord] {
        &self.docs
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn normalization(&self) -> NormalizationPolicy {
        self.norm
    }

    pub fn dropped_empty(&self) -> usize {
        self.dropped_empty
    }
}
