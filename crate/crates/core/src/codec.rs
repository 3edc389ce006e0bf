//! Binary index format.
//!
//! All integers are little-endian.
//!
//! ```text
//! magic        5 bytes   "PNNT1"
//! version      u8        0x01
//! norm flags   u8        bit 0 = trim, bit 1 = case fold
//! n_docs       u64
//! vocab        u64
//! vocab times, terms in ascending byte order:
//!   term_len   u64
//!   term       term_len bytes of UTF-8
//!   df         u64
//!   count      u64       number of postings (equals df)
//!   postings   count LEB128 varints; the first is the ordinal itself,
//!              each later one the gap to its predecessor (>= 1)
//! ```
//!
//! Loading validates every structural invariant of [`TermIndex`], so a
//! successfully loaded file is always a well-formed index.

use alloc::string::String;
use alloc::vec::Vec;

use crate::corpus::NormalizationPolicy;
use crate::index::{DocOrd, TermIndex};
use crate::{Error, Result};

pub const MAGIC: &[u8; 5] = b"PNNT1";
pub const FORMAT_VERSION: u8 = 1;

/// Serializes `index`. Equal indexes always produce identical bytes.
pub fn save_index(index: &TermIndex) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.push(FORMAT_VERSION);
    out.push(index.normalization().to_flags());
    put_u64(&mut out, index.n_docs());
    put_u64(&mut out, index.vocab_len() as u64);
    for (term, df) in index.terms() {
        put_u64(&mut out, term.len() as u64);
        out.extend_from_slice(term.as_bytes());
        put_u64(&mut out, df);
        let postings = index.postings(term).expect("term from own vocabulary");
        put_u64(&mut out, postings.len() as u64);
        let mut prev = None;
        for &d in postings {
            let gap = match prev {
                None => d,
                Some(p) => d - p,
            };
            put_varint(&mut out, gap as u64);
            prev = Some(d);
        }
    }
    out
}

pub fn load_index(bytes: &[u8]) -> Result<TermIndex> {
    let n = bytes.len().min(MAGIC.len());
    if bytes[..n] != MAGIC[..n] {
        return Err(Error::BadMagic);
    }
    let mut r = Reader { buf: bytes, pos: 0 };
    r.take(MAGIC.len())?;
    let version = r.u8()?;
    if version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion {
            found: version,
            supported: FORMAT_VERSION,
        });
    }
    let norm = NormalizationPolicy::from_flags(r.u8()?)
        .ok_or(Error::Corrupt("unknown normalization flags"))?;
    let n_docs = r.u64()?;
    if n_docs > DocOrd::MAX as u64 {
        return Err(Error::Corrupt("document count out of range"));
    }
    let vocab = r.u64()?;
    // Every document holds at least one posting of at least one byte.
    if n_docs > r.remaining() as u64 {
        return Err(Error::Corrupt("truncated"));
    }

    // Each term needs at least 26 bytes, which bounds any honest vocab count.
    let cap = (vocab as usize).min(r.remaining() / 26);
    let mut terms: Vec<String> = Vec::with_capacity(cap);
    let mut postings: Vec<Vec<DocOrd>> = Vec::with_capacity(cap);
    let mut covered = alloc::vec![false; n_docs as usize];

    for _ in 0..vocab {
        let len = r.u64()?;
        let raw = r.take(usize::try_from(len).map_err(|_| Error::Corrupt("term length"))?)?;
        let term = core::str::from_utf8(raw).map_err(|_| Error::Corrupt("term is not UTF-8"))?;
        if term.is_empty() {
            return Err(Error::Corrupt("empty term"));
        }
        if terms.last().is_some_and(|prev| prev.as_str() >= term) {
            return Err(Error::Corrupt("vocabulary not strictly ascending"));
        }
        let df = r.u64()?;
        let count = r.u64()?;
        if df != count {
            return Err(Error::Corrupt("df disagrees with postings length"));
        }
        if df == 0 || df > n_docs {
            return Err(Error::Corrupt("df out of range"));
        }
        let mut list = Vec::with_capacity(df as usize);
        let mut cur: u64 = 0;
        for i in 0..count {
            let gap = r.varint()?;
            if i > 0 && gap == 0 {
                return Err(Error::Corrupt("postings not strictly increasing"));
            }
            cur = cur
                .checked_add(gap)
                .filter(|&d| d < n_docs)
                .ok_or(Error::Corrupt("posting beyond document count"))?;
            covered[cur as usize] = true;
            list.push(cur as DocOrd);
        }
        terms.push(String::from(term));
        postings.push(list);
    }
    if r.remaining() != 0 {
        return Err(Error::Corrupt("trailing bytes"));
    }
    if covered.iter().any(|c| !c) {
        return Err(Error::Corrupt("document without terms"));
    }
    Ok(TermIndex::from_parts(n_docs, norm, terms, postings))
}

fn put_u64(out: &mut Vec<u8>, v: u64) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_varint(out: &mut Vec<u8>, mut v: u64) {
    while v >= 0x80 {
        out.push((v as u8) | 0x80);
        v >>= 7;
    }
    out.push(v as u8);
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if n > self.remaining() {
            return Err(Error::Corrupt("truncated"));
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u64(&mut self) -> Result<u64> {
        let b = self.take(8)?;
        Ok(u64::from_le_bytes(b.try_into().expect("8 bytes")))
    }

    fn varint(&mut self) -> Result<u64> {
        let mut v = 0u64;
        for shift in (0..64).step_by(7) {
            let b = self.u8()?;
            let bits = (b & 0x7f) as u64;
            if shift == 63 && bits > 1 {
                return Err(Error::Corrupt("varint overflow"));
            }
            v |= bits << shift;
            if b & 0x80 == 0 {
                return Ok(v);
            }
        }
        Err(Error::Corrupt("varint overflow"))
    }
}
