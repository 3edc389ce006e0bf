//! Core of the pennant toolkit: an immutable inverted index over
//! descriptor-tagged documents, the tf and idf weights used as pennant
//! coordinates, sector/dominance classification, and deterministic
//! JSON, TSV and SVG renderings of a diagram.
//!
//! The crate is `no_std` and only needs `alloc`. File and network IO live
//! in the `pennant` crate.
#![no_std]

extern crate alloc;

pub mod codec;
pub mod corpus;
mod error;
#[cfg(test)]
mod fixtures;
pub mod index;
pub mod pennant;
pub mod render;
pub mod weighting;

pub use codec::{load_index, save_index, FORMAT_VERSION, MAGIC};
pub use corpus::{Corpus, DocRecord, NormalizationPolicy};
pub use error::Error;
pub use index::{CoocEntry, TermIndex};
pub use pennant::{
    classify_sector, compute_pennant, flag_dominant, PennantDiagram, PennantOptions, PennantPoint,
    Sector, SectorParams,
};
pub use weighting::{idf_weight, tf_weight, LogBase, WeightParams};

pub type Result<T, E = Error> = core::result::Result<T, E>;
