//! The six-document fixture used throughout the unit tests:
//! d1{A,B} d2{A,B,C} d3{A,C} d4{B,C} d5{A} d6{C,D}.

use alloc::string::String;

use crate::corpus::{Corpus, NormalizationPolicy};
use crate::index::TermIndex;
use crate::pennant::{compute_pennant, PennantDiagram, PennantOptions};

pub const C6: [(&str, &[&str]); 6] = [
    ("d1", &["A", "B"]),
    ("d2", &["A", "B", "C"]),
    ("d3", &["A", "C"]),
    ("d4", &["B", "C"]),
    ("d5", &["A"]),
    ("d6", &["C", "D"]),
];

pub fn c6_corpus() -> Corpus {
    Corpus::ingest(
        C6.iter()
            .map(|(id, t)| (String::from(*id), t.iter().copied())),
        NormalizationPolicy::default(),
    )
    .unwrap()
}

pub fn c6_index() -> TermIndex {
    TermIndex::build(&c6_corpus()).unwrap()
}

pub fn c6_diagram(seed: &str, min_co: u64) -> PennantDiagram {
    let opts = PennantOptions {
        min_co,
        ..PennantOptions::default()
    };
    compute_pennant(&c6_index(), seed, &opts).unwrap()
}
