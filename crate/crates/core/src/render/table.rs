use alloc::string::String;
use core::fmt::Write;

use crate::index::CoocEntry;
use crate::pennant::PennantDiagram;

pub const TABLE_HEADER: &str = "term\tco\tdf\tx\ty\tsector\tdominant";

/// One TSV row per point, in diagram order.
pub fn to_table(diagram: &PennantDiagram) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for p in &diagram.points {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{:.6}\t{:.6}\t{}\t{}",
            cell(&p.term),
            p.co_count,
            p.df,
            p.x,
            p.y,
            p.sector,
            p.dominant
        );
    }
    out
}

/// Rank listing of co-occurring terms: `term`, `co` and the term's `df`.
pub fn to_rank_table<'a, I>(entries: I) -> String
where
    I: IntoIterator<Item = (&'a CoocEntry, u64)>,
{
    let mut out = String::from("term\tco\tdf\n");
    for (e, df) in entries {
        let _ = writeln!(out, "{}\t{}\t{}", cell(&e.term), e.co_count, df);
    }
    out
}

// Tabs and line breaks inside a term would break the row structure.
fn cell(term: &str) -> String {
    term.replace(['\t', '\n', '\r'], " ")
}
