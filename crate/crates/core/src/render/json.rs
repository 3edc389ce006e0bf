use alloc::string::String;
use core::fmt::Write;

use crate::pennant::PennantDiagram;

/// Serializes a diagram as one JSON document with a fixed key order.
///
/// ```text
/// {
///   "seed": ..., "seed_df": ..., "seed_x": ..., "seed_y": ..., "n_docs": ...,
///   "params": {"log_base", "index_n_docs", "n_override", "min_co", "top_k",
///              "alpha", "gamma", "tau"},
///   "points": [{"term", "co_count", "df", "x", "y", "sector", "dominant"}, ...]
/// }
/// ```
pub fn to_json(d: &PennantDiagram) -> String {
    let p = &d.params;
    let mut out = String::with_capacity(256 + 128 * d.points.len());
    out.push_str("{\n  \"seed\": ");
    write_json_string(&mut out, &d.seed);
    let _ = write!(
        out,
        ",\n  \"seed_df\": {},\n  \"seed_x\": {:.6},\n  \"seed_y\": {:.6},\n  \"n_docs\": {},\n",
        d.seed_df, d.seed_x, d.seed_y, d.n_docs
    );
    let _ = writeln!(
        out,
        "  \"params\": {{\"log_base\": {}, \"index_n_docs\": {}, \"n_override\": {}, \
         \"min_co\": {}, \"top_k\": {}, \"alpha\": {}, \"gamma\": {}, \"tau\": {}}},",
        Real(p.weight.log_base.get()),
        p.weight.n_docs,
        Opt(p.weight.n_override),
        p.min_co,
        Opt(p.top_k),
        Real(p.sectors.alpha),
        Real(p.sectors.gamma),
        Real(p.sectors.tau),
    );
    if d.points.is_empty() {
        out.push_str("  \"points\": []\n}\n");
        return out;
    }
    out.push_str("  \"points\": [\n");
    for (i, pt) in d.points.iter().enumerate() {
        out.push_str("    {\"term\": ");
        write_json_string(&mut out, &pt.term);
        let _ = write!(
            out,
            ", \"co_count\": {}, \"df\": {}, \"x\": {:.6}, \"y\": {:.6}, \"sector\": \"{}\", \"dominant\": {}}}",
            pt.co_count, pt.df, pt.x, pt.y, pt.sector, pt.dominant
        );
        out.push_str(if i + 1 < d.points.len() { ",\n" } else { "\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

/// `[{"term": ..., "df": ...}, ...]` for a term listing.
pub fn to_terms_json<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a str, u64)>,
{
    let mut out = String::from("[");
    for (i, (term, df)) in terms.into_iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str("{\"term\": ");
        write_json_string(&mut out, term);
        let _ = write!(out, ", \"df\": {df}}}");
    }
    out.push_str("]\n");
    out
}

/// Appends `s` as a quoted JSON string.
pub fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Shortest representation that parses back to the same f64.
struct Real(f64);

impl core::fmt::Display for Real {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

struct Opt<T>(Option<T>);

impl<T: core::fmt::Display> core::fmt::Display for Opt<T> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match &self.0 {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("null"),
        }
    }
}
