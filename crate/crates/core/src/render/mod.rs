//! Deterministic text renderings of a [`PennantDiagram`](crate::PennantDiagram):
//! JSON for clients, TSV for terminals and an SVG scatterplot.
//!
//! Coordinates are always written with six decimal places; parameters are
//! written in shortest round-trip form so they can be read back exactly.

mod json;
mod svg;
mod table;

pub use json::{to_json, to_terms_json, write_json_string};
pub use svg::{to_svg, PlotMapping, RenderStyle};
pub use table::{to_rank_table, to_table};
