//! Reading diagrams back from their JSON rendering.
//!
//! Coordinates in the JSON are rounded to six decimals, while every other
//! field is exact. The reader therefore rebuilds the diagram from the counts
//! and parameters, then checks the serialized coordinates, sectors, flags
//! and point order against the rebuilt ones. The result equals the diagram
//! that was rendered, field for field.

use pennant_core::pennant::DiagramParams;
use pennant_core::{LogBase, PennantDiagram, SectorParams, WeightParams};
use serde::Deserialize;

use crate::{Error, Result};

/// Six-decimal rounding is off by at most half a unit in the last place.
const COORD_TOLERANCE: f64 = 5.000_001e-7;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    seed: String,
    seed_df: u64,
    seed_x: f64,
    seed_y: f64,
    n_docs: u64,
    params: RawParams,
    points: Vec<RawPoint>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    log_base: f64,
    index_n_docs: u64,
    n_override: Option<u64>,
    min_co: u64,
    top_k: Option<usize>,
    alpha: f64,
    gamma: f64,
    tau: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    term: String,
    co_count: u64,
    df: u64,
    x: f64,
    y: f64,
    sector: String,
    dominant: bool,
}

pub fn parse_diagram(json: &str) -> Result<PennantDiagram> {
    let raw: RawDiagram =
        serde_json::from_str(json).map_err(|e| Error::DiagramJson(e.to_string()))?;
    let p = &raw.params;
    let params = DiagramParams {
        weight: WeightParams {
            log_base: LogBase::new(p.log_base)?,
            n_docs: p.index_n_docs,
            n_override: p.n_override,
        },
        sectors: SectorParams {
            alpha: p.alpha,
            gamma: p.gamma,
            tau: p.tau,
        },
        min_co: p.min_co,
        top_k: p.top_k,
    };
    let counts = raw
        .points
        .iter()
        .map(|pt| (pt.term.clone(), pt.co_count, pt.df));
    let rebuilt = PennantDiagram::from_counts(raw.seed.clone(), raw.seed_df, params, counts)?;

    let mismatch = |what: String| Err(Error::DiagramJson(what));
    if rebuilt.n_docs != raw.n_docs {
        return mismatch(format!("n_docs {} disagrees with params", raw.n_docs));
    }
    if !close(rebuilt.seed_x, raw.seed_x) || !close(rebuilt.seed_y, raw.seed_y) {
        return mismatch("seed coordinates disagree with counts".into());
    }
    for (got, want) in raw.points.iter().zip(&rebuilt.points) {
        if got.term != want.term {
            return mismatch(format!("point {:?} out of order", got.term));
        }
        if !close(got.x, want.x) || !close(got.y, want.y) {
            return mismatch(format!(
                "coordinates of {:?} disagree with counts",
                got.term
            ));
        }
        if got.sector != want.sector.as_str() || got.dominant != want.dominant {
            return mismatch(format!(
                "classification of {:?} disagrees with counts",
                got.term
            ));
        }
    }
    Ok(rebuilt)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= COORD_TOLERANCE
}
