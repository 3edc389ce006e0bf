//! Pennant diagrams: co-occurring terms of a seed placed on a tf axis
//! (co-occurrence with the seed, higher is closer to the seed) and an idf
//! axis (total count, higher means more specific), split into specificity
//! sectors.
//!
//! Sectors are bands on `r = df(term) / df(seed)`:
//! A when `r <= alpha` (narrower than the seed), C when `r >= gamma`
//! (far broader), B otherwise. A point is *dominant* when it is broader
//! than the seed yet appears in at least a `tau` share of the seed's
//! documents.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::index::TermIndex;
use crate::weighting::{idf_weight, tf_weight, LogBase, WeightParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    A,
    B,
    C,
}

impl Sector {
    pub fn as_str(self) -> &'static str {
        match self {
            Sector::A => "A",
            Sector::B => "B",
            Sector::C => "C",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" => Some(Sector::A),
            "B" => Some(Sector::B),
            "C" => Some(Sector::C),
            _ => None,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorParams {
    /// Upper bound of the narrow band, in (0, 1].
    pub alpha: f64,
    /// Lower bound of the broad band, at least 1.
    pub gamma: f64,
    /// Share of the seed's documents a broad term must reach to be dominant, in (0, 1].
    pub tau: f64,
}

impl Default for SectorParams {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            gamma: 5.0,
            tau: 0.5,
        }
    }
}

impl SectorParams {
    pub fn validate(&self) -> Result<()> {
        let SectorParams { alpha, gamma, tau } = *self;
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParams(alloc::format!(
                "alpha must be in (0, 1], got {alpha}"
            )));
        }
        if !(gamma >= 1.0 && gamma.is_finite()) {
            return Err(Error::InvalidParams(alloc::format!(
                "gamma must be finite and >= 1, got {gamma}"
            )));
        }
        if alpha >= gamma {
            return Err(Error::InvalidParams(alloc::format!(
                "alpha ({alpha}) must be below gamma ({gamma})"
            )));
        }
        if !(tau > 0.0 && tau <= 1.0) {
            return Err(Error::InvalidParams(alloc::format!(
                "tau must be in (0, 1], got {tau}"
            )));
        }
        Ok(())
    }
}

/// Sector of a term from its total count relative to the seed's.
pub fn classify_sector(df_term: u64, df_seed: u64, params: &SectorParams) -> Sector {
    let r = df_term as f64 / df_seed as f64;
    if r <= params.alpha {
        Sector::A
    } else if r >= params.gamma {
        Sector::C
    } else {
        Sector::B
    }
}

/// True for a term broader than the seed that appears in at least a `tau`
/// share of the seed's documents.
pub fn flag_dominant(co_count: u64, df_seed: u64, df_term: u64, params: &SectorParams) -> bool {
    df_term > df_seed && co_count as f64 / df_seed as f64 >= params.tau
}

/// Inputs to [`compute_pennant`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PennantOptions {
    pub min_co: u64,
    pub top_k: Option<usize>,
    pub log_base: LogBase,
    pub n_override: Option<u64>,
    pub sectors: SectorParams,
}

pub const DEFAULT_MIN_CO: u64 = 50;

impl Default for PennantOptions {
    fn default() -> Self {
        Self {
            min_co: DEFAULT_MIN_CO,
            top_k: None,
            log_base: LogBase::TEN,
            n_override: None,
            sectors: SectorParams::default(),
        }
    }
}

/// Effective parameters recorded with a diagram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramParams {
    pub weight: WeightParams,
    pub sectors: SectorParams,
    pub min_co: u64,
    pub top_k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PennantPoint {
    pub term: String,
    pub co_count: u64,
    pub df: u64,
    /// tf weight of `co_count`.
    pub x: f64,
    /// idf weight of `df`.
    pub y: f64,
    pub sector: Sector,
    pub dominant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PennantDiagram {
    pub seed: String,
    pub seed_df: u64,
    pub seed_x: f64,
    pub seed_y: f64,
    /// Effective N.
    pub n_docs: u64,
    pub params: DiagramParams,
    /// Ordered by x descending, y descending, term ascending.
    pub points: Vec<PennantPoint>,
}

impl PennantDiagram {
    /// Builds a diagram from raw counts: `(term, co_count, df)` per point.
    ///
    /// This is the single place where coordinates, sectors and flags are
    /// derived, so diagrams rebuilt from serialized counts are identical to
    /// freshly computed ones.
    pub fn from_counts<I>(
        seed: String,
        seed_df: u64,
        params: DiagramParams,
        counts: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (String, u64, u64)>,
    {
        params.sectors.validate()?;
        if params.min_co == 0 {
            return Err(Error::InvalidParams("min_co must be at least 1".into()));
        }
        let n = params.weight.effective_n();
        let base = params.weight.log_base;
        let seed_x = tf_weight(seed_df, base)?;
        let seed_y = idf_weight(seed_df, n, base)?;

        let mut points = counts
            .into_iter()
            .map(|(term, co_count, df)| {
                if co_count > df.min(seed_df) {
                    return Err(Error::InvalidParams(alloc::format!(
                        "co-occurrence count of {term:?} exceeds its document frequencies"
                    )));
                }
                Ok(PennantPoint {
                    x: tf_weight(co_count, base)?,
                    y: idf_weight(df, n, base)?,
                    sector: classify_sector(df, seed_df, &params.sectors),
                    dominant: flag_dominant(co_count, seed_df, df, &params.sectors),
                    term,
                    co_count,
                    df,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // x and y are strictly monotone in co_count and df, so ordering on the
        // integer counts is the coordinate order without float comparisons.
        points.sort_by(|a, b| {
            b.co_count
                .cmp(&a.co_count)
                .then(a.df.cmp(&b.df))
                .then_with(|| a.term.cmp(&b.term))
        });

        Ok(Self {
            seed,
            seed_df,
            seed_x,
            seed_y,
            n_docs: n,
            params,
            points,
        })
    }
}

/// Computes the pennant for `seed`. The seed is normalized the way the index
/// was built; an empty point list is a valid result.
pub fn compute_pennant(
    index: &TermIndex,
    seed: &str,
    opts: &PennantOptions,
) -> Result<PennantDiagram> {
    opts.sectors.validate()?;
    let seed = index.normalize(seed);
    let seed_id = index
        .term_id(&seed)
        .ok_or_else(|| Error::UnknownTerm(seed.clone()))?;

    let weight = WeightParams {
        log_base: opts.log_base,
        n_docs: index.n_docs(),
        n_override: opts.n_override,
    };
    let n = weight.effective_n();
    let max_df = index.max_df();
    if n < max_df {
        return Err(Error::InvalidN { df: max_df, n });
    }

    let ranked = index.rank_ids(&seed, opts.min_co, opts.top_k)?;
    let counts = ranked
        .into_iter()
        .map(|(id, co)| (String::from(index.term_at(id)), co, index.df_at(id)));
    PennantDiagram::from_counts(
        seed,
        index.df_at(seed_id),
        DiagramParams {
            weight,
            sectors: opts.sectors,
            min_co: opts.min_co,
            top_k: opts.top_k,
        },
        counts,
    )
}
