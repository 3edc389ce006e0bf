//! The two pennant weights: a tf weight `log(count) + 1` on the
//! co-occurrence count and an idf weight `log(N / df)` on the total count.

use crate::{Error, Result};

/// Logarithm base shared by both weights. Always finite and greater than 1.
///
/// The base only rescales coordinates; every ordering derived from them is
/// the same under any base.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogBase(f64);

impl LogBase {
    pub const TEN: LogBase = LogBase(10.0);
    pub const TWO: LogBase = LogBase(2.0);
    pub const E: LogBase = LogBase(core::f64::consts::E);

    pub fn new(base: f64) -> Result<Self> {
        if base.is_finite() && base > 1.0 {
            Ok(Self(base))
        } else {
            Err(Error::InvalidBase(base))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn log(self, x: f64) -> f64 {
        libm::log(x) / libm::log(self.0)
    }
}

impl Default for LogBase {
    fn default() -> Self {
        Self::TEN
    }
}

/// tf weight of a co-occurrence count: `log_base(count) + 1`.
pub fn tf_weight(count: u64, base: LogBase) -> Result<f64> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    Ok(base.log(count as f64) + 1.0)
}

/// idf weight of a document frequency against `n` documents: `log_base(n / df)`.
pub fn idf_weight(df: u64, n: u64, base: LogBase) -> Result<f64> {
    if df == 0 {
        return Err(Error::ZeroCount);
    }
    if df > n {
        return Err(Error::InvalidN { df, n });
    }
    Ok(base.log(n as f64 / df as f64))
}

/// Weighting configuration of a diagram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightParams {
    pub log_base: LogBase,
    /// Documents in the index.
    pub n_docs: u64,
    /// User-supplied estimate of N, replacing `n_docs` when present.
    pub n_override: Option<u64>,
}

impl WeightParams {
    pub fn effective_n(&self) -> u64 {
        self.n_override.unwrap_or(self.n_docs)
    }
}
