//! Exhaustive search over colorings of small cycles, independent of the
//! closed forms in [`crate::theta`], and the component decomposition of a
//! cyclically interval coloring.

mod decompose;
mod search;

pub use decompose::{decompose, ComponentRecord, ProofDecomposition};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::CycleColoring;
use crate::theta::{Provenance, ThetaSet};
use crate::verify::Mode;

/// Search bound used when nothing else is configured.
pub const DEFAULT_MAX_N: usize = 14;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "CYCLIC_CHROMA_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: Mode,
    /// Stop after this many witnesses.
    pub limit: Option<usize>,
    /// Pin the first edge to color 1. Only meaningful for the cyclic mode,
    /// where shifting colors around the circle maps valid colorings to valid
    /// colorings.
    pub fix_first_color: bool,
}

impl SearchConfig {
    pub fn new(mode: Mode) -> Self {
        SearchConfig {
            mode,
            limit: None,
            fix_first_color: false,
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_fixed_first_color(mut self) -> Self {
        self.fix_first_color = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.limit == Some(0) {
            return Err(Error::domain("search limit must be at least 1"));
        }
        if self.fix_first_color && self.mode != Mode::CyclicInterval {
            return Err(Error::domain(
                "fixing the first color is only sound in cyclic mode",
            ));
        }
        Ok(())
    }
}

/// Exhaustive searcher with a cap on the cycle size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Searcher {
    max_n: usize,
}

impl Default for Searcher {
    fn default() -> Self {
        Searcher {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Searcher {
    pub fn new(max_n: usize) -> Self {
        Searcher { max_n }
    }

    /// Reads the bound from `CYCLIC_CHROMA_MAX_N`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Searcher::new)
                .map_err(|e| Error::Parse(format!("{MAX_N_ENV}={raw:?}: {e}"))),
            Err(std::env::VarError::NotPresent) => Ok(Searcher::default()),
            Err(e) => Err(Error::Parse(format!("{MAX_N_ENV}: {e}"))),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check(&self, n: usize, t: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::domain(format!("cycles have n >= 3, got n={n}")));
        }
        if n > self.max_n {
            return Err(Error::SearchBound {
                n,
                max_n: self.max_n,
            });
        }
        if t < 1 || t > n {
            return Err(Error::domain(format!("t={t} outside [1,{n}]")));
        }
        Ok(())
    }

    /// Whether some coloring of `C(n)` with `t` colors satisfies `mode`.
    pub fn exists(&self, n: usize, t: usize, mode: Mode) -> Result<bool> {
        let mut config = SearchConfig::new(mode).with_limit(1);
        if mode == Mode::CyclicInterval {
            config = config.with_fixed_first_color();
        }
        Ok(!self.enumerate(n, t, &config)?.is_empty())
    }

    /// Every valid coloring in lexicographic order of the color sequence,
    /// truncated at the configured limit.
    pub fn enumerate(
        &self,
        n: usize,
        t: usize,
        config: &SearchConfig,
    ) -> Result<Vec<CycleColoring>> {
        self.check(n, t)?;
        config.validate()?;
        let mut out = Vec::new();
        search::walk(n, t, config.mode, config.fix_first_color, |colors| {
            out.push(
                CycleColoring::new(n, t, colors.to_vec())
                    .expect("search only produces in-range colors"),
            );
            config.limit.is_none_or(|limit| out.len() < limit)
        });
        Ok(out)
    }

    /// Total number of valid colorings, without symmetry reduction.
    pub fn count(&self, n: usize, t: usize, mode: Mode) -> Result<u64> {
        self.check(n, t)?;
        let mut total = 0u64;
        search::walk(n, t, mode, false, |_| {
            total += 1;
            true
        });
        Ok(total)
    }

    /// `{ t in [1,n] : exists(n, t, mode) }`.
    pub fn theta(&self, n: usize, mode: Mode) -> Result<ThetaSet> {
        self.check(n, 1)?;
        let mut members = Vec::new();
        for t in 1..=n {
            if self.exists(n, t, mode)? {
                members.push(t);
            }
        }
        Ok(ThetaSet {
            n,
            mode,
            members,
            provenance: Provenance::Search,
        })
    }
}

pub fn exists_search(n: usize, t: usize, mode: Mode) -> Result<bool> {
    Searcher::default().exists(n, t, mode)
}

pub fn enumerate(n: usize, t: usize, config: &SearchConfig) -> Result<Vec<CycleColoring>> {
    Searcher::default().enumerate(n, t, config)
}

pub fn count(n: usize, t: usize, mode: Mode) -> Result<u64> {
    Searcher::default().count(n, t, mode)
}

pub fn theta_by_search(n: usize, mode: Mode) -> Result<ThetaSet> {
    Searcher::default().theta(n, mode)
}
