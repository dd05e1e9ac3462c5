//! Canonical witness colorings for every feasible `(n, t)`.
//!
//! Two patterns cover the whole feasible region:
//!
//! * zigzag-staircase, for `n - t` even: `(1,2)` repeated `(n-t)/2` times,
//!   then the ascending run `1..=t`. The closing palette `{t, 1}` is the only
//!   one that wraps around the color circle.
//! * tent, for even `n` and `t <= n/2 + 1`: `1..=t`, back down to `2`, then
//!   `(1,2)` repeated. Every cyclically adjacent pair differs by one, so the
//!   result is an interval coloring.
//!
//! When both apply the zigzag-staircase is returned.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::CycleColoring;
use crate::report::brace_set;
use crate::theta::{chi_prime, contains, forbidden_set};

/// Why no cyclically interval `t`-coloring of `C(n)` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "gate", rename_all = "kebab-case")]
pub enum Infeasible {
    /// `t` lies outside `[chi'(n), n]`, so not even a proper surjective coloring exists.
    OutOfRange {
        n: usize,
        t: usize,
        min: usize,
        max: usize,
    },
    /// `t` lies in the forbidden gap of `C(n)`.
    Forbidden {
        n: usize,
        t: usize,
        forbidden: Vec<usize>,
    },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::OutOfRange { n, t, min, max } => {
                write!(f, "infeasible: t={t} outside [{min},{max}] for C({n})")
            }
            Infeasible::Forbidden { n, t, forbidden } => write!(
                f,
                "infeasible: t={t} in forbidden set {} of C({n})",
                brace_set(forbidden)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Witness(CycleColoring),
    Infeasible(Infeasible),
}

impl Construction {
    pub fn witness(self) -> Option<CycleColoring> {
        match self {
            Construction::Witness(c) => Some(c),
            Construction::Infeasible(_) => None,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Construction::Witness(_))
    }
}

pub fn zigzag_staircase(n: usize, t: usize) -> Result<CycleColoring> {
    let chi = chi_prime(n)?;
    if t < chi || t > n || !(n - t).is_multiple_of(2) {
        return Err(Error::domain(format!(
            "zigzag-staircase needs {chi} <= t <= n with n - t even, got n={n} t={t}"
        )));
    }
    let mut colors = Vec::with_capacity(n);
    for _ in 0..(n - t) / 2 {
        colors.extend([1, 2]);
    }
    colors.extend(1..=t);
    CycleColoring::new(n, t, colors)
}

pub fn tent(n: usize, t: usize) -> Result<CycleColoring> {
    chi_prime(n)?;
    if !n.is_multiple_of(2) || t < 2 || t > n / 2 + 1 {
        return Err(Error::domain(format!(
            "tent needs even n and 2 <= t <= n/2 + 1, got n={n} t={t}"
        )));
    }
    let mut colors = Vec::with_capacity(n);
    colors.extend(1..=t);
    colors.extend((2..t).rev());
    for _ in 0..(n + 2 - 2 * t) / 2 {
        colors.extend([1, 2]);
    }
    CycleColoring::new(n, t, colors)
}

/// The canonical cyclically interval `t`-coloring of `C(n)`, or the reason
/// none exists.
pub fn construct(n: usize, t: usize) -> Result<Construction> {
    let chi = chi_prime(n)?;
    if !contains(n, t)? {
        let why = if t < chi || t > n {
            Infeasible::OutOfRange {
                n,
                t,
                min: chi,
                max: n,
            }
        } else {
            Infeasible::Forbidden {
                n,
                t,
                forbidden: forbidden_set(n)?,
            }
        };
        return Ok(Construction::Infeasible(why));
    }
    let c = if (n - t).is_multiple_of(2) {
        zigzag_staircase(n, t)?
    } else {
        tent(n, t)?
    };
    Ok(Construction::Witness(c))
}
