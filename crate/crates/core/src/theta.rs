//! Closed-form feasibility sets for cycles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{epsilon, parity_filter, Parity};
use crate::verify::Mode;

/// Largest `n` for which a feasibility set is materialized. Use [`contains`]
/// for membership queries beyond it.
pub const MAX_MATERIALIZED_N: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Search,
}

/// The set of `t` admitting a coloring of `C(n)` in some mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSet {
    pub n: usize,
    pub mode: Mode,
    /// Sorted ascending, no duplicates.
    pub members: Vec<usize>,
    pub provenance: Provenance,
}

impl ThetaSet {
    pub fn contains(&self, t: usize) -> bool {
        self.members.binary_search(&t).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest feasible `t`, if any.
    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    /// Largest feasible `t`, if any.
    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    /// Same members, regardless of how each set was obtained.
    pub fn same_members(&self, other: &ThetaSet) -> bool {
        self.members == other.members
    }
}

impl fmt::Display for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::report::brace_set(&self.members))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::domain(format!("cycles have n >= 3, got n={n}")));
    }
    Ok(())
}

fn check_materializable(n: usize) -> Result<()> {
    check_n(n)?;
    if n > MAX_MATERIALIZED_N {
        return Err(Error::domain(format!(
            "n={n} is too large to materialize; query membership instead"
        )));
    }
    Ok(())
}

/// Chromatic index of `C(n)`: 3 for odd `n`, 2 for even `n`.
pub fn chi_prime(n: usize) -> Result<usize> {
    check_n(n)?;
    Ok(3 - epsilon(n)?)
}

/// The values `t` in `[chi'(n), n]` for which `C(n)` has no cyclically
/// interval `t`-coloring, for `n >= 5`.
///
/// Evaluates `[4 + eps(n)(n/2 + eps(floor(n/2)) - 2), n - 1]` filtered by
/// parity `eps(n)`. The `n/2` term only survives when `n` is even.
pub fn forbidden_set(n: usize) -> Result<Vec<usize>> {
    if n < 5 {
        return Err(Error::domain(format!(
            "forbidden set is stated for n >= 5, got n={n}"
        )));
    }
    if n > MAX_MATERIALIZED_N {
        return Err(Error::domain(format!("n={n} is too large to materialize")));
    }
    let eps_n = epsilon(n)?;
    let lo = if eps_n == 1 {
        4 + (n / 2 + epsilon(n / 2)? - 2)
    } else {
        4
    };
    Ok(parity_filter(lo, n - 1, Parity::from_value(eps_n)?))
}

/// Every `t` admitting a cyclically interval `t`-coloring of `C(n)`.
pub fn theta_cyclic(n: usize) -> Result<ThetaSet> {
    check_materializable(n)?;
    let members = match n {
        3 => vec![3],
        4 => vec![2, 3, 4],
        _ if n % 2 == 1 => parity_filter(3, n, Parity::Odd),
        _ => {
            let half = n / 2;
            let mut m: Vec<usize> = (2..=half + 1).collect();
            m.extend(parity_filter(half + 3 - epsilon(half)?, n, Parity::Even));
            m
        }
    };
    Ok(ThetaSet {
        n,
        mode: Mode::CyclicInterval,
        members,
        provenance: Provenance::Formula,
    })
}

/// Every `t` admitting an interval `t`-coloring of `C(n)`: `[2, n/2 + 1]` for
/// even `n`, nothing for odd `n`.
pub fn theta_interval(n: usize) -> Result<ThetaSet> {
    check_materializable(n)?;
    let members = if n.is_multiple_of(2) {
        (2..=n / 2 + 1).collect()
    } else {
        Vec::new()
    };
    Ok(ThetaSet {
        n,
        mode: Mode::Interval,
        members,
        provenance: Provenance::Formula,
    })
}

/// Membership in [`theta_cyclic`] in constant time.
///
/// Feasible exactly when `n - t` is even and `chi'(n) <= t <= n`, or when `n`
/// is even, `t` odd and `3 <= t <= n/2 + 1`.
pub fn contains(n: usize, t: usize) -> Result<bool> {
    let chi = chi_prime(n)?;
    let same_parity = (chi..=n).contains(&t) && (n - t).is_multiple_of(2);
    let short_odd = n.is_multiple_of(2) && t % 2 == 1 && (3..=n / 2 + 1).contains(&t);
    Ok(same_parity || short_odd)
}

/// Interval membership in constant time.
pub fn contains_interval(n: usize, t: usize) -> Result<bool> {
    check_n(n)?;
    Ok(n.is_multiple_of(2) && (2..=n / 2 + 1).contains(&t))
}

/// Membership for either mode.
pub fn contains_mode(n: usize, t: usize, mode: Mode) -> Result<bool> {
    match mode {
        Mode::CyclicInterval => contains(n, t),
        Mode::Interval => contains_interval(n, t),
    }
}

/// Feasibility set for either mode.
pub fn theta(n: usize, mode: Mode) -> Result<ThetaSet> {
    match mode {
        Mode::CyclicInterval => theta_cyclic(n),
        Mode::Interval => theta_interval(n),
    }
}

/// `(w_cyc, W_cyc)`, the smallest and largest feasible `t`.
pub fn bounds_cyc(n: usize) -> Result<(usize, usize)> {
    Ok((chi_prime(n)?, n))
}
