//! Proper, interval and cyclically interval checks with per-vertex diagnostics.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::CycleColoring;

/// Which interval condition a coloring is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Every palette is a pair of consecutive integers.
    #[serde(rename = "interval")]
    Interval,
    /// Every palette is consecutive, or its complement in `[1,t]` is.
    #[serde(rename = "cyclic")]
    CyclicInterval,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Interval => "interval",
            Mode::CyclicInterval => "cyclic",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    #[serde(rename = "not-proper")]
    NotProper,
    #[serde(rename = "not-interval")]
    NotInterval,
    #[serde(rename = "not-cyclic-interval")]
    NotCyclicInterval,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NotProper => "not-proper",
            Reason::NotInterval => "not-interval",
            Reason::NotCyclicInterval => "not-cyclic-interval",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1-based vertex index.
    pub vertex: usize,
    /// Colors of `e_{i-1}` and `e_i`, in that order.
    pub palette: [usize; 2],
    pub reason: Reason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub surjective: bool,
    #[serde(rename = "valid")]
    pub mode_satisfied: bool,
    pub violations: Vec<Violation>,
    pub missing_colors: Vec<usize>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report always serializes")
    }
}

/// The colors of `e_{i-1}` and `e_i` meeting at vertex `v_i`.
pub fn vertex_palette(c: &CycleColoring, i: usize) -> Result<[usize; 2]> {
    if i < 1 || i > c.n() {
        return Err(Error::domain(format!(
            "vertex index {i} outside [1,{}]",
            c.n()
        )));
    }
    Ok(palette_at(c, i))
}

fn palette_at(c: &CycleColoring, i: usize) -> [usize; 2] {
    [c.edge(i + c.n() - 1), c.edge(i)]
}

pub fn is_proper(c: &CycleColoring) -> bool {
    (1..=c.n()).all(|i| {
        let [a, b] = palette_at(c, i);
        a != b
    })
}

pub fn is_surjective(c: &CycleColoring) -> bool {
    missing_colors(c).is_empty()
}

fn missing_colors(c: &CycleColoring) -> Vec<usize> {
    let mut used = vec![false; c.t() + 1];
    for &x in c.colors() {
        used[x] = true;
    }
    (1..=c.t()).filter(|&x| !used[x]).collect()
}

/// Whether the pair `{a, b}` may meet at a vertex of a cyclically interval
/// `t`-coloring: either it is a 2-interval, or `[1,t] \ {a,b}` is a
/// `(t-2)`-interval. An empty complement does not count as an interval.
pub fn palette_cyclically_ok(pair: [usize; 2], t: usize) -> Result<bool> {
    let [a, b] = pair;
    if a == b {
        return Err(Error::domain(format!(
            "palette {{{a},{b}}} repeats a color"
        )));
    }
    if a < 1 || b < 1 || a > t || b > t {
        return Err(Error::domain(format!(
            "palette {{{a},{b}}} outside [1,{t}]"
        )));
    }
    let fast = cyclically_adjacent(a, b, t);
    debug_assert_eq!(
        fast,
        a.abs_diff(b) == 1 || complement_is_interval(a, b, t),
        "palette shortcut disagrees with the complement definition for {{{a},{b}}}, t={t}"
    );
    Ok(fast)
}

#[inline]
pub(crate) fn cyclically_adjacent(a: usize, b: usize, t: usize) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    hi - lo == 1 || (lo == 1 && hi == t)
}

fn complement_is_interval(a: usize, b: usize, t: usize) -> bool {
    let rest: Vec<usize> = (1..=t).filter(|&x| x != a && x != b).collect();
    match (rest.first(), rest.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 == rest.len(),
        _ => false,
    }
}

/// Checks `c` against `mode`. Every failing vertex is listed, in ascending order.
pub fn verify(c: &CycleColoring, mode: Mode) -> VerificationReport {
    let t = c.t();
    let mut violations = Vec::new();
    let mut proper = true;
    for i in 1..=c.n() {
        let palette = palette_at(c, i);
        let [a, b] = palette;
        let reason = if a == b {
            proper = false;
            Some(Reason::NotProper)
        } else {
            match mode {
                Mode::Interval if a.abs_diff(b) != 1 => Some(Reason::NotInterval),
                Mode::CyclicInterval if !cyclically_adjacent(a, b, t) => {
                    Some(Reason::NotCyclicInterval)
                }
                _ => None,
            }
        };
        if let Some(reason) = reason {
            violations.push(Violation {
                vertex: i,
                palette,
                reason,
            });
        }
    }
    let missing_colors = missing_colors(c);
    let surjective = missing_colors.is_empty();
    VerificationReport {
        proper,
        surjective,
        mode_satisfied: proper && surjective && violations.is_empty(),
        violations,
        missing_colors,
    }
}

/// 1-based indices of edges whose color lies strictly between `1` and `t`.
pub fn u_set(c: &CycleColoring) -> BTreeSet<usize> {
    c.colors()
        .iter()
        .enumerate()
        .filter(|(_, &x)| 1 < x && x < c.t())
        .map(|(i, _)| i + 1)
        .collect()
}
