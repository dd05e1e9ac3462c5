//! Domain types and small arithmetic helpers shared by every other module.
//!
//! Edges and vertices are indexed from 1. Edge `e_i` joins `v_i` and
//! `v_{i+1}` (with `v_{n+1} = v_1`), so vertex `v_i` meets edges `e_{i-1}` and
//! `e_i`, indices taken mod `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `1` when `k` is even, `0` when `k` is odd.
///
/// Computed literally as `1 + floor(k/2) - ceil(k/2)`.
pub fn epsilon(k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::domain("epsilon is defined for k >= 1"));
    }
    Ok(1 + k / 2 - k.div_ceil(2))
}

/// `0` for zero, `1` otherwise.
pub fn sgn_nat(k: usize) -> usize {
    usize::from(k != 0)
}

/// Parity selector for [`parity_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn value(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_value(value: usize) -> Result<Self> {
        match value {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::domain(format!(
                "parity class must be 0 or 1, got {value}"
            ))),
        }
    }

    pub fn of(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Elements of `[lo, hi]` with the given parity, ascending. Empty when `lo > hi`.
pub fn parity_filter(lo: usize, hi: usize, parity: Parity) -> Vec<usize> {
    if lo > hi {
        return Vec::new();
    }
    let first = if lo % 2 == parity.value() { lo } else { lo + 1 };
    (first..=hi).step_by(2).collect()
}

/// An assignment of colors `1..=t` to the edges `e_1..e_n` of `C(n)`.
///
/// Construction only checks the shape (`n >= 3`, `t >= 1`, every color in
/// range). Properness and the interval conditions are the verifier's job.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringRecord", into = "ColoringRecord")]
pub struct CycleColoring {
    t: usize,
    colors: Vec<usize>,
}

/// Wire form of a coloring: `{"n": .., "t": .., "colors": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringRecord {
    n: usize,
    t: usize,
    colors: Vec<usize>,
}

impl TryFrom<ColoringRecord> for CycleColoring {
    type Error = Error;

    fn try_from(rec: ColoringRecord) -> Result<Self> {
        CycleColoring::new(rec.n, rec.t, rec.colors)
    }
}

impl From<CycleColoring> for ColoringRecord {
    fn from(c: CycleColoring) -> Self {
        ColoringRecord {
            n: c.colors.len(),
            t: c.t,
            colors: c.colors,
        }
    }
}

impl CycleColoring {
    pub fn new(n: usize, t: usize, colors: Vec<usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!(
                "a cycle needs at least 3 edges, got n={n}"
            )));
        }
        if t < 1 {
            return Err(Error::domain("t must be at least 1"));
        }
        if colors.len() != n {
            return Err(Error::domain(format!(
                "expected {n} colors, got {}",
                colors.len()
            )));
        }
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c < 1 || c > t) {
            return Err(Error::domain(format!(
                "color {c} of edge e_{} is outside [1,{t}]",
                i + 1
            )));
        }
        Ok(CycleColoring { t, colors })
    }

    /// Shorthand taking `n` from the length of `colors`.
    pub fn from_colors(t: usize, colors: Vec<usize>) -> Result<Self> {
        CycleColoring::new(colors.len(), t, colors)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring record always serializes")
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of edge `e_i`, 1-based, index taken mod `n`.
    pub fn edge(&self, i: usize) -> usize {
        let n = self.n();
        self.colors[(i + n - 1) % n]
    }

    /// Relabels edges so that the new `e_1` is the old `e_{offset+1}`.
    pub fn rotate_edges(&self, offset: usize) -> Result<Self> {
        if offset >= self.n() {
            return Err(Error::domain(format!(
                "rotation offset {offset} outside [0,{})",
                self.n()
            )));
        }
        let mut colors = self.colors.clone();
        colors.rotate_left(offset);
        Ok(CycleColoring { t: self.t, colors })
    }

    /// Replaces each color `x` by `((x - 1 + delta) mod t) + 1`.
    pub fn shift_colors(&self, delta: i64) -> Self {
        let t = self.t as i64;
        let colors = self
            .colors
            .iter()
            .map(|&x| ((x as i64 - 1 + delta).rem_euclid(t) + 1) as usize)
            .collect();
        CycleColoring { t: self.t, colors }
    }

    /// Traverses the cycle in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut colors = self.colors.clone();
        colors.reverse();
        CycleColoring { t: self.t, colors }
    }

    /// Replaces each color `x` by `t + 1 - x`.
    pub fn reflected(&self) -> Self {
        let colors = self.colors.iter().map(|&x| self.t + 1 - x).collect();
        CycleColoring { t: self.t, colors }
    }
}

impl fmt::Display for CycleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] (t={})", self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(t: usize, colors: &[usize]) -> CycleColoring {
        CycleColoring::from_colors(t, colors.to_vec()).unwrap()
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(4).unwrap(), 1);
        assert_eq!(epsilon(5).unwrap(), 0);
        assert_eq!(epsilon(1).unwrap(), 0);
        assert!(epsilon(0).is_err());
    }

    #[test]
    fn sgn_values() {
        assert_eq!(sgn_nat(0), 0);
        assert_eq!(sgn_nat(1), 1);
        assert_eq!(sgn_nat(7), 1);
    }

    #[test]
    fn parity_filter_examples() {
        assert_eq!(parity_filter(4, 9, Parity::Even), vec![4, 6, 8]);
        assert_eq!(parity_filter(3, 5, Parity::Odd), vec![3, 5]);
        assert!(parity_filter(7, 7, Parity::Even).is_empty());
        assert!(parity_filter(9, 4, Parity::Odd).is_empty());
    }

    #[test]
    fn parity_class_values() {
        assert_eq!(Parity::from_value(0).unwrap(), Parity::Even);
        assert_eq!(Parity::from_value(1).unwrap(), Parity::Odd);
        assert!(Parity::from_value(2).is_err());
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(
            col(3, &[1, 2, 3]).rotate_edges(1).unwrap().colors(),
            &[2, 3, 1]
        );
        let c = col(3, &[1, 2, 1, 2, 3]);
        assert_eq!(c.rotate_edges(0).unwrap(), c);
        assert_eq!(c.rotate_edges(4).unwrap().colors(), &[3, 1, 2, 1, 2]);
        assert!(c.rotate_edges(5).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(col(3, &[1, 2, 3]).shift_colors(1).colors(), &[2, 3, 1]);
        let c = col(2, &[1, 2, 1, 2]);
        assert_eq!(c.shift_colors(0), c);
        assert_eq!(
            col(4, &[1, 2, 3, 4]).shift_colors(2).colors(),
            &[3, 4, 1, 2]
        );
        assert_eq!(
            col(4, &[1, 2, 3, 4]).shift_colors(-1).colors(),
            &[4, 1, 2, 3]
        );
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert!(CycleColoring::new(2, 2, vec![1, 2]).is_err());
        assert!(CycleColoring::new(4, 3, vec![1, 2, 1]).is_err());
        assert!(CycleColoring::new(3, 0, vec![1, 1, 1]).is_err());
        assert!(CycleColoring::new(3, 3, vec![1, 4, 2]).is_err());
        assert!(CycleColoring::new(3, 3, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn record_json() {
        let c = CycleColoring::from_json(r#"{"t":3,"colors":[1,2,1,2,3],"n":5}"#).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2, 3]);
        assert_eq!(c.to_json(), r#"{"n":5,"t":3,"colors":[1,2,1,2,3]}"#);
        assert!(CycleColoring::from_json(r#"{"n":4,"t":3,"colors":[1,2,1]}"#).is_err());
        assert!(CycleColoring::from_json(r#"{"n":3,"t":3,"colors":[1,2,3],"x":1}"#).is_err());
        assert!(CycleColoring::from_json(r#"{"n":3,"colors":[1,2,3]}"#).is_err());
    }

    fn arb_coloring() -> impl Strategy<Value = CycleColoring> {
        (3usize..12, 1usize..8).prop_flat_map(|(n, t)| {
            proptest::collection::vec(1..=t, n)
                .prop_map(move |colors| CycleColoring::from_colors(t, colors).unwrap())
        })
    }

    proptest! {
        #[test]
        fn epsilon_matches_parity(k in 1usize..100_000) {
            prop_assert_eq!(epsilon(k).unwrap(), 1 - k % 2);
        }

        #[test]
        fn parity_filters_partition(lo in 0usize..200, len in 0usize..200) {
            let hi = lo + len;
            let mut all = parity_filter(lo, hi, Parity::Even);
            let odd = parity_filter(lo, hi, Parity::Odd);
            prop_assert!(all.iter().all(|x| !odd.contains(x)));
            all.extend(odd);
            all.sort_unstable();
            prop_assert_eq!(all, (lo..=hi).collect::<Vec<_>>());
        }

        #[test]
        fn shifts_compose_to_identity(c in arb_coloring(), delta in 0i64..20) {
            let t = c.t() as i64;
            prop_assert_eq!(c.shift_colors(delta).shift_colors(t - delta), c);
        }

        #[test]
        fn rotation_preserves_multiset(c in arb_coloring(), k in 0usize..12) {
            let k = k % c.n();
            let r = c.rotate_edges(k).unwrap();
            let mut a = c.colors().to_vec();
            let mut b = r.colors().to_vec();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
            let back = r.rotate_edges((c.n() - k) % c.n()).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn record_roundtrip(c in arb_coloring()) {
            prop_assert_eq!(CycleColoring::from_json(&c.to_json()).unwrap(), c);
        }
    }
}
