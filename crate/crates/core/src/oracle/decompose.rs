//! Component structure of a cyclically interval coloring.
//!
//! Deleting the edges with interior colors (`1 < color < t`) leaves a graph
//! whose edges all carry color `1` or `t`. Its components are runs of
//! consecutive edges along the cycle. When there are `m >= 2` runs the cycle
//! is relabeled so that `e_1` opens the first run and `e_n` is interior, and
//! each run `H_i` is paired with the path `H'_i` spanning from its last edge
//! to the first edge of the next run. The `2m` run/gap lengths label the
//! edges of an auxiliary cycle of length `2m` and always sum to `n + 2m`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{sgn_nat, CycleColoring};
use crate::verify::{u_set, verify, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    /// Smallest edge index in the run, after relabeling.
    pub zeta: usize,
    /// Largest edge index in the run, after relabeling.
    pub eta: usize,
    /// Edges in the run.
    pub h_size: usize,
    /// Edges in the path from the run's last edge to the next run's first edge.
    pub h_prime_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofDecomposition {
    pub n: usize,
    pub t: usize,
    /// Number of runs of edges colored `1` or `t`.
    pub m: usize,
    pub connected: bool,
    /// Whether every edge is colored `1` or `t`.
    pub u_empty: bool,
    /// Offset passed to `rotate_edges` before labeling; 0 when connected.
    pub rotation_offset: usize,
    /// One record per run when `m >= 2`, otherwise empty.
    pub components: Vec<ComponentRecord>,
    /// `2m` bits: 0 when the first/last edge of a run has color 1, else 1.
    pub y: Vec<u8>,
    /// `2m` lengths alternating run size and gap-path size.
    pub psi: Vec<usize>,
    /// Whether auxiliary edge `(pi_j, pi_{j+1})` joins equal `y` values.
    pub horizontal: Vec<bool>,
    /// Runs whose gap path uses color 1.
    pub m1: Vec<usize>,
    /// Runs whose gap path uses color `t`.
    pub m2: Vec<usize>,
}

impl ProofDecomposition {
    pub fn psi_sum(&self) -> usize {
        self.psi.iter().sum()
    }

    pub fn non_horizontal_count(&self) -> usize {
        self.horizontal.iter().filter(|h| !**h).count()
    }

    /// `sum(psi) == n + 2m`; trivially true in the connected case.
    pub fn identity_holds(&self) -> bool {
        self.connected || self.psi_sum() == self.n + 2 * self.m
    }

    fn connected(c: &CycleColoring, u_empty: bool) -> Self {
        ProofDecomposition {
            n: c.n(),
            t: c.t(),
            m: 1,
            connected: true,
            u_empty,
            rotation_offset: 0,
            components: Vec::new(),
            y: Vec::new(),
            psi: Vec::new(),
            horizontal: Vec::new(),
            m1: Vec::new(),
            m2: Vec::new(),
        }
    }
}

pub fn decompose(c: &CycleColoring) -> Result<ProofDecomposition> {
    if !verify(c, Mode::CyclicInterval).mode_satisfied {
        return Err(Error::domain(format!(
            "{c} is not a cyclically interval coloring"
        )));
    }
    let n = c.n();
    let t = c.t();
    let interior = u_set(c);
    if interior.is_empty() {
        return Ok(ProofDecomposition::connected(c, true));
    }
    let kept = |i: usize| !interior.contains(&i);

    // e_i opens a run when it is kept and e_{i-1} is not
    let starts: Vec<usize> = (1..=n)
        .filter(|&i| kept(i) && !kept(if i == 1 { n } else { i - 1 }))
        .collect();
    if starts.len() <= 1 {
        return Ok(ProofDecomposition::connected(c, false));
    }

    let offset = starts[0] - 1;
    let c = c.rotate_edges(offset)?;
    let kept: Vec<bool> = c.colors().iter().map(|&x| x == 1 || x == t).collect();
    debug_assert!(kept[0] && !kept[n - 1]);

    let mut runs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        if !kept[i - 1] {
            continue;
        }
        match runs.last_mut() {
            Some((_, eta)) if *eta == i - 1 => *eta = i,
            _ => runs.push((i, i)),
        }
    }
    let m = runs.len();
    debug_assert_eq!(m, starts.len());

    let mut components = Vec::with_capacity(m);
    let mut y = Vec::with_capacity(2 * m);
    let mut psi = Vec::with_capacity(2 * m);
    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    for (q, &(zeta, eta)) in runs.iter().enumerate() {
        // H'_q: edges e_eta ..= e_{zeta of next run}, the last one wrapping to e_1
        let gap_edges: Vec<usize> = if q + 1 < m {
            (eta..=runs[q + 1].0).collect()
        } else {
            (eta..=n).chain(std::iter::once(1)).collect()
        };
        let h_size = eta - zeta + 1;
        let h_prime_size = gap_edges.len();
        components.push(ComponentRecord {
            zeta,
            eta,
            h_size,
            h_prime_size,
        });
        y.push(sgn_nat(c.edge(zeta) - 1) as u8);
        y.push(sgn_nat(c.edge(eta) - 1) as u8);
        psi.push(h_size);
        psi.push(h_prime_size);
        if gap_edges.iter().any(|&e| c.edge(e) == 1) {
            m1.push(q + 1);
        }
        if gap_edges.iter().any(|&e| c.edge(e) == t) {
            m2.push(q + 1);
        }
    }
    let horizontal = (0..2 * m).map(|j| y[j] == y[(j + 1) % (2 * m)]).collect();

    Ok(ProofDecomposition {
        n,
        t,
        m,
        connected: false,
        u_empty: false,
        rotation_offset: offset,
        components,
        y,
        psi,
        horizontal,
        m1,
        m2,
    })
}
