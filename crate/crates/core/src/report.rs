//! Text renderings shared by the CLI: set notation and the reference table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::oracle::{ProofDecomposition, Searcher};
use crate::theta::{chi_prime, forbidden_set, theta_cyclic};

/// `{2,3,4,6}`; `{}` when empty.
pub fn brace_set(xs: &[usize]) -> String {
    format!("{{{}}}", join(xs, ","))
}

/// `2;3;4;6`; empty string when empty.
pub fn semicolon_set(xs: &[usize]) -> String {
    join(xs, ";")
}

fn join(xs: &[usize], sep: &str) -> String {
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        write!(out, "{x}").unwrap();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub chi_prime: usize,
    pub theta: Vec<usize>,
    /// Empty below `n = 5`, where the gap is not defined.
    pub forbidden: Vec<usize>,
    pub oracle: Option<Vec<usize>>,
}

impl TableRow {
    pub fn agree(&self) -> Option<bool> {
        self.oracle.as_ref().map(|o| *o == self.theta)
    }
}

/// Rows for `n` in `3..=nmax`, with oracle columns for `n <= oracle_upto`.
pub fn table_rows(
    nmax: usize,
    oracle_upto: Option<usize>,
    searcher: &Searcher,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for n in 3..=nmax {
        let oracle = match oracle_upto {
            Some(k) if n <= k => Some(
                searcher
                    .theta(n, crate::verify::Mode::CyclicInterval)?
                    .members,
            ),
            _ => None,
        };
        rows.push(TableRow {
            n,
            chi_prime: chi_prime(n)?,
            theta: theta_cyclic(n)?.members,
            forbidden: if n >= 5 {
                forbidden_set(n)?
            } else {
                Vec::new()
            },
            oracle,
        });
    }
    Ok(rows)
}

pub fn render_table(rows: &[TableRow], with_oracle: bool, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("n,chi_prime,theta,forbidden");
            if with_oracle {
                out.push_str(",oracle_theta,agree");
            }
            out.push('\n');
            for r in rows {
                write!(
                    out,
                    "{},{},{},{}",
                    r.n,
                    r.chi_prime,
                    semicolon_set(&r.theta),
                    semicolon_set(&r.forbidden)
                )
                .unwrap();
                if with_oracle {
                    match (&r.oracle, r.agree()) {
                        (Some(o), Some(a)) => write!(out, ",{},{a}", semicolon_set(o)).unwrap(),
                        _ => out.push_str(",,"),
                    }
                }
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("| n | χ' | Θ(C(n)) | forbidden |");
            if with_oracle {
                out.push_str(" oracle Θ | agree |");
            }
            out.push_str("\n|---|---|---|---|");
            if with_oracle {
                out.push_str("---|---|");
            }
            out.push('\n');
            for r in rows {
                write!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.n,
                    r.chi_prime,
                    brace_set(&r.theta),
                    brace_set(&r.forbidden)
                )
                .unwrap();
                if with_oracle {
                    match (&r.oracle, r.agree()) {
                        (Some(o), Some(a)) => write!(out, " {} | {a} |", brace_set(o)).unwrap(),
                        _ => out.push_str(" - | - |"),
                    }
                }
                out.push('\n');
            }
        }
    }
    out
}

/// Human-readable rendering of a decomposition.
pub fn render_decomposition(d: &ProofDecomposition) -> String {
    let mut out = String::new();
    if d.connected {
        let why = if d.u_empty { "U empty" } else { "single run" };
        writeln!(out, "case A: H₀ connected ({why})").unwrap();
        return out;
    }
    writeln!(
        out,
        "case B: m={} components, rotation offset {}",
        d.m, d.rotation_offset
    )
    .unwrap();
    writeln!(out, "  i  zeta  eta  |H_i|  |H'_i|").unwrap();
    for (i, c) in d.components.iter().enumerate() {
        writeln!(
            out,
            "{:>3}  {:>4}  {:>3}  {:>5}  {:>6}",
            i + 1,
            c.zeta,
            c.eta,
            c.h_size,
            c.h_prime_size
        )
        .unwrap();
    }
    let bits: Vec<String> = d.y.iter().map(|b| b.to_string()).collect();
    writeln!(out, "y   = {}", bits.join(" ")).unwrap();
    writeln!(out, "psi = {}", join(&d.psi, " ")).unwrap();
    let flags: Vec<&str> = d
        .horizontal
        .iter()
        .map(|&h| if h { "-" } else { "|" })
        .collect();
    writeln!(
        out,
        "horizontal = {}  (non-horizontal: {})",
        flags.join(" "),
        d.non_horizontal_count()
    )
    .unwrap();
    writeln!(out, "M1 = {}  M2 = {}", brace_set(&d.m1), brace_set(&d.m2)).unwrap();
    let mark = if d.identity_holds() { "✓" } else { "✗" };
    writeln!(
        out,
        "m={}, Σψ={}={}+{} {mark}",
        d.m,
        d.psi_sum(),
        d.n,
        2 * d.m
    )
    .unwrap();
    out
}
