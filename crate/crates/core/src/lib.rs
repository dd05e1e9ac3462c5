//! Cyclically interval edge colorings of simple cycles.
//!
//! A proper edge `t`-coloring of the cycle `C(n)` uses every color in `1..=t`
//! and gives adjacent edges different colors. It is *cyclically interval* when
//! the two colors meeting at each vertex are consecutive, either on the line
//! `1..=t` or on the circle where `t` and `1` are neighbours.
//!
//! The crate answers four questions about such colorings:
//!
//! * [`theta`] gives the exact set of feasible `t` for every `n` in closed form.
//! * [`construct`] emits a canonical witness coloring for every feasible pair.
//! * [`verify`] checks an arbitrary coloring and reports every failing vertex.
//! * [`oracle`] searches exhaustively on small cycles, independent of the
//!   closed form, and computes the component decomposition of a coloring.
//!
//! The [`cli`] module backs the `cyclic-chroma` binary.

pub mod cli;
pub mod construct;
pub mod error;
pub mod model;
pub mod oracle;
pub mod report;
pub mod theta;
pub mod verify;

pub use construct::{construct, tent, zigzag_staircase, Infeasible};
pub use error::{Error, Result};
pub use model::{epsilon, parity_filter, sgn_nat, CycleColoring, Parity};
pub use oracle::{
    count, decompose, enumerate, exists_search, theta_by_search, ComponentRecord,
    ProofDecomposition, SearchConfig, Searcher,
};
pub use theta::{
    bounds_cyc, chi_prime, contains, forbidden_set, theta_cyclic, theta_interval, Provenance,
    ThetaSet,
};
pub use verify::{
    is_proper, is_surjective, palette_cyclically_ok, u_set, verify, vertex_palette, Mode, Reason,
    VerificationReport, Violation,
};
