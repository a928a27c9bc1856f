//! Minimum-cost design and exact verification of two-layer networks that
//! stay connected under heterogeneous link-removal attacks.
//!
//! A network spans `n1` type-1 nodes and `n2` higher-criticality type-2
//! nodes. Links are either *protected* (immune to attack, cost `cP` each) or
//! *non-protected* (removable, cost `cNP <= cP`). A design is
//! `(k1, k2)`-resistant when removing any `k1` non-protected links leaves
//! everything connected, and removing any `k2` of them leaves the type-2
//! nodes mutually reachable. This crate computes the exact lower bound on
//! non-protected links per protected budget, constructs the three candidate
//! shapes that can attain it, selects the cheapest by exact rational
//! threshold comparison, and certifies every result with a min-cut verifier
//! backed by an independent brute-force attacker.
//!
//! ## Examples directory
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── design_three_regimes.rs   # cost ratio sweeps strategy from tree to Harary
//! ├── bound_curve.rs            # the piecewise lower bound and its breakpoints
//! ├── verify_and_attack.rs      # certificates, witnesses, worst-case attacks
//! ├── harary_gallery.rs         # minimum-link constructions per connectivity target
//! ├── contraction.rs            # quotient graph under protected-link contraction
//! ├── threat_sweep.rs           # k2 sweep: strategy switch and cost plateau
//! ├── reliability_mc.rs         # random failures: closed form vs Monte Carlo
//! └── robust_ranges.rs          # which designs survive shifted threat levels
//! ```
//!
//! Run one with `cargo run --example design_three_regimes`.
//!
//! ## Library entry points
//!
//! - [`designer::design`] — pick, build and verify the cheapest design.
//! - [`bounds::lower_bound`] / [`bounds::curve`] — the exact link bound.
//! - [`verifier::is_resistant_mincut`] / [`verifier::is_resistant_bruteforce`]
//!   — resistance certificates with attack witnesses.
//! - [`harary::harary_edges`] — minimum-link graphs of prescribed
//!   edge connectivity over arbitrary node sequences.
//! - [`reliability::monte_carlo_mean_connectivity`] — seeded failure
//!   simulation next to the closed-form approximations.
//! - [`robustness::sweep_k2`] / [`robustness::robust_range`] — behavior under
//!   changing threat levels.
//!
//! The `resistnet` binary exposes the same operations as subcommands; see
//! [`cli`]. Set `RESISTNET_THREADS` to cap internal parallelism (0 = auto).

// Comparisons and parities keep the shape of the design formulas
// (`k1 + 1 <= n1`, `k1 % 2 == 1`, `(k + 1) / 2`).
#![allow(clippy::int_plus_one, clippy::manual_is_multiple_of, clippy::manual_div_ceil)]
// 1-based node ids index node-keyed tables directly.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod cli;
pub mod designer;
pub mod graph;
pub mod harary;
pub mod reliability;
pub mod robustness;
pub mod verifier;

pub use bounds::{curve, lower_bound, lp_oracle, BoundCurve, Rational};
pub use designer::{design, DesignParams, DesignResult, StrategyKind};
pub use graph::{contract, LinkKind, NodeId, TwoLayerNetwork};
pub use harary::{harary_edges, HararySpec};
pub use reliability::{monte_carlo_mean_connectivity, FailureModel};
pub use robustness::{robust_range, sweep_k2};
pub use verifier::{is_resistant_bruteforce, is_resistant_mincut, ResistanceReport};
