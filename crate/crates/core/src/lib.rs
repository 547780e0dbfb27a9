//! Warnsdorff's knight's-tour heuristic, parameterized by move order and
//! tie-break policy, plus an exhaustive census of all 8! move orders.
//!
//! The runnable programs under `examples/` walk through each piece:
//!
//! - **`closed_tour`** and **`halted_tour`**: single runs from (0,0) and (1,3)
//! - **`tie_break_policies`**: first-tie vs last-tie, and the reversed-order pairing
//! - **`move_orders`**: ranks, reversal and the `<dx,dy>` text form
//! - **`order_failures`**: failing start squares for chosen orders
//! - **`full_census`**: all 40,320 orders from all 64 squares
//! - **`small_boards`**: the same census on 5x5 to 7x7
//! - **`symmetry`**: per-order failure counts under reversal
//! - **`verify_and_report`**: the verification table and JSON reports
//!
//! ```text
//! cargo run --release -p warnsdorff --example full_census
//! ```
//!
//! The `warnsdorff` binary exposes the same functionality as `tour`,
//! `census`, `verify` and `perm` subcommands.

pub mod board;
pub mod census;
pub mod cli;
pub mod error;
pub mod figures;
pub mod heuristic;
pub mod permutations;
pub mod report;
pub mod verify;

pub use board::{BoardSize, MoveDelta, Square, VisitedSet};
pub use census::{run_census, CensusSummary, OrderStats};
pub use error::{Error, Result};
pub use heuristic::{run_tour, TieBreakPolicy, Tour, TourClass};
pub use permutations::{base_order, MoveOrder, OrderRank};
pub use report::{BoardGrid, ReportDocument};
