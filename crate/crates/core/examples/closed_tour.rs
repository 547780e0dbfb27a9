//! Runs the heuristic from the corner with the base move order and prints
//! the resulting closed tour.
//!
//! ```text
//! cargo run -p warnsdorff --example closed_tour
//! ```

use warnsdorff::report::render_grid;
use warnsdorff::{base_order, run_tour, BoardSize, Square, TieBreakPolicy};

fn main() {
    let order = base_order();
    let tour = run_tour(
        Square::new(0, 0),
        &order,
        TieBreakPolicy::FirstEncountered,
        BoardSize::STANDARD,
    );

    println!("order: {order}");
    print!("{}", render_grid(&tour));
    println!(
        "length {} hamiltonian {} closed {} (last square {}, start {})",
        tour.length,
        tour.hamiltonian,
        tour.closed,
        tour.last(),
        tour.start
    );
}
