//! First-tie and last-tie give different tours for the same order, but
//! last-tie on the reversed order retraces first-tie step for step.
//!
//! ```text
//! cargo run -p warnsdorff --example tie_break_policies -- 4,4
//! ```

use warnsdorff::permutations::reverse;
use warnsdorff::{base_order, run_tour, BoardSize, Square, TieBreakPolicy};

fn main() {
    let start: Square = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("start as row,col"))
        .unwrap_or(Square::new(0, 0));
    let size = BoardSize::STANDARD;
    let order = base_order();

    let first = run_tour(start, &order, TieBreakPolicy::FirstEncountered, size);
    let last = run_tour(start, &order, TieBreakPolicy::LastEncountered, size);
    let dual = run_tour(
        start,
        &reverse(&order),
        TieBreakPolicy::LastEncountered,
        size,
    );

    let diverge = first.path.iter().zip(&last.path).position(|(a, b)| a != b);
    println!("start {start}, order {order}");
    println!(
        "first-tie: length {}, hamiltonian {}",
        first.length, first.hamiltonian
    );
    println!(
        "last-tie:  length {}, hamiltonian {}",
        last.length, last.hamiltonian
    );
    match diverge {
        Some(step) => println!("paths diverge at step {}", step + 1),
        None => println!("paths agree"),
    }
    println!(
        "last-tie on reversed order retraces first-tie: {}",
        dual.path == first.path
    );
}
