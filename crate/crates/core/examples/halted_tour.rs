//! A tour that gets stuck: same order as `closed_tour`, started from (1,3).
//!
//! Prints the grid (zeros mark unvisited squares) and shows that none of
//! the leftover squares can be reached from where the knight stopped.

use warnsdorff::board::{degree, VisitedSet};
use warnsdorff::report::BoardGrid;
use warnsdorff::{base_order, run_tour, BoardSize, Square, TieBreakPolicy};

fn main() {
    let size = BoardSize::STANDARD;
    let tour = run_tour(
        Square::new(1, 3),
        &base_order(),
        TieBreakPolicy::FirstEncountered,
        size,
    );
    let grid = BoardGrid::from_tour(&tour);
    print!("{}", grid.render());

    let visited = VisitedSet::from_squares(size, tour.path.iter().copied());
    let end = tour.last();
    println!("halted at {end} after {} squares", tour.length);
    println!(
        "unvisited exits from {end}: {}",
        degree(end, &visited, size)
    );
    for sq in grid.unvisited() {
        println!(
            "  left over {sq}: knight move from {end}? {}",
            sq.is_knight_move_to(end)
        );
    }
}
