//! Census on boards other than 8x8. There are no reference counts for
//! these, so treat the output as exploratory.

use warnsdorff::census::{good_order_fraction, run_census};
use warnsdorff::{BoardSize, TieBreakPolicy};

fn main() {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    println!(" n  bad_orders  non_ham_tours/total_tours  max  good");
    for n in 5..=7 {
        let s = run_census(
            TieBreakPolicy::FirstEncountered,
            BoardSize::new(n).unwrap(),
            workers,
        );
        println!(
            "{n:>2}  {:>10}  {:>13}/{:<11}  {:>3}  {}",
            s.bad_orders,
            s.non_hamiltonian_tours,
            s.total_tours,
            s.max_failures,
            good_order_fraction(&s)
        );
    }
}
