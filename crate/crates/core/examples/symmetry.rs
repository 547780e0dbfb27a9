//! Checks that every order's failure count under first-tie equals its
//! reversal's under last-tie, which is why both policies give the same
//! census totals.

use warnsdorff::census::{symmetry_check_ranks, SymmetryMismatch};
use warnsdorff::{BoardSize, OrderRank};

fn main() {
    for n in [5, 6, 8] {
        let size = BoardSize::new(n).unwrap();
        match symmetry_check_ranks(OrderRank::all(), size) {
            Ok(()) => println!("{n}x{n}: all 40320 orders pair up"),
            Err(SymmetryMismatch {
                rank,
                first,
                reversed_last,
            }) => {
                println!("{n}x{n}: rank {rank} mismatch ({first} vs {reversed_last})")
            }
        }
    }
}
