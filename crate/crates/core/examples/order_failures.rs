//! Counts failing start squares for a few move orders.
//!
//! ```text
//! cargo run -p warnsdorff --example order_failures -- "<2,1> <1,2> <1,-2> <2,-1> <-1,2> <-2,1> <-1,-2> <-2,-1>"
//! ```

use warnsdorff::census::failures_for_order;
use warnsdorff::figures::{NINE_FAILURE_ORDER, ZERO_FAILURE_ORDER};
use warnsdorff::{base_order, BoardSize, MoveOrder, TieBreakPolicy};

fn main() {
    let mut orders: Vec<MoveOrder> = vec![
        base_order(),
        NINE_FAILURE_ORDER.parse().unwrap(),
        ZERO_FAILURE_ORDER.parse().unwrap(),
    ];
    if let Some(text) = std::env::args().nth(1) {
        orders.push(text.parse().expect("order as <dx,dy> tokens"));
    }

    for order in &orders {
        for policy in TieBreakPolicy::ALL {
            let stats = failures_for_order(order, policy, BoardSize::STANDARD);
            let starts: Vec<String> = stats
                .failing_starts
                .iter()
                .map(|s| format!("({s})"))
                .collect();
            println!(
                "rank {:>5} {policy:<5} {:>2} failures  {}",
                stats.rank,
                stats.failures,
                starts.join(" ")
            );
        }
    }
}
