//! The full sweep: every move order from every start square, under both
//! tie-break policies.
//!
//! ```text
//! cargo run --release -p warnsdorff --example full_census -- 8
//! ```
//! The optional argument is the worker count.

use std::time::Instant;

use warnsdorff::census::run_census;
use warnsdorff::report::render_census;
use warnsdorff::{BoardSize, TieBreakPolicy};

fn main() {
    let workers = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("worker count"))
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));

    let mut summaries = Vec::new();
    for policy in TieBreakPolicy::ALL {
        let t = Instant::now();
        let summary = run_census(policy, BoardSize::STANDARD, workers);
        println!("{}", render_census(&summary, true));
        println!("({workers} workers, {:.1?})\n", t.elapsed());
        summaries.push(summary);
    }
    println!(
        "histograms identical across policies: {}",
        summaries[0].failure_histogram == summaries[1].failure_histogram
    );
}
