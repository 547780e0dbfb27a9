//! Runs the quick verification table, then emits a JSON report for one
//! tour and reads it back.

use warnsdorff::report::ReportDocument;
use warnsdorff::verify::{render_table, verify, VerifyOptions};
use warnsdorff::{base_order, run_tour, BoardSize, Square, TieBreakPolicy};

fn main() {
    let checks = verify(VerifyOptions {
        quick: true,
        ..VerifyOptions::default()
    });
    print!("{}", render_table(&checks));

    let tour = run_tour(
        Square::new(1, 3),
        &base_order(),
        TieBreakPolicy::FirstEncountered,
        BoardSize::STANDARD,
    );
    let doc = ReportDocument::for_tour(&tour);
    let json = doc.to_json();
    println!("{} bytes of JSON", json.len());
    assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
    println!("report round-trips");
}
