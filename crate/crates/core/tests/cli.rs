use std::process::{Command, Output};

use warnsdorff::figures;
use warnsdorff::report::{ReportDocument, ReportResults};
use warnsdorff::BoardGrid;

fn warnsdorff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_warnsdorff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn grid_part(text: &str) -> String {
    text.lines()
        .take_while(|l| !l.contains(':'))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn tour_from_corner_prints_closed_tour() {
    let o = warnsdorff(&["tour", "--start", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let grid = BoardGrid::parse(&grid_part(&text)).unwrap();
    assert_eq!(
        grid.rows(),
        figures::to_rows(&figures::CLOSED_TOUR_FROM_CORNER)
    );
    assert!(text.contains("hamiltonian: true, closed: true"));
    assert!(text.starts_with(" 1  4 61 20 41  6 43 22\n"));
}

#[test]
fn tour_from_1_3_halts() {
    let o = warnsdorff(&["tour", "--start", "1,3", "--policy", "first"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("length: 60"));
    assert!(text.contains("final: 5,0"));
    let grid = BoardGrid::parse(&grid_part(&text)).unwrap();
    assert_eq!(
        grid.rows(),
        figures::to_rows(&figures::HALTED_TOUR_FROM_1_3)
    );
}

#[test]
fn tour_off_board_is_rejected() {
    let o = warnsdorff(&["tour", "--start", "9,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("off a 8x8 board"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(warnsdorff(&[]).status.code(), Some(2));
    assert_eq!(
        warnsdorff(&["tour", "--start", "0,0", "--size", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        warnsdorff(&["census", "--format", "xml"]).status.code(),
        Some(2)
    );
}

#[test]
fn tour_json_roundtrips() {
    let o = warnsdorff(&[
        "tour",
        "--start",
        "2,5",
        "--order",
        figures::NINE_FAILURE_ORDER,
        "--policy",
        "last",
        "--size",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.schema_version, "1");
    assert_eq!(doc.parameters.order, figures::NINE_FAILURE_ORDER);
    let ReportResults::Tour { tour, grid } = &doc.results else {
        panic!("expected a tour report");
    };
    assert_eq!(tour.size.side(), 7);
    assert_eq!(grid.to_path().unwrap(), tour.path);
    assert_eq!(doc.to_json().trim_end(), text.trim_end());
}

#[test]
fn census_on_5x5_is_labelled_extrapolation() {
    let o = warnsdorff(&[
        "census", "--size", "5", "--policy", "first", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = ReportDocument::from_json(&stdout(&o)).unwrap();
    let ReportResults::Census {
        summary,
        extrapolation,
        ..
    } = doc.results
    else {
        panic!("expected a census report");
    };
    assert!(extrapolation);
    assert_eq!(summary.total_orders, 40_320);
    assert_eq!(summary.total_tours, 25 * 40_320);
    assert_eq!(doc.parameters.order, "all");
    assert!(doc.timing.is_none());
}

#[test]
fn census_output_independent_of_workers() {
    for format in ["text", "json", "csv"] {
        let one = warnsdorff(&[
            "census",
            "--size",
            "6",
            "--workers",
            "1",
            "--format",
            format,
            "--histogram",
        ]);
        let many = warnsdorff(&[
            "census",
            "--size",
            "6",
            "--workers",
            "5",
            "--format",
            format,
            "--histogram",
        ]);
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout, "format {format}");
    }
}

#[test]
fn census_csv_has_one_row_per_order() {
    let o = warnsdorff(&["census", "--size", "4", "--format", "csv"]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["rank", "order", "failures"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 40_320);
    assert_eq!(&rows[40_319][0], "40319");
    assert_eq!(
        &rows[40_319][1],
        "<-2,-1> <-1,-2> <-2,1> <-1,2> <2,-1> <1,-2> <2,1> <1,2>"
    );
    // No closed or open tour covers a 4x4 board.
    assert!(rows.iter().all(|r| &r[2] == "16"));
}

#[test]
fn census_standard_board_headline_counts() {
    let o = warnsdorff(&["census", "--policy", "last", "--histogram"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "bad_orders: 32944",
        "non_hamiltonian_tours: 78832",
        "total_tours: 2580480",
        "max_failures: 9",
        "good_order_fraction: 7376/40320 (18.29%)",
    ] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }
    assert!(!text.contains("extrapolation"));
}

#[test]
fn verify_full_and_quick() {
    let quick = warnsdorff(&["verify", "--quick"]);
    assert_eq!(quick.status.code(), Some(0));
    assert!(stdout(&quick).contains("8/8 checks passed"));

    let full = warnsdorff(&["verify"]);
    let text = stdout(&full);
    assert_eq!(full.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text.contains("census last: bad orders"));
}

#[test]
fn perm_subcommands() {
    let o = warnsdorff(&["perm", "unrank", "0"]);
    assert_eq!(
        stdout(&o).trim(),
        "<1,2> <2,1> <1,-2> <2,-1> <-1,2> <-2,1> <-1,-2> <-2,-1>"
    );

    let o = warnsdorff(&["perm", "reverse", figures::NINE_FAILURE_ORDER]);
    assert_eq!(
        stdout(&o).trim(),
        "<2,1> <-1,2> <-1,-2> <-2,1> <2,-1> <-2,-1> <1,-2> <1,2>"
    );

    let o = warnsdorff(&[
        "perm",
        "rank",
        "<1,2> <2,1> <1,-2> <2,-1> <-1,2> <-2,1> <-2,-1> <-1,-2>",
    ]);
    assert_eq!(stdout(&o).trim(), "1");

    let o = warnsdorff(&["perm", "rank", "<bad>"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("<bad>"));
}
