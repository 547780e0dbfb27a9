//! Board grids and serialized reports.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::board::{BoardSize, Square};
use crate::census::{good_order_fraction, CensusSummary, Fraction};
use crate::error::{Error, Result};
use crate::heuristic::{TieBreakPolicy, Tour};
use crate::permutations::{unrank, OrderRank};

pub const SCHEMA_VERSION: &str = "1";

/// Visit-step matrix: each cell holds its 1-based step number, 0 if unvisited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardGrid {
    cells: Vec<Vec<u32>>,
}

impl BoardGrid {
    pub fn from_tour(tour: &Tour) -> Self {
        Self::from_path(&tour.path, tour.size)
    }

    pub fn from_path(path: &[Square], size: BoardSize) -> Self {
        let n = size.side();
        let mut cells = vec![vec![0u32; n]; n];
        for (step, sq) in path.iter().enumerate() {
            cells[sq.row as usize][sq.col as usize] = step as u32 + 1;
        }
        BoardGrid { cells }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedGrid("no rows".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedGrid(format!(
                "row {i} has {} cells, expected {n}",
                r.len()
            )));
        }
        Ok(BoardGrid { cells: rows })
    }

    pub fn side(&self) -> usize {
        self.cells.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn get(&self, sq: Square) -> u32 {
        self.cells[sq.row as usize][sq.col as usize]
    }

    /// Squares holding 0, row-major.
    pub fn unvisited(&self) -> Vec<Square> {
        let mut out = Vec::new();
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    out.push(Square::new(r as i32, c as i32));
                }
            }
        }
        out
    }

    /// Recovers the visit sequence. Fails unless the nonzero cells are
    /// exactly `1..=k` for some `k`.
    pub fn to_path(&self) -> Result<Vec<Square>> {
        let visited = self.cells.iter().flatten().filter(|&&v| v != 0).count();
        let mut path: Vec<Option<Square>> = vec![None; visited];
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let slot = path.get_mut(v as usize - 1).ok_or_else(|| {
                    Error::MalformedGrid(format!("step {v} exceeds {visited} visited cells"))
                })?;
                if slot.is_some() {
                    return Err(Error::MalformedGrid(format!("step {v} appears twice")));
                }
                *slot = Some(Square::new(r as i32, c as i32));
            }
        }
        path.into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::MalformedGrid("steps are not contiguous".into()))
    }

    /// Parses whitespace-separated integer rows; alignment is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| Error::MalformedGrid(format!("bad cell {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Right-aligned cells, width of the largest step number `n^2`, single
    /// spaces between cells, one newline-terminated line per row.
    pub fn render(&self) -> String {
        let n = self.side();
        let width = (n * n).to_string().len();
        let mut out = String::new();
        for row in &self.cells {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "{v:>width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn render_grid(tour: &Tour) -> String {
    BoardGrid::from_tour(tour).render()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunParameters {
    pub policy: TieBreakPolicy,
    pub size: BoardSize,
    /// Order text, or `"all"` for a census.
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<Square>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportResults {
    Tour {
        tour: Tour,
        grid: BoardGrid,
    },
    Census {
        summary: CensusSummary,
        good_order_fraction: Fraction,
        /// Set for boards other than 8x8, which have no published reference counts.
        extrapolation: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub parameters: RunParameters,
    pub results: ReportResults,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ReportDocument {
    pub fn for_tour(tour: &Tour) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            parameters: RunParameters {
                policy: tour.policy,
                size: tour.size,
                order: tour.order.to_string(),
                start: Some(tour.start),
            },
            results: ReportResults::Tour {
                tour: tour.clone(),
                grid: BoardGrid::from_tour(tour),
            },
            timing: None,
        }
    }

    pub fn for_census(summary: &CensusSummary) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            parameters: RunParameters {
                policy: summary.policy,
                size: summary.size,
                order: "all".to_string(),
                start: None,
            },
            results: ReportResults::Census {
                summary: summary.clone(),
                good_order_fraction: good_order_fraction(summary),
                extrapolation: !summary.is_standard_board(),
            },
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Plain-text census summary.
pub fn render_census(summary: &CensusSummary, histogram: bool) -> String {
    let mut out = String::new();
    let s = summary;
    writeln!(out, "policy: {}", s.policy).unwrap();
    writeln!(out, "board: {0}x{0}", s.size).unwrap();
    if !s.is_standard_board() {
        writeln!(
            out,
            "note: extrapolation, no reference counts exist for this board size"
        )
        .unwrap();
    }
    writeln!(out, "total_orders: {}", s.total_orders).unwrap();
    writeln!(out, "bad_orders: {}", s.bad_orders).unwrap();
    writeln!(out, "good_order_fraction: {}", good_order_fraction(s)).unwrap();
    writeln!(out, "total_tours: {}", s.total_tours).unwrap();
    writeln!(out, "non_hamiltonian_tours: {}", s.non_hamiltonian_tours).unwrap();
    writeln!(out, "max_failures: {}", s.max_failures).unwrap();
    writeln!(out, "argmax_orders: {}", s.argmax_ranks.len()).unwrap();
    for r in &s.argmax_ranks {
        writeln!(out, "  {:>5}  {}", r, unrank(*r)).unwrap();
    }
    if histogram {
        writeln!(out, "failure_histogram:").unwrap();
        for (k, v) in &s.failure_histogram {
            writeln!(out, "  {k:>3}  {v}").unwrap();
        }
    }
    out
}

/// Writes the per-order CSV dump (`rank,order,failures`) row by row.
pub fn write_census_csv<W: io::Write>(out: W, failures: &[usize]) -> io::Result<()> {
    write_rows(out, failures).map_err(|e| match e.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => io::Error::other(format!("{other:?}")),
    })
}

fn write_rows<W: io::Write>(out: W, failures: &[usize]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rank", "order", "failures"])?;
    for (r, f) in failures.iter().enumerate() {
        let rank = OrderRank::new(r as u64).expect("rank in range");
        w.write_record([r.to_string(), unrank(rank).to_string(), f.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heuristic::run_tour;
    use crate::permutations::base_order;
    use proptest::prelude::*;

    #[test]
    fn single_step_on_two_by_two() {
        let n2 = BoardSize::new(2).unwrap();
        let t = run_tour(
            Square::new(0, 0),
            &base_order(),
            TieBreakPolicy::FirstEncountered,
            n2,
        );
        assert_eq!(t.length, 1);
        assert_eq!(render_grid(&t), "1 0\n0 0\n");
    }

    #[test]
    fn render_alignment() {
        let g = BoardGrid::parse("1 10 16 0\n2 3 4 5\n0 0 0 0\n9 8 7 6").unwrap();
        assert_eq!(
            g.render(),
            " 1 10 16  0\n 2  3  4  5\n 0  0  0  0\n 9  8  7  6\n"
        );
    }

    #[test]
    fn parse_rejects_ragged_and_garbage() {
        assert!(BoardGrid::parse("1 2\n3\n").is_err());
        assert!(BoardGrid::parse("1 x\n3 4\n").is_err());
        assert!(BoardGrid::parse("").is_err());
    }

    #[test]
    fn to_path_rejects_gaps_and_repeats() {
        assert!(BoardGrid::parse("1 3\n0 0").unwrap().to_path().is_err());
        assert!(BoardGrid::parse("1 1\n0 0").unwrap().to_path().is_err());
    }

    #[test]
    fn csv_quotes_order_text() {
        let mut buf = Vec::new();
        write_census_csv(&mut buf, &[2, 0]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("rank,order,failures"));
        assert_eq!(
            lines.next(),
            Some("0,\"<1,2> <2,1> <1,-2> <2,-1> <-1,2> <-2,1> <-1,-2> <-2,-1>\",2")
        );
    }

    proptest! {
        #[test]
        fn grid_text_roundtrip(n in 1usize..9, r in 0i32..8, c in 0i32..8, rank in 0u64..40320, last in any::<bool>()) {
            let size = BoardSize::new(n).unwrap();
            let start = Square::new(r % n as i32, c % n as i32);
            let policy = if last { TieBreakPolicy::LastEncountered } else { TieBreakPolicy::FirstEncountered };
            let t = run_tour(start, &unrank(OrderRank::new(rank).unwrap()), policy, size);
            let parsed = BoardGrid::parse(&render_grid(&t)).unwrap();
            prop_assert_eq!(parsed.to_path().unwrap(), t.path.clone());
            prop_assert_eq!(parsed.unvisited().len(), n * n - t.length);

            let doc = ReportDocument::for_tour(&t);
            prop_assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
        }
    }
}
