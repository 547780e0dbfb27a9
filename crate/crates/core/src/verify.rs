//! Checks every published figure and count against this implementation.

use std::fmt::Write as _;

use crate::board::{BoardSize, Square};
use crate::census::{good_order_fraction, run_census, CensusSummary};
use crate::figures::{self, to_rows};
use crate::heuristic::{run_tour, TieBreakPolicy, Tour};
use crate::permutations::{base_order, parse_order, MoveOrder};
use crate::report::BoardGrid;

/// Signature of a tour runner, so checks can be pointed at a mutant.
pub type Runner = fn(Square, &MoveOrder, TieBreakPolicy, BoardSize) -> Tour;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Skip the two full censuses.
    pub quick: bool,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            quick: false,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

pub fn verify(options: VerifyOptions) -> Vec<Check> {
    verify_with(run_tour, options)
}

/// Runs the tour and named-order checks through `runner`. The censuses
/// always use the built-in engine.
pub fn verify_with(runner: Runner, options: VerifyOptions) -> Vec<Check> {
    let mut checks = figure_checks(runner);
    checks.extend(named_order_checks(runner));
    if !options.quick {
        let first = run_census(
            TieBreakPolicy::FirstEncountered,
            BoardSize::STANDARD,
            options.workers,
        );
        let last = run_census(
            TieBreakPolicy::LastEncountered,
            BoardSize::STANDARD,
            options.workers,
        );
        checks.extend(census_checks(&first, &last));
    }
    checks
}

fn grid_diff(expected: &BoardGrid, actual: &BoardGrid) -> String {
    let mut diffs = Vec::new();
    for (r, (er, ar)) in expected.rows().iter().zip(actual.rows()).enumerate() {
        for (c, (e, a)) in er.iter().zip(ar).enumerate() {
            if e != a {
                diffs.push(format!("({r},{c}) {a}"));
            }
        }
    }
    if diffs.is_empty() {
        "match".to_string()
    } else {
        format!("{} cells differ: {}", diffs.len(), diffs.join(", "))
    }
}

pub fn figure_checks(runner: Runner) -> Vec<Check> {
    let n8 = BoardSize::STANDARD;
    let order = base_order();
    let mut checks = Vec::new();

    let closed = runner(
        Square::new(0, 0),
        &order,
        TieBreakPolicy::FirstEncountered,
        n8,
    );
    let expected = BoardGrid::from_rows(to_rows(&figures::CLOSED_TOUR_FROM_CORNER)).unwrap();
    checks.push(Check::new(
        "tour from (0,0): grid",
        "match",
        grid_diff(&expected, &BoardGrid::from_tour(&closed)),
    ));
    checks.push(Check::new(
        "tour from (0,0): hamiltonian, closed",
        "true, true",
        format!("{}, {}", closed.hamiltonian, closed.closed),
    ));

    let halted = runner(
        Square::new(1, 3),
        &order,
        TieBreakPolicy::FirstEncountered,
        n8,
    );
    let expected = BoardGrid::from_rows(to_rows(&figures::HALTED_TOUR_FROM_1_3)).unwrap();
    let grid = BoardGrid::from_tour(&halted);
    checks.push(Check::new(
        "tour from (1,3): grid",
        "match",
        grid_diff(&expected, &grid),
    ));
    checks.push(Check::new("tour from (1,3): length", 60, halted.length));
    checks.push(Check::new(
        "tour from (1,3): final square",
        "5,0",
        halted.last(),
    ));
    let zeros: Vec<String> = grid.unvisited().iter().map(|s| format!("({s})")).collect();
    checks.push(Check::new(
        "tour from (1,3): unvisited",
        "(0,0) (1,2) (2,1) (3,3)",
        zeros.join(" "),
    ));
    checks
}

fn failures_with(runner: Runner, order: &MoveOrder) -> usize {
    let n8 = BoardSize::STANDARD;
    n8.squares()
        .filter(|&s| !runner(s, order, TieBreakPolicy::FirstEncountered, n8).hamiltonian)
        .count()
}

pub fn named_order_checks(runner: Runner) -> Vec<Check> {
    let nine = parse_order(figures::NINE_FAILURE_ORDER).expect("constant parses");
    let zero = parse_order(figures::ZERO_FAILURE_ORDER).expect("constant parses");
    vec![
        Check::new(
            format!("failures for {}", figures::NINE_FAILURE_ORDER),
            figures::MAX_FAILURES,
            failures_with(runner, &nine),
        ),
        Check::new(
            format!("failures for {}", figures::ZERO_FAILURE_ORDER),
            0,
            failures_with(runner, &zero),
        ),
    ]
}

pub fn census_checks(first: &CensusSummary, last: &CensusSummary) -> Vec<Check> {
    let mut checks = Vec::new();
    for s in [first, last] {
        let p = s.policy;
        checks.push(Check::new(
            format!("census {p}: total orders"),
            figures::TOTAL_ORDERS,
            s.total_orders,
        ));
        checks.push(Check::new(
            format!("census {p}: bad orders"),
            figures::BAD_ORDERS,
            s.bad_orders,
        ));
        checks.push(Check::new(
            format!("census {p}: total tours"),
            figures::TOTAL_TOURS,
            s.total_tours,
        ));
        checks.push(Check::new(
            format!("census {p}: non-hamiltonian tours"),
            figures::NON_HAMILTONIAN_TOURS,
            s.non_hamiltonian_tours,
        ));
        checks.push(Check::new(
            format!("census {p}: max failures"),
            figures::MAX_FAILURES,
            s.max_failures,
        ));
        let frac = good_order_fraction(s);
        checks.push(Check::new(
            format!("census {p}: good-order fraction"),
            "7376/40320",
            format!("{}/{}", frac.numerator, frac.denominator),
        ));
    }
    checks.push(Check::new(
        "census first vs last: histogram",
        format!("{:?}", first.failure_histogram),
        format!("{:?}", last.failure_histogram),
    ));
    checks
}

/// One line per check, then a totals line.
pub fn render_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        if c.passed() {
            writeln!(out, "PASS  {:<width$}  {}", c.name, c.actual).unwrap();
        } else {
            writeln!(
                out,
                "FAIL  {:<width$}  expected {}, got {}",
                c.name, c.expected, c.actual
            )
            .unwrap();
        }
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    writeln!(out, "{passed}/{} checks passed", checks.len()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{neighbors, VisitedSet};

    /// Warnsdorff with the classic look-ahead bug: degree-0 candidates are
    /// never chosen, so no tour can complete its final step.
    fn skip_dead_ends(
        start: Square,
        order: &MoveOrder,
        policy: TieBreakPolicy,
        size: BoardSize,
    ) -> Tour {
        let mut visited = VisitedSet::new(size);
        visited.insert(start);
        let mut path = vec![start];
        let mut cur = start;
        loop {
            let mut best: Option<(Square, usize)> = None;
            for c in neighbors(cur, order, size) {
                if visited.contains(c) {
                    continue;
                }
                let d = crate::board::degree(c, &visited, size);
                if d == 0 {
                    continue;
                }
                let better = match (best, policy) {
                    (None, _) => true,
                    (Some((_, b)), TieBreakPolicy::FirstEncountered) => d < b,
                    (Some((_, b)), TieBreakPolicy::LastEncountered) => d <= b,
                };
                if better {
                    best = Some((c, d));
                }
            }
            let Some((next, _)) = best else { break };
            visited.insert(next);
            path.push(next);
            cur = next;
        }
        let mut t = run_tour(start, order, policy, size);
        t.length = path.len();
        t.hamiltonian = path.len() == size.cell_count();
        t.closed = false;
        t.path = path;
        t
    }

    #[test]
    fn quick_checks_pass() {
        let checks = verify(VerifyOptions {
            quick: true,
            workers: 1,
        });
        assert_eq!(checks.len(), 8);
        assert!(
            checks.iter().all(Check::passed),
            "{}",
            render_table(&checks)
        );
    }

    #[test]
    fn mutant_is_caught_with_diff() {
        let checks = verify_with(
            skip_dead_ends,
            VerifyOptions {
                quick: true,
                workers: 1,
            },
        );
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        assert!(!failed.is_empty());
        let table = render_table(&checks);
        assert!(table.contains("FAIL  tour from (0,0): grid"), "{table}");
        assert!(
            table.contains("expected true, true, got false, false"),
            "{table}"
        );
    }
}
