//! Exhaustive sweep of every move order from every start square.
//!
//! Work is split into contiguous rank ranges, one per worker, and merged by
//! integer addition, so the summary does not depend on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::board::{BoardSize, Square};
use crate::heuristic::{Scratch, TieBreakPolicy, TourEngine};
use crate::permutations::{reverse, unrank, MoveOrder, OrderRank, ORDER_COUNT};

/// Outcome of one move order over all start squares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub rank: OrderRank,
    pub failures: usize,
    pub hamiltonian_count: usize,
    /// Starts whose tour halted early, row-major.
    pub failing_starts: Vec<Square>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub policy: TieBreakPolicy,
    pub size: BoardSize,
    pub total_orders: u64,
    pub bad_orders: u64,
    pub total_tours: u64,
    pub non_hamiltonian_tours: u64,
    pub max_failures: usize,
    pub argmax_ranks: Vec<OrderRank>,
    /// failures per order -> number of orders; only nonzero buckets.
    pub failure_histogram: BTreeMap<usize, u64>,
}

impl CensusSummary {
    /// The board size the published figures were measured on.
    pub fn is_standard_board(&self) -> bool {
        self.size == BoardSize::STANDARD
    }

    pub fn good_orders(&self) -> u64 {
        self.total_orders - self.bad_orders
    }
}

/// Runs every start square for `order`.
pub fn failures_for_order(
    order: &MoveOrder,
    policy: TieBreakPolicy,
    size: BoardSize,
) -> OrderStats {
    let engine = TourEngine::new(order, policy, size);
    stats_with(
        &engine,
        crate::permutations::rank(order),
        &mut Scratch::default(),
    )
}

fn stats_with(engine: &TourEngine, rank: OrderRank, scratch: &mut Scratch) -> OrderStats {
    let size = engine.size();
    let cells = size.cell_count();
    let failing_starts: Vec<Square> = (0..cells)
        .filter(|&i| engine.tour_length(i, scratch) != cells)
        .map(|i| size.square_at(i))
        .collect();
    OrderStats {
        rank,
        failures: failing_starts.len(),
        hamiltonian_count: cells - failing_starts.len(),
        failing_starts,
    }
}

/// Per-order results for a contiguous rank range, in rank order.
pub fn order_stats_range(
    ranks: std::ops::Range<u32>,
    policy: TieBreakPolicy,
    size: BoardSize,
) -> impl Iterator<Item = OrderStats> {
    let mut scratch = Scratch::default();
    ranks.map(move |r| {
        let rank = OrderRank::new(r as u64).expect("range within [0, 40320)");
        let engine = TourEngine::new(&unrank(rank), policy, size);
        stats_with(&engine, rank, &mut scratch)
    })
}

/// Failure counts for every rank, indexed by rank.
///
/// `workers` threads each take one contiguous slice of the rank range.
pub fn failure_table(policy: TieBreakPolicy, size: BoardSize, workers: usize) -> Vec<usize> {
    let workers = workers.clamp(1, ORDER_COUNT as usize) as u32;
    let chunk = ORDER_COUNT.div_ceil(workers);
    let ranges: Vec<_> = (0..workers)
        .map(|w| (w * chunk).min(ORDER_COUNT)..((w + 1) * chunk).min(ORDER_COUNT))
        .collect();
    let parts: Vec<Vec<usize>> = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| {
                s.spawn(move || {
                    order_stats_range(range, policy, size)
                        .map(|st| st.failures)
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect()
    });
    parts.concat()
}

pub fn run_census(policy: TieBreakPolicy, size: BoardSize, workers: usize) -> CensusSummary {
    summarize(policy, size, &failure_table(policy, size, workers))
}

/// Aggregates per-rank failure counts (`failures[r]` for rank `r`).
pub fn summarize(policy: TieBreakPolicy, size: BoardSize, failures: &[usize]) -> CensusSummary {
    let mut histogram = BTreeMap::new();
    let mut non_hamiltonian = 0u64;
    for &f in failures {
        *histogram.entry(f).or_insert(0u64) += 1;
        non_hamiltonian += f as u64;
    }
    let max_failures = failures.iter().copied().max().unwrap_or(0);
    let argmax_ranks = failures
        .iter()
        .enumerate()
        .filter(|&(_, &f)| f == max_failures && f > 0)
        .map(|(r, _)| OrderRank::new(r as u64).expect("rank in range"))
        .collect();
    let total_orders = failures.len() as u64;
    CensusSummary {
        policy,
        size,
        total_orders,
        bad_orders: failures.iter().filter(|&&f| f > 0).count() as u64,
        total_tours: total_orders * size.cell_count() as u64,
        non_hamiltonian_tours: non_hamiltonian,
        max_failures,
        argmax_ranks,
        failure_histogram: histogram,
    }
}

/// Exact share of orders with no failing start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
}

impl Fraction {
    pub fn as_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn percent(self) -> f64 {
        100.0 * self.as_f64()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} ({:.2}%)",
            self.numerator,
            self.denominator,
            self.percent()
        )
    }
}

pub fn good_order_fraction(summary: &CensusSummary) -> Fraction {
    Fraction {
        numerator: summary.good_orders(),
        denominator: summary.total_orders,
    }
}

/// A rank whose first-tie failures differ from its reversal's last-tie
/// failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryMismatch {
    pub rank: OrderRank,
    pub first: usize,
    pub reversed_last: usize,
}

impl fmt::Display for SymmetryMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank {}: {} failures with first-tie, {} for the reversed order with last-tie",
            self.rank, self.first, self.reversed_last
        )
    }
}

/// Compares each order under first-tie with its reversal under last-tie.
pub fn symmetry_check_ranks(
    ranks: impl IntoIterator<Item = OrderRank>,
    size: BoardSize,
) -> Result<(), SymmetryMismatch> {
    let mut scratch = Scratch::default();
    for rank in ranks {
        let order = unrank(rank);
        let first = TourEngine::new(&order, TieBreakPolicy::FirstEncountered, size);
        let last = TourEngine::new(&reverse(&order), TieBreakPolicy::LastEncountered, size);
        let a = stats_with(&first, rank, &mut scratch).failures;
        let b = stats_with(&last, rank, &mut scratch).failures;
        if a != b {
            return Err(SymmetryMismatch {
                rank,
                first: a,
                reversed_last: b,
            });
        }
    }
    Ok(())
}

/// Full sweep of [`symmetry_check_ranks`] over all 40,320 orders.
pub fn symmetry_check(size: BoardSize) -> bool {
    symmetry_check_ranks(OrderRank::all(), size).is_ok()
}
