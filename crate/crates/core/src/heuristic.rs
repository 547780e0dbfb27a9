//! Warnsdorff's rule: always step to the unvisited neighbor with the fewest
//! unvisited onward exits.
//!
//! Candidates are enumerated in a [`MoveOrder`]; when several share the
//! minimal look-ahead degree the [`TieBreakPolicy`] picks the first or the
//! last of them in that enumeration. Warnsdorff himself left ties arbitrary;
//! only these two positional policies are provided. Look-ahead is a single
//! ply. A tour stops when the current square has no unvisited neighbor, and
//! a degree-0 candidate is a legal (and on the final step, the only) move.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::board::{degree, neighbors, BoardSize, NeighborTable, Square, VisitedSet};
use crate::error::{Error, Result};
use crate::permutations::MoveOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreakPolicy {
    /// Keep the earliest minimal candidate in enumeration order.
    #[default]
    FirstEncountered,
    /// Keep the latest minimal candidate in enumeration order.
    LastEncountered,
}

impl TieBreakPolicy {
    pub const ALL: [TieBreakPolicy; 2] = [
        TieBreakPolicy::FirstEncountered,
        TieBreakPolicy::LastEncountered,
    ];

    /// The policy that, run on the reversed order, retraces this one.
    pub fn dual(self) -> Self {
        match self {
            TieBreakPolicy::FirstEncountered => TieBreakPolicy::LastEncountered,
            TieBreakPolicy::LastEncountered => TieBreakPolicy::FirstEncountered,
        }
    }

    #[inline]
    fn prefers(self, candidate: usize, best: usize) -> bool {
        match self {
            TieBreakPolicy::FirstEncountered => candidate < best,
            TieBreakPolicy::LastEncountered => candidate <= best,
        }
    }
}

impl fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            TieBreakPolicy::FirstEncountered => "first",
            TieBreakPolicy::LastEncountered => "last",
        })
    }
}

impl FromStr for TieBreakPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "first" => Ok(TieBreakPolicy::FirstEncountered),
            "last" => Ok(TieBreakPolicy::LastEncountered),
            _ => Err(format!(
                "unknown tie-break policy {s:?}, expected first|last"
            )),
        }
    }
}

/// One heuristic run and its classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tour {
    pub start: Square,
    pub order: MoveOrder,
    pub policy: TieBreakPolicy,
    pub size: BoardSize,
    pub path: Vec<Square>,
    pub length: usize,
    pub hamiltonian: bool,
    pub closed: bool,
}

impl Tour {
    pub fn last(&self) -> Square {
        *self.path.last().expect("a tour always contains its start")
    }

    pub fn class(&self) -> TourClass {
        TourClass {
            length: self.length,
            hamiltonian: self.hamiltonian,
            closed: self.closed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TourClass {
    pub length: usize,
    pub hamiltonian: bool,
    pub closed: bool,
}

/// Picks the next square from `current`, or `None` when every neighbor is
/// already visited.
pub fn next_move(
    current: Square,
    visited: &VisitedSet,
    order: &MoveOrder,
    policy: TieBreakPolicy,
    size: BoardSize,
) -> Option<Square> {
    let mut best: Option<(Square, usize)> = None;
    for cand in neighbors(current, order, size) {
        if visited.contains(cand) {
            continue;
        }
        let d = degree(cand, visited, size);
        match best {
            Some((_, bd)) if !policy.prefers(d, bd) => {}
            _ => best = Some((cand, d)),
        }
    }
    best.map(|(sq, _)| sq)
}

pub fn run_tour(start: Square, order: &MoveOrder, policy: TieBreakPolicy, size: BoardSize) -> Tour {
    let mut visited = VisitedSet::new(size);
    visited.insert(start);
    let mut path = vec![start];
    let mut current = start;
    while let Some(next) = next_move(current, &visited, order, policy, size) {
        visited.insert(next);
        path.push(next);
        current = next;
    }
    build_tour(start, *order, policy, size, path)
}

fn build_tour(
    start: Square,
    order: MoveOrder,
    policy: TieBreakPolicy,
    size: BoardSize,
    path: Vec<Square>,
) -> Tour {
    let length = path.len();
    let hamiltonian = length == size.cell_count();
    let closed = hamiltonian && path[length - 1].is_knight_move_to(start);
    Tour {
        start,
        order,
        policy,
        size,
        path,
        length,
        hamiltonian,
        closed,
    }
}

/// Re-derives a tour's classification from its path alone.
pub fn classify(tour: &Tour) -> Result<TourClass> {
    classify_path(&tour.path, tour.size)
}

/// Validates `path` as a knight path on `size` and classifies it.
///
/// Fails on the first index that is off the board, repeats an earlier square,
/// or is not one knight move from its predecessor.
pub fn classify_path(path: &[Square], size: BoardSize) -> Result<TourClass> {
    if path.is_empty() {
        return Err(Error::MalformedPath {
            index: 0,
            reason: "empty path",
        });
    }
    let mut seen = VisitedSet::new(size);
    for (i, &sq) in path.iter().enumerate() {
        let malformed = |reason| Error::MalformedPath { index: i, reason };
        if size.check(sq).is_err() {
            return Err(malformed("square off the board"));
        }
        if !seen.insert(sq) {
            return Err(malformed("square visited twice"));
        }
        if i > 0 && !path[i - 1].is_knight_move_to(sq) {
            return Err(malformed("not a knight move from the previous square"));
        }
    }
    let length = path.len();
    let hamiltonian = length == size.cell_count();
    Ok(TourClass {
        length,
        hamiltonian,
        closed: hamiltonian && path[length - 1].is_knight_move_to(path[0]),
    })
}

/// Reusable buffers for [`TourEngine`].
#[derive(Debug, Clone, Default)]
pub struct Scratch {
    visited: Vec<bool>,
    degrees: Vec<u8>,
}

/// Table-driven Warnsdorff runner for one fixed order, policy and board.
///
/// Keeps every square's unvisited-neighbor count up to date as squares are
/// visited, so a step costs one pass over the current square's neighbors.
/// Produces the same paths as [`run_tour`].
#[derive(Debug, Clone)]
pub struct TourEngine {
    table: NeighborTable,
    policy: TieBreakPolicy,
    initial: Vec<u8>,
}

impl TourEngine {
    pub fn new(order: &MoveOrder, policy: TieBreakPolicy, size: BoardSize) -> Self {
        let table = NeighborTable::new(order, size);
        let initial = table.initial_degrees();
        TourEngine {
            table,
            policy,
            initial,
        }
    }

    pub fn size(&self) -> BoardSize {
        self.table.size()
    }

    /// Runs from the square with row-major index `start`, calling `on_visit`
    /// with each visited index in order. Returns the tour length.
    pub fn walk(
        &self,
        start: usize,
        scratch: &mut Scratch,
        mut on_visit: impl FnMut(usize),
    ) -> usize {
        let Scratch { visited, degrees } = scratch;
        visited.clear();
        visited.resize(self.initial.len(), false);
        degrees.clear();
        degrees.extend_from_slice(&self.initial);

        let mut current = start;
        let mut length = 0;
        loop {
            visited[current] = true;
            length += 1;
            on_visit(current);
            for &t in self.table.of(current) {
                degrees[t as usize] -= 1;
            }

            let mut best = usize::MAX;
            let mut best_degree = usize::MAX;
            for &t in self.table.of(current) {
                let t = t as usize;
                if visited[t] {
                    continue;
                }
                let d = degrees[t] as usize;
                if best == usize::MAX || self.policy.prefers(d, best_degree) {
                    best = t;
                    best_degree = d;
                }
            }
            if best == usize::MAX {
                return length;
            }
            current = best;
        }
    }

    pub fn tour_length(&self, start: usize, scratch: &mut Scratch) -> usize {
        self.walk(start, scratch, |_| {})
    }

    pub fn path(&self, start: Square, scratch: &mut Scratch) -> Vec<Square> {
        let size = self.size();
        let mut path = Vec::with_capacity(size.cell_count());
        self.walk(size.index_of(start), scratch, |i| {
            path.push(size.square_at(i))
        });
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::{base_order, unrank, OrderRank};

    fn sq(r: i32, c: i32) -> Square {
        Square::new(r, c)
    }

    const N8: BoardSize = BoardSize::STANDARD;

    #[test]
    fn first_move_from_corner() {
        let visited = VisitedSet::from_squares(N8, [sq(0, 0)]);
        let order = base_order();
        // Both candidates tie.
        assert_eq!(degree(sq(1, 2), &visited, N8), 5);
        assert_eq!(degree(sq(2, 1), &visited, N8), 5);
        assert_eq!(
            next_move(
                sq(0, 0),
                &visited,
                &order,
                TieBreakPolicy::FirstEncountered,
                N8
            ),
            Some(sq(1, 2))
        );
        assert_eq!(
            next_move(
                sq(0, 0),
                &visited,
                &order,
                TieBreakPolicy::LastEncountered,
                N8
            ),
            Some(sq(2, 1))
        );
    }

    #[test]
    fn no_move_when_exits_visited() {
        let visited = VisitedSet::from_squares(N8, [sq(0, 0), sq(1, 2), sq(2, 1)]);
        for policy in TieBreakPolicy::ALL {
            assert_eq!(
                next_move(sq(0, 0), &visited, &base_order(), policy, N8),
                None
            );
        }
    }

    #[test]
    fn zero_degree_candidate_is_taken() {
        // On 3x3 the center is isolated; from (0,0) the cycle of the 8 outer
        // squares is walked and the last step lands on a degree-0 square.
        let n3 = BoardSize::new(3).unwrap();
        let t = run_tour(
            sq(0, 0),
            &base_order(),
            TieBreakPolicy::FirstEncountered,
            n3,
        );
        assert_eq!(t.length, 8);
        assert!(!t.hamiltonian);
    }

    #[test]
    fn single_square_board() {
        let n1 = BoardSize::new(1).unwrap();
        for policy in TieBreakPolicy::ALL {
            let t = run_tour(sq(0, 0), &unrank(OrderRank::new(77).unwrap()), policy, n1);
            assert_eq!(
                t.class(),
                TourClass {
                    length: 1,
                    hamiltonian: true,
                    closed: false
                }
            );
        }
    }

    #[test]
    fn classify_single_square_on_standard_board() {
        let c = classify_path(&[sq(4, 4)], N8).unwrap();
        assert_eq!(
            c,
            TourClass {
                length: 1,
                hamiltonian: false,
                closed: false
            }
        );
    }

    #[test]
    fn classify_rejects_malformed_paths() {
        assert_eq!(
            classify_path(&[sq(0, 0), sq(1, 2), sq(0, 0)], N8),
            Err(Error::MalformedPath {
                index: 2,
                reason: "square visited twice"
            })
        );
        assert!(matches!(
            classify_path(&[sq(0, 0), sq(1, 1)], N8),
            Err(Error::MalformedPath { index: 1, .. })
        ));
        assert!(matches!(
            classify_path(&[sq(0, 0), sq(-1, 2)], N8),
            Err(Error::MalformedPath { index: 1, .. })
        ));
        assert!(classify_path(&[], N8).is_err());
    }

    #[test]
    fn classify_agrees_with_run() {
        for r in [0u64, 1, 999, 20000, 40319] {
            let order = unrank(OrderRank::new(r).unwrap());
            for start in [sq(0, 0), sq(1, 3), sq(4, 5)] {
                let t = run_tour(start, &order, TieBreakPolicy::FirstEncountered, N8);
                assert_eq!(classify(&t).unwrap(), t.class());
            }
        }
    }

    #[test]
    fn engine_matches_reference() {
        let mut scratch = Scratch::default();
        for n in [1, 3, 5, 6, 8] {
            let size = BoardSize::new(n).unwrap();
            for r in [0u64, 5, 4321, 31000, 40319] {
                let order = unrank(OrderRank::new(r).unwrap());
                for policy in TieBreakPolicy::ALL {
                    let engine = TourEngine::new(&order, policy, size);
                    for start in size.squares() {
                        let reference = run_tour(start, &order, policy, size);
                        assert_eq!(engine.path(start, &mut scratch), reference.path);
                    }
                }
            }
        }
    }

    #[test]
    fn policy_text() {
        assert_eq!(
            "first".parse::<TieBreakPolicy>().unwrap(),
            TieBreakPolicy::FirstEncountered
        );
        assert_eq!(TieBreakPolicy::LastEncountered.to_string(), "last");
        assert!("random".parse::<TieBreakPolicy>().is_err());
    }
}
