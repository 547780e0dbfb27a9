//! Board geometry and the knight-move graph.
//!
//! Squares are zero-indexed `(row, col)` pairs. A [`MoveDelta`] `<dx,dy>`
//! shifts the row by `dx` and the column by `dy`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutations::MoveOrder;

/// A zero-indexed `(row, col)` coordinate.
///
/// Coordinates are signed so that `square + delta` can step off the board
/// and be rejected by [`on_board`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub row: i32,
    pub col: i32,
}

impl Square {
    pub const fn new(row: i32, col: i32) -> Self {
        Square { row, col }
    }

    pub fn offset(self, delta: MoveDelta) -> Square {
        Square::new(self.row + delta.dx(), self.col + delta.dy())
    }

    /// True when `other` is exactly one knight move away.
    pub fn is_knight_move_to(self, other: Square) -> bool {
        let dr = (self.row - other.row).abs();
        let dc = (self.col - other.col).abs();
        (dr == 1 && dc == 2) || (dr == 2 && dc == 1)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Square {
    type Err = Error;

    /// Parses `"row,col"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseSquare(s.to_string());
        let (r, c) = s.split_once(',').ok_or_else(bad)?;
        let row = r.trim().parse().map_err(|_| bad())?;
        let col = c.trim().parse().map_err(|_| bad())?;
        Ok(Square::new(row, col))
    }
}

/// One knight step `<dx,dy>` with `{|dx|, |dy|} = {1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveDelta {
    dx: i8,
    dy: i8,
}

impl MoveDelta {
    pub fn new(dx: i32, dy: i32) -> Result<Self> {
        let (a, b) = (dx.abs(), dy.abs());
        if (a == 1 && b == 2) || (a == 2 && b == 1) {
            Ok(MoveDelta {
                dx: dx as i8,
                dy: dy as i8,
            })
        } else {
            Err(Error::InvalidDelta { dx, dy })
        }
    }

    const fn raw(dx: i8, dy: i8) -> Self {
        MoveDelta { dx, dy }
    }

    pub fn dx(self) -> i32 {
        self.dx as i32
    }

    pub fn dy(self) -> i32 {
        self.dy as i32
    }

    /// Position of this delta in [`KNIGHT_DELTAS`].
    pub fn base_index(self) -> usize {
        KNIGHT_DELTAS
            .iter()
            .position(|&d| d == self)
            .expect("MoveDelta is always a knight delta")
    }
}

impl fmt::Display for MoveDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.dx, self.dy)
    }
}

/// The eight knight deltas in the reference presentation order.
pub const KNIGHT_DELTAS: [MoveDelta; 8] = [
    MoveDelta::raw(1, 2),
    MoveDelta::raw(2, 1),
    MoveDelta::raw(1, -2),
    MoveDelta::raw(2, -1),
    MoveDelta::raw(-1, 2),
    MoveDelta::raw(-2, 1),
    MoveDelta::raw(-1, -2),
    MoveDelta::raw(-2, -1),
];

/// Side length of a square board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct BoardSize(usize);

impl BoardSize {
    pub const STANDARD: BoardSize = BoardSize(8);

    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidBoardSize(n))
        } else {
            Ok(BoardSize(n))
        }
    }

    pub fn side(self) -> usize {
        self.0
    }

    pub fn cell_count(self) -> usize {
        self.0 * self.0
    }

    /// Row-major index of an on-board square.
    pub fn index_of(self, sq: Square) -> usize {
        debug_assert!(on_board(sq, self));
        sq.row as usize * self.0 + sq.col as usize
    }

    pub fn square_at(self, index: usize) -> Square {
        Square::new((index / self.0) as i32, (index % self.0) as i32)
    }

    /// All squares in row-major order.
    pub fn squares(self) -> impl Iterator<Item = Square> {
        (0..self.cell_count()).map(move |i| self.square_at(i))
    }

    pub fn check(self, sq: Square) -> Result<Square> {
        if on_board(sq, self) {
            Ok(sq)
        } else {
            Err(Error::OffBoard {
                row: sq.row,
                col: sq.col,
                size: self.0,
            })
        }
    }
}

impl Default for BoardSize {
    fn default() -> Self {
        BoardSize::STANDARD
    }
}

impl TryFrom<usize> for BoardSize {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        BoardSize::new(n)
    }
}

impl From<BoardSize> for usize {
    fn from(size: BoardSize) -> usize {
        size.0
    }
}

impl fmt::Display for BoardSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Membership flags for the squares of one board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisitedSet {
    size: BoardSize,
    flags: Vec<bool>,
    count: usize,
}

impl VisitedSet {
    pub fn new(size: BoardSize) -> Self {
        VisitedSet {
            size,
            flags: vec![false; size.cell_count()],
            count: 0,
        }
    }

    pub fn from_squares(size: BoardSize, squares: impl IntoIterator<Item = Square>) -> Self {
        let mut set = VisitedSet::new(size);
        for sq in squares {
            set.insert(sq);
        }
        set
    }

    /// Returns `false` if the square was already present.
    pub fn insert(&mut self, sq: Square) -> bool {
        let i = self.size.index_of(sq);
        if self.flags[i] {
            return false;
        }
        self.flags[i] = true;
        self.count += 1;
        true
    }

    pub fn contains(&self, sq: Square) -> bool {
        on_board(sq, self.size) && self.flags[self.size.index_of(sq)]
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn size(&self) -> BoardSize {
        self.size
    }
}

pub fn on_board(sq: Square, size: BoardSize) -> bool {
    let n = size.side() as i32;
    (0..n).contains(&sq.row) && (0..n).contains(&sq.col)
}

/// On-board knight neighbors of `sq`, enumerated in `order`.
pub fn neighbors(sq: Square, order: &MoveOrder, size: BoardSize) -> Vec<Square> {
    order
        .deltas()
        .iter()
        .map(|&d| sq.offset(d))
        .filter(|&t| on_board(t, size))
        .collect()
}

/// Look-ahead degree: the number of unvisited knight neighbors of `sq`.
pub fn degree(sq: Square, visited: &VisitedSet, size: BoardSize) -> usize {
    KNIGHT_DELTAS
        .iter()
        .map(|&d| sq.offset(d))
        .filter(|&t| on_board(t, size) && !visited.contains(t))
        .count()
}

/// Square-indexed knight adjacency, each list in a fixed move order.
///
/// Equivalent to calling [`neighbors`] for every square, stored flat for the
/// census inner loop.
#[derive(Debug, Clone)]
pub struct NeighborTable {
    size: BoardSize,
    targets: Vec<[u16; 8]>,
    lens: Vec<u8>,
}

impl NeighborTable {
    pub fn new(order: &MoveOrder, size: BoardSize) -> Self {
        let cells = size.cell_count();
        let mut targets = vec![[0u16; 8]; cells];
        let mut lens = vec![0u8; cells];
        for (i, sq) in size.squares().enumerate() {
            for t in neighbors(sq, order, size) {
                targets[i][lens[i] as usize] = size.index_of(t) as u16;
                lens[i] += 1;
            }
        }
        NeighborTable {
            size,
            targets,
            lens,
        }
    }

    pub fn size(&self) -> BoardSize {
        self.size
    }

    #[inline]
    pub fn of(&self, index: usize) -> &[u16] {
        &self.targets[index][..self.lens[index] as usize]
    }

    /// Unvisited-neighbor count of every square on an empty board.
    pub fn initial_degrees(&self) -> Vec<u8> {
        self.lens.clone()
    }
}
