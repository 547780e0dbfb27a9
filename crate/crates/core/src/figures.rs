//! Published reference data for the standard 8x8 board.

/// Closed tour from (0,0) under the base order with first-tie.
pub const CLOSED_TOUR_FROM_CORNER: [[u32; 8]; 8] = [
    [1, 4, 61, 20, 41, 6, 43, 22],
    [34, 19, 2, 5, 60, 21, 40, 7],
    [3, 64, 35, 62, 37, 42, 23, 44],
    [18, 33, 48, 57, 46, 59, 8, 39],
    [49, 14, 63, 36, 55, 38, 45, 24],
    [32, 17, 56, 47, 58, 27, 54, 9],
    [13, 50, 15, 30, 11, 52, 25, 28],
    [16, 31, 12, 51, 26, 29, 10, 53],
];

/// Tour from (1,3) under the base order with first-tie; halts after 60
/// squares at (5,0), leaving four squares unvisited.
pub const HALTED_TOUR_FROM_1_3: [[u32; 8]; 8] = [
    [0, 2, 19, 24, 35, 28, 17, 26],
    [20, 23, 0, 1, 18, 25, 34, 29],
    [3, 0, 21, 36, 45, 32, 27, 16],
    [22, 55, 46, 0, 42, 37, 30, 33],
    [47, 4, 59, 54, 31, 44, 15, 38],
    [60, 53, 56, 43, 50, 41, 12, 9],
    [5, 48, 51, 58, 7, 10, 39, 14],
    [52, 57, 6, 49, 40, 13, 8, 11],
];

/// An order with 9 failing starts under first-tie, the maximum over all orders.
pub const NINE_FAILURE_ORDER: &str = "<1,2> <1,-2> <-2,-1> <2,-1> <-2,1> <-1,-2> <-1,2> <2,1>";

/// An order with no failing start under first-tie.
pub const ZERO_FAILURE_ORDER: &str = "<1,2> <2,1> <1,-2> <-1,2> <-2,-1> <2,-1> <-1,-2> <-2,1>";

pub const TOTAL_ORDERS: u64 = 40_320;
pub const BAD_ORDERS: u64 = 32_944;
pub const TOTAL_TOURS: u64 = 2_580_480;
pub const NON_HAMILTONIAN_TOURS: u64 = 78_832;
pub const MAX_FAILURES: usize = 9;

pub fn to_rows(grid: &[[u32; 8]; 8]) -> Vec<Vec<u32>> {
    grid.iter().map(|r| r.to_vec()).collect()
}
