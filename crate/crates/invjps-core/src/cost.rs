//! Exact octile path costs.
//!
//! A path cost is a pair (straight steps, diagonal steps) with numeric value
//! `s + d·√2`. Because √2 is irrational, two costs are numerically equal iff
//! the pairs are equal, and ordering can be decided exactly in integers, so
//! no floating point ever enters an optimality comparison.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::grid::{Cell, Direction};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Cost {
    pub straights: u64,
    pub diagonals: u64,
}

impl Cost {
    pub const ZERO: Cost = Cost { straights: 0, diagonals: 0 };
    pub const STRAIGHT: Cost = Cost { straights: 1, diagonals: 0 };
    pub const DIAGONAL: Cost = Cost { straights: 0, diagonals: 1 };

    pub const fn new(straights: u64, diagonals: u64) -> Cost {
        Cost { straights, diagonals }
    }

    /// Cost of one unit step along `dir`.
    pub fn step(dir: Direction) -> Cost {
        if dir.is_diagonal() {
            Cost::DIAGONAL
        } else {
            Cost::STRAIGHT
        }
    }

    /// Cost of `steps` unit steps along `dir`.
    pub fn steps(dir: Direction, steps: u32) -> Cost {
        if dir.is_diagonal() {
            Cost::new(0, steps as u64)
        } else {
            Cost::new(steps as u64, 0)
        }
    }

    /// Numeric value as a double. For reporting only; never used to compare.
    pub fn value(self) -> f64 {
        self.straights as f64 + self.diagonals as f64 * core::f64::consts::SQRT_2
    }
}

impl Ord for Cost {
    /// Exact comparison of `s₁ + d₁√2` against `s₂ + d₂√2`.
    ///
    /// Rearranged as `a` vs `b√2` with `a = s₁−s₂`, `b = d₂−d₁`, decided by
    /// sign analysis plus an integer comparison of `a²` against `2b²`.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.straights as i128 - other.straights as i128;
        let b = other.diagonals as i128 - self.diagonals as i128;
        match b.cmp(&0) {
            Ordering::Equal => a.cmp(&0),
            Ordering::Greater => {
                if a <= 0 {
                    Ordering::Less
                } else {
                    (a * a).cmp(&(2 * b * b))
                }
            }
            Ordering::Less => {
                if a >= 0 {
                    Ordering::Greater
                } else {
                    // Both sides negative: a < b√2  ⇔  a² > 2b².
                    (2 * b * b).cmp(&(a * a))
                }
            }
        }
    }
}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost::new(self.straights + rhs.straights, self.diagonals + rhs.diagonals)
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        self.straights += rhs.straights;
        self.diagonals += rhs.diagonals;
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cost({} + {}√2)", self.straights, self.diagonals)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}√2 (= {:.6})", self.straights, self.diagonals, self.value())
    }
}

/// Octile distance between two cells: the exact shortest-path cost on an
/// obstacle-free 8-connected grid. Admissible and consistent as a heuristic
/// for every search in this crate; it ignores inventory, which only ever
/// underestimates.
pub fn octile(a: Cell, b: Cell) -> Cost {
    let dx = (a.x - b.x).unsigned_abs() as u64;
    let dy = (a.y - b.y).unsigned_abs() as u64;
    Cost::new(dx.max(dy) - dx.min(dy), dx.min(dy))
}
