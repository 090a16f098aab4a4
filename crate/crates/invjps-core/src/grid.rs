//! Grid cells, compass directions, and the static obstacle map.
//!
//! Axis convention: `x` grows east, `y` grows north. Row 0 of a map file is
//! `y = 0`, so "north" is simply increasing row index; nothing in the
//! algorithms depends on how a renderer would draw that.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

/// A grid coordinate. May be out of bounds; bounds checks live on [`GridMap`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// The neighbouring cell one step along `dir`.
    pub fn step(self, dir: Direction) -> Cell {
        let (dx, dy) = dir.offset();
        Cell::new(self.x + dx, self.y + dy)
    }

    pub fn offset(self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One of the eight compass directions of an 8-connected grid.
///
/// The discriminant order (clockwise from north) is the canonical iteration
/// order everywhere in this crate; search determinism depends on it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
#[repr(u8)]
pub enum Direction {
    North = 0,
    NorthEast = 1,
    East = 2,
    SouthEast = 3,
    South = 4,
    SouthWest = 5,
    West = 6,
    NorthWest = 7,
}

use Direction::*;

impl Direction {
    pub const ALL: [Direction; 8] = [
        North, NorthEast, East, SouthEast, South, SouthWest, West, NorthWest,
    ];

    pub const fn offset(self) -> (i32, i32) {
        match self {
            North => (0, 1),
            NorthEast => (1, 1),
            East => (1, 0),
            SouthEast => (1, -1),
            South => (0, -1),
            SouthWest => (-1, -1),
            West => (-1, 0),
            NorthWest => (-1, 1),
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn is_diagonal(self) -> bool {
        matches!(self, NorthEast | SouthEast | SouthWest | NorthWest)
    }

    /// Unit direction matching an offset, if the offset is one of the eight.
    pub fn from_offset(dx: i32, dy: i32) -> Option<Direction> {
        match (dx, dy) {
            (0, 1) => Some(North),
            (1, 1) => Some(NorthEast),
            (1, 0) => Some(East),
            (1, -1) => Some(SouthEast),
            (0, -1) => Some(South),
            (-1, -1) => Some(SouthWest),
            (-1, 0) => Some(West),
            (-1, 1) => Some(NorthWest),
            _ => None,
        }
    }

    /// For a diagonal, the straight components as (horizontal, vertical).
    pub fn components(self) -> Option<(Direction, Direction)> {
        match self {
            NorthEast => Some((East, North)),
            SouthEast => Some((East, South)),
            SouthWest => Some((West, South)),
            NorthWest => Some((West, North)),
            _ => None,
        }
    }

    /// For a straight direction, the two perpendicular straight directions.
    pub fn perpendicular(self) -> Option<(Direction, Direction)> {
        match self {
            North | South => Some((East, West)),
            East | West => Some((North, South)),
            _ => None,
        }
    }

    pub const fn opposite(self) -> Direction {
        match self {
            North => South,
            NorthEast => SouthWest,
            East => West,
            SouthEast => NorthWest,
            South => North,
            SouthWest => NorthEast,
            West => East,
            NorthWest => SouthEast,
        }
    }

    /// The direction from `a` to `b` when they lie on a shared row, column,
    /// or diagonal, together with how many unit steps apart they are.
    /// `None` for identical or non-co-linear cells.
    pub fn between(a: Cell, b: Cell) -> Option<(Direction, u32)> {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        if dx == 0 && dy == 0 {
            return None;
        }
        let colinear = dx == 0 || dy == 0 || dx.abs() == dy.abs();
        if !colinear {
            return None;
        }
        let steps = dx.abs().max(dy.abs());
        let dir = Direction::from_offset(dx.signum(), dy.signum())?;
        Some((dir, steps as u32))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            North => "N",
            NorthEast => "NE",
            East => "E",
            SouthEast => "SE",
            South => "S",
            SouthWest => "SW",
            West => "W",
            NorthWest => "NW",
        };
        f.write_str(s)
    }
}

/// A small set of directions, iterated in canonical (clockwise-from-north)
/// order regardless of insertion order.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
pub struct DirectionSet(u8);

impl DirectionSet {
    pub const EMPTY: DirectionSet = DirectionSet(0);
    pub const ALL: DirectionSet = DirectionSet(0xff);

    pub fn single(dir: Direction) -> DirectionSet {
        DirectionSet(1 << dir.index())
    }

    pub fn insert(&mut self, dir: Direction) {
        self.0 |= 1 << dir.index();
    }

    pub fn contains(self, dir: Direction) -> bool {
        self.0 & (1 << dir.index()) != 0
    }

    pub fn union(self, other: DirectionSet) -> DirectionSet {
        DirectionSet(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Direction> {
        Direction::ALL.into_iter().filter(move |d| self.contains(*d))
    }
}

impl FromIterator<Direction> for DirectionSet {
    fn from_iter<T: IntoIterator<Item = Direction>>(iter: T) -> Self {
        let mut set = DirectionSet::EMPTY;
        for d in iter {
            set.insert(d);
        }
        set
    }
}

impl fmt::Debug for DirectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A static 8-connected uniform-cost grid with permanently blocked cells.
///
/// Immutable once handed to a search; safe to share between concurrently
/// running searches.
#[derive(Clone, PartialEq, Eq)]
pub struct GridMap {
    width: i32,
    height: i32,
    blocked: Vec<bool>,
}

impl GridMap {
    /// An all-passable map. Panics unless both dimensions are at least 1.
    pub fn open(width: i32, height: i32) -> GridMap {
        assert!(width >= 1 && height >= 1, "grid dimensions must be positive");
        GridMap {
            width,
            height,
            blocked: vec![false; (width as usize) * (height as usize)],
        }
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn in_bounds(&self, cell: Cell) -> bool {
        cell.x >= 0 && cell.x < self.width && cell.y >= 0 && cell.y < self.height
    }

    fn index(&self, cell: Cell) -> usize {
        debug_assert!(self.in_bounds(cell));
        cell.y as usize * self.width as usize + cell.x as usize
    }

    /// Marks a cell blocked or free. Intended for construction; searches
    /// take `&GridMap` and never mutate.
    pub fn set_blocked(&mut self, cell: Cell, blocked: bool) {
        assert!(self.in_bounds(cell), "cell {cell} out of bounds");
        let idx = self.index(cell);
        self.blocked[idx] = blocked;
    }

    /// In bounds and not blocked. Out-of-bounds cells count as blocked.
    pub fn is_passable(&self, cell: Cell) -> bool {
        self.in_bounds(cell) && !self.blocked[self.index(cell)]
    }

    pub fn is_blocked(&self, cell: Cell) -> bool {
        !self.is_passable(cell)
    }

    /// All passable cells in row-major order (y, then x).
    pub fn passable_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height).flat_map(move |y| {
            (0..self.width)
                .map(move |x| Cell::new(x, y))
                .filter(move |c| self.is_passable(*c))
        })
    }

    pub fn cell_count(&self) -> usize {
        self.width as usize * self.height as usize
    }
}

impl fmt::Debug for GridMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GridMap {}x{}", self.width, self.height)?;
        // Print north (large y) on top so debug output reads like a map.
        for y in (0..self.height).rev() {
            for x in 0..self.width {
                let c = if self.is_passable(Cell::new(x, y)) { '.' } else { '@' };
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
