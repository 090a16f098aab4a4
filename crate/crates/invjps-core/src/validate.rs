//! Path validation against the full problem semantics.
//!
//! The verdict lists every violated condition rather than stopping at the
//! first, so tests and the CLI can report precisely what went wrong.

use core::fmt;

use alloc::vec::Vec;

use crate::cost::Cost;
use crate::grid::{Cell, Direction};
use crate::inventory::Inventory;
use crate::problem::ProblemInstance;
use crate::search::Path;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathViolation {
    EmptyPath,
    /// The path does not begin at the instance's start cell.
    StartMismatch { found: Cell },
    /// The path does not end at the instance's goal cell.
    GoalMismatch { found: Cell },
    OutOfBounds { index: usize, cell: Cell },
    /// A path cell is permanently blocked.
    BlockedCell { index: usize, cell: Cell },
    /// Consecutive cells are not 8-adjacent.
    NotAdjacent { index: usize },
    /// A diagonal step passes a non-traversable orthogonal neighbour.
    CornerCut { index: usize },
    /// A cell's unlock requirement is not met by the items collected on the
    /// path prefix before it.
    LockedDoor { index: usize, cell: Cell },
    /// The declared cost does not match the step-by-step recomputation.
    CostMismatch { declared: Cost, computed: Cost },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PathViolation::*;
        match self {
            EmptyPath => write!(f, "path has no cells"),
            StartMismatch { found } => write!(f, "path starts at {found}, not at the start cell"),
            GoalMismatch { found } => write!(f, "path ends at {found}, not at the goal cell"),
            OutOfBounds { index, cell } => write!(f, "cell #{index} {cell} is out of bounds"),
            BlockedCell { index, cell } => write!(f, "cell #{index} {cell} is blocked"),
            NotAdjacent { index } => write!(f, "cells #{index} and #{} are not adjacent", index + 1),
            CornerCut { index } => write!(f, "step #{index} cuts a corner"),
            LockedDoor { index, cell } => {
                write!(f, "cell #{index} {cell} is entered before any opening item is held")
            }
            CostMismatch { declared, computed } => {
                write!(f, "declared cost {declared} but steps sum to {computed}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<PathViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a path against an instance: starts at S, ends at G, consecutive
/// 8-adjacency, no blocked cell, no corner-cutting diagonal, every unlock
/// requirement met by previously collected items (items of the start cell
/// count), and the declared cost matches a recomputation.
pub fn validate_path(problem: &ProblemInstance, path: &Path) -> ValidationReport {
    let mut report = ValidationReport::default();
    let map = &problem.map;
    let overlay = &problem.overlay;
    let cells = &path.cells;

    if cells.is_empty() {
        report.violations.push(PathViolation::EmptyPath);
        return report;
    }
    if cells[0] != problem.start {
        report.violations.push(PathViolation::StartMismatch { found: cells[0] });
    }
    if *cells.last().unwrap() != problem.goal {
        report
            .violations
            .push(PathViolation::GoalMismatch { found: *cells.last().unwrap() });
    }

    // Inventory available when entering cell i: items of all cells before it
    // (the start cell's items are picked up before the first move).
    let mut held = Inventory::EMPTY;
    let mut adjacency_ok = true;
    let mut computed = Cost::ZERO;

    for (i, &cell) in cells.iter().enumerate() {
        if !map.in_bounds(cell) {
            report.violations.push(PathViolation::OutOfBounds { index: i, cell });
            continue;
        }
        if map.is_blocked(cell) {
            report.violations.push(PathViolation::BlockedCell { index: i, cell });
        }
        let req = overlay.required_by(cell);
        let available = if i == 0 { held | overlay.items_at(cell) } else { held };
        if !req.is_empty() && !req.intersects(available) {
            report.violations.push(PathViolation::LockedDoor { index: i, cell });
        }
        held |= overlay.items_at(cell);

        if i + 1 < cells.len() {
            let next = cells[i + 1];
            match Direction::between(cell, next) {
                Some((dir, 1)) => {
                    computed += Cost::step(dir);
                    if let Some((h, v)) = dir.components() {
                        // Orthogonal cells must be traversable under the
                        // inventory held while making this step.
                        let h_ok = passable_under(problem, cell.step(h), held);
                        let v_ok = passable_under(problem, cell.step(v), held);
                        if !h_ok || !v_ok {
                            report.violations.push(PathViolation::CornerCut { index: i });
                        }
                    }
                }
                _ => {
                    report.violations.push(PathViolation::NotAdjacent { index: i });
                    adjacency_ok = false;
                }
            }
        }
    }

    if adjacency_ok && computed != path.cost {
        report
            .violations
            .push(PathViolation::CostMismatch { declared: path.cost, computed });
    }

    report
}

fn passable_under(problem: &ProblemInstance, cell: Cell, inv: Inventory) -> bool {
    crate::moves::is_traversable(&problem.map, &problem.overlay, cell, inv)
}
