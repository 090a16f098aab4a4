//! A single pathfinding query: map, overlay, start, and goal.

use core::fmt;

use crate::grid::{Cell, GridMap};
use crate::inventory::{InventoryOverlay, OverlayError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemError {
    StartOutOfBounds(Cell),
    GoalOutOfBounds(Cell),
    StartBlocked(Cell),
    GoalBlocked(Cell),
    Overlay(OverlayError),
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemError::StartOutOfBounds(c) => write!(f, "start {c} out of bounds"),
            ProblemError::GoalOutOfBounds(c) => write!(f, "goal {c} out of bounds"),
            ProblemError::StartBlocked(c) => write!(f, "start {c} is blocked"),
            ProblemError::GoalBlocked(c) => write!(f, "goal {c} is blocked"),
            ProblemError::Overlay(e) => write!(f, "invalid overlay: {e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ProblemError {}

impl From<OverlayError> for ProblemError {
    fn from(e: OverlayError) -> Self {
        ProblemError::Overlay(e)
    }
}

/// An inventory-driven pathfinding instance. Construction validates that
/// start and goal are in bounds and unblocked and that the overlay satisfies
/// its structural invariants against the map.
#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub map: GridMap,
    pub overlay: InventoryOverlay,
    pub start: Cell,
    pub goal: Cell,
}

impl ProblemInstance {
    pub fn new(
        map: GridMap,
        overlay: InventoryOverlay,
        start: Cell,
        goal: Cell,
    ) -> Result<ProblemInstance, ProblemError> {
        if !map.in_bounds(start) {
            return Err(ProblemError::StartOutOfBounds(start));
        }
        if !map.in_bounds(goal) {
            return Err(ProblemError::GoalOutOfBounds(goal));
        }
        if map.is_blocked(start) {
            return Err(ProblemError::StartBlocked(start));
        }
        if map.is_blocked(goal) {
            return Err(ProblemError::GoalBlocked(goal));
        }
        overlay.validate(&map)?;
        Ok(ProblemInstance { map, overlay, start, goal })
    }

    /// Same instance without keys and doors.
    pub fn without_overlay(&self) -> ProblemInstance {
        ProblemInstance {
            map: self.map.clone(),
            overlay: InventoryOverlay::new(),
            start: self.start,
            goal: self.goal,
        }
    }
}
