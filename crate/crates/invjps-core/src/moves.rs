//! Traversability semantics and neighbour generation.
//!
//! A cell is traversable under an inventory iff it is passable on the map
//! and either has no unlock requirement or the requirement intersects the
//! inventory (any one listed item opens a door). Diagonal moves additionally
//! require both orthogonally adjacent cells to be traversable: corner
//! cutting is disallowed everywhere.

use alloc::vec::Vec;

use crate::grid::{Cell, Direction, GridMap};
use crate::inventory::{Inventory, InventoryOverlay};

/// Whether `cell` can be occupied while holding `inv`. Out-of-bounds cells
/// are treated as blocked.
pub fn is_traversable(map: &GridMap, overlay: &InventoryOverlay, cell: Cell, inv: Inventory) -> bool {
    if !map.is_passable(cell) {
        return false;
    }
    let req = overlay.required_by(cell);
    req.is_empty() || req.intersects(inv)
}

/// Whether a single step from `from` along `dir` is legal under `inv`:
/// the target must be traversable, and a diagonal step also needs both
/// orthogonal cells traversable.
pub fn step_allowed(
    map: &GridMap,
    overlay: &InventoryOverlay,
    from: Cell,
    dir: Direction,
    inv: Inventory,
) -> bool {
    if !is_traversable(map, overlay, from.step(dir), inv) {
        return false;
    }
    if let Some((h, v)) = dir.components() {
        is_traversable(map, overlay, from.step(h), inv)
            && is_traversable(map, overlay, from.step(v), inv)
    } else {
        true
    }
}

/// All legal unit moves out of `cell` under `inv`, in canonical direction
/// order. At most 8 entries; never a blocked or locked target, never a
/// corner-cutting diagonal.
pub fn legal_moves(
    map: &GridMap,
    overlay: &InventoryOverlay,
    cell: Cell,
    inv: Inventory,
) -> Vec<(Direction, Cell)> {
    let mut moves = Vec::with_capacity(8);
    for dir in Direction::ALL {
        if step_allowed(map, overlay, cell, dir, inv) {
            moves.push((dir, cell.step(dir)));
        }
    }
    moves
}
