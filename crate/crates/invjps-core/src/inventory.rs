//! Item identifiers, inventories, and the per-cell key/door overlay.

use core::fmt;
use core::ops::{BitOr, BitOrAssign};

use alloc::vec::Vec;

use crate::collections::HashMap;
use crate::grid::{Cell, GridMap};

/// Maximum number of distinct item ids an overlay may use.
pub const MAX_ITEM_IDS: u16 = 128;

/// A dense, 0-based item identifier.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ItemId(u8);

impl ItemId {
    /// `None` if `id` is not below [`MAX_ITEM_IDS`].
    pub fn new(id: u16) -> Option<ItemId> {
        if id < MAX_ITEM_IDS {
            Some(ItemId(id as u8))
        } else {
            None
        }
    }

    pub fn get(self) -> u16 {
        self.0 as u16
    }
}

impl fmt::Debug for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "item{}", self.0)
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of held items, as a 128-bit fixed-width bitset.
///
/// Adding a present id is a no-op; two inventories are equal iff they hold
/// exactly the same ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Inventory(u128);

impl Inventory {
    pub const EMPTY: Inventory = Inventory(0);

    pub fn single(id: ItemId) -> Inventory {
        Inventory(1u128 << id.0)
    }

    pub fn insert(&mut self, id: ItemId) {
        self.0 |= 1u128 << id.0;
    }

    pub fn contains(self, id: ItemId) -> bool {
        self.0 & (1u128 << id.0) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// True when the two sets share at least one id.
    pub fn intersects(self, other: Inventory) -> bool {
        self.0 & other.0 != 0
    }

    /// True when every id in `self` is also in `other`.
    pub fn is_subset(self, other: Inventory) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = ItemId> {
        (0..MAX_ITEM_IDS as u8).filter_map(move |i| {
            if self.0 & (1u128 << i) != 0 {
                Some(ItemId(i))
            } else {
                None
            }
        })
    }
}

impl BitOr for Inventory {
    type Output = Inventory;
    fn bitor(self, rhs: Inventory) -> Inventory {
        Inventory(self.0 | rhs.0)
    }
}

impl BitOrAssign for Inventory {
    fn bitor_assign(&mut self, rhs: Inventory) {
        self.0 |= rhs.0;
    }
}

impl FromIterator<ItemId> for Inventory {
    fn from_iter<T: IntoIterator<Item = ItemId>>(iter: T) -> Self {
        let mut inv = Inventory::EMPTY;
        for id in iter {
            inv.insert(id);
        }
        inv
    }
}

impl fmt::Debug for Inventory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OverlayError {
    /// A cell already has a requirement; requirements are not mergeable.
    DuplicateDoor(Cell),
    /// A door with an empty requirement set would be an ordinary cell.
    EmptyRequirement(Cell),
    KeyOutOfBounds(Cell),
    DoorOutOfBounds(Cell),
    KeyOnBlockedCell(Cell),
    DoorOnBlockedCell(Cell),
    /// Doors must not hold items.
    DoorOnKeyCell(Cell),
}

impl fmt::Display for OverlayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OverlayError::DuplicateDoor(c) => write!(f, "duplicate door entry for cell {c}"),
            OverlayError::EmptyRequirement(c) => write!(f, "door at {c} has an empty requirement"),
            OverlayError::KeyOutOfBounds(c) => write!(f, "key cell {c} is out of bounds"),
            OverlayError::DoorOutOfBounds(c) => write!(f, "door cell {c} is out of bounds"),
            OverlayError::KeyOnBlockedCell(c) => write!(f, "key placed on blocked cell {c}"),
            OverlayError::DoorOnBlockedCell(c) => write!(f, "door placed on blocked cell {c}"),
            OverlayError::DoorOnKeyCell(c) => write!(f, "cell {c} is both a door and a key cell"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OverlayError {}

/// Per-cell item placements and unlock requirements layered over a map.
///
/// Cells absent from both tables have no items and no requirement. Immutable
/// once handed to a search.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct InventoryOverlay {
    items_at: HashMap<Cell, Inventory>,
    required_by: HashMap<Cell, Inventory>,
}

impl InventoryOverlay {
    pub fn new() -> InventoryOverlay {
        InventoryOverlay::default()
    }

    /// Places an item at a cell. Multiple items per cell accumulate.
    pub fn add_item(&mut self, cell: Cell, id: ItemId) {
        self.items_at.entry(cell).or_default().insert(id);
    }

    /// Declares a door: the cell is traversable only while holding at least
    /// one of `required`. At most one requirement per cell.
    pub fn set_requirement(&mut self, cell: Cell, required: Inventory) -> Result<(), OverlayError> {
        if required.is_empty() {
            return Err(OverlayError::EmptyRequirement(cell));
        }
        if self.required_by.contains_key(&cell) {
            return Err(OverlayError::DuplicateDoor(cell));
        }
        self.required_by.insert(cell, required);
        Ok(())
    }

    /// Items present at a cell (the empty inventory for most cells).
    pub fn items_at(&self, cell: Cell) -> Inventory {
        self.items_at.get(&cell).copied().unwrap_or(Inventory::EMPTY)
    }

    /// Unlock requirement of a cell (empty means unconditioned).
    pub fn required_by(&self, cell: Cell) -> Inventory {
        self.required_by.get(&cell).copied().unwrap_or(Inventory::EMPTY)
    }

    pub fn has_new_items(&self, cell: Cell, inv: Inventory) -> bool {
        !self.items_at(cell).is_subset(inv)
    }

    pub fn is_empty(&self) -> bool {
        self.items_at.is_empty() && self.required_by.is_empty()
    }

    pub fn key_cell_count(&self) -> usize {
        self.items_at.len()
    }

    pub fn door_cell_count(&self) -> usize {
        self.required_by.len()
    }

    /// Key cells with their items, sorted by (y, x) for stable output.
    pub fn key_cells(&self) -> Vec<(Cell, Inventory)> {
        let mut v: Vec<_> = self.items_at.iter().map(|(c, i)| (*c, *i)).collect();
        v.sort_by_key(|(c, _)| (c.y, c.x));
        v
    }

    /// Door cells with their requirements, sorted by (y, x).
    pub fn door_cells(&self) -> Vec<(Cell, Inventory)> {
        let mut v: Vec<_> = self.required_by.iter().map(|(c, i)| (*c, *i)).collect();
        v.sort_by_key(|(c, _)| (c.y, c.x));
        v
    }

    /// Union of all placed item ids.
    pub fn all_items(&self) -> Inventory {
        self.items_at
            .values()
            .fold(Inventory::EMPTY, |acc, inv| acc | *inv)
    }

    /// Checks the structural invariants against a companion map: keys and
    /// doors in bounds and on passable cells, and no door doubling as a key
    /// cell.
    pub fn validate(&self, map: &GridMap) -> Result<(), OverlayError> {
        for (cell, _) in self.key_cells() {
            if !map.in_bounds(cell) {
                return Err(OverlayError::KeyOutOfBounds(cell));
            }
            if map.is_blocked(cell) {
                return Err(OverlayError::KeyOnBlockedCell(cell));
            }
        }
        for (cell, _) in self.door_cells() {
            if !map.in_bounds(cell) {
                return Err(OverlayError::DoorOutOfBounds(cell));
            }
            if map.is_blocked(cell) {
                return Err(OverlayError::DoorOnBlockedCell(cell));
            }
            if !self.items_at(cell).is_empty() {
                return Err(OverlayError::DoorOnKeyCell(cell));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for InventoryOverlay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InventoryOverlay {{ keys: {:?}, doors: {:?} }}",
            self.key_cells(),
            self.door_cells()
        )
    }
}
