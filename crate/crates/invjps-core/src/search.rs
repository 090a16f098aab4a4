//! Shared search machinery: states, paths, statistics, open-list events,
//! and run configuration.

use core::cmp::Ordering;
use core::fmt;
use core::time::Duration;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cost::Cost;
use crate::grid::{Cell, Direction};
use crate::inventory::{Inventory, InventoryOverlay};

/// A node of the inventory-conditioned search space: where the agent is and
/// what it holds. The inventory always includes the items of the occupied
/// cell; items are absorbed on arrival.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchState {
    pub cell: Cell,
    pub inv: Inventory,
}

impl SearchState {
    pub fn new(cell: Cell, inv: Inventory) -> SearchState {
        SearchState { cell, inv }
    }
}

impl fmt::Debug for SearchState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.cell, self.inv)
    }
}

/// A full cell-by-cell path with its exact cost and the inventory held at
/// each step (prefix unions of the items seen so far, start included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub cells: Vec<Cell>,
    pub cost: Cost,
    pub inventory_trace: Vec<Inventory>,
}

impl Path {
    /// Builds a path from a consecutive cell sequence, recomputing cost and
    /// inventory trace. Panics if consecutive cells are not 8-adjacent.
    pub fn from_cells(overlay: &InventoryOverlay, cells: Vec<Cell>) -> Path {
        assert!(!cells.is_empty(), "a path has at least its start cell");
        let mut cost = Cost::ZERO;
        for pair in cells.windows(2) {
            let (dir, steps) = Direction::between(pair[0], pair[1])
                .expect("consecutive path cells must be distinct and co-linear");
            assert_eq!(steps, 1, "consecutive path cells must be adjacent");
            cost += Cost::step(dir);
        }
        let mut trace = Vec::with_capacity(cells.len());
        let mut inv = Inventory::EMPTY;
        for &cell in &cells {
            inv |= overlay.items_at(cell);
            trace.push(inv);
        }
        Path { cells, cost, inventory_trace: trace }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Inventory held after the final step.
    pub fn final_inventory(&self) -> Inventory {
        self.inventory_trace.last().copied().unwrap_or(Inventory::EMPTY)
    }
}

/// Machine-independent effort counters plus wall-clock time for one search.
///
/// `expanded` counts nodes taken from the open list and expanded, `generated`
/// counts open-list insertions, and `scan_steps` counts cells touched during
/// jump scans (zero for the A* family). `elapsed` is only measured when the
/// `std` feature is enabled and is excluded from determinism comparisons.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub expanded: u64,
    pub generated: u64,
    pub scan_steps: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    /// Equality with `elapsed` ignored.
    pub fn same_counters(&self, other: &SearchStats) -> bool {
        self.expanded == other.expanded
            && self.generated == other.generated
            && self.scan_steps == other.scan_steps
    }
}

/// One open-list insertion, in insertion order. Captured when
/// [`SearchConfig::capture_events`] is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpenEvent {
    pub state: SearchState,
    pub g: Cost,
    pub arrival: Option<Direction>,
    pub seq: u64,
}

impl OpenEvent {
    /// One-line text form for golden tests and logs.
    pub fn to_line(&self) -> String {
        let arrival = match self.arrival {
            Some(d) => format!("{d}"),
            None => String::from("-"),
        };
        format!(
            "{} ({},{}) inv={:032x} g={}+{}d {}",
            self.seq,
            self.state.cell.x,
            self.state.cell.y,
            inv_bits(self.state.inv),
            self.g.straights,
            self.g.diagonals,
            arrival
        )
    }
}

fn inv_bits(inv: Inventory) -> u128 {
    let mut bits = 0u128;
    for id in inv.iter() {
        bits |= 1 << id.get();
    }
    bits
}

/// Why a search stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// An optimal path was found.
    Solved,
    /// The reachable state space was exhausted; no path exists.
    Exhausted,
    /// A node budget or time limit cut the search short.
    LimitReached,
}

/// Result of one search run. `path` is `None` both for exhausted and
/// limit-terminated runs; check `termination` to tell them apart.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub path: Option<Path>,
    pub stats: SearchStats,
    pub events: Vec<OpenEvent>,
    pub termination: Termination,
}

impl SearchOutcome {
    pub fn solved(&self) -> bool {
        self.path.is_some()
    }

    pub fn cost(&self) -> Option<Cost> {
        self.path.as_ref().map(|p| p.cost)
    }
}

/// Resource caps for a single query. The time limit is only enforced when
/// the `std` feature is enabled; the generated-state budget is always
/// enforced.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub max_generated: Option<u64>,
    pub time_limit: Option<Duration>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchConfig {
    pub capture_events: bool,
    pub limits: SearchLimits,
}

impl SearchConfig {
    pub fn with_events() -> SearchConfig {
        SearchConfig { capture_events: true, ..SearchConfig::default() }
    }
}

/// Heap entry ordered so that `BinaryHeap::pop` yields the best node:
/// smallest f, ties to larger g, final ties FIFO by insertion sequence.
///
/// The payload rides along and never participates in ordering or equality;
/// `seq` is unique within one search, which keeps the order total.
#[derive(Clone, Copy, Debug)]
pub(crate) struct OpenEntry<P> {
    pub f: Cost,
    pub g: Cost,
    pub seq: u64,
    pub payload: P,
}

impl<P> PartialEq for OpenEntry<P> {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f && self.g == other.g && self.seq == other.seq
    }
}

impl<P> Eq for OpenEntry<P> {}

impl<P> Ord for OpenEntry<P> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .cmp(&self.f)
            .then_with(|| self.g.cmp(&other.g))
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

impl<P> PartialOrd for OpenEntry<P> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Wall-clock stopwatch; a no-op without std.
pub(crate) struct Timer {
    #[cfg(feature = "std")]
    start: std::time::Instant,
}

impl Timer {
    pub fn start() -> Timer {
        Timer {
            #[cfg(feature = "std")]
            start: std::time::Instant::now(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        #[cfg(feature = "std")]
        {
            self.start.elapsed()
        }
        #[cfg(not(feature = "std"))]
        {
            Duration::ZERO
        }
    }

    pub fn over_limit(&self, limit: Option<Duration>) -> bool {
        #[cfg(feature = "std")]
        {
            limit.is_some_and(|l| self.start.elapsed() > l)
        }
        #[cfg(not(feature = "std"))]
        {
            let _ = limit;
            false
        }
    }
}
