//! Jump Point Search over a fixed inventory.
//!
//! Keys are ignored and locked doors behave exactly like walls: scans run
//! with one inventory for the whole search (the empty one in [`jps`]). The
//! engine expands only jump points — cells where an optimal path may have to
//! change direction — and reconstructs the final path by filling the
//! straight-line gaps between them.
//!
//! Corner cutting is disallowed throughout, which shapes the pruning rules:
//! diagonal travel can never have forced neighbours (its rear cells are
//! guaranteed open by the legality of the arrival step), while straight
//! travel picks up forced turns where a cell beside the travel axis is open
//! but the cell diagonally behind it is not.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cost::{octile, Cost};
use crate::grid::{Cell, Direction, DirectionSet, GridMap};
use crate::inventory::{Inventory, InventoryOverlay};
use crate::moves::{is_traversable, step_allowed};
use crate::problem::ProblemInstance;
use crate::search::{
    OpenEntry, OpenEvent, Path, SearchConfig, SearchOutcome, SearchState, SearchStats,
    Termination, Timer,
};

/// Directions a node keeps when reached via `arrival`, before obstacles are
/// considered: the travel direction itself for straight movement, the
/// diagonal plus its two straight components for diagonal movement, and all
/// eight for the start node.
pub fn natural_directions(arrival: Option<Direction>) -> DirectionSet {
    match arrival {
        None => DirectionSet::ALL,
        Some(dir) => match dir.components() {
            None => DirectionSet::single(dir),
            Some((h, v)) => {
                let mut set = DirectionSet::single(dir);
                set.insert(h);
                set.insert(v);
                set
            }
        },
    }
}

/// Directions toward forced neighbours of `cell` when reached via a straight
/// `arrival` under `inv`. Diagonal arrivals never have forced neighbours in
/// the no-corner-cutting regime.
///
/// For each side perpendicular to the travel axis: if the side cell is open
/// but the cell diagonally behind it is not, the cheapest route to the side
/// cell runs through `cell`, so the side direction is forced — and so is the
/// side-ahead diagonal when that step is itself legal.
pub fn forced_directions(
    map: &GridMap,
    overlay: &InventoryOverlay,
    cell: Cell,
    arrival: Direction,
    inv: Inventory,
) -> DirectionSet {
    let mut forced = DirectionSet::EMPTY;
    let Some((side_a, side_b)) = arrival.perpendicular() else {
        return forced;
    };
    let (ax, ay) = arrival.offset();
    for side in [side_a, side_b] {
        let (sx, sy) = side.offset();
        let side_cell = cell.offset(sx, sy);
        let back_diagonal = cell.offset(sx - ax, sy - ay);
        if is_traversable(map, overlay, side_cell, inv)
            && !is_traversable(map, overlay, back_diagonal, inv)
        {
            forced.insert(side);
            let ahead_diagonal = Direction::from_offset(sx + ax, sy + ay)
                .expect("side + straight arrival is a diagonal");
            if step_allowed(map, overlay, cell, ahead_diagonal, inv) {
                forced.insert(ahead_diagonal);
            }
        }
    }
    forced
}

/// Result of one jump scan. `scan_steps` counts every cell examined,
/// including the one that ended the scan and the cells of diagonal
/// sub-scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JumpOutcome {
    pub point: Option<Cell>,
    pub scan_steps: u64,
}

/// Scans from `from` along `dir` under a fixed inventory until an obstacle
/// kills the scan, the goal is met, or a jump point is found: a cell with
/// forced neighbours on straight scans, or — on diagonal scans — a cell
/// whose straight component sub-scans (horizontal first) reach a jump
/// point.
pub fn jump(
    map: &GridMap,
    overlay: &InventoryOverlay,
    from: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
) -> JumpOutcome {
    let mut scan_steps = 0;
    let point = if dir.is_diagonal() {
        diagonal_scan(map, overlay, from, dir, inv, goal, &mut scan_steps)
    } else {
        straight_scan(map, overlay, from, dir, inv, goal, &mut scan_steps)
    };
    JumpOutcome { point, scan_steps }
}

fn straight_scan(
    map: &GridMap,
    overlay: &InventoryOverlay,
    from: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
    scan_steps: &mut u64,
) -> Option<Cell> {
    let mut cur = from;
    loop {
        let next = cur.step(dir);
        *scan_steps += 1;
        if !is_traversable(map, overlay, next, inv) {
            return None;
        }
        if next == goal {
            return Some(next);
        }
        if !forced_directions(map, overlay, next, dir, inv).is_empty() {
            return Some(next);
        }
        cur = next;
    }
}

fn diagonal_scan(
    map: &GridMap,
    overlay: &InventoryOverlay,
    from: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
    scan_steps: &mut u64,
) -> Option<Cell> {
    let (h, v) = dir.components().expect("diagonal direction");
    let mut cur = from;
    loop {
        let next = cur.step(dir);
        *scan_steps += 1;
        if !step_allowed(map, overlay, cur, dir, inv) {
            return None;
        }
        if next == goal {
            return Some(next);
        }
        // An (indirect) jump point: a straight sub-scan finds something.
        if straight_scan(map, overlay, next, h, inv, goal, scan_steps).is_some()
            || straight_scan(map, overlay, next, v, inv, goal, scan_steps).is_some()
        {
            return Some(next);
        }
        cur = next;
    }
}

/// Expands a jump-point sequence into the full cell-by-cell path, cost
/// recomputed from the steps. Panics if consecutive jump points do not lie
/// on a shared row, column, or diagonal — the engines never produce that.
pub fn fill_path(overlay: &InventoryOverlay, jump_points: &[Cell]) -> Path {
    assert!(!jump_points.is_empty(), "fill_path needs at least one cell");
    let mut cells = vec![jump_points[0]];
    for pair in jump_points.windows(2) {
        let (dir, steps) = Direction::between(pair[0], pair[1]).unwrap_or_else(|| {
            panic!(
                "fill_path: consecutive jump points {} and {} are not co-linear",
                pair[0], pair[1]
            )
        });
        let mut cur = pair[0];
        for _ in 0..steps {
            cur = cur.step(dir);
            cells.push(cur);
        }
    }
    Path::from_cells(overlay, cells)
}

struct CellData {
    g: Cost,
    closed: bool,
    parent: Option<Cell>,
    seen: bool,
}

/// Jump Point Search in the key-free interpretation: the inventory is fixed
/// to empty, so locked doors are walls and keys are scenery. Optimal for
/// that reading, or `None` when the goal is unreachable.
pub fn jps_with(problem: &ProblemInstance, cfg: &SearchConfig) -> SearchOutcome {
    let timer = Timer::start();
    let map = &problem.map;
    let overlay = &problem.overlay;
    let goal = problem.goal;
    let inv = Inventory::EMPTY;

    let mut stats = SearchStats::default();
    let mut events = Vec::new();

    if !is_traversable(map, overlay, problem.start, inv)
        || !is_traversable(map, overlay, goal, inv)
    {
        stats.elapsed = timer.elapsed();
        return SearchOutcome { path: None, stats, events, termination: Termination::Exhausted };
    }

    let width = map.width() as usize;
    let idx = |c: Cell| c.y as usize * width + c.x as usize;
    let mut table: Vec<CellData> = Vec::with_capacity(map.cell_count());
    table.resize_with(map.cell_count(), || CellData {
        g: Cost::ZERO,
        closed: false,
        parent: None,
        seen: false,
    });
    let mut heap: BinaryHeap<OpenEntry<(Cell, Option<Direction>)>> = BinaryHeap::new();

    let si = idx(problem.start);
    table[si].seen = true;
    heap.push(OpenEntry {
        f: octile(problem.start, goal),
        g: Cost::ZERO,
        seq: 0,
        payload: (problem.start, None),
    });
    if cfg.capture_events {
        events.push(OpenEvent {
            state: SearchState::new(problem.start, inv),
            g: Cost::ZERO,
            arrival: None,
            seq: 0,
        });
    }
    stats.generated = 1;

    let mut termination = Termination::Exhausted;
    while let Some(entry) = heap.pop() {
        if cfg.limits.max_generated.is_some_and(|m| stats.generated >= m)
            || timer.over_limit(cfg.limits.time_limit)
        {
            termination = Termination::LimitReached;
            break;
        }
        let (cell, arrival) = entry.payload;
        let ci = idx(cell);
        if table[ci].closed || table[ci].g != entry.g {
            continue; // superseded entry
        }
        table[ci].closed = true;
        stats.expanded += 1;

        if cell == goal {
            let mut points = Vec::new();
            let mut cur = Some(cell);
            while let Some(c) = cur {
                points.push(c);
                cur = table[idx(c)].parent;
            }
            points.reverse();
            let path = fill_path(overlay, &points);
            debug_assert_eq!(path.cost, entry.g, "filled path must match the goal's g");
            stats.elapsed = timer.elapsed();
            return SearchOutcome { path: Some(path), stats, events, termination: Termination::Solved };
        }

        let dirs = match arrival {
            None => DirectionSet::ALL,
            Some(a) => natural_directions(Some(a))
                .union(forced_directions(map, overlay, cell, a, inv)),
        };

        for dir in dirs.iter() {
            let outcome = jump(map, overlay, cell, dir, inv, goal);
            stats.scan_steps += outcome.scan_steps;
            let Some(jp) = outcome.point else { continue };
            debug_assert!(
                is_genuine_jump_point(map, overlay, jp, dir, inv, goal),
                "scan returned {jp} via {dir} which is not a jump point"
            );
            let (jdir, steps) = Direction::between(cell, jp).expect("jump stays on one line");
            debug_assert_eq!(jdir, dir);
            let tentative = entry.g + Cost::steps(dir, steps);
            let ji = idx(jp);
            let node = &mut table[ji];
            if node.seen && tentative >= node.g {
                continue;
            }
            // A strictly cheaper route re-opens a closed node; cannot occur
            // with a consistent heuristic, kept as a safety net.
            node.seen = true;
            node.closed = false;
            node.g = tentative;
            node.parent = Some(cell);
            let seq = stats.generated;
            heap.push(OpenEntry {
                f: tentative + octile(jp, goal),
                g: tentative,
                seq,
                payload: (jp, Some(dir)),
            });
            stats.generated += 1;
            if cfg.capture_events {
                events.push(OpenEvent {
                    state: SearchState::new(jp, inv),
                    g: tentative,
                    arrival: Some(dir),
                    seq,
                });
            }
        }
    }

    stats.elapsed = timer.elapsed();
    SearchOutcome { path: None, stats, events, termination }
}

pub fn jps(problem: &ProblemInstance) -> SearchOutcome {
    jps_with(problem, &SearchConfig::default())
}

/// Every open-list insertion must be the goal, a straight jump point with
/// forced neighbours, or a diagonal cell with a successful component
/// sub-scan. Debug builds re-derive that classification.
#[cfg(debug_assertions)]
fn is_genuine_jump_point(
    map: &GridMap,
    overlay: &InventoryOverlay,
    jp: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
) -> bool {
    if jp == goal {
        return true;
    }
    match dir.components() {
        None => !forced_directions(map, overlay, jp, dir, inv).is_empty(),
        Some((h, v)) => {
            let mut scratch = 0;
            straight_scan(map, overlay, jp, h, inv, goal, &mut scratch).is_some()
                || straight_scan(map, overlay, jp, v, inv, goal, &mut scratch).is_some()
        }
    }
}

#[cfg(not(debug_assertions))]
fn is_genuine_jump_point(
    _map: &GridMap,
    _overlay: &InventoryOverlay,
    _jp: Cell,
    _dir: Direction,
    _inv: Inventory,
    _goal: Cell,
) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inventory::ItemId;
    use Direction::*;

    /// 7x5 grid with a single obstacle at (4, 2): travelling east along
    /// y = 1, the cell (5, 1) has forced neighbours at (5, 2) and (6, 2).
    fn forced_corner_map() -> GridMap {
        let mut map = GridMap::open(7, 5);
        map.set_blocked(Cell::new(4, 2), true);
        map
    }

    /// 7x5 grid with obstacles at (5, 1) and (5, 2): a north-east scan from
    /// (1, 1) must stop at (3, 3) because its east sub-scan finds the jump
    /// point at (6, 3).
    fn indirect_diagonal_map() -> GridMap {
        let mut map = GridMap::open(7, 5);
        map.set_blocked(Cell::new(5, 1), true);
        map.set_blocked(Cell::new(5, 2), true);
        map
    }

    #[test]
    fn natural_direction_sets() {
        assert_eq!(natural_directions(Some(East)), DirectionSet::single(East));
        let ne: DirectionSet = [NorthEast, North, East].into_iter().collect();
        assert_eq!(natural_directions(Some(NorthEast)), ne);
        assert_eq!(natural_directions(None), DirectionSet::ALL);
        assert_eq!(natural_directions(None).len(), 8);
    }

    #[test]
    fn forced_neighbours_past_a_blocked_corner() {
        let map = forced_corner_map();
        let overlay = InventoryOverlay::new();
        let forced = forced_directions(&map, &overlay, Cell::new(5, 1), East, Inventory::EMPTY);
        let expected: DirectionSet = [North, NorthEast].into_iter().collect();
        assert_eq!(forced, expected);
        // One cell earlier the side itself is blocked: nothing is forced.
        assert!(forced_directions(&map, &overlay, Cell::new(4, 1), East, Inventory::EMPTY)
            .is_empty());
        // Open plain: nothing is forced.
        assert!(forced_directions(&map, &overlay, Cell::new(2, 1), East, Inventory::EMPTY)
            .is_empty());
        // Diagonal arrivals never have forced neighbours.
        assert!(forced_directions(&map, &overlay, Cell::new(5, 1), NorthEast, Inventory::EMPTY)
            .is_empty());
    }

    #[test]
    fn locked_door_forces_like_a_wall() {
        // Door on the back-diagonal: forced while locked, clean when open.
        let map = GridMap::open(4, 3);
        let mut overlay = InventoryOverlay::new();
        let key = ItemId::new(0).unwrap();
        overlay
            .set_requirement(Cell::new(0, 2), Inventory::single(key))
            .unwrap();
        let cell = Cell::new(1, 1);
        let locked = forced_directions(&map, &overlay, cell, East, Inventory::EMPTY);
        let expected: DirectionSet = [North, NorthEast].into_iter().collect();
        assert_eq!(locked, expected);
        let open = forced_directions(&map, &overlay, cell, East, Inventory::single(key));
        assert!(open.is_empty());
    }

    #[test]
    fn straight_jump_stops_at_the_forced_cell() {
        let map = forced_corner_map();
        let overlay = InventoryOverlay::new();
        let out = jump(&map, &overlay, Cell::new(1, 1), East, Inventory::EMPTY, Cell::new(6, 4));
        assert_eq!(out.point, Some(Cell::new(5, 1)));
        assert_eq!(out.scan_steps, 4);
    }

    #[test]
    fn jump_into_the_map_edge_fails() {
        let map = GridMap::open(8, 5);
        let overlay = InventoryOverlay::new();
        let out = jump(&map, &overlay, Cell::new(0, 0), East, Inventory::EMPTY, Cell::new(0, 4));
        assert_eq!(out.point, None);
        // Seven passable cells examined plus the out-of-bounds one.
        assert_eq!(out.scan_steps, 8);
    }

    #[test]
    fn diagonal_jump_finds_indirect_jump_point() {
        let map = indirect_diagonal_map();
        let overlay = InventoryOverlay::new();
        let out = jump(&map, &overlay, Cell::new(1, 1), NorthEast, Inventory::EMPTY, Cell::new(0, 4));
        assert_eq!(out.point, Some(Cell::new(3, 3)));
    }

    #[test]
    fn jump_is_deterministic() {
        let map = indirect_diagonal_map();
        let overlay = InventoryOverlay::new();
        let a = jump(&map, &overlay, Cell::new(1, 1), NorthEast, Inventory::EMPTY, Cell::new(0, 4));
        let b = jump(&map, &overlay, Cell::new(1, 1), NorthEast, Inventory::EMPTY, Cell::new(0, 4));
        assert_eq!(a, b);
    }

    #[test]
    fn fill_path_examples() {
        let overlay = InventoryOverlay::new();
        let p = fill_path(&overlay, &[Cell::new(0, 0), Cell::new(3, 0)]);
        assert_eq!(p.cells.len(), 4);
        assert_eq!(p.cost, Cost::new(3, 0));

        let p = fill_path(&overlay, &[Cell::new(0, 0), Cell::new(2, 2)]);
        assert_eq!(p.cells.len(), 3);
        assert_eq!(p.cost, Cost::new(0, 2));

        let p = fill_path(&overlay, &[Cell::new(0, 0), Cell::new(2, 2), Cell::new(2, 5)]);
        assert_eq!(p.cells.len(), 6);
        assert_eq!(p.cost, Cost::new(3, 2));
    }

    #[test]
    #[should_panic(expected = "not co-linear")]
    fn fill_path_rejects_non_colinear_points() {
        let overlay = InventoryOverlay::new();
        fill_path(&overlay, &[Cell::new(0, 0), Cell::new(2, 1)]);
    }

    #[test]
    fn empty_map_is_one_diagonal_run() {
        let p = ProblemInstance::new(
            GridMap::open(10, 10),
            InventoryOverlay::new(),
            Cell::new(0, 0),
            Cell::new(9, 9),
        )
        .unwrap();
        let out = jps(&p);
        assert_eq!(out.cost(), Some(Cost::new(0, 9)));
        assert_eq!(out.stats.expanded, 2); // start and goal only
    }

    #[test]
    fn jps_matches_astar_on_a_walled_map() {
        let mut map = GridMap::open(12, 12);
        for y in 2..10 {
            map.set_blocked(Cell::new(6, y), true);
        }
        let p = ProblemInstance::new(map, InventoryOverlay::new(), Cell::new(1, 5), Cell::new(10, 5))
            .unwrap();
        let j = jps(&p);
        let a = crate::astar::astar(&p);
        assert_eq!(j.cost(), a.cost());
        assert!(j.stats.expanded <= a.stats.expanded);
        let report = crate::validate::validate_path(&p, j.path.as_ref().unwrap());
        assert!(report.is_valid(), "{report}");
    }
}
