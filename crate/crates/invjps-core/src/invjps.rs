//! Inventory-driven Jump Point Search.
//!
//! Three changes turn JPS into a search over (cell, inventory) states:
//! states carry the inventory and absorb the items of every cell they
//! occupy; any scanned cell holding items the scan's inventory lacks ends
//! the scan as an *inventory jump point*; and expanding a node whose items
//! were freshly acquired fans out in all eight directions, because cells
//! that looked blocked before may now be open — including straight back
//! along the arrival direction.
//!
//! Revisiting a cell whose items are already held does not stop a scan and
//! does not fan out; such states behave exactly like plain JPS nodes, which
//! is why the whole search collapses to JPS on maps without items.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;

use crate::collections::HashMap;
use crate::cost::{octile, Cost};
use crate::grid::{Cell, Direction, DirectionSet, GridMap};
use crate::inventory::{Inventory, InventoryOverlay};
use crate::jps::{forced_directions, fill_path, natural_directions, JumpOutcome};
use crate::moves::{is_traversable, step_allowed};
use crate::problem::ProblemInstance;
use crate::search::{
    OpenEntry, OpenEvent, Path, SearchConfig, SearchOutcome, SearchState, SearchStats,
    Termination, Timer,
};
use crate::validate::validate_path;

/// A node of the inventory-driven search: the state, how it was reached,
/// and whether items were newly acquired here (true for the start, which
/// also expands in all directions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvNode {
    pub state: SearchState,
    pub arrival: Option<Direction>,
    pub fresh_pickup: bool,
}

/// Directions to scan when expanding `node`: all eight after a fresh pickup
/// (or at the start), otherwise the natural directions of the arrival plus
/// any forced directions under the node's inventory.
pub fn inv_successor_directions(
    map: &GridMap,
    overlay: &InventoryOverlay,
    node: &InvNode,
) -> DirectionSet {
    if node.fresh_pickup {
        return DirectionSet::ALL;
    }
    let arrival = node
        .arrival
        .expect("a non-start node without fresh pickup has an arrival direction");
    natural_directions(Some(arrival)).union(forced_directions(
        map,
        overlay,
        node.state.cell,
        arrival,
        node.state.inv,
    ))
}

/// Like [`crate::jps::jump`], but run under a live inventory: any scanned
/// cell with items not yet held immediately ends the scan as an inventory
/// jump point, while cells whose items are all held are scanned through.
/// Traversability uses `inv` throughout, so locked doors block scans and
/// opened doors do not.
pub fn inv_jump(
    map: &GridMap,
    overlay: &InventoryOverlay,
    from: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
) -> JumpOutcome {
    let mut scan_steps = 0;
    let point = if dir.is_diagonal() {
        inv_diagonal_scan(map, overlay, from, dir, inv, goal, &mut scan_steps)
    } else {
        inv_straight_scan(map, overlay, from, dir, inv, goal, &mut scan_steps)
    };
    JumpOutcome { point, scan_steps }
}

fn inv_straight_scan(
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
        if overlay.has_new_items(next, inv) {
            return Some(next); // inventory jump point
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

fn inv_diagonal_scan(
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
        if overlay.has_new_items(next, inv) {
            return Some(next); // inventory jump point
        }
        if next == goal {
            return Some(next);
        }
        if inv_straight_scan(map, overlay, next, h, inv, goal, scan_steps).is_some()
            || inv_straight_scan(map, overlay, next, v, inv, goal, scan_steps).is_some()
        {
            return Some(next);
        }
        cur = next;
    }
}

struct StateData {
    g: Cost,
    closed: bool,
    parent: Option<SearchState>,
}

/// Inventory-driven JPS: optimal for the full inventory-driven semantics,
/// or `None` when no inventory reachable from the start opens a way to the
/// goal. States are keyed on exact (cell, inventory) pairs; the goal is
/// accepted under any inventory.
pub fn invjps_with(problem: &ProblemInstance, cfg: &SearchConfig) -> SearchOutcome {
    let timer = Timer::start();
    let map = &problem.map;
    let overlay = &problem.overlay;
    let goal = problem.goal;

    let mut stats = SearchStats::default();
    let mut events = Vec::new();

    let start_inv = overlay.items_at(problem.start);
    let start = SearchState::new(problem.start, start_inv);
    if !is_traversable(map, overlay, problem.start, start_inv) {
        stats.elapsed = timer.elapsed();
        return SearchOutcome { path: None, stats, events, termination: Termination::Exhausted };
    }

    let mut states: HashMap<SearchState, StateData> = HashMap::new();
    let mut heap: BinaryHeap<OpenEntry<(SearchState, Option<Direction>, bool)>> = BinaryHeap::new();

    states.insert(start, StateData { g: Cost::ZERO, closed: false, parent: None });
    heap.push(OpenEntry {
        f: octile(problem.start, goal),
        g: Cost::ZERO,
        seq: 0,
        payload: (start, None, true),
    });
    if cfg.capture_events {
        events.push(OpenEvent { state: start, g: Cost::ZERO, arrival: None, seq: 0 });
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
        let (state, arrival, fresh) = entry.payload;
        {
            let data = &states[&state];
            if data.closed || data.g != entry.g {
                continue; // superseded entry
            }
        }
        states.get_mut(&state).unwrap().closed = true;
        stats.expanded += 1;

        if state.cell == goal {
            let mut chain = Vec::new();
            let mut cur = Some(state);
            while let Some(s) = cur {
                chain.push(s.cell);
                cur = states[&s].parent;
            }
            chain.reverse();
            let path = fill_path(overlay, &chain);
            debug_assert_eq!(path.cost, entry.g, "filled path must match the goal's g");
            debug_assert!(
                validate_path(problem, &path).is_valid(),
                "engine produced an invalid path"
            );
            stats.elapsed = timer.elapsed();
            return SearchOutcome { path: Some(path), stats, events, termination: Termination::Solved };
        }

        let node = InvNode { state, arrival, fresh_pickup: fresh };
        let dirs = inv_successor_directions(map, overlay, &node);

        for dir in dirs.iter() {
            let outcome = inv_jump(map, overlay, state.cell, dir, state.inv, goal);
            stats.scan_steps += outcome.scan_steps;
            let Some(jp) = outcome.point else { continue };
            let fresh_succ = overlay.has_new_items(jp, state.inv);
            debug_assert!(
                jp == goal
                    || fresh_succ
                    || is_plain_jump_point(map, overlay, jp, dir, state.inv, goal),
                "scan returned {jp} via {dir} which is not a jump point"
            );
            let succ = SearchState::new(jp, state.inv | overlay.items_at(jp));
            let (jdir, steps) = Direction::between(state.cell, jp).expect("jump stays on one line");
            debug_assert_eq!(jdir, dir);
            let tentative = entry.g + Cost::steps(dir, steps);
            match states.get_mut(&succ) {
                Some(data) => {
                    if tentative >= data.g {
                        continue;
                    }
                    // Strictly cheaper route re-opens; cannot occur with a
                    // consistent heuristic, kept as a safety net.
                    data.g = tentative;
                    data.closed = false;
                    data.parent = Some(state);
                }
                None => {
                    states.insert(
                        succ,
                        StateData { g: tentative, closed: false, parent: Some(state) },
                    );
                }
            }
            let seq = stats.generated;
            heap.push(OpenEntry {
                f: tentative + octile(jp, goal),
                g: tentative,
                seq,
                payload: (succ, Some(dir), fresh_succ),
            });
            stats.generated += 1;
            if cfg.capture_events {
                events.push(OpenEvent { state: succ, g: tentative, arrival: Some(dir), seq });
            }
        }
    }

    stats.elapsed = timer.elapsed();
    SearchOutcome { path: None, stats, events, termination }
}

pub fn invjps(problem: &ProblemInstance) -> SearchOutcome {
    invjps_with(problem, &SearchConfig::default())
}

#[cfg(debug_assertions)]
fn is_plain_jump_point(
    map: &GridMap,
    overlay: &InventoryOverlay,
    jp: Cell,
    dir: Direction,
    inv: Inventory,
    goal: Cell,
) -> bool {
    match dir.components() {
        None => !forced_directions(map, overlay, jp, dir, inv).is_empty(),
        Some((h, v)) => {
            let mut scratch = 0;
            inv_straight_scan(map, overlay, jp, h, inv, goal, &mut scratch).is_some()
                || inv_straight_scan(map, overlay, jp, v, inv, goal, &mut scratch).is_some()
        }
    }
}

#[cfg(not(debug_assertions))]
fn is_plain_jump_point(
    _map: &GridMap,
    _overlay: &InventoryOverlay,
    _jp: Cell,
    _dir: Direction,
    _inv: Inventory,
    _goal: Cell,
) -> bool {
    true
}

/// Rewrites a valid path into an equal-cost form where diagonal moves come
/// before straight moves wherever the grid allows, by repeatedly swapping
/// adjacent (straight, diagonal) move pairs whose rerouted corner is legal.
/// Returns the reworked path and whether every such pair could be reordered
/// (`false` means obstacles blocked at least one swap).
///
/// A test-suite utility: turning points of optimal diagonal-first paths are
/// exactly the jump points the engines must not prune.
pub fn diagonal_first(problem: &ProblemInstance, path: &Path) -> (Path, bool) {
    if path.cells.len() < 3 {
        return (path.clone(), true);
    }
    let mut cells = path.cells.clone();
    loop {
        let mut changed = false;
        for i in 0..cells.len() - 2 {
            let first = Direction::between(cells[i], cells[i + 1]).map(|(d, _)| d);
            let second = Direction::between(cells[i + 1], cells[i + 2]).map(|(d, _)| d);
            let (Some(a), Some(b)) = (first, second) else { continue };
            if a.is_diagonal() || !b.is_diagonal() {
                continue;
            }
            // Swapping the pair moves only the intermediate cell.
            let mut candidate = cells.clone();
            candidate[i + 1] = cells[i].step(b);
            let candidate_path = Path::from_cells(&problem.overlay, candidate);
            if validate_path(problem, &candidate_path).is_valid() {
                cells = candidate_path.cells;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // Any remaining straight-before-diagonal pair was blocked by obstacles.
    let mut fully = true;
    for i in 0..cells.len() - 2 {
        let a = Direction::between(cells[i], cells[i + 1]).map(|(d, _)| d);
        let b = Direction::between(cells[i + 1], cells[i + 2]).map(|(d, _)| d);
        if let (Some(a), Some(b)) = (a, b) {
            if !a.is_diagonal() && b.is_diagonal() {
                fully = false;
            }
        }
    }
    let result = Path::from_cells(&problem.overlay, cells);
    debug_assert_eq!(result.cost, path.cost, "reordering must preserve cost");
    (result, fully)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridMap;
    use crate::inventory::ItemId;
    use crate::oracle::dijkstra_oracle;
    use alloc::vec;
    use Direction::*;

    fn key() -> ItemId {
        ItemId::new(0).unwrap()
    }

    /// 7x5 grid: one key at (5, 1) opening both a west door at (0, 2)
    /// sealing the three cells above it, and a north door at (4, 4) sealing
    /// the area behind the wall at y = 3.
    fn two_doors_one_key() -> (GridMap, InventoryOverlay) {
        let mut map = GridMap::open(7, 5);
        for c in [(1, 2), (1, 3), (1, 4), (4, 3), (5, 3), (6, 3)] {
            map.set_blocked(Cell::new(c.0, c.1), true);
        }
        let mut overlay = InventoryOverlay::new();
        overlay.add_item(Cell::new(5, 1), key());
        overlay
            .set_requirement(Cell::new(4, 4), Inventory::single(key()))
            .unwrap();
        overlay
            .set_requirement(Cell::new(0, 2), Inventory::single(key()))
            .unwrap();
        (map, overlay)
    }

    #[test]
    fn key_cell_ends_the_scan() {
        let (map, overlay) = two_doors_one_key();
        let out = inv_jump(&map, &overlay, Cell::new(2, 1), East, Inventory::EMPTY, Cell::new(5, 4));
        assert_eq!(out.point, Some(Cell::new(5, 1)));
    }

    #[test]
    fn held_items_do_not_end_the_scan() {
        let (map, overlay) = two_doors_one_key();
        let held = Inventory::single(key());
        let out = inv_jump(&map, &overlay, Cell::new(2, 1), East, held, Cell::new(5, 4));
        // The key cell is scanned through; the row ends without a jump point.
        assert_eq!(out.point, None);
    }

    #[test]
    fn open_door_scans_like_a_plain_cell() {
        let map = GridMap::open(5, 1);
        let mut overlay = InventoryOverlay::new();
        overlay
            .set_requirement(Cell::new(2, 0), Inventory::single(key()))
            .unwrap();
        let held = Inventory::single(key());
        let out = inv_jump(&map, &overlay, Cell::new(0, 0), East, held, Cell::new(4, 0));
        assert_eq!(out.point, Some(Cell::new(4, 0))); // straight to the goal
        let locked = inv_jump(&map, &overlay, Cell::new(0, 0), East, Inventory::EMPTY, Cell::new(4, 0));
        assert_eq!(locked.point, None);
    }

    #[test]
    fn successor_directions() {
        let (map, overlay) = two_doors_one_key();
        let start = InvNode {
            state: SearchState::new(Cell::new(1, 1), Inventory::EMPTY),
            arrival: None,
            fresh_pickup: true,
        };
        assert_eq!(inv_successor_directions(&map, &overlay, &start).len(), 8);

        let pickup = InvNode {
            state: SearchState::new(Cell::new(5, 1), Inventory::single(key())),
            arrival: Some(East),
            fresh_pickup: true,
        };
        let dirs = inv_successor_directions(&map, &overlay, &pickup);
        assert_eq!(dirs.len(), 8);
        assert!(dirs.contains(West), "may undo the path travelled so far");

        // An ordinary forced jump point keeps the pruned set.
        let mut plain_map = GridMap::open(7, 5);
        plain_map.set_blocked(Cell::new(4, 2), true);
        let plain = InvNode {
            state: SearchState::new(Cell::new(5, 1), Inventory::EMPTY),
            arrival: Some(East),
            fresh_pickup: false,
        };
        let dirs = inv_successor_directions(&plain_map, &InventoryOverlay::new(), &plain);
        let expected: DirectionSet = [North, NorthEast, East].into_iter().collect();
        assert_eq!(dirs, expected);
    }

    #[test]
    fn fetches_the_key_then_opens_the_west_door() {
        let (map, overlay) = two_doors_one_key();
        let p = ProblemInstance::new(map, overlay, Cell::new(1, 1), Cell::new(0, 3)).unwrap();
        let out = invjps(&p);
        let path = out.path.expect("solvable with the key");
        assert_eq!(path.cost, Cost::new(11, 0));
        assert_eq!(Some(path.cost), dijkstra_oracle(&p));
        assert!(path.cells.contains(&Cell::new(5, 1)), "visits the key");
        assert!(path.cells.contains(&Cell::new(0, 2)), "passes the west door");
        // The way back re-crosses cells visited on the way out.
        let mut seen = alloc::collections::BTreeSet::new();
        assert!(
            path.cells.iter().any(|c| !seen.insert(*c)),
            "path must re-cross previously visited cells"
        );
    }

    #[test]
    fn reaches_the_north_area_through_the_north_door() {
        let (map, overlay) = two_doors_one_key();
        let p = ProblemInstance::new(map, overlay, Cell::new(1, 1), Cell::new(5, 4)).unwrap();
        let out = invjps(&p);
        let path = out.path.expect("solvable with the key");
        assert_eq!(Some(path.cost), dijkstra_oracle(&p));
        assert_eq!(path.cost, Cost::new(9, 1));
        assert!(path.cells.contains(&Cell::new(4, 4)), "passes the north door");
    }

    #[test]
    fn key_free_maps_reduce_to_plain_jps() {
        let mut map = GridMap::open(16, 16);
        for (x, y) in [(4, 4), (4, 5), (4, 6), (9, 2), (10, 11), (11, 11), (3, 12)] {
            map.set_blocked(Cell::new(x, y), true);
        }
        let p = ProblemInstance::new(map, InventoryOverlay::new(), Cell::new(0, 0), Cell::new(15, 13))
            .unwrap();
        let cfg = SearchConfig::with_events();
        let a = crate::jps::jps_with(&p, &cfg);
        let b = invjps_with(&p, &cfg);
        assert_eq!(a.events, b.events);
        assert!(a.stats.same_counters(&b.stats));
        assert_eq!(a.path, b.path);
    }

    #[test]
    fn sealed_goal_exhausts_and_fails() {
        let (mut map, overlay) = two_doors_one_key();
        // Wall off the west door area entirely: block the door cell's only
        // approach by sealing (0, 1).
        map.set_blocked(Cell::new(0, 1), true);
        let p = ProblemInstance::new(map, overlay, Cell::new(1, 1), Cell::new(0, 3)).unwrap();
        let out = invjps(&p);
        assert!(!out.solved());
        assert_eq!(out.termination, Termination::Exhausted);
        assert_eq!(dijkstra_oracle(&p), None);
    }

    #[test]
    fn diagonal_moves_bubble_to_the_front() {
        let p = ProblemInstance::new(
            GridMap::open(6, 4),
            InventoryOverlay::new(),
            Cell::new(0, 0),
            Cell::new(3, 1),
        )
        .unwrap();
        let path = Path::from_cells(
            &p.overlay,
            vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(2, 0), Cell::new(3, 1)],
        );
        let (reordered, fully) = diagonal_first(&p, &path);
        assert!(fully);
        assert_eq!(reordered.cost, path.cost);
        assert_eq!(
            reordered.cells,
            vec![Cell::new(0, 0), Cell::new(1, 1), Cell::new(2, 1), Cell::new(3, 1)]
        );
        // Already diagonal-first: unchanged.
        let (again, fully2) = diagonal_first(&p, &reordered);
        assert!(fully2);
        assert_eq!(again.cells, reordered.cells);
    }

    #[test]
    fn blocked_swap_is_reported() {
        let mut map = GridMap::open(4, 2);
        map.set_blocked(Cell::new(1, 1), true);
        let p = ProblemInstance::new(map, InventoryOverlay::new(), Cell::new(0, 0), Cell::new(2, 1))
            .unwrap();
        let path = Path::from_cells(
            &p.overlay,
            vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(2, 1)],
        );
        let (reordered, fully) = diagonal_first(&p, &path);
        assert!(!fully);
        assert_eq!(reordered.cells, path.cells);
    }
}
