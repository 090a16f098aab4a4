//! Reference best-first searches: plain A* over cells (keys ignored, doors
//! permanently locked) and inventory-driven A* over (cell, inventory) states.
//!
//! Both expand every reachable node the pruning-based engines would skip, so
//! they serve as correctness baselines. Open-list ordering is f ascending,
//! ties to larger g, final ties FIFO; the goal test happens at expansion.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;

use core::hash::Hash;

use crate::collections::HashMap;
use crate::cost::{octile, Cost};
use crate::grid::{Cell, Direction};
use crate::inventory::Inventory;
use crate::moves::{is_traversable, legal_moves};
use crate::problem::ProblemInstance;
use crate::search::{
    OpenEntry, OpenEvent, Path, SearchConfig, SearchOutcome, SearchState, SearchStats,
    Termination, Timer,
};

struct NodeData<K> {
    g: Cost,
    closed: bool,
    parent: Option<K>,
}

struct RawOutcome {
    cells: Option<Vec<Cell>>,
    stats: SearchStats,
    events: Vec<OpenEvent>,
    termination: Termination,
}

/// Best-first search over an arbitrary unit-step state space. Used by both
/// A* variants; the jump-point engines have their own drivers.
fn best_first<K, G, H, S, C>(
    start: K,
    start_ok: bool,
    is_goal: G,
    heuristic: H,
    mut successors: S,
    state_of: C,
    cfg: &SearchConfig,
) -> RawOutcome
where
    K: Copy + Eq + Hash,
    G: Fn(K) -> bool,
    H: Fn(K) -> Cost,
    S: FnMut(K, &mut Vec<(K, Direction)>),
    C: Fn(K) -> SearchState,
{
    let timer = Timer::start();
    let mut stats = SearchStats::default();
    let mut events = Vec::new();
    let mut nodes: HashMap<K, NodeData<K>> = HashMap::new();
    let mut heap: BinaryHeap<OpenEntry<(K, Option<Direction>)>> = BinaryHeap::new();
    let mut succ_buf: Vec<(K, Direction)> = Vec::with_capacity(8);

    if !start_ok {
        stats.elapsed = timer.elapsed();
        return RawOutcome { cells: None, stats, events, termination: Termination::Exhausted };
    }

    nodes.insert(start, NodeData { g: Cost::ZERO, closed: false, parent: None });
    heap.push(OpenEntry { f: heuristic(start), g: Cost::ZERO, seq: 0, payload: (start, None) });
    if cfg.capture_events {
        events.push(OpenEvent { state: state_of(start), g: Cost::ZERO, arrival: None, seq: 0 });
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
        let (key, _arrival) = entry.payload;
        {
            let node = &nodes[&key];
            if node.closed || node.g != entry.g {
                continue; // superseded entry
            }
        }
        nodes.get_mut(&key).unwrap().closed = true;
        stats.expanded += 1;

        if is_goal(key) {
            let mut chain = Vec::new();
            let mut cur = Some(key);
            while let Some(k) = cur {
                chain.push(state_of(k).cell);
                cur = nodes[&k].parent;
            }
            chain.reverse();
            stats.elapsed = timer.elapsed();
            return RawOutcome { cells: Some(chain), stats, events, termination: Termination::Solved };
        }

        succ_buf.clear();
        successors(key, &mut succ_buf);
        for &(succ, dir) in succ_buf.iter() {
            let tentative = entry.g + Cost::step(dir);
            match nodes.get_mut(&succ) {
                Some(nd) => {
                    if tentative >= nd.g {
                        continue;
                    }
                    // A cheaper route re-opens a closed node; with a
                    // consistent heuristic this never fires, kept as a
                    // safety net.
                    nd.g = tentative;
                    nd.closed = false;
                    nd.parent = Some(key);
                }
                None => {
                    nodes.insert(
                        succ,
                        NodeData { g: tentative, closed: false, parent: Some(key) },
                    );
                }
            }
            let seq = stats.generated;
            heap.push(OpenEntry {
                f: tentative + heuristic(succ),
                g: tentative,
                seq,
                payload: (succ, Some(dir)),
            });
            stats.generated += 1;
            if cfg.capture_events {
                events.push(OpenEvent { state: state_of(succ), g: tentative, arrival: Some(dir), seq });
            }
        }
    }

    stats.elapsed = timer.elapsed();
    RawOutcome { cells: None, stats, events, termination }
}

/// Plain A* in the key-free interpretation: keys are ignored and every door
/// counts as permanently blocked. Returns the optimal path under that
/// reading, or none if the goal is unreachable.
pub fn astar_with(problem: &ProblemInstance, cfg: &SearchConfig) -> SearchOutcome {
    let map = &problem.map;
    let overlay = &problem.overlay;
    let goal = problem.goal;
    let start_ok = is_traversable(map, overlay, problem.start, Inventory::EMPTY)
        && is_traversable(map, overlay, goal, Inventory::EMPTY);
    let raw = best_first(
        problem.start,
        start_ok,
        |c: Cell| c == goal,
        |c: Cell| octile(c, goal),
        |c: Cell, buf: &mut Vec<(Cell, Direction)>| {
            for (dir, target) in legal_moves(map, overlay, c, Inventory::EMPTY) {
                buf.push((target, dir));
            }
        },
        |c: Cell| SearchState::new(c, Inventory::EMPTY),
        cfg,
    );
    finish(raw, problem)
}

pub fn astar(problem: &ProblemInstance) -> SearchOutcome {
    astar_with(problem, &SearchConfig::default())
}

/// Inventory-driven A*: the straightforward baseline over (cell, inventory)
/// states. Successor inventories absorb the items of the target cell;
/// duplicate detection is on exact (cell, inventory) pairs; the heuristic is
/// the inventory-blind octile distance; the goal is accepted under any
/// inventory.
pub fn inv_astar_with(problem: &ProblemInstance, cfg: &SearchConfig) -> SearchOutcome {
    let map = &problem.map;
    let overlay = &problem.overlay;
    let goal = problem.goal;
    let start_inv = overlay.items_at(problem.start);
    let start = SearchState::new(problem.start, start_inv);
    let start_ok = is_traversable(map, overlay, problem.start, start_inv);
    let raw = best_first(
        start,
        start_ok,
        |s: SearchState| s.cell == goal,
        |s: SearchState| octile(s.cell, goal),
        |s: SearchState, buf: &mut Vec<(SearchState, Direction)>| {
            for (dir, target) in legal_moves(map, overlay, s.cell, s.inv) {
                let inv = s.inv | overlay.items_at(target);
                buf.push((SearchState::new(target, inv), dir));
            }
        },
        |s: SearchState| s,
        cfg,
    );
    finish(raw, problem)
}

pub fn inv_astar(problem: &ProblemInstance) -> SearchOutcome {
    inv_astar_with(problem, &SearchConfig::default())
}

/// Attaches the exact cost and inventory trace to the reconstructed cells.
fn finish(raw: RawOutcome, problem: &ProblemInstance) -> SearchOutcome {
    SearchOutcome {
        path: raw.cells.map(|cells| Path::from_cells(&problem.overlay, cells)),
        stats: raw.stats,
        events: raw.events,
        termination: raw.termination,
    }
}
