//! Heuristic-free ground truth: uniform-cost search over (cell, inventory)
//! states.
//!
//! This is the independent yardstick the heuristic searches and the pruning
//! engines are tested against, so it deliberately shares nothing with them
//! beyond the grid primitives: its own queue entries, its own bookkeeping,
//! no heuristic, no pruning. Intended for small instances.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;

use core::cmp::Ordering;

use crate::collections::HashMap;
use crate::cost::Cost;
use crate::moves::{is_traversable, legal_moves};
use crate::problem::ProblemInstance;
use crate::search::{Path, SearchState};

struct QueueItem {
    g: Cost,
    tick: u64,
    state: SearchState,
}

// Min-queue on (g, tick); tick keeps pop order deterministic among equal g.
impl PartialEq for QueueItem {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.tick == other.tick
    }
}

impl Eq for QueueItem {}

impl Ord for QueueItem {
    fn cmp(&self, other: &Self) -> Ordering {
        other.g.cmp(&self.g).then_with(|| other.tick.cmp(&self.tick))
    }
}

impl PartialOrd for QueueItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(problem: &ProblemInstance, want_path: bool) -> Option<(Cost, Option<Path>)> {
    let map = &problem.map;
    let overlay = &problem.overlay;
    let start_inv = overlay.items_at(problem.start);
    let start = SearchState::new(problem.start, start_inv);
    if !is_traversable(map, overlay, problem.start, start_inv) {
        return None;
    }

    let mut dist: HashMap<SearchState, Cost> = HashMap::new();
    let mut parent: HashMap<SearchState, SearchState> = HashMap::new();
    let mut queue = BinaryHeap::new();
    let mut tick = 0u64;

    dist.insert(start, Cost::ZERO);
    queue.push(QueueItem { g: Cost::ZERO, tick, state: start });

    while let Some(item) = queue.pop() {
        if dist.get(&item.state) != Some(&item.g) {
            continue; // superseded entry
        }
        if item.state.cell == problem.goal {
            let path = want_path.then(|| {
                let mut cells = Vec::new();
                let mut cur = item.state;
                loop {
                    cells.push(cur.cell);
                    match parent.get(&cur) {
                        Some(p) => cur = *p,
                        None => break,
                    }
                }
                cells.reverse();
                Path::from_cells(overlay, cells)
            });
            return Some((item.g, path));
        }
        for (dir, target) in legal_moves(map, overlay, item.state.cell, item.state.inv) {
            let succ = SearchState::new(target, item.state.inv | overlay.items_at(target));
            let g = item.g + Cost::step(dir);
            let better = match dist.get(&succ) {
                None => true,
                Some(old) => g < *old,
            };
            if better {
                dist.insert(succ, g);
                if want_path {
                    parent.insert(succ, item.state);
                }
                tick += 1;
                queue.push(QueueItem { g, tick, state: succ });
            }
        }
    }
    None
}

/// Exact optimal inventory-driven cost, or `None` when the goal is
/// unreachable under every acquirable inventory.
pub fn dijkstra_oracle(problem: &ProblemInstance) -> Option<Cost> {
    dijkstra(problem, false).map(|(g, _)| g)
}

/// Like [`dijkstra_oracle`] but also reconstructs one optimal path via
/// predecessor links.
pub fn dijkstra_oracle_path(problem: &ProblemInstance) -> Option<Path> {
    dijkstra(problem, true).and_then(|(_, p)| p)
}
