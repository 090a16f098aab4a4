//! Property tests for the grid primitives and the path utilities.

mod common;

use common::{map_from_rows, random_instance, random_walk};
use invjps_core::{
    diagonal_first, is_traversable, legal_moves, octile, validate_path, Cell, Cost, GridMap,
    Inventory, InventoryOverlay, ItemId, Path, ProblemInstance,
};
use proptest::prelude::*;

proptest! {
    /// Exact cost ordering agrees with double-precision evaluation across
    /// the supported magnitude range (f64 error is far below the minimum
    /// gap between distinct values for counts up to 1e6).
    #[test]
    fn cost_ordering_matches_f64(s1 in 0u64..1_000_000, d1 in 0u64..1_000_000,
                                 s2 in 0u64..1_000_000, d2 in 0u64..1_000_000) {
        let a = Cost::new(s1, d1);
        let b = Cost::new(s2, d2);
        let exact = a.cmp(&b);
        if a == b {
            prop_assert_eq!(exact, core::cmp::Ordering::Equal);
        } else {
            let approx = a.value().partial_cmp(&b.value()).unwrap();
            prop_assert_eq!(exact, approx);
        }
    }

    /// Octile distance equals the true shortest-path cost on an empty grid.
    #[test]
    fn octile_is_the_empty_grid_distance(ax in 0i32..64, ay in 0i32..64,
                                         bx in 0i32..64, by in 0i32..64) {
        let a = Cell::new(ax, ay);
        let b = Cell::new(bx, by);
        prop_assert_eq!(octile(a, b), empty_grid_distance(a, b));
    }

    /// Acquiring items never closes a cell.
    #[test]
    fn traversability_is_monotone_in_inventory(seed in 0u64..500, extra in 0u16..8) {
        let p = random_instance(seed, 16, 4, 4);
        let small = p.overlay.items_at(p.start);
        let mut big = small;
        big.insert(ItemId::new(extra).unwrap());
        for y in 0..16 {
            for x in 0..16 {
                let c = Cell::new(x, y);
                if is_traversable(&p.map, &p.overlay, c, small) {
                    prop_assert!(is_traversable(&p.map, &p.overlay, c, big));
                }
            }
        }
    }

    /// Legal moves: at most 8, all targets traversable, and each diagonal
    /// has both orthogonal cells traversable.
    #[test]
    fn legal_moves_respect_the_corner_rule(seed in 0u64..300) {
        let p = random_instance(seed, 16, 3, 3);
        let inv = p.overlay.items_at(p.start);
        for c in p.map.passable_cells() {
            let moves = legal_moves(&p.map, &p.overlay, c, inv);
            prop_assert!(moves.len() <= 8);
            for (dir, target) in moves {
                prop_assert_eq!(c.step(dir), target);
                prop_assert!(is_traversable(&p.map, &p.overlay, target, inv));
                if let Some((h, v)) = dir.components() {
                    prop_assert!(is_traversable(&p.map, &p.overlay, c.step(h), inv));
                    prop_assert!(is_traversable(&p.map, &p.overlay, c.step(v), inv));
                }
            }
        }
    }

    /// Reordering diagonals to the front preserves cost and validity on
    /// arbitrary legal walks.
    #[test]
    fn diagonal_first_preserves_cost_and_validity(seed in 0u64..250, len in 3usize..40) {
        let p = random_instance(seed, 16, 2, 2);
        let cells = random_walk(&p, len, seed ^ 0xabcdef);
        prop_assume!(cells.len() >= 2);
        // Re-anchor the instance on the walk's endpoints so the validator
        // sees a start-to-goal path.
        let walk_problem = ProblemInstance::new(
            p.map.clone(),
            p.overlay.clone(),
            cells[0],
            *cells.last().unwrap(),
        ).unwrap();
        let path = Path::from_cells(&walk_problem.overlay, cells);
        prop_assert!(validate_path(&walk_problem, &path).is_valid());

        let (reordered, _fully) = diagonal_first(&walk_problem, &path);
        prop_assert_eq!(reordered.cost, path.cost);
        let report = validate_path(&walk_problem, &reordered);
        prop_assert!(report.is_valid(), "{}", report);
        prop_assert_eq!(reordered.cells.first(), path.cells.first());
        prop_assert_eq!(reordered.cells.last(), path.cells.last());
    }

    /// The inventory trace of any constructed path is monotone under set
    /// inclusion.
    #[test]
    fn inventory_trace_is_monotone(seed in 0u64..200, len in 2usize..30) {
        let p = random_instance(seed, 16, 4, 2);
        let cells = random_walk(&p, len, seed ^ 0x1234);
        let path = Path::from_cells(&p.overlay, cells);
        for w in path.inventory_trace.windows(2) {
            prop_assert!(w[0].is_subset(w[1]));
        }
    }
}

/// Independent shortest-path reference on an obstacle-free grid: textbook
/// Dijkstra over exact costs, no heuristic, no shared search code.
fn empty_grid_distance(a: Cell, b: Cell) -> Cost {
    use std::cmp::Reverse;
    use std::collections::{BinaryHeap, HashMap};

    let map = GridMap::open(64, 64);
    let overlay = InventoryOverlay::new();
    let mut dist: HashMap<Cell, Cost> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(a, Cost::ZERO);
    heap.push(Reverse((Cost::ZERO, a.x, a.y)));
    while let Some(Reverse((g, x, y))) = heap.pop() {
        let cell = Cell::new(x, y);
        if dist.get(&cell) != Some(&g) {
            continue;
        }
        if cell == b {
            return g;
        }
        for (dir, next) in legal_moves(&map, &overlay, cell, Inventory::EMPTY) {
            let ng = g + Cost::step(dir);
            if dist.get(&next).map_or(true, |old| ng < *old) {
                dist.insert(next, ng);
                heap.push(Reverse((ng, next.x, next.y)));
            }
        }
    }
    unreachable!("empty grid is connected");
}

#[test]
fn map_helper_round_trips() {
    let map = map_from_rows(&["..@", "...", "@.."]);
    assert!(map.is_blocked(Cell::new(2, 0)));
    assert!(map.is_blocked(Cell::new(0, 2)));
    assert!(map.is_passable(Cell::new(1, 1)));
}
