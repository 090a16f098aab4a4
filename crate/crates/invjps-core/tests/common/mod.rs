//! Shared helpers for the integration test suites.

use invjps_core::{
    gen_random_map, Cell, GridMap, Inventory, InventoryOverlay, ItemId, ProblemInstance,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn id(n: u16) -> ItemId {
    ItemId::new(n).unwrap()
}

/// A random instance with obstacles, keys, and doors. Keys and doors land
/// on distinct passable cells away from start and goal; every door requires
/// one or two of the placed keys. With zero keys no doors are placed.
pub fn random_instance(seed: u64, size: i32, max_keys: u32, max_doors: u32) -> ProblemInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let map = gen_random_map(size, size, 300, rng.random());
        let passable: Vec<Cell> = map.passable_cells().collect();
        if passable.len() < 16 {
            continue;
        }
        let start = passable[rng.random_range(0..passable.len())];
        let goal = passable[rng.random_range(0..passable.len())];
        if start == goal {
            continue;
        }

        let keys = rng.random_range(0..=max_keys);
        let doors = if keys == 0 { 0 } else { rng.random_range(0..=max_doors) };
        let mut taken = vec![start, goal];
        let mut overlay = InventoryOverlay::new();
        let pick = |taken: &mut Vec<Cell>, rng: &mut ChaCha8Rng| -> Option<Cell> {
            for _ in 0..64 {
                let c = passable[rng.random_range(0..passable.len())];
                if !taken.contains(&c) {
                    taken.push(c);
                    return Some(c);
                }
            }
            None
        };

        let mut placed_all = true;
        for k in 0..keys {
            match pick(&mut taken, &mut rng) {
                Some(c) => overlay.add_item(c, id(k as u16)),
                None => placed_all = false,
            }
        }
        for _ in 0..doors {
            let Some(c) = pick(&mut taken, &mut rng) else {
                placed_all = false;
                break;
            };
            let mut req = Inventory::single(id(rng.random_range(0..keys) as u16));
            if keys > 1 && rng.random_bool(0.3) {
                req.insert(id(rng.random_range(0..keys) as u16));
            }
            overlay.set_requirement(c, req).unwrap();
        }
        if !placed_all {
            continue;
        }
        return ProblemInstance::new(map, overlay, start, goal).unwrap();
    }
}

/// A key-free random instance (obstacles only).
pub fn random_plain_instance(seed: u64, size: i32) -> ProblemInstance {
    random_instance(seed, size, 0, 0)
}

/// Rebuilds an overlay without the given item id (both its key cells and
/// the id's mention in door requirements stay; only the key disappears).
pub fn without_key(overlay: &InventoryOverlay, drop: ItemId) -> InventoryOverlay {
    let mut out = InventoryOverlay::new();
    for (cell, items) in overlay.key_cells() {
        for item in items.iter() {
            if item != drop {
                out.add_item(cell, item);
            }
        }
    }
    for (cell, req) in overlay.door_cells() {
        out.set_requirement(cell, req).unwrap();
    }
    out
}

/// Deterministic pseudo-random walk of up to `steps` legal moves.
pub fn random_walk(problem: &ProblemInstance, steps: usize, seed: u64) -> Vec<Cell> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inv = problem.overlay.items_at(problem.start);
    let mut cur = problem.start;
    let mut cells = vec![cur];
    for _ in 0..steps {
        let moves = invjps_core::legal_moves(&problem.map, &problem.overlay, cur, inv);
        if moves.is_empty() {
            break;
        }
        let (_, next) = moves[rng.random_range(0..moves.len())];
        cur = next;
        inv |= problem.overlay.items_at(next);
        cells.push(cur);
    }
    cells
}

#[allow(dead_code)]
pub fn map_from_rows(rows: &[&str]) -> GridMap {
    let height = rows.len() as i32;
    let width = rows[0].len() as i32;
    let mut map = GridMap::open(width, height);
    for (y, row) in rows.iter().enumerate() {
        for (x, ch) in row.chars().enumerate() {
            if ch == '@' {
                map.set_blocked(Cell::new(x as i32, y as i32), true);
            }
        }
    }
    map
}
