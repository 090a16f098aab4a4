//! Turning points of optimal diagonal-first paths must be jump points or
//! inventory jump points — the structural fact the pruning engines rely on.

mod common;

use common::random_instance;
use invjps_core::{
    diagonal_first, dijkstra_oracle_path, forced_directions, natural_directions, Direction,
    Inventory,
};

#[test]
fn optimal_diagonal_first_turns_only_at_jump_points() {
    let mut checked_turns = 0;
    for seed in 0..300u64 {
        let p = random_instance(seed.wrapping_mul(31) + 5, 16, 3, 3);
        let Some(path) = dijkstra_oracle_path(&p) else { continue };
        let (path, _fully) = diagonal_first(&p, &path);
        if path.cells.len() < 3 {
            continue;
        }

        let mut inv_on_arrival = Inventory::EMPTY;
        for i in 1..path.cells.len() - 1 {
            let cell = path.cells[i];
            // Inventory held when arriving at `cell`: everything collected
            // strictly before it.
            inv_on_arrival |= p.overlay.items_at(path.cells[i - 1]);
            let (arrive, _) = Direction::between(path.cells[i - 1], cell).unwrap();
            let (leave, _) = Direction::between(cell, path.cells[i + 1]).unwrap();
            if natural_directions(Some(arrive)).contains(leave) {
                continue; // not a turn
            }
            checked_turns += 1;
            let inventory_jump_point = p.overlay.has_new_items(cell, inv_on_arrival);
            let forced =
                !forced_directions(&p.map, &p.overlay, cell, arrive, inv_on_arrival | p.overlay.items_at(cell))
                    .is_empty();
            assert!(
                inventory_jump_point || forced,
                "seed {seed}: optimal turn at {cell} (arrive {arrive}, leave {leave}) \
                 is neither forced nor an item pickup"
            );
        }
    }
    assert!(checked_turns > 50, "too few turns examined ({checked_turns})");
}
