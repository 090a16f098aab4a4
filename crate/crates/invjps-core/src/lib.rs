//! Grid pathfinding with inventory-conditioned traversability.
//!
//! The classic setting: an 8-connected uniform-cost grid with blocked cells,
//! straight steps costing 1 and diagonals √2, corner cutting disallowed. On
//! top of that, cells may hold items (keys) and cells may require items
//! (doors): a door is traversable only while the agent holds at least one of
//! the items it lists, and items are picked up automatically by standing on
//! their cell. Whether a cell is blocked therefore depends on the path taken
//! so far.
//!
//! The crate provides:
//!
//! - exact octile cost arithmetic ([`Cost`]) and the shared grid model;
//! - reference searches: plain A* ([`astar`]), inventory-driven A*
//!   ([`inv_astar`]), and a heuristic-free uniform-cost oracle
//!   ([`dijkstra_oracle`]) that defines ground truth;
//! - Jump Point Search ([`jps`]) and its inventory-driven extension
//!   ([`invjps`]), which keeps JPS's pruning while handling key pickups by
//!   treating item cells as scan-terminating jump points and re-expanding
//!   fresh pickups in all directions;
//! - a path validator ([`validate_path`]) and deterministic, seeded
//!   scenario generators for benchmark experiments.
//!
//! `no_std` compatible (with `alloc`); the default `std` feature adds
//! wall-clock timing and time limits.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub(crate) mod collections {
    pub(crate) use hashbrown::HashMap;
}

pub mod astar;
pub mod cost;
pub mod grid;
pub mod inventory;
pub mod invjps;
pub mod jps;
pub mod moves;
pub mod oracle;
pub mod problem;
pub mod scenario;
pub mod search;
pub mod validate;

pub use astar::{astar, astar_with, inv_astar, inv_astar_with};
pub use cost::{octile, Cost};
pub use grid::{Cell, Direction, DirectionSet, GridMap};
pub use inventory::{Inventory, InventoryOverlay, ItemId, OverlayError, MAX_ITEM_IDS};
pub use invjps::{diagonal_first, inv_jump, inv_successor_directions, invjps, invjps_with, InvNode};
pub use jps::{
    fill_path, forced_directions, jps, jps_with, jump, natural_directions, JumpOutcome,
};
pub use moves::{is_traversable, legal_moves, step_allowed};
pub use oracle::{dijkstra_oracle, dijkstra_oracle_path};
pub use problem::{ProblemError, ProblemInstance};
pub use scenario::{
    gen_detour, gen_detour_with, gen_path_keys, gen_random_keys, gen_random_map, gen_sequential,
    gen_unreachable, splitmix64, sub_seed, DetourConfig, GenError, GenKind, GenSpec, Placement,
};
pub use search::{
    OpenEvent, Path, SearchConfig, SearchLimits, SearchOutcome, SearchState, SearchStats,
    Termination,
};
pub use validate::{validate_path, PathViolation, ValidationReport};
