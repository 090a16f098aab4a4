//! Deterministic, seeded generators for benchmark instances: random key
//! scatter, key placement relative to a reference path, sequential-door and
//! nested-detour synthetic maps, and goal sealing.
//!
//! Every generator is a pure function of its inputs and a `u64` seed. The
//! random stream is ChaCha8 seeded via `seed_from_u64`, and each generator
//! documents its draw order, so regenerating with the same arguments yields
//! identical output on any platform.

use core::fmt;

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::{Cell, GridMap};
use crate::inventory::{Inventory, InventoryOverlay, ItemId, MAX_ITEM_IDS};
use crate::problem::{ProblemError, ProblemInstance};
use crate::search::Path;

/// SplitMix64 step, used to derive independent sub-seeds from one master
/// seed without correlating the resulting ChaCha streams.
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Derives a sub-seed for stream `index` of a named family.
pub fn sub_seed(master: u64, family: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(family.wrapping_mul(0x9e3779b97f4a7c15) ^ index))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Where unnecessary keys go relative to a reference path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Placement {
    /// Scattered in the smallest neighbourhood of the start that fits them.
    Beg,
    /// Evenly spaced along the reference path.
    Mid,
    /// Scattered in the smallest neighbourhood of the goal that fits them.
    End,
}

impl Placement {
    pub const ALL: [Placement; 3] = [Placement::Beg, Placement::Mid, Placement::End];

    pub fn as_str(self) -> &'static str {
        match self {
            Placement::Beg => "beg",
            Placement::Mid => "mid",
            Placement::End => "end",
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Placement {
    type Err = &'static str;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "beg" => Ok(Placement::Beg),
            "mid" => Ok(Placement::Mid),
            "end" => Ok(Placement::End),
            _ => Err("expected one of: beg, mid, end"),
        }
    }
}

/// What a [`GenSpec`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    RandomKeys,
    PathKeys(Placement),
    Sequential,
    Detour,
    Unreachable,
}

/// A fully seeded generator request; the seed determines the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub key_count: u32,
    pub width: i32,
    pub height: i32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    /// Not enough eligible cells to place the requested keys.
    InsufficientCells { wanted: u32, available: usize },
    /// More keys requested than distinct item ids exist.
    TooManyItems(u32),
    /// Grid too small for the requested wall or room layout.
    DegenerateDimensions,
    /// Rejection sampling gave up; retry with a different seed.
    AttemptCapExceeded,
    /// The goal cannot be sealed without blocking the start.
    StartAdjacentToGoal,
    /// A generated instance failed validation (internal bug if it happens).
    Invalid(ProblemError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InsufficientCells { wanted, available } => {
                write!(f, "cannot place {wanted} keys on {available} eligible cells")
            }
            GenError::TooManyItems(n) => {
                write!(f, "{n} keys exceed the {MAX_ITEM_IDS} distinct item ids")
            }
            GenError::DegenerateDimensions => write!(f, "grid too small for this layout"),
            GenError::AttemptCapExceeded => {
                write!(f, "placement attempt cap exceeded; retry with another seed")
            }
            GenError::StartAdjacentToGoal => {
                write!(f, "sealing the goal would block the start cell")
            }
            GenError::Invalid(e) => write!(f, "generated instance invalid: {e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GenError {}

impl From<ProblemError> for GenError {
    fn from(e: ProblemError) -> Self {
        GenError::Invalid(e)
    }
}

/// A random map with roughly `blocked_permille`/1000 of cells blocked,
/// drawn independently per cell in row-major order.
pub fn gen_random_map(width: i32, height: i32, blocked_permille: u32, seed: u64) -> GridMap {
    let mut map = GridMap::open(width, height);
    let mut rng = rng(seed);
    for y in 0..height {
        for x in 0..width {
            if rng.random_ratio(blocked_permille, 1000) {
                map.set_blocked(Cell::new(x, y), true);
            }
        }
    }
    map
}

fn item(n: u32) -> ItemId {
    ItemId::new(n as u16).expect("generator key counts are checked against MAX_ITEM_IDS")
}

/// `n` distinct keys on distinct passable cells chosen uniformly at random,
/// never on an excluded cell (callers pass start and goal). No doors, so
/// the keys are never necessary.
///
/// Draw order: one partial Fisher-Yates pass over the eligible cells in
/// row-major order.
pub fn gen_random_keys(
    map: &GridMap,
    n: u32,
    exclude: &[Cell],
    seed: u64,
) -> Result<InventoryOverlay, GenError> {
    if n > MAX_ITEM_IDS as u32 {
        return Err(GenError::TooManyItems(n));
    }
    let mut candidates: Vec<Cell> = map
        .passable_cells()
        .filter(|c| !exclude.contains(c))
        .collect();
    if candidates.len() < n as usize {
        return Err(GenError::InsufficientCells { wanted: n, available: candidates.len() });
    }
    let mut rng = rng(seed);
    let mut overlay = InventoryOverlay::new();
    for i in 0..n as usize {
        let j = rng.random_range(i..candidates.len());
        candidates.swap(i, j);
        overlay.add_item(candidates[i], item(i as u32));
    }
    Ok(overlay)
}

/// Passable cells within Chebyshev distance `radius` of `centre`, excluding
/// `centre` itself and `exclude`, ring by ring, row-major within each ring.
fn neighbourhood(map: &GridMap, centre: Cell, radius: i32, exclude: &[Cell]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for r in 1..=radius {
        for y in (centre.y - r)..=(centre.y + r) {
            for x in (centre.x - r)..=(centre.x + r) {
                let c = Cell::new(x, y);
                let dist = (x - centre.x).abs().max((y - centre.y).abs());
                if dist == r && map.is_passable(c) && !exclude.contains(&c) {
                    cells.push(c);
                }
            }
        }
    }
    cells
}

/// `n` distinct keys relative to a reference path that solves the key-free
/// problem. BEG and END scatter them within the smallest Chebyshev radius
/// of the start (resp. goal) holding `n` eligible cells; MID pins them to
/// (or to the nearest free passable cell of) the evenly spaced path indices
/// `⌊i·len/(n+1)⌋` for `i = 1..n`, where `len` is the step count.
///
/// Draw order (BEG/END): one partial Fisher-Yates pass over the minimal
/// neighbourhood. MID draws nothing.
pub fn gen_path_keys(
    map: &GridMap,
    reference: &Path,
    placement: Placement,
    n: u32,
    seed: u64,
) -> Result<InventoryOverlay, GenError> {
    if n > MAX_ITEM_IDS as u32 {
        return Err(GenError::TooManyItems(n));
    }
    let start = *reference.cells.first().expect("reference path is nonempty");
    let goal = *reference.cells.last().expect("reference path is nonempty");
    let exclude = [start, goal];
    let mut overlay = InventoryOverlay::new();

    match placement {
        Placement::Beg | Placement::End => {
            let centre = if placement == Placement::Beg { start } else { goal };
            let max_radius = map.width().max(map.height());
            let mut chosen = None;
            for radius in 1..=max_radius {
                let cells = neighbourhood(map, centre, radius, &exclude);
                if cells.len() >= n as usize {
                    chosen = Some(cells);
                    break;
                }
            }
            let mut cells = chosen.ok_or(GenError::InsufficientCells {
                wanted: n,
                available: neighbourhood(map, centre, max_radius, &exclude).len(),
            })?;
            let mut rng = rng(seed);
            for i in 0..n as usize {
                let j = rng.random_range(i..cells.len());
                cells.swap(i, j);
                overlay.add_item(cells[i], item(i as u32));
            }
        }
        Placement::Mid => {
            let len = reference.cells.len() - 1;
            let mut used: Vec<Cell> = Vec::with_capacity(n as usize + 2);
            used.push(start);
            used.push(goal);
            for i in 1..=n as usize {
                let pos = i * len / (n as usize + 1);
                let want = reference.cells[pos];
                let cell = if !used.contains(&want) && map.is_passable(want) {
                    want
                } else {
                    // Nearest passable unused cell, ring by ring.
                    let max_radius = map.width().max(map.height());
                    (1..=max_radius)
                        .flat_map(|r| neighbourhood(map, want, r, &used))
                        .find(|c| !used.contains(c))
                        .ok_or(GenError::InsufficientCells { wanted: n, available: 0 })?
                };
                used.push(cell);
                overlay.add_item(cell, item(i as u32 - 1));
            }
        }
    }
    Ok(overlay)
}

/// An empty map split by `n` full-height vertical walls into `n + 1`
/// regions, one door per wall. Door `i` needs key `i`, and key `i` always
/// lies in the region directly before its wall, so the doors must be
/// crossed strictly in order; the goal sits behind the last wall.
///
/// Draw order: door rows for walls 1..n, then start, then goal, then key
/// cells for doors 1..n (resampled while colliding with the start).
pub fn gen_sequential(
    width: i32,
    height: i32,
    n: u32,
    seed: u64,
) -> Result<ProblemInstance, GenError> {
    if n < 1 || n > MAX_ITEM_IDS as u32 {
        return Err(GenError::TooManyItems(n.max(1)));
    }
    if width < 2 * (n as i32 + 1) || height < 2 {
        return Err(GenError::DegenerateDimensions);
    }
    let walls: Vec<i32> = (1..=n as i32).map(|i| i * width / (n as i32 + 1)).collect();
    for (i, w) in walls.iter().enumerate() {
        let lo = if i == 0 { 0 } else { walls[i - 1] + 1 };
        if *w - lo < 1 || (i + 1 == walls.len() && width - 1 - *w < 1) {
            return Err(GenError::DegenerateDimensions);
        }
    }

    let mut rng = rng(seed);
    let mut map = GridMap::open(width, height);
    let mut overlay = InventoryOverlay::new();

    let mut door_rows = Vec::with_capacity(n as usize);
    for _ in 0..n {
        door_rows.push(rng.random_range(0..height));
    }
    for (i, (&col, &row)) in walls.iter().zip(door_rows.iter()).enumerate() {
        for y in 0..height {
            if y != row {
                map.set_blocked(Cell::new(col, y), true);
            }
        }
        overlay
            .set_requirement(Cell::new(col, row), Inventory::single(item(i as u32)))
            .expect("one door per wall column");
    }

    let region = |i: usize| -> (i32, i32) {
        let lo = if i == 0 { 0 } else { walls[i - 1] + 1 };
        let hi = if i == walls.len() { width - 1 } else { walls[i] - 1 };
        (lo, hi)
    };

    let (lo, hi) = region(0);
    let start = Cell::new(rng.random_range(lo..=hi), rng.random_range(0..height));
    let (lo, hi) = region(n as usize);
    let goal = Cell::new(rng.random_range(lo..=hi), rng.random_range(0..height));

    for i in 0..n as usize {
        let (lo, hi) = region(i);
        let key = loop {
            let c = Cell::new(rng.random_range(lo..=hi), rng.random_range(0..height));
            if c != start {
                break c;
            }
        };
        overlay.add_item(key, item(i as u32));
    }

    ProblemInstance::new(map, overlay, start, goal).map_err(GenError::from)
}

/// Knobs for [`gen_detour`]: square room side (odd, default 9) and the
/// rejection-sampling attempt cap (default 1000).
#[derive(Clone, Copy, Debug)]
pub struct DetourConfig {
    pub room_side: i32,
    pub max_attempts: u32,
}

impl Default for DetourConfig {
    fn default() -> Self {
        DetourConfig { room_side: 9, max_attempts: 1000 }
    }
}

/// Budgeted random draws for rejection sampling.
struct Draws {
    rng: ChaCha8Rng,
    left: u32,
}

impl Draws {
    fn spend(&mut self) -> Result<(), GenError> {
        if self.left == 0 {
            return Err(GenError::AttemptCapExceeded);
        }
        self.left -= 1;
        Ok(())
    }

    fn cell(&mut self, lo_x: i32, hi_x: i32, lo_y: i32, hi_y: i32) -> Result<Cell, GenError> {
        self.spend()?;
        Ok(Cell::new(
            self.rng.random_range(lo_x..=hi_x),
            self.rng.random_range(lo_y..=hi_y),
        ))
    }

    fn index(&mut self, len: usize) -> Result<usize, GenError> {
        self.spend()?;
        Ok(self.rng.random_range(0..len))
    }
}

#[derive(Clone, Copy)]
struct Room {
    min: Cell,
    max: Cell,
}

impl Room {
    fn around(centre: Cell, half: i32) -> Room {
        Room {
            min: Cell::new(centre.x - half, centre.y - half),
            max: Cell::new(centre.x + half, centre.y + half),
        }
    }

    fn contains(&self, c: Cell, margin: i32) -> bool {
        c.x >= self.min.x - margin
            && c.x <= self.max.x + margin
            && c.y >= self.min.y - margin
            && c.y <= self.max.y + margin
    }

    fn intersects_inflated(&self, other: &Room) -> bool {
        // Other inflated by one keeps a free ring between any two rooms.
        !(self.max.x < other.min.x - 1
            || self.min.x > other.max.x + 1
            || self.max.y < other.min.y - 1
            || self.min.y > other.max.y + 1)
    }

    /// Perimeter cells excluding the four corners, in deterministic order:
    /// bottom row, top row, then left and right columns.
    fn side_cells(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for x in self.min.x + 1..self.max.x {
            v.push(Cell::new(x, self.min.y));
        }
        for x in self.min.x + 1..self.max.x {
            v.push(Cell::new(x, self.max.y));
        }
        for y in self.min.y + 1..self.max.y {
            v.push(Cell::new(self.min.x, y));
        }
        for y in self.min.y + 1..self.max.y {
            v.push(Cell::new(self.max.x, y));
        }
        v
    }
}

/// A nested detour map: the goal sits in a room whose door needs key `n`;
/// key `n` sits in a room whose door needs key `n − 1`; and so on down to
/// key 1 in the open. Every door is reachable from the start, but solving
/// demands the full back-and-forth chain.
///
/// Rooms are disjoint squares with at least one free cell between any two
/// and between a room and the border. Draw order: goal centre, then per
/// chain link (outermost door first) the door cell and the next key
/// position, then the start.
pub fn gen_detour(width: i32, height: i32, n: u32, seed: u64) -> Result<ProblemInstance, GenError> {
    gen_detour_with(width, height, n, seed, &DetourConfig::default())
}

pub fn gen_detour_with(
    width: i32,
    height: i32,
    n: u32,
    seed: u64,
    config: &DetourConfig,
) -> Result<ProblemInstance, GenError> {
    if n < 1 || n > MAX_ITEM_IDS as u32 {
        return Err(GenError::TooManyItems(n.max(1)));
    }
    let side = config.room_side;
    if side < 3 || side % 2 == 0 {
        return Err(GenError::DegenerateDimensions);
    }
    let half = side / 2;
    // A room plus its free ring must fit in bounds.
    if width < side + 2 || height < side + 2 {
        return Err(GenError::DegenerateDimensions);
    }

    let mut draws = Draws { rng: rng(seed), left: config.max_attempts };

    let centre_ok = |c: Cell, rooms: &[Room]| -> bool {
        let room = Room::around(c, half);
        rooms.iter().all(|r| !room.intersects_inflated(r))
    };

    let mut rooms: Vec<Room> = Vec::with_capacity(n as usize);
    let mut overlay = InventoryOverlay::new();
    let mut map = GridMap::open(width, height);
    let mut key_cells: Vec<Cell> = Vec::with_capacity(n as usize);

    // Valid room centres keep the inflated room in bounds.
    let (cx_lo, cx_hi) = (half + 1, width - 2 - half);
    let (cy_lo, cy_hi) = (half + 1, height - 2 - half);

    let goal = loop {
        let c = draws.cell(cx_lo, cx_hi, cy_lo, cy_hi)?;
        if centre_ok(c, &rooms) {
            break c;
        }
    };

    // Walk the chain outward: room around the goal first (door n), then a
    // room around each key down to key 2; key 1 stays in the open.
    let mut target = goal;
    for link in (1..=n).rev() {
        let room = Room::around(target, half);
        let sides = room.side_cells();
        let door = sides[draws.index(sides.len())?];
        for x in room.min.x..=room.max.x {
            for y in room.min.y..=room.max.y {
                let c = Cell::new(x, y);
                let on_perimeter =
                    x == room.min.x || x == room.max.x || y == room.min.y || y == room.max.y;
                if on_perimeter && c != door {
                    map.set_blocked(c, true);
                }
            }
        }
        overlay
            .set_requirement(door, Inventory::single(item(link - 1)))
            .expect("door cells are distinct across disjoint rooms");
        rooms.push(room);

        let key_cell = if link > 1 {
            // This key gets its own room next turn: must be a valid centre.
            loop {
                let c = draws.cell(cx_lo, cx_hi, cy_lo, cy_hi)?;
                if centre_ok(c, &rooms) {
                    break c;
                }
            }
        } else {
            // Key 1 lies in the open, outside every room's free ring.
            loop {
                let c = draws.cell(0, width - 1, 0, height - 1)?;
                if rooms.iter().all(|r| !r.contains(c, 1)) {
                    break c;
                }
            }
        };
        overlay.add_item(key_cell, item(link - 1));
        key_cells.push(key_cell);
        target = key_cell;
    }

    let start = loop {
        let c = draws.cell(0, width - 1, 0, height - 1)?;
        if rooms.iter().all(|r| !r.contains(c, 1)) && !key_cells.contains(&c) {
            break c;
        }
    };

    ProblemInstance::new(map, overlay, start, goal).map_err(GenError::from)
}

/// Seals the goal by blocking its (in-bounds) neighbouring cells, removing
/// any keys or doors that sat on them. The result is unsolvable under every
/// inventory. Fails if the start is one of the cells to be walled.
pub fn gen_unreachable(instance: &ProblemInstance) -> Result<ProblemInstance, GenError> {
    let goal = instance.goal;
    let ring: Vec<Cell> = crate::grid::Direction::ALL
        .into_iter()
        .map(|d| goal.step(d))
        .filter(|c| instance.map.in_bounds(*c))
        .collect();
    if ring.contains(&instance.start) {
        return Err(GenError::StartAdjacentToGoal);
    }
    let mut map = instance.map.clone();
    for &c in &ring {
        map.set_blocked(c, true);
    }
    let mut overlay = InventoryOverlay::new();
    for (cell, items) in instance.overlay.key_cells() {
        if !ring.contains(&cell) {
            for id in items.iter() {
                overlay.add_item(cell, id);
            }
        }
    }
    for (cell, req) in instance.overlay.door_cells() {
        if !ring.contains(&cell) {
            overlay
                .set_requirement(cell, req)
                .expect("door cells were unique in the source overlay");
        }
    }
    ProblemInstance::new(map, overlay, instance.start, goal).map_err(GenError::from)
}
