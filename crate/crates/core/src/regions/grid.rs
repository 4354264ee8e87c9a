//! Explicit unit-triangle geometry: cells, lozenges, tilings, and the
//! 180-degree rotation used for centrally symmetric counting.
//!
//! Coordinates: a cell lives in a `row` (1-based from the region's top
//! horizontal line) and carries a half-unit horizontal coordinate `x2` —
//! twice the x-position of the left end of its horizontal edge (base of an
//! up-triangle, top side of a down-triangle). Within a row, `x2` increases
//! by one between horizontally adjacent triangles, and an up-triangle at
//! `x2` shares its upper-right edge with the down-triangle at `x2 + 1`.

use super::{DentSet, DentedHexagon, Trapezoid};
use std::collections::HashMap;

/// Which way a unit triangle points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pointing {
    Up,
    Down,
}

/// A unit triangle at (`row`, `x2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub x2: u32,
    pub pointing: Pointing,
}

impl Cell {
    pub fn up(row: u32, x2: u32) -> Self {
        Cell {
            row,
            x2,
            pointing: Pointing::Up,
        }
    }

    pub fn down(row: u32, x2: u32) -> Self {
        Cell {
            row,
            x2,
            pointing: Pointing::Down,
        }
    }
}

/// Lozenge orientation. A `Right` lozenge pairs an up-triangle with the
/// down-triangle to its upper right and is the only orientation that carries
/// a nontrivial weight (`q^row`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Left,
    Vertical,
    Right,
}

/// A lozenge, identified by its orientation and one anchor cell:
/// `Right`/`Vertical` anchor at their up-triangle, `Left` at its
/// down-triangle. The anchor is always the lexicographically first of the
/// two cells in (row, x2) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lozenge {
    pub row: u32,
    pub x2: u32,
    pub orientation: Orientation,
}

impl Lozenge {
    pub fn new(orientation: Orientation, row: u32, x2: u32) -> Self {
        Lozenge {
            row,
            x2,
            orientation,
        }
    }

    /// The two unit triangles this lozenge covers.
    pub fn cells(&self) -> (Cell, Cell) {
        match self.orientation {
            Orientation::Right => (
                Cell::up(self.row, self.x2),
                Cell::down(self.row, self.x2 + 1),
            ),
            Orientation::Left => (
                Cell::down(self.row, self.x2),
                Cell::up(self.row, self.x2 + 1),
            ),
            Orientation::Vertical => (
                Cell::up(self.row, self.x2),
                Cell::down(self.row + 1, self.x2),
            ),
        }
    }

    /// Row of the lozenge's bottom horizontal side — the grading used by
    /// q-weights (`Right` lozenges weigh `q^row`, others weigh 1). For a
    /// `Vertical` lozenge, which has no horizontal side, this is the row of
    /// its horizontal diagonal.
    pub fn weight_row(&self) -> u32 {
        self.row
    }
}

/// Shape tag retained by a [`CellGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridShape {
    Hexagon { a: u32, b: u32, c: u32 },
    Trapezoid { m: u32, n: u32 },
}

/// A tiling: a set of lozenges, kept sorted by (row, x2, orientation).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling(Vec<Lozenge>);

impl Tiling {
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort_unstable();
        Tiling(lozenges)
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum over right-lozenges of their row: the exponent of this tiling's
    /// `q`-weight.
    pub fn right_depth_sum(&self) -> u64 {
        self.0
            .iter()
            .filter(|l| l.orientation == Orientation::Right)
            .map(|l| l.row as u64)
            .sum()
    }
}

/// The present unit triangles of a region, sorted by (row, x2), with an
/// index for O(1) lookup. Also remembers the removed (dent) triangles so
/// renderers can mark them.
#[derive(Debug, Clone)]
pub struct CellGrid {
    shape: GridShape,
    height: u32,
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
    removed: Vec<Cell>,
}

impl CellGrid {
    pub(super) fn from_hexagon(h: &DentedHexagon) -> Self {
        let (a, b, c) = (h.a(), h.b(), h.c());
        let mut builder = GridBuilder::default();
        // Upper trapezoid: row r has a+r up-triangles, a+r-1 down-triangles;
        // row b up-triangle k sits over diagonal segment k.
        for r in 1..=b {
            for k in 1..=(a + r) {
                let cell = Cell::up(r, (b - r) + 2 * (k - 1));
                builder.push(cell, r == b && h.x().contains(k));
            }
            for j in 1..=(a + r - 1) {
                builder.push(Cell::down(r, (b - r + 1) + 2 * (j - 1)), false);
            }
        }
        // Lower inverted trapezoid: row b+s has a+b-s+1 down-triangles,
        // a+b-s up-triangles; row b+1 down-triangle j hangs under segment j.
        for s in 1..=c {
            for j in 1..=(a + b - s + 1) {
                let cell = Cell::down(b + s, (s - 1) + 2 * (j - 1));
                builder.push(cell, s == 1 && h.y().contains(j));
            }
            for k in 1..=(a + b - s) {
                builder.push(Cell::up(b + s, s + 2 * (k - 1)), false);
            }
        }
        builder.finish(GridShape::Hexagon { a, b, c }, b + c)
    }

    pub(super) fn from_trapezoid(t: &Trapezoid) -> Self {
        let (m, n) = (t.m(), t.n());
        let mut builder = GridBuilder::default();
        // Row r has m+r up-triangles, m+r-1 down-triangles; bottom-row
        // up-triangle k sits on bottom segment k.
        for r in 1..=n {
            for k in 1..=(m + r) {
                let cell = Cell::up(r, (n - r) + 2 * (k - 1));
                builder.push(cell, r == n && t.dents().contains(k));
            }
            for j in 1..=(m + r - 1) {
                builder.push(Cell::down(r, (n - r + 1) + 2 * (j - 1)), false);
            }
        }
        builder.finish(GridShape::Trapezoid { m, n }, n)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    /// Number of rows (`b + c` for hexagons, `n` for trapezoids).
    pub fn height(&self) -> u32 {
        self.height
    }

    /// Present cells, sorted by (row, x2) — the oracle's scan order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Removed dent triangles (for rendering).
    pub fn removed_cells(&self) -> &[Cell] {
        &self.removed
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.index.contains_key(cell)
    }

    /// Position of `cell` in scan order.
    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn up_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.pointing == Pointing::Up)
            .count()
    }

    pub fn down_count(&self) -> usize {
        self.cells.len() - self.up_count()
    }

    /// True iff `tiling` covers every present cell exactly once using only
    /// present cells.
    pub fn is_valid_tiling(&self, tiling: &Tiling) -> bool {
        let mut covered = vec![false; self.cells.len()];
        for l in tiling.lozenges() {
            let (p, q) = l.cells();
            for cell in [p, q] {
                match self.index_of(&cell) {
                    Some(i) if !covered[i] => covered[i] = true,
                    _ => return false,
                }
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// For a hexagon grid, the row just above the long diagonal.
    pub fn diagonal_row(&self) -> Option<u32> {
        match self.shape {
            GridShape::Hexagon { b, .. } => Some(b),
            GridShape::Trapezoid { .. } => None,
        }
    }

    /// Diagonal segments crossed by vertical lozenges of `tiling` (hexagons
    /// only): a vertical lozenge at (row b, x2) crosses segment x2/2 + 1.
    pub fn diagonal_crossings(&self, tiling: &Tiling) -> Option<DentSet> {
        let b = self.diagonal_row()?;
        let positions = tiling
            .lozenges()
            .iter()
            .filter(|l| l.orientation == Orientation::Vertical && l.row == b)
            .map(|l| l.x2 / 2 + 1)
            .collect();
        Some(DentSet::new(positions).expect("crossings of a sorted tiling are sorted"))
    }

    /// The 180-degree rotation about the center of the hexagon's diagonal.
    /// Defined only for hexagon grids with `b = c` (where the bounding
    /// outline is invariant); dents need not be symmetric — an image cell
    /// may then fall outside the region.
    pub fn rotate180_cell(&self, cell: &Cell) -> Option<Cell> {
        let (a, b) = match self.shape {
            GridShape::Hexagon { a, b, c } if b == c => (a, b),
            _ => return None,
        };
        let w = 2 * (a + b) - 2;
        Some(match cell.pointing {
            Pointing::Up => Cell::down(2 * b + 1 - cell.row, w - cell.x2),
            Pointing::Down => Cell::up(2 * b + 1 - cell.row, w - cell.x2),
        })
    }

    /// Image of a lozenge under the 180-degree rotation; orientation classes
    /// are preserved.
    pub fn rotate180_lozenge(&self, l: &Lozenge) -> Option<Lozenge> {
        let (a, b) = match self.shape {
            GridShape::Hexagon { a, b, c } if b == c => (a, b),
            _ => return None,
        };
        let w = 2 * (a + b) - 2;
        Some(match l.orientation {
            Orientation::Right => Lozenge::new(Orientation::Right, 2 * b + 1 - l.row, w - 1 - l.x2),
            Orientation::Left => Lozenge::new(Orientation::Left, 2 * b + 1 - l.row, w - 1 - l.x2),
            Orientation::Vertical => Lozenge::new(Orientation::Vertical, 2 * b - l.row, w - l.x2),
        })
    }

    /// Image of a whole tiling under the 180-degree rotation.
    pub fn rotate180_tiling(&self, tiling: &Tiling) -> Option<Tiling> {
        let mut mapped = Vec::with_capacity(tiling.len());
        for l in tiling.lozenges() {
            mapped.push(self.rotate180_lozenge(l)?);
        }
        Some(Tiling::new(mapped))
    }
}

#[cfg(test)]
impl CellGrid {
    /// Builds an arbitrary grid (tests only): lets oracle tests exercise
    /// regions that no validated descriptor can produce.
    pub(crate) fn from_raw_cells_for_tests(cells: Vec<Cell>, height: u32) -> Self {
        let mut builder = GridBuilder::default();
        for cell in cells {
            builder.push(cell, false);
        }
        builder.finish(GridShape::Trapezoid { m: 0, n: height }, height)
    }
}

#[derive(Default)]
struct GridBuilder {
    cells: Vec<Cell>,
    removed: Vec<Cell>,
}

impl GridBuilder {
    fn push(&mut self, cell: Cell, is_removed: bool) {
        if is_removed {
            self.removed.push(cell);
        } else {
            self.cells.push(cell);
        }
    }

    fn finish(mut self, shape: GridShape, height: u32) -> CellGrid {
        self.cells.sort_unstable();
        self.removed.sort_unstable();
        let index = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        CellGrid {
            shape,
            height,
            cells: self.cells,
            index,
            removed: self.removed,
        }
    }
}
