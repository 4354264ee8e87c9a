//! Exact enumeration of lozenge tilings of doubly dented hexagons and
//! dented trapezoids.
//!
//! A *doubly dented hexagon* is a hexagonal region of the triangular
//! lattice with side lengths `a, b, c, a+b-c, c, b` (clockwise from the
//! top) from which up-pointing unit triangles at positions `X` and
//! down-pointing unit triangles at positions `Y` have been removed along
//! the horizontal diagonal of length `a + b`. A *dented trapezoid* has
//! sides `m, n, m+n, n` with up-pointing triangles at positions `S` removed
//! from its bottom side.
//!
//! The crate computes, with exact integer/rational/polynomial arithmetic
//! throughout (no floating point anywhere):
//!
//! - plain lozenge-tiling counts of both region families;
//! - `q`-generating functions graded by the total row-depth of
//!   right-pointing lozenges;
//! - counts of centrally symmetric tilings;
//! - the exact ratio of tiling counts (plain, `q`-weighted, or symmetric)
//!   between a hexagon and any "shuffled" hexagon obtained by flipping
//!   dents between the two sides of the diagonal;
//! - brute-force verification of all of the above by explicit enumeration
//!   over the unit-triangle geometry.
//!
//! Module map:
//!
//! - [`exact_arith`]: polynomials in `q` and ratios of them.
//! - [`regions`]: validated region descriptors and their cell grids.
//! - [`formulas`]: product formulas and diagonal-split sums.
//! - [`oracle`]: brute-force enumeration, counting, and weighting.
//! - [`shuffle`]: dent-shuffling instances and their count ratios.
//! - [`descriptors`]: JSON-facing serde descriptors.
//! - [`verify`]: randomized formula-vs-oracle consistency suites.

pub mod descriptors;
pub mod exact_arith;
pub mod formulas;
pub mod oracle;
pub mod regions;
pub mod shuffle;
pub mod verify;

pub use exact_arith::{QLaurentRatio, QPolynomial};
pub use regions::{CellGrid, DentSet, DentedHexagon, Tiling, Trapezoid};
pub use shuffle::ShuffleInstance;
