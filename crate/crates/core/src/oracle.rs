//! Brute-force ground truth, independent of the product formulas.
//!
//! Everything here works directly on the unit-triangle geometry of a
//! [`CellGrid`]: tilings are enumerated by depth-first branching on the
//! first uncovered cell in scan order, counts and weighted sums are
//! computed by the same branching with memoization on the covered-cell
//! frontier, and Schur functions are evaluated from their semistandard
//! tableau definition. None of these call into `formulas` — the two paths
//! must stay independent so they can check each other.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_arith::QPolynomial;
use crate::regions::{Cell, CellGrid, DentedHexagon, Lozenge, Orientation, Pointing, Tiling};

/// Errors from oracle entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// `weighted_count` needs one weight per row.
    #[error("need one weight per row: expected {expected}, got {got}")]
    WeightLengthMismatch { expected: u32, got: usize },
    /// Symmetric counting requires a centrally symmetric region.
    #[error("region is not centrally symmetric")]
    AsymmetricRegion,
}

/// Calls `visit` once per tiling of `grid`, in a deterministic order:
/// depth-first on the first uncovered cell in (row, x2) scan order, trying
/// orientations in the order left < vertical < right. Returning
/// `ControlFlow::Break(())` stops the enumeration early.
pub fn for_each_tiling<F>(grid: &CellGrid, mut visit: F)
where
    F: FnMut(&Tiling) -> ControlFlow<()>,
{
    let mut covered = vec![false; grid.num_cells()];
    let mut partial = Vec::new();
    let _ = search(grid, &mut covered, 0, &mut partial, &mut visit);
}

fn search<F>(
    grid: &CellGrid,
    covered: &mut [bool],
    scan_from: usize,
    partial: &mut Vec<Lozenge>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Tiling) -> ControlFlow<()>,
{
    let mut i = scan_from;
    while i < covered.len() && covered[i] {
        i += 1;
    }
    if i == covered.len() {
        return visit(&Tiling::new(partial.clone()));
    }
    let cell = grid.cells()[i];
    // Only lozenges whose anchor (scan-first cell) is `cell` can cover it:
    // any other covering lozenge would include an earlier, already covered
    // cell. Up-cells anchor vertical and right lozenges, down-cells left.
    let choices: [Option<Lozenge>; 2] = match cell.pointing {
        Pointing::Up => [
            Some(Lozenge::new(Orientation::Vertical, cell.row, cell.x2)),
            Some(Lozenge::new(Orientation::Right, cell.row, cell.x2)),
        ],
        Pointing::Down => [
            Some(Lozenge::new(Orientation::Left, cell.row, cell.x2)),
            None,
        ],
    };
    for lozenge in choices.into_iter().flatten() {
        let (_, partner) = lozenge.cells();
        let Some(j) = grid.index_of(&partner) else {
            continue;
        };
        if covered[j] {
            continue;
        }
        covered[i] = true;
        covered[j] = true;
        partial.push(lozenge);
        let flow = search(grid, covered, i + 1, partial, visit);
        partial.pop();
        covered[i] = false;
        covered[j] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// All tilings of `grid`, in enumeration order.
pub fn enumerate_tilings(grid: &CellGrid) -> Vec<Tiling> {
    let mut out = Vec::new();
    for_each_tiling(grid, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    out
}

/// The tiling at position `index` in enumeration order, without
/// materializing earlier ones.
pub fn nth_tiling(grid: &CellGrid, index: u64) -> Option<Tiling> {
    let mut seen = 0u64;
    let mut found = None;
    for_each_tiling(grid, |t| {
        if seen == index {
            found = Some(t.clone());
            ControlFlow::Break(())
        } else {
            seen += 1;
            ControlFlow::Continue(())
        }
    });
    found
}

/// The `q`-weight of one tiling: `q^(sum of rows of its right-lozenges)`.
pub fn tiling_weight_q(tiling: &Tiling) -> QPolynomial {
    QPolynomial::monomial(BigInt::one(), tiling.right_depth_sum())
}

/// Minimal ring interface for the memoized counting core.
trait Weight: Clone {
    fn empty_sum() -> Self;
    fn empty_product() -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Weight for BigInt {
    fn empty_sum() -> Self {
        Zero::zero()
    }
    fn empty_product() -> Self {
        One::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Weight for BigRational {
    fn empty_sum() -> Self {
        Zero::zero()
    }
    fn empty_product() -> Self {
        One::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Weight for QPolynomial {
    fn empty_sum() -> Self {
        QPolynomial::zero()
    }
    fn empty_product() -> Self {
        QPolynomial::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Memoized sum over tilings of the product of `right_weight(row)` over
/// right-lozenges. The memo key is (first uncovered cell, bitmask of
/// covered cells within the next 128 scan positions); the branching is the
/// same first-uncovered-cell rule as [`for_each_tiling`], so this equals
/// the naive sum over the enumeration.
fn frontier_sum<W: Weight>(grid: &CellGrid, right_weight: &dyn Fn(u32) -> W) -> W {
    struct Dp<'g, W> {
        grid: &'g CellGrid,
        memo: HashMap<(usize, u128), W>,
    }

    impl<W: Weight> Dp<'_, W> {
        // `mask` bit k means cell i+k is covered; bit 0 is always clear and
        // every cell before i is covered.
        fn solve(&mut self, i: usize, mask: u128, right_weight: &dyn Fn(u32) -> W) -> W {
            if i == self.grid.num_cells() {
                return W::empty_product();
            }
            if let Some(hit) = self.memo.get(&(i, mask)) {
                return hit.clone();
            }
            let cell = self.grid.cells()[i];
            let mut total = W::empty_sum();
            let choices: [(Option<Cell>, bool); 2] = match cell.pointing {
                Pointing::Up => [
                    (Some(Cell::down(cell.row + 1, cell.x2)), false),
                    (Some(Cell::down(cell.row, cell.x2 + 1)), true),
                ],
                Pointing::Down => [
                    (Some(Cell::up(cell.row, cell.x2 + 1)), false),
                    (None, false),
                ],
            };
            for (partner, is_right) in choices {
                let Some(j) = partner.and_then(|p| self.grid.index_of(&p)) else {
                    continue;
                };
                let span = j - i;
                assert!(span < 128, "region too wide for the frontier window");
                if mask >> span & 1 == 1 {
                    continue;
                }
                let mut next_mask = mask | 1 << span;
                let mut next_i = i;
                // Advance past the covered prefix to keep states canonical.
                loop {
                    next_mask >>= 1;
                    next_i += 1;
                    if next_mask & 1 == 0 {
                        break;
                    }
                }
                let sub = self.solve(next_i, next_mask, right_weight);
                let term = if is_right {
                    sub.mul_ref(&right_weight(cell.row))
                } else {
                    sub
                };
                total.add_assign_ref(&term);
            }
            self.memo.insert((i, mask), total.clone());
            total
        }
    }

    Dp {
        grid,
        memo: HashMap::new(),
    }
    .solve(0, 0, right_weight)
}

/// Number of tilings of `grid` (1 for the empty grid).
pub fn count_tilings(grid: &CellGrid) -> BigInt {
    frontier_sum(grid, &|_| BigInt::one())
}

/// Sum of [`tiling_weight_q`] over all tilings: the `q`-generating
/// function of `grid`. Evaluating it at 1 recovers [`count_tilings`].
pub fn generating_function_q(grid: &CellGrid) -> QPolynomial {
    frontier_sum(grid, &|row| {
        QPolynomial::monomial(BigInt::one(), row as u64)
    })
}

/// Sum over tilings of the product of `weights[row - 1]` over
/// right-lozenges; generalizes counting (all weights 1) and, for
/// trapezoids, evaluates the Schur function of the dent partition at the
/// weight vector.
pub fn weighted_count(
    grid: &CellGrid,
    weights: &[BigRational],
) -> Result<BigRational, OracleError> {
    if weights.len() != grid.height() as usize {
        return Err(OracleError::WeightLengthMismatch {
            expected: grid.height(),
            got: weights.len(),
        });
    }
    Ok(frontier_sum(grid, &|row| weights[row as usize - 1].clone()))
}

/// Like [`weighted_count`] but with one polynomial weight per row; used to
/// check diagonal-split factorizations where the lower part keeps its
/// depth-graded weights.
pub fn weighted_count_poly(
    grid: &CellGrid,
    row_weights: &[QPolynomial],
) -> Result<QPolynomial, OracleError> {
    if row_weights.len() != grid.height() as usize {
        return Err(OracleError::WeightLengthMismatch {
            expected: grid.height(),
            got: row_weights.len(),
        });
    }
    Ok(frontier_sum(grid, &|row| {
        row_weights[row as usize - 1].clone()
    }))
}

/// Schur function `s(parts)` evaluated at `points`, straight from the
/// definition: sum over semistandard tableaux of shape `parts` with entries
/// in `1..=points.len()` (rows weakly increase, columns strictly increase)
/// of the product of `points[entry - 1]`. Returns 0 when the shape has
/// more nonzero rows than there are points.
pub fn schur_ssyt(parts: &[u32], points: &[BigRational]) -> BigRational {
    let shape: Vec<usize> = parts
        .iter()
        .take_while(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    if shape.is_empty() {
        return BigRational::one();
    }
    if shape.len() > points.len() {
        return BigRational::zero();
    }
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut total = BigRational::zero();
    fill(&mut rows, 0, 0, points, BigRational::one(), &mut total);
    return total;

    fn fill(
        rows: &mut Vec<Vec<usize>>,
        r: usize,
        c: usize,
        points: &[BigRational],
        acc: BigRational,
        total: &mut BigRational,
    ) {
        if r == rows.len() {
            *total += acc;
            return;
        }
        let (next_r, next_c) = if c + 1 < rows[r].len() {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let min_entry = {
            let left = if c > 0 { rows[r][c - 1] } else { 1 };
            let above = if r > 0 && c < rows[r - 1].len() {
                rows[r - 1][c] + 1
            } else {
                1
            };
            left.max(above)
        };
        for entry in min_entry..=points.len() {
            rows[r][c] = entry;
            let acc2 = &acc * &points[entry - 1];
            fill(rows, next_r, next_c, points, acc2, total);
        }
    }
}

/// True iff the grid's present-cell set is invariant under the 180-degree
/// rotation (requires a hexagon grid with `b = c`).
fn grid_is_rotation_invariant(grid: &CellGrid) -> bool {
    grid.cells().iter().all(|cell| {
        grid.rotate180_cell(cell)
            .is_some_and(|image| grid.contains(&image))
    })
}

/// Number of tilings fixed by the 180-degree rotation, by enumerating all
/// tilings and filtering; errors unless the region is centrally symmetric.
pub fn count_symmetric_tilings(grid: &CellGrid) -> Result<BigInt, OracleError> {
    if !grid_is_rotation_invariant(grid) {
        return Err(OracleError::AsymmetricRegion);
    }
    let mut count = BigInt::zero();
    for_each_tiling(grid, |t| {
        if grid.rotate180_tiling(t).as_ref() == Some(t) {
            count += 1;
        }
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Number of rotation-fixed tilings via the half-region bijection: a
/// symmetric tiling is determined by its upper half, so the count is the
/// sum over reflection-invariant diagonal sets `Z` of the tiling count of
/// the upper trapezoid with dents `X ∪ Z`. Much cheaper than filtering and
/// still formula-free.
pub fn count_symmetric_via_upper_half(h: &DentedHexagon) -> Result<BigInt, OracleError> {
    if !h.is_centrally_symmetric() {
        return Err(OracleError::AsymmetricRegion);
    }
    let mut total = BigInt::zero();
    for z in h.symmetric_diagonal_sets() {
        let (upper, _) = h
            .split_along_diagonal(&z)
            .expect("symmetric sets are admissible");
        total += count_tilings(&upper.build_cells());
    }
    Ok(total)
}
