//! Regions of the triangular lattice: dent sets, dented trapezoids, doubly
//! dented hexagons, and their unit-triangle cell grids.
//!
//! Geometry conventions used throughout the crate:
//!
//! - Rows of unit triangles are numbered `1..=height` from the region's top
//!   horizontal line; the bottom side of a lozenge lying in row `r` is at
//!   distance `r * sqrt(3)/2` from that line.
//! - The hexagon `V_{a,b,c}(X, Y)` has side lengths `a, b, c, a+b-c, c, b`
//!   clockwise from the top. Its horizontal diagonal `l` has length `a + b`
//!   and sits below row `b`; its unit segments are labeled `1..=a+b` from the
//!   left. `X` marks removed up-pointing triangles just above `l`, `Y`
//!   removed down-pointing triangles just below.
//! - The trapezoid `T_{m,n}(S)` has sides `m, n, m+n, n` clockwise from the
//!   top; `S` marks removed up-pointing triangles on the bottom side, whose
//!   unit segments are labeled `1..=m+n` from the left.
//! - A *right-lozenge* is the union of an up-pointing triangle and the
//!   down-pointing triangle to its upper right: within one row, the lozenge
//!   whose up-triangle is left of its down-triangle. This is the orientation
//!   that carries the weight `q^row` in generating functions; the convention
//!   is pinned by the one-tiling trapezoid `T_{1,1}({2})`, whose sole lozenge
//!   must weigh `q^1`.

mod grid;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use grid::{Cell, CellGrid, GridShape, Lozenge, Orientation, Pointing, Tiling};

/// Errors from building or validating regions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    /// Dent positions must be strictly increasing and positive.
    #[error("dent set must be strictly increasing and positive (offending entry at index {at})")]
    NotStrictlyIncreasing { at: usize },
    /// A dent position lies beyond the labeled segment range.
    #[error("dent position {pos} exceeds the segment range 1..={max}")]
    PositionOutOfRange { pos: u32, max: u32 },
    /// Trapezoid condition: the dent count must equal the slant side `n`.
    #[error("trapezoid needs exactly n = {expected} dents, got {got}")]
    TrapezoidDentCount { expected: u32, got: usize },
    /// Hexagon condition (i): `c <= a + b`.
    #[error("condition (i) fails: c = {c} exceeds a + b = {a_plus_b}")]
    ConditionI { c: u32, a_plus_b: u32 },
    /// Hexagon condition (ii), first clause: `0 <= b - |X|`.
    #[error("condition (ii) fails: |X| = {x_len} exceeds b = {b}")]
    ConditionIiNegativeSlack { b: u32, x_len: usize },
    /// Hexagon condition (ii), second clause: `b - |X| = c - |Y|`.
    #[error("condition (ii) fails: b - |X| = {bx} differs from c - |Y| = {cy}")]
    ConditionIiUnequalSlack { bx: i64, cy: i64 },
    /// Hexagon condition (ii), third clause: `b - |X|` free segments exist.
    #[error("condition (ii) fails: need b - |X| = {slack} free segments, only {free} available")]
    ConditionIiInsufficientFree { slack: u32, free: u32 },
    /// Reflection `s -> k + 1 - s` needs all elements in `1..=k`.
    #[error("cannot reflect in [1..={k}]: element {pos} out of range")]
    ReflectOutOfRange { pos: u32, k: u32 },
    /// Operation requires a centrally symmetric hexagon.
    #[error("hexagon is not centrally symmetric (requires b = c and Y the reflection of X)")]
    NotCentrallySymmetric,
    /// A diagonal-splitting set `Z` must be disjoint from the dents and have
    /// exactly `b - |X|` elements.
    #[error("invalid diagonal set Z: {reason}")]
    BadDiagonalSet { reason: String },
}

/// A strictly increasing list of positive integer positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(transparent)]
pub struct DentSet(Vec<u32>);

impl DentSet {
    /// Validates strict increase and positivity.
    pub fn new(positions: Vec<u32>) -> Result<Self, RegionError> {
        for (i, &p) in positions.iter().enumerate() {
            let ok = p >= 1 && (i == 0 || positions[i - 1] < p);
            if !ok {
                return Err(RegionError::NotStrictlyIncreasing { at: i });
            }
        }
        Ok(DentSet(positions))
    }

    /// The empty set.
    pub fn empty() -> Self {
        DentSet(Vec::new())
    }

    /// Builds from any iterator by sorting and rejecting duplicates/zeros.
    pub fn from_unsorted(positions: impl IntoIterator<Item = u32>) -> Result<Self, RegionError> {
        let mut v: Vec<u32> = positions.into_iter().collect();
        v.sort_unstable();
        DentSet::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pos: u32) -> bool {
        self.0.binary_search(&pos).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Largest position, if any. (Named to avoid shadowing by `Ord::max`.)
    pub fn max_pos(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Sum of all positions.
    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&p| p as i64).sum()
    }

    /// Set union (duplicates collapse).
    pub fn union(&self, other: &DentSet) -> DentSet {
        let mut v: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        DentSet(v)
    }

    /// Union of two sets required to be disjoint.
    pub fn union_disjoint(&self, other: &DentSet) -> Result<DentSet, RegionError> {
        if !self.is_disjoint(other) {
            return Err(RegionError::BadDiagonalSet {
                reason: "sets are not disjoint".into(),
            });
        }
        Ok(self.union(other))
    }

    /// Set intersection.
    pub fn intersection(&self, other: &DentSet) -> DentSet {
        DentSet(
            self.0
                .iter()
                .copied()
                .filter(|&p| other.contains(p))
                .collect(),
        )
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &DentSet) -> DentSet {
        DentSet(
            self.0
                .iter()
                .copied()
                .filter(|&p| !other.contains(p))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &DentSet) -> bool {
        self.0.iter().all(|&p| !other.contains(p))
    }

    /// Complement within `1..=k` (errors if an element exceeds `k`).
    pub fn complement(&self, k: u32) -> Result<DentSet, RegionError> {
        if let Some(&pos) = self.0.iter().find(|&&p| p > k) {
            return Err(RegionError::PositionOutOfRange { pos, max: k });
        }
        Ok(DentSet((1..=k).filter(|&p| !self.contains(p)).collect()))
    }
}

impl<'de> Deserialize<'de> for DentSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(deserializer)?;
        DentSet::new(v).map_err(serde::de::Error::custom)
    }
}

/// Reflection `s -> k + 1 - s` of a set inside `[1..=k]`; an involution that
/// preserves cardinality and all pairwise distances.
pub fn reflect_set(s: &DentSet, k: u32) -> Result<DentSet, RegionError> {
    let mut v = Vec::with_capacity(s.len());
    for p in s.iter() {
        if p > k {
            return Err(RegionError::ReflectOutOfRange { pos: p, k });
        }
        v.push(k + 1 - p);
    }
    v.reverse(); // reflection reverses the order
    Ok(DentSet(v))
}

/// True iff `s` equals its own reflection inside `[1..=k]`.
pub fn is_k_symmetric(s: &DentSet, k: u32) -> bool {
    match reflect_set(s, k) {
        Ok(r) => r == *s,
        Err(_) => false,
    }
}

/// The dented trapezoid `T_{m,n}(S)`: top side `m`, slant sides `n`, bottom
/// side `m + n` with the up-pointing triangles at positions `S` removed.
/// Tileable by lozenges exactly when `|S| = n` (every bottom up-triangle not
/// removed must start an upward path); that is enforced here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trapezoid {
    m: u32,
    n: u32,
    dents: DentSet,
}

impl Trapezoid {
    pub fn new(m: u32, n: u32, dents: DentSet) -> Result<Self, RegionError> {
        if dents.len() != n as usize {
            return Err(RegionError::TrapezoidDentCount {
                expected: n,
                got: dents.len(),
            });
        }
        if let Some(pos) = dents.max_pos() {
            if pos > m + n {
                return Err(RegionError::PositionOutOfRange { pos, max: m + n });
            }
        }
        Ok(Trapezoid { m, n, dents })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dents(&self) -> &DentSet {
        &self.dents
    }

    /// The unit-triangle grid of this region.
    pub fn build_cells(&self) -> CellGrid {
        CellGrid::from_trapezoid(self)
    }
}

/// The doubly dented hexagon `V_{a,b,c}(X, Y)`.
///
/// Validity (beyond dent positions lying in `1..=a+b`):
/// - condition (i): `c <= a + b`;
/// - condition (ii): `0 <= b - |X| = c - |Y| <=` the number of segments of
///   the diagonal carrying neither kind of dent.
///
/// `X` and `Y` may overlap: a common position removes both triangles of a
/// vertical lozenge on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DentedHexagon {
    a: u32,
    b: u32,
    c: u32,
    x: DentSet,
    y: DentSet,
}

impl DentedHexagon {
    pub fn new(a: u32, b: u32, c: u32, x: DentSet, y: DentSet) -> Result<Self, RegionError> {
        let ab = a + b;
        if c > ab {
            return Err(RegionError::ConditionI { c, a_plus_b: ab });
        }
        for set in [&x, &y] {
            if let Some(pos) = set.max_pos() {
                if pos > ab {
                    return Err(RegionError::PositionOutOfRange { pos, max: ab });
                }
            }
        }
        if x.len() > b as usize {
            return Err(RegionError::ConditionIiNegativeSlack { b, x_len: x.len() });
        }
        let bx = b as i64 - x.len() as i64;
        let cy = c as i64 - y.len() as i64;
        if bx != cy {
            return Err(RegionError::ConditionIiUnequalSlack { bx, cy });
        }
        let free = ab - x.union(&y).len() as u32;
        if bx as u32 > free {
            return Err(RegionError::ConditionIiInsufficientFree {
                slack: bx as u32,
                free,
            });
        }
        Ok(DentedHexagon { a, b, c, x, y })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// Up-pointing dents on the diagonal.
    pub fn x(&self) -> &DentSet {
        &self.x
    }

    /// Down-pointing dents on the diagonal.
    pub fn y(&self) -> &DentSet {
        &self.y
    }

    /// Length of the horizontal diagonal `l`.
    pub fn diagonal_len(&self) -> u32 {
        self.a + self.b
    }

    /// `b - |X| = c - |Y|`: the number of vertical lozenges every tiling
    /// places across the diagonal.
    pub fn slack(&self) -> u32 {
        self.b - self.x.len() as u32
    }

    /// Diagonal segments carrying no dent at all.
    pub fn free_positions(&self) -> DentSet {
        self.x
            .union(&self.y)
            .complement(self.diagonal_len())
            .expect("dents validated in range")
    }

    /// True iff the region is invariant under 180-degree rotation about the
    /// center of `l`: `b = c` and `Y` is the reflection of `X`.
    pub fn is_centrally_symmetric(&self) -> bool {
        self.b == self.c
            && reflect_set(&self.x, self.diagonal_len())
                .map(|r| r == self.y)
                .unwrap_or(false)
    }

    /// The unit-triangle grid of this region.
    pub fn build_cells(&self) -> CellGrid {
        CellGrid::from_hexagon(self)
    }

    /// All admissible diagonal sets `Z`: subsets of the free positions with
    /// exactly [`slack`](Self::slack) elements, in lexicographic order.
    /// Every tiling crosses the diagonal at exactly one such `Z`.
    pub fn admissible_diagonal_sets(&self) -> Vec<DentSet> {
        use itertools::Itertools;
        let free: Vec<u32> = self.free_positions().iter().collect();
        free.iter()
            .copied()
            .combinations(self.slack() as usize)
            .map(|v| DentSet::new(v).expect("combinations of a sorted set are sorted"))
            .collect()
    }

    /// Admissible diagonal sets that are invariant under reflection in
    /// `[1..=a+b]`: unions of whole position pairs `{p, a+b+1-p}` plus,
    /// when `a+b` is odd and the slack is odd, the central fixed point.
    /// Empty when parity or availability makes symmetric sets impossible.
    pub fn symmetric_diagonal_sets(&self) -> Vec<DentSet> {
        use itertools::Itertools;
        let k = self.diagonal_len();
        let slack = self.slack();
        let free = self.free_positions();
        let mut base = Vec::new();
        if slack % 2 == 1 {
            // An odd set must contain the fixed point of the reflection.
            if k.is_multiple_of(2) || !free.contains(k.div_ceil(2)) {
                return Vec::new();
            }
            base.push(k.div_ceil(2));
        }
        let pairs: Vec<u32> = free
            .iter()
            .filter(|&p| p < k + 1 - p && free.contains(k + 1 - p))
            .collect();
        let need = (slack / 2) as usize;
        pairs
            .iter()
            .copied()
            .combinations(need)
            .map(|chosen| {
                let mut v = base.clone();
                for p in chosen {
                    v.push(p);
                    v.push(k + 1 - p);
                }
                DentSet::from_unsorted(v).expect("pairs and fixed point are distinct")
            })
            .collect()
    }

    /// Cuts the hexagon along `l` for a choice `Z` of vertical-lozenge
    /// positions: tilings whose diagonal crossings sit exactly at `Z`
    /// correspond to pairs of tilings of the returned trapezoids — the part
    /// above `l` (up-dents `X ∪ Z`), and the part below rotated 180 degrees
    /// (dents the reflection of `Y ∪ Z`).
    ///
    /// `Z` must be disjoint from both dent sets and have exactly
    /// [`slack`](Self::slack) elements.
    pub fn split_along_diagonal(&self, z: &DentSet) -> Result<(Trapezoid, Trapezoid), RegionError> {
        if z.len() != self.slack() as usize {
            return Err(RegionError::BadDiagonalSet {
                reason: format!("need exactly {} elements, got {}", self.slack(), z.len()),
            });
        }
        if let Some(pos) = z.max_pos() {
            if pos > self.diagonal_len() {
                return Err(RegionError::PositionOutOfRange {
                    pos,
                    max: self.diagonal_len(),
                });
            }
        }
        if !z.is_disjoint(&self.x) || !z.is_disjoint(&self.y) {
            return Err(RegionError::BadDiagonalSet {
                reason: "Z overlaps a dent set".into(),
            });
        }
        let upper = Trapezoid::new(self.a, self.b, self.x.union(z))?;
        let lower_dents = reflect_set(&self.y.union(z), self.diagonal_len())?;
        let lower = Trapezoid::new(self.a + self.b - self.c, self.c, lower_dents)?;
        Ok((upper, lower))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dents(v: &[u32]) -> DentSet {
        DentSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dent_set_validation() {
        assert!(DentSet::new(vec![1, 4, 9]).is_ok());
        assert_eq!(
            DentSet::new(vec![4, 1]),
            Err(RegionError::NotStrictlyIncreasing { at: 1 })
        );
        assert_eq!(
            DentSet::new(vec![1, 1]),
            Err(RegionError::NotStrictlyIncreasing { at: 1 })
        );
        assert_eq!(
            DentSet::new(vec![0, 2]),
            Err(RegionError::NotStrictlyIncreasing { at: 0 })
        );
        assert_eq!(
            DentSet::from_unsorted(vec![9, 1, 4]).unwrap(),
            dents(&[1, 4, 9])
        );
    }

    #[test]
    fn dent_set_operations() {
        let a = dents(&[2, 3, 5]);
        let b = dents(&[3, 7]);
        assert_eq!(a.union(&b), dents(&[2, 3, 5, 7]));
        assert_eq!(a.intersection(&b), dents(&[3]));
        assert_eq!(a.difference(&b), dents(&[2, 5]));
        assert!(!a.is_disjoint(&b));
        assert!(a.union_disjoint(&b).is_err());
        assert_eq!(a.complement(6).unwrap(), dents(&[1, 4, 6]));
        assert!(a.complement(4).is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect_set(&dents(&[3, 7]), 11).unwrap(), dents(&[5, 9]));
        assert_eq!(reflect_set(&dents(&[1, 2]), 2).unwrap(), dents(&[1, 2]));
        assert!(reflect_set(&dents(&[3]), 2).is_err());
    }

    #[test]
    fn reflect_is_an_involution_preserving_cardinality() {
        for k in 1..=12u32 {
            for bits in 0..(1u32 << k) {
                let s =
                    DentSet::new((1..=k).filter(|i| bits >> (i - 1) & 1 == 1).collect()).unwrap();
                let r = reflect_set(&s, k).unwrap();
                assert_eq!(r.len(), s.len());
                assert_eq!(reflect_set(&r, k).unwrap(), s);
            }
        }
    }

    #[test]
    fn k_symmetric_examples() {
        assert!(is_k_symmetric(&dents(&[2]), 3));
        assert!(!is_k_symmetric(&dents(&[1]), 2));
        assert!(is_k_symmetric(&dents(&[1, 5, 10, 14]), 14));
        assert!(is_k_symmetric(&DentSet::empty(), 7));
    }

    #[test]
    fn trapezoid_validation() {
        assert!(Trapezoid::new(8, 5, dents(&[1, 4, 5, 9, 12])).is_ok());
        assert_eq!(
            Trapezoid::new(2, 2, dents(&[1])),
            Err(RegionError::TrapezoidDentCount {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Trapezoid::new(1, 1, dents(&[3])),
            Err(RegionError::PositionOutOfRange { pos: 3, max: 2 })
        );
    }

    #[test]
    fn hexagon_validation() {
        // The two sides of the running shuffle example are both valid.
        assert!(DentedHexagon::new(3, 8, 4, dents(&[2, 3, 5, 8, 9, 11]), dents(&[3, 7])).is_ok());
        assert!(DentedHexagon::new(6, 5, 7, dents(&[3, 7, 9]), dents(&[2, 3, 5, 8, 11])).is_ok());
        // condition (ii), unequal slack
        assert_eq!(
            DentedHexagon::new(1, 2, 1, DentSet::empty(), DentSet::empty()),
            Err(RegionError::ConditionIiUnequalSlack { bx: 2, cy: 1 })
        );
        // condition (i)
        assert_eq!(
            DentedHexagon::new(1, 1, 3, DentSet::empty(), DentSet::empty()),
            Err(RegionError::ConditionI { c: 3, a_plus_b: 2 })
        );
        // |X| > b
        assert!(matches!(
            DentedHexagon::new(2, 1, 1, dents(&[1, 2]), dents(&[1, 3])),
            Err(RegionError::ConditionIiNegativeSlack { .. })
        ));
        // not enough free segments: X u Y covers everything but slack is 1
        assert!(matches!(
            DentedHexagon::new(1, 3, 3, dents(&[1, 2]), dents(&[3, 4])).unwrap_err(),
            RegionError::ConditionIiInsufficientFree { slack: 1, free: 0 }
        ));
        // dent out of range
        assert!(matches!(
            DentedHexagon::new(1, 1, 1, dents(&[5]), dents(&[1])),
            Err(RegionError::PositionOutOfRange { pos: 5, max: 2 })
        ));
    }

    #[test]
    fn central_symmetry_examples() {
        let fig = DentedHexagon::new(5, 9, 9, dents(&[2, 4, 6, 8, 11]), dents(&[4, 7, 9, 11, 13]))
            .unwrap();
        assert!(fig.is_centrally_symmetric());
        let asym =
            DentedHexagon::new(3, 8, 4, dents(&[2, 3, 5, 8, 9, 11]), dents(&[3, 7])).unwrap();
        assert!(!asym.is_centrally_symmetric());
        for (a, b) in [(1, 1), (2, 2), (3, 1)] {
            let plain = DentedHexagon::new(a, b, b, DentSet::empty(), DentSet::empty()).unwrap();
            assert!(plain.is_centrally_symmetric());
        }
    }

    #[test]
    fn split_along_diagonal_examples() {
        let h = DentedHexagon::new(3, 8, 4, dents(&[2, 3, 5, 8, 9, 11]), dents(&[3, 7])).unwrap();
        assert_eq!(h.slack(), 2);
        assert_eq!(h.free_positions(), dents(&[1, 4, 6, 10]));
        let (upper, lower) = h.split_along_diagonal(&dents(&[1, 10])).unwrap();
        assert_eq!(
            upper,
            Trapezoid::new(3, 8, dents(&[1, 2, 3, 5, 8, 9, 10, 11])).unwrap()
        );
        // reflection of {1,3,7,10} in 11 is {2,5,9,11}
        assert_eq!(lower, Trapezoid::new(7, 4, dents(&[2, 5, 9, 11])).unwrap());

        let unit = DentedHexagon::new(1, 1, 1, DentSet::empty(), DentSet::empty()).unwrap();
        let (u, l) = unit.split_along_diagonal(&dents(&[1])).unwrap();
        assert_eq!(u, Trapezoid::new(1, 1, dents(&[1])).unwrap());
        assert_eq!(l, Trapezoid::new(1, 1, dents(&[2])).unwrap());

        // wrong cardinality / overlap errors
        assert!(h.split_along_diagonal(&dents(&[1])).is_err());
        assert!(h.split_along_diagonal(&dents(&[2, 4])).is_err());
    }

    #[test]
    fn admissible_sets_enumerate_free_position_subsets_in_order() {
        let h = DentedHexagon::new(3, 8, 4, dents(&[2, 3, 5, 8, 9, 11]), dents(&[3, 7])).unwrap();
        // free = {1,4,6,10}, slack = 2, lexicographic pairs
        let zs = h.admissible_diagonal_sets();
        let expected = [
            dents(&[1, 4]),
            dents(&[1, 6]),
            dents(&[1, 10]),
            dents(&[4, 6]),
            dents(&[4, 10]),
            dents(&[6, 10]),
        ];
        assert_eq!(zs, expected);

        let unit = DentedHexagon::new(1, 1, 1, DentSet::empty(), DentSet::empty()).unwrap();
        assert_eq!(unit.admissible_diagonal_sets(), [dents(&[1]), dents(&[2])]);
    }

    #[test]
    fn symmetric_sets_pair_up_reflected_positions() {
        let h = DentedHexagon::new(5, 9, 9, dents(&[2, 4, 6, 8, 11]), dents(&[4, 7, 9, 11, 13]))
            .unwrap();
        // free = {1,3,5,10,12,14} in [14]; slack 4 → choose 2 of the pairs
        // (1,14), (3,12), (5,10)
        let zs = h.symmetric_diagonal_sets();
        let expected = [
            dents(&[1, 3, 12, 14]),
            dents(&[1, 5, 10, 14]),
            dents(&[3, 5, 10, 12]),
        ];
        assert_eq!(zs, expected);
        for z in &zs {
            assert!(is_k_symmetric(z, 14));
        }

        // Odd slack with even diagonal: no fixed point exists, so none.
        let unit = DentedHexagon::new(1, 1, 1, DentSet::empty(), DentSet::empty()).unwrap();
        assert!(unit.symmetric_diagonal_sets().is_empty());

        // Odd slack with odd diagonal: fixed point 2 of [3] is forced.
        let v211 = DentedHexagon::new(2, 1, 1, DentSet::empty(), DentSet::empty()).unwrap();
        assert_eq!(v211.symmetric_diagonal_sets(), [dents(&[2])]);

        // Zero slack: the empty set is symmetric.
        let frozen = DentedHexagon::new(2, 2, 2, dents(&[1, 2]), dents(&[3, 4])).unwrap();
        assert_eq!(frozen.symmetric_diagonal_sets(), [DentSet::empty()]);
    }

    #[test]
    fn symmetric_sets_are_the_symmetric_admissible_sets() {
        let h = DentedHexagon::new(2, 2, 2, DentSet::empty(), DentSet::empty()).unwrap();
        let by_filter: Vec<DentSet> = h
            .admissible_diagonal_sets()
            .into_iter()
            .filter(|z| is_k_symmetric(z, h.diagonal_len()))
            .collect();
        let mut direct = h.symmetric_diagonal_sets();
        direct.sort();
        assert_eq!(by_filter, direct);
    }

    #[test]
    fn split_yields_valid_trapezoids_for_every_admissible_z() {
        let h = DentedHexagon::new(3, 8, 4, dents(&[2, 3, 5, 8, 9, 11]), dents(&[3, 7])).unwrap();
        let free: Vec<u32> = h.free_positions().iter().collect();
        let mut count = 0;
        for i in 0..free.len() {
            for j in (i + 1)..free.len() {
                let z = dents(&[free[i], free[j]]);
                let (upper, lower) = h.split_along_diagonal(&z).unwrap();
                assert_eq!(upper.dents().len() as u32, upper.n());
                assert_eq!(lower.dents().len() as u32, lower.n());
                count += 1;
            }
        }
        assert_eq!(count, 6);
    }
}
