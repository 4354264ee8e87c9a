//! Dent shuffling: flipping removed triangles across the diagonal and the
//! exact count ratios that relate the region to its shuffled partner.
//!
//! A *shuffling* of the dent pair `(X, Y)` is a pair `(X', Y')` with the
//! same union and the same intersection: every singly-removed position may
//! freely switch sides, while positions removed on both sides stay. If `d`
//! up-dents flip down and `u` down-dents flip up, the bounding hexagon
//! changes to `a' = a + (d-u)`, `b' = b - (d-u)`, `c' = c + (d-u)` — the
//! diagonal moves up by `d - u` while height and width stay fixed.
//!
//! The punchline is that the tiling counts of the two regions have an
//! explicit closed-form ratio:
//!
//! - plain counts: `H(b)H(c)·Δ₁(X')Δ₁(Y') / (H(b')H(c')·Δ₁(X)Δ₁(Y))`;
//! - `q`-generating functions: the same shape with `q`-analogues and an
//!   explicit extra power `q^α`;
//! - centrally symmetric tiling counts (symmetric regions, `d = u`):
//!   `Δ₁(X')/Δ₁(X)`, a square root of the plain ratio.

use num_rational::BigRational;
use thiserror::Error;

use crate::exact_arith::{q_int, QLaurentRatio, QPolynomial};
use crate::formulas::{alpha_of_z, delta1, delta1_q_factored, hyperfactorial};
use crate::regions::{DentSet, DentedHexagon, RegionError};

/// Errors from building or evaluating shuffle instances.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    /// `(Xp, Yp)` does not preserve the union and intersection of `(X, Y)`.
    #[error("not a shuffling: {reason}")]
    NotAShuffle { reason: String },
    /// The derived target region failed validation (defensive; structurally
    /// unreachable for a valid source).
    #[error("derived target region is invalid: {0}")]
    InvalidTarget(#[from] RegionError),
    /// The symmetric ratio needs both regions centrally symmetric.
    #[error("symmetric ratio requires centrally symmetric source and target")]
    NotCentrallySymmetric,
}

/// A validated shuffle: source region, flipped dent sets, and the derived
/// target region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleInstance {
    source: DentedHexagon,
    target: DentedHexagon,
    flipped_down: u32,
    flipped_up: u32,
}

impl ShuffleInstance {
    /// Validates that `(xp, yp)` is a shuffling of the source's dents and
    /// derives the target region.
    pub fn new(source: DentedHexagon, xp: DentSet, yp: DentSet) -> Result<Self, ShuffleError> {
        let union = source.x().union(source.y());
        let intersection = source.x().intersection(source.y());
        if xp.union(&yp) != union {
            return Err(ShuffleError::NotAShuffle {
                reason: "the union of the dent sets must be preserved".into(),
            });
        }
        if xp.intersection(&yp) != intersection {
            return Err(ShuffleError::NotAShuffle {
                reason: "positions dented on both sides must stay dented on both sides".into(),
            });
        }
        let flipped_down = source.x().difference(&xp).len() as u32;
        let flipped_up = source.y().difference(&yp).len() as u32;
        let lift = flipped_down as i64 - flipped_up as i64;
        let side = |v: i64, name: &str| {
            u32::try_from(v).map_err(|_| ShuffleError::NotAShuffle {
                reason: format!("derived side {name} would be negative"),
            })
        };
        let a = side(source.a() as i64 + lift, "a'")?;
        let b = side(source.b() as i64 - lift, "b'")?;
        let c = side(source.c() as i64 + lift, "c'")?;
        let target = DentedHexagon::new(a, b, c, xp, yp)?;
        Ok(ShuffleInstance {
            source,
            target,
            flipped_down,
            flipped_up,
        })
    }

    pub fn source(&self) -> &DentedHexagon {
        &self.source
    }

    pub fn target(&self) -> &DentedHexagon {
        &self.target
    }

    /// Number of up-dents that flipped down (`d`).
    pub fn flipped_down(&self) -> u32 {
        self.flipped_down
    }

    /// Number of down-dents that flipped up (`u`).
    pub fn flipped_up(&self) -> u32 {
        self.flipped_up
    }

    /// How far the diagonal moves up: `d - u`.
    pub fn diagonal_lift(&self) -> i64 {
        self.flipped_down as i64 - self.flipped_up as i64
    }

    /// Exact ratio of plain tiling counts, target over source:
    /// `H(b)H(c)·Δ₁(X')Δ₁(Y') / (H(b')H(c')·Δ₁(X)Δ₁(Y))`.
    pub fn ratio_unweighted(&self) -> BigRational {
        let numerator = hyperfactorial(self.source.b())
            * hyperfactorial(self.source.c())
            * delta1(self.target.x())
            * delta1(self.target.y());
        let denominator = hyperfactorial(self.target.b())
            * hyperfactorial(self.target.c())
            * delta1(self.source.x())
            * delta1(self.source.y());
        BigRational::new(numerator, denominator)
    }

    /// The power of `q` in the weighted ratio: the difference of the
    /// `Z`-independent parts of the two regions' summand exponents (the
    /// `Z`-terms cancel because `b + c = b' + c'`).
    pub fn alpha_shift(&self) -> i64 {
        alpha_of_z(&self.target, &DentSet::empty()) - alpha_of_z(&self.source, &DentSet::empty())
    }

    /// Exact ratio of `q`-generating functions, target over source:
    /// `q^α · Δ_{1,q}([b])Δ_{1,q}([c])·Δ_{1,q}(X')Δ_{1,q}(Y') /
    /// (Δ_{1,q}([b'])Δ_{1,q}([c'])·Δ_{1,q}(X)Δ_{1,q}(Y))`.
    ///
    /// Assembled by cancelling matching `[d]_q` factors of the two sides
    /// first, so the polynomial work stays proportional to the residue.
    pub fn ratio_weighted(&self) -> QLaurentRatio {
        let range = |n: u32| DentSet::new((1..=n).collect()).expect("range is sorted");
        let numerator_sets = [
            range(self.source.b()),
            range(self.source.c()),
            self.target.x().clone(),
            self.target.y().clone(),
        ];
        let denominator_sets = [
            range(self.target.b()),
            range(self.target.c()),
            self.source.x().clone(),
            self.source.y().clone(),
        ];
        let mut shift = self.alpha_shift();
        let mut factor_balance: std::collections::BTreeMap<u32, i64> = Default::default();
        for set in &numerator_sets {
            let (power, sizes) = delta1_q_factored(set);
            shift += power as i64;
            for d in sizes {
                *factor_balance.entry(d).or_default() += 1;
            }
        }
        for set in &denominator_sets {
            let (power, sizes) = delta1_q_factored(set);
            shift -= power as i64;
            for d in sizes {
                *factor_balance.entry(d).or_default() -= 1;
            }
        }
        let mut numerator = QPolynomial::one();
        let mut denominator = QPolynomial::one();
        for (d, count) in factor_balance {
            let factor = q_int(d as i64).expect("difference of distinct positions is positive");
            for _ in 0..count.abs() {
                if count > 0 {
                    numerator = &numerator * &factor;
                } else {
                    denominator = &denominator * &factor;
                }
            }
        }
        QLaurentRatio::new(shift, numerator, denominator).expect("difference products are nonzero")
    }

    /// Exact ratio of centrally symmetric tiling counts, target over
    /// source: `Δ₁(X')/Δ₁(X)`. Requires both regions centrally symmetric
    /// (which forces `d = u`).
    pub fn ratio_symmetric(&self) -> Result<BigRational, ShuffleError> {
        if !self.source.is_centrally_symmetric() || !self.target.is_centrally_symmetric() {
            return Err(ShuffleError::NotCentrallySymmetric);
        }
        Ok(BigRational::new(
            delta1(self.target.x()),
            delta1(self.source.x()),
        ))
    }
}
