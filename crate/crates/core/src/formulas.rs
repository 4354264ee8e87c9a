//! Exact product formulas for tiling counts and their `q`-analogues.
//!
//! The building blocks are the difference products
//! `Δ₁(S) = ∏_{s<s'} (s'−s)` and `Δ₂(S,T) = ∏ |t−s|`, the hyperfactorial
//! `H(n) = ∏_{i<n} i!`, and their `q`-analogues with each integer `m`
//! replaced by the `q`-integer `[m]_q`. From these:
//!
//! - a dented trapezoid has exactly `Δ₁(S)/H(n)` tilings;
//! - a doubly dented hexagon has `Σ_Z Δ₁(X∪Z)·Δ₁(Y∪Z)/(H(b)·H(c))`
//!   tilings, summed over admissible diagonal sets `Z`;
//! - the `q`-generating functions replace each `Δ₁/H` by a principal Schur
//!   specialization times an explicit power of `q`;
//! - the centrally symmetric tiling count keeps only
//!   reflection-invariant `Z` and counts upper halves.
//!
//! Everything is exact; divisions are checked and a failed exact division
//! panics, since it can only mean a formula implementation bug.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact_arith::{q_int, QPolynomial};
use crate::regions::{DentSet, DentedHexagon, Trapezoid};

/// Errors from formula entry points (domain errors only; internal exactness
/// violations panic).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// `delta2` requires disjoint sets.
    #[error("difference product requires disjoint sets")]
    OverlappingSets,
    /// Symmetric counting requires a centrally symmetric region.
    #[error("region is not centrally symmetric")]
    NotCentrallySymmetric,
    /// Partition parts must be weakly decreasing.
    #[error("partition parts must be weakly decreasing (offending index {at})")]
    NotWeaklyDecreasing { at: usize },
}

/// An integer partition: weakly decreasing nonnegative parts, trailing
/// zeros allowed and kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, FormulaError> {
        for i in 1..parts.len() {
            if parts[i - 1] < parts[i] {
                return Err(FormulaError::NotWeaklyDecreasing { at: i });
            }
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }
}

/// `Δ₁(S) = ∏_{s<s' in S} (s'−s)`; 1 when `|S| ≤ 1`.
pub fn delta1(s: &DentSet) -> BigInt {
    let v = s.as_slice();
    let mut product = BigInt::one();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            product *= BigInt::from(v[j] - v[i]);
        }
    }
    product
}

/// `Δ₂(S,T) = ∏_{s∈S, t∈T} |t−s|` for disjoint `S`, `T`.
pub fn delta2(s: &DentSet, t: &DentSet) -> Result<BigInt, FormulaError> {
    if !s.is_disjoint(t) {
        return Err(FormulaError::OverlappingSets);
    }
    let mut product = BigInt::one();
    for a in s.iter() {
        for b in t.iter() {
            product *= BigInt::from(a.abs_diff(b));
        }
    }
    Ok(product)
}

/// The hyperfactorial `H(n) = ∏_{i=0}^{n−1} i!` (also `Δ₁({1,…,n})`).
pub fn hyperfactorial(n: u32) -> BigInt {
    let mut product = BigInt::one();
    let mut factorial = BigInt::one();
    for i in 1..n {
        factorial *= BigInt::from(i);
        product *= &factorial;
    }
    product
}

fn div_exact_int(numerator: BigInt, denominator: &BigInt, context: &str) -> BigInt {
    let (quotient, remainder) = numerator.div_rem(denominator);
    assert!(
        remainder.is_zero(),
        "internal error: inexact division in {context}"
    );
    quotient
}

/// Number of tilings of a dented trapezoid: `Δ₁(S)/H(n)`, always an exact
/// integer.
pub fn clp_count(t: &Trapezoid) -> BigInt {
    div_exact_int(delta1(t.dents()), &hyperfactorial(t.n()), "trapezoid count")
}

/// The partition `(s_n−n, …, s_2−2, s_1−1)` encoded by a dent set.
pub fn lambda_of(s: &DentSet) -> Partition {
    let v = s.as_slice();
    let n = v.len();
    let parts = (0..n).map(|i| v[n - 1 - i] - (n - i) as u32).collect();
    Partition::new(parts).expect("strictly increasing positions give weakly decreasing parts")
}

/// `[s']_q − [s]_q = q^s · [s'−s]_q` for `s < s'`.
fn q_int_difference(s: u32, s_prime: u32) -> QPolynomial {
    q_int((s_prime - s) as i64)
        .expect("difference of distinct positions is positive")
        .shift_up(s as u64)
}

/// `Δ_{1,q}(S) = ∏_{s<s'} ([s']_q − [s]_q)`.
pub fn delta1_q(s: &DentSet) -> QPolynomial {
    let (power, sizes) = delta1_q_factored(s);
    let mut product = QPolynomial::monomial(BigInt::one(), power);
    for d in sizes {
        product = &product * &q_int(d as i64).expect("positive difference");
    }
    product
}

/// `Δ_{1,q}(S)` in factored form: the total power of `q` pulled out of
/// every factor, and the multiset (sorted) of differences `d` contributing
/// a `[d]_q` each. Ratios of `Δ_{1,q}` products cancel cheaply in this
/// form, one `[d]_q` at a time.
pub fn delta1_q_factored(s: &DentSet) -> (u64, Vec<u32>) {
    let v = s.as_slice();
    let mut power = 0u64;
    let mut sizes = Vec::with_capacity(v.len() * (v.len().saturating_sub(1)) / 2);
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            power += v[i] as u64;
            sizes.push(v[j] - v[i]);
        }
    }
    sizes.sort_unstable();
    (power, sizes)
}

/// `Δ_{2,q}(S,T) = ∏ ([max(s,t)]_q − [min(s,t)]_q)` for disjoint `S`, `T`.
pub fn delta2_q(s: &DentSet, t: &DentSet) -> Result<QPolynomial, FormulaError> {
    if !s.is_disjoint(t) {
        return Err(FormulaError::OverlappingSets);
    }
    let mut product = QPolynomial::one();
    for a in s.iter() {
        for b in t.iter() {
            product = &product * &q_int_difference(a.min(b), a.max(b));
        }
    }
    Ok(product)
}

/// The principal specialization `s_{λ(S)}(1, q, …, q^{n−1}) =
/// Δ_{1,q}(S) / Δ_{1,q}({1,…,n})` with `n = |S|`; always an exact
/// polynomial quotient.
pub fn schur_principal(s: &DentSet) -> QPolynomial {
    let n = s.len() as u32;
    let full = DentSet::new((1..=n).collect()).expect("range is sorted");
    delta1_q(s)
        .div_exact(&delta1_q(&full))
        .expect("internal error: inexact division in principal specialization")
}

/// Number of tilings of a doubly dented hexagon: the sum over admissible
/// diagonal sets `Z` of the product of the two split trapezoid counts.
pub fn hex_count(h: &DentedHexagon) -> BigInt {
    let mut total = BigInt::zero();
    for z in h.admissible_diagonal_sets() {
        let (upper, lower) = h
            .split_along_diagonal(&z)
            .expect("admissible sets split cleanly");
        total += clp_count(&upper) * clp_count(&lower);
    }
    total
}

/// `q`-generating function of a dented trapezoid:
/// `q^(Σ_{s∈S} s − Σ_{l=1}^{n} l) · schur_principal(S)`.
pub fn trapezoid_gf_q(t: &Trapezoid) -> QPolynomial {
    let n = t.n() as i64;
    let exponent = t.dents().sum() - n * (n + 1) / 2;
    debug_assert!(exponent >= 0, "positions dominate 1..n");
    schur_principal(t.dents()).shift_up(exponent as u64)
}

/// The exponent `α(Z)` carried by the `Z`-summand of the hexagon
/// `q`-generating function:
/// `Σ_{i∈X} i − (b+c)·Σ_{j∈Y} j + (1−b−c)·Σ_{k∈Z} k − b(b+1)/2
///  + (a+b+1)(b+1)c − (b+1)c(c+1)/2 + (a+b+1)c(c−1)/2`.
///
/// May be negative; the full summand never has negative exponents.
pub fn alpha_of_z(h: &DentedHexagon, z: &DentSet) -> i64 {
    let (a, b, c) = (h.a() as i64, h.b() as i64, h.c() as i64);
    h.x().sum() - (b + c) * h.y().sum() + (1 - b - c) * z.sum() - b * (b + 1) / 2
        + (a + b + 1) * (b + 1) * c
        - (b + 1) * c * (c + 1) / 2
        + (a + b + 1) * c * (c - 1) / 2
}

/// `q`-generating function of a doubly dented hexagon:
/// `Σ_Z q^{α(Z)} · s_{λ(X∪Z)}(1,…,q^{b−1}) · s_{λ(Y∪Z)}(1,…,q^{c−1})`.
/// Each summand is a genuine polynomial (a negative `α(Z)` is always
/// absorbed by the `q`-power dividing the Schur factors); a summand that
/// fails to absorb it would flag a row-convention bug and panics.
pub fn hex_count_q(h: &DentedHexagon) -> QPolynomial {
    let mut total = QPolynomial::zero();
    for z in h.admissible_diagonal_sets() {
        let alpha = alpha_of_z(h, &z);
        let product = &schur_principal(&h.x().union(&z)) * &schur_principal(&h.y().union(&z));
        let summand = product
            .shift_signed(alpha)
            .expect("internal error: negative exponent in generating-function summand");
        total = &total + &summand;
    }
    debug_assert!(
        total.coeffs().iter().all(|c| !c.is_negative()),
        "generating function must have nonnegative coefficients"
    );
    total
}

/// Number of centrally symmetric tilings of a centrally symmetric hexagon:
/// `Σ_Z Δ₁(X∪Z)/H(b)` over reflection-invariant `Z` (0 when none exists).
pub fn sym_count(h: &DentedHexagon) -> Result<BigInt, FormulaError> {
    if !h.is_centrally_symmetric() {
        return Err(FormulaError::NotCentrallySymmetric);
    }
    let mut total = BigInt::zero();
    for z in h.symmetric_diagonal_sets() {
        let (upper, _) = h
            .split_along_diagonal(&z)
            .expect("symmetric sets are admissible");
        total += clp_count(&upper);
    }
    Ok(total)
}
