//! Exact arithmetic: arbitrary-precision integers and rationals, dense
//! polynomials in `q`, and Laurent ratios of such polynomials.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`]; this module adds the two domain types the
//! rest of the crate is built on:
//!
//! - [`QPolynomial`]: a dense polynomial in `q` with integer coefficients and
//!   non-negative exponents. All tiling generating functions live here.
//! - [`QLaurentRatio`]: a value `q^shift * num / den` with `num`, `den`
//!   polynomials. Ratios of generating functions (which need a possibly
//!   negative power of `q` and a denominator) live here; equality is decided
//!   by cross-multiplication, so no factorization is ever required.
//!
//! The q-integer `[n]_q = 1 + q + ... + q^(n-1)` is the basic building block
//! of every product formula in the crate; see [`q_int`].

mod laurent;
mod poly;

pub use laurent::QLaurentRatio;
pub use poly::{poly_gcd, QPolynomial};

use num_bigint::BigInt;
use thiserror::Error;

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// `q_int(n)` needs `n >= 1`.
    #[error("q-integer [n]_q requires n >= 1, got {0}")]
    NonPositiveQInt(i64),
    /// Exact polynomial division left a nonzero remainder, or the quotient
    /// would need non-integer coefficients.
    #[error("inexact polynomial division")]
    InexactDivision,
    /// Denominator of a ratio is the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    /// Shifting a polynomial by a negative power of `q` that it is not
    /// divisible by.
    #[error("polynomial is not divisible by q^{0}")]
    NotDivisibleByQPower(u64),
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` for `n >= 1`.
///
/// `[1]_q = 1`; evaluating `[n]_q` at `q = 1` gives `n`.
pub fn q_int(n: i64) -> Result<QPolynomial, ArithError> {
    if n < 1 {
        return Err(ArithError::NonPositiveQInt(n));
    }
    Ok(QPolynomial::from_coeffs(vec![BigInt::from(1); n as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn q_int_basics() {
        assert_eq!(q_int(1).unwrap(), QPolynomial::one());
        assert_eq!(q_int(3).unwrap(), poly(&[1, 1, 1]));
        assert_eq!(q_int(0), Err(ArithError::NonPositiveQInt(0)));
        assert_eq!(q_int(-2), Err(ArithError::NonPositiveQInt(-2)));
    }

    #[test]
    fn q_int_evaluates_to_n_at_one() {
        let one = BigRational::one();
        for n in 1..=100 {
            let v = q_int(n).unwrap().evaluate(&one);
            assert_eq!(v, BigRational::from(BigInt::from(n)));
        }
    }
}
