//! Ratios `q^shift * num / den` of integer `q`-polynomials.
//!
//! Ratios of tiling generating functions are Laurent in `q` (the shift can be
//! negative) and rarely polynomial, so they are kept as a normalized
//! numerator/denominator pair. Equality is decided by cross-multiplication,
//! never by factoring.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_gcd, QPolynomial};
use super::ArithError;

/// A value `q^shift * num / den` with integer-polynomial `num`, `den`.
///
/// Normal form (established by [`QLaurentRatio::new`]):
/// - `den` is nonzero with positive constant term and `low_exponent() == 0`;
/// - `num` is zero (then `shift == 0` and `den == 1`) or has
///   `low_exponent() == 0` — all powers of `q` live in `shift`;
/// - `num` and `den` share no polynomial factor (plain content/GCD removal)
///   and no integer content.
///
/// Equality compares `q^s1 * n1 * d2` with `q^s2 * n2 * d1`, so any two
/// representations of the same value compare equal even if built without
/// normalization.
#[derive(Clone, Eq)]
pub struct QLaurentRatio {
    shift: i64,
    num: QPolynomial,
    den: QPolynomial,
}

impl QLaurentRatio {
    /// Builds and normalizes `q^shift * num / den`.
    pub fn new(shift: i64, num: QPolynomial, den: QPolynomial) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QLaurentRatio {
                shift: 0,
                num: QPolynomial::zero(),
                den: QPolynomial::one(),
            });
        }
        // Pull all monomial q-factors into the shift.
        let nlow = num.low_exponent().unwrap_or(0);
        let dlow = den.low_exponent().unwrap_or(0);
        let mut num = num.shift_down(nlow).expect("low exponent");
        let mut den = den.shift_down(dlow).expect("low exponent");
        let shift = shift + nlow as i64 - dlow as i64;
        // Remove the common polynomial factor and the common integer content.
        let g = poly_gcd(&num, &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides");
            den = den.div_exact(&g).expect("gcd divides");
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        // Fix the sign so the denominator's constant term is positive.
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(QLaurentRatio { shift, num, den })
    }

    /// The ratio `1`.
    pub fn one() -> Self {
        QLaurentRatio {
            shift: 0,
            num: QPolynomial::one(),
            den: QPolynomial::one(),
        }
    }

    /// Exponent of the monomial `q^shift` factored out of the ratio.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Evaluates at `q = 1` (defined whenever the denominator does not
    /// vanish there).
    pub fn evaluate_at_one(&self) -> Result<BigRational, ArithError> {
        let d = self.den.evaluate_at_one();
        if d.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(BigRational::new(self.num.evaluate_at_one(), d))
    }

    /// Evaluates at a nonzero rational point.
    pub fn evaluate(&self, at: &BigRational) -> Result<BigRational, ArithError> {
        let d = self.den.evaluate(at);
        if d.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if at.is_zero() && self.shift < 0 {
            return Err(ArithError::NotDivisibleByQPower(self.shift.unsigned_abs()));
        }
        let pow = pow_rational(at, self.shift);
        Ok(self.num.evaluate(at) / d * pow)
    }

    /// True iff `self` equals the polynomial `p` (cross-multiplied:
    /// `q^shift * num == p * den`).
    pub fn equals_polynomial(&self, p: &QPolynomial) -> bool {
        let lhs = match self.num.shift_signed(self.shift) {
            Ok(n) => n,
            Err(_) => return false, // genuinely Laurent, no polynomial equals it
        };
        lhs == p * &self.den
    }
}

fn pow_rational(at: &BigRational, k: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if k >= 0 { at.clone() } else { at.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl PartialEq for QLaurentRatio {
    fn eq(&self, other: &Self) -> bool {
        // q^s1 n1/d1 == q^s2 n2/d2  iff  q^(s1-s2) n1 d2 == n2 d1.
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        let ds = self.shift - other.shift;
        if ds >= 0 {
            lhs.shift_up(ds as u64) == rhs
        } else {
            lhs == rhs.shift_up(ds.unsigned_abs())
        }
    }
}

impl fmt::Debug for QLaurentRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} * ({}) / ({})", self.shift, self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::super::q_int;
    use super::*;
    use num_bigint::BigInt;

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn normalization_strips_common_factors() {
        let g = poly(&[1, 1]);
        let n = poly(&[1, 0, 1]);
        let d = poly(&[2, 1]);
        let with = QLaurentRatio::new(3, &n * &g, &d * &g).unwrap();
        let without = QLaurentRatio::new(3, n.clone(), d.clone()).unwrap();
        assert_eq!(with, without);
        assert_eq!(with.numerator(), &n);
        assert_eq!(with.denominator(), &d);
        assert_eq!(with.shift(), 3);
    }

    #[test]
    fn normalization_moves_q_powers_into_shift() {
        // q^0 * (q^2 + q^3) / q = q^1 * (1 + q) / 1
        let r = QLaurentRatio::new(0, poly(&[0, 0, 1, 1]), poly(&[0, 1])).unwrap();
        assert_eq!(r.shift(), 1);
        assert_eq!(r.numerator(), &poly(&[1, 1]));
        assert_eq!(r.denominator(), &QPolynomial::one());
    }

    #[test]
    fn normalization_of_content_and_sign() {
        let r = QLaurentRatio::new(0, poly(&[2, 2]), poly(&[-4])).unwrap();
        assert_eq!(r.numerator(), &poly(&[-1, -1]));
        assert_eq!(r.denominator(), &poly(&[2]));
        let zero = QLaurentRatio::new(5, QPolynomial::zero(), poly(&[3, 1])).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.shift(), 0);
        assert_eq!(zero.denominator(), &QPolynomial::one());
        assert_eq!(
            QLaurentRatio::new(0, poly(&[1]), QPolynomial::zero()),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn equality_is_cross_multiplicative() {
        // q^-1 * [6]/[3] == q^-1 * (1 + q^3)
        let a = QLaurentRatio::new(-1, q_int(6).unwrap(), q_int(3).unwrap()).unwrap();
        let b = QLaurentRatio::new(-1, poly(&[1, 0, 0, 1]), QPolynomial::one()).unwrap();
        assert_eq!(a, b);
        let c = QLaurentRatio::new(0, poly(&[1, 0, 0, 1]), QPolynomial::one()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn evaluation() {
        // q^1 * (1+q) / (1+q+q^2) at q=1 is 2/3
        let r = QLaurentRatio::new(1, poly(&[1, 1]), poly(&[1, 1, 1])).unwrap();
        assert_eq!(r.evaluate_at_one().unwrap(), rat(2, 3));
        // at q = 2: 2 * 3 / 7
        assert_eq!(r.evaluate(&rat(2, 1)).unwrap(), rat(6, 7));
        // negative shift: q^-2 * 1 / 1 at q = 2 is 1/4
        let s = QLaurentRatio::new(-2, poly(&[1]), poly(&[1])).unwrap();
        assert_eq!(s.evaluate(&rat(2, 1)).unwrap(), rat(1, 4));
    }

    #[test]
    fn equals_polynomial() {
        let r = QLaurentRatio::new(-1, poly(&[0, 1, 1]), QPolynomial::one()).unwrap();
        assert!(r.equals_polynomial(&poly(&[1, 1])));
        assert!(!r.equals_polynomial(&poly(&[1, 2])));
    }

    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = QPolynomial> {
        proptest::collection::vec(-5i64..=5, 0..6)
            .prop_map(|cs| QPolynomial::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
    }

    fn arb_nonzero_poly() -> impl Strategy<Value = QPolynomial> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn common_factors_never_change_the_value(
            num in arb_poly(),
            den in arb_nonzero_poly(),
            scale in arb_nonzero_poly(),
            shift in -5i64..=5,
        ) {
            let plain = QLaurentRatio::new(shift, num.clone(), den.clone()).unwrap();
            let scaled =
                QLaurentRatio::new(shift, &num * &scale, &den * &scale).unwrap();
            prop_assert_eq!(&plain, &scaled);
            // Normal forms agree component-wise, not just under eq.
            prop_assert_eq!(plain.shift(), scaled.shift());
            prop_assert_eq!(plain.numerator(), scaled.numerator());
            prop_assert_eq!(plain.denominator(), scaled.denominator());
        }

        #[test]
        fn evaluation_agrees_with_components(
            num in arb_poly(),
            den in arb_nonzero_poly(),
            shift in -5i64..=5,
        ) {
            let r = QLaurentRatio::new(shift, num.clone(), den.clone()).unwrap();
            if den.evaluate_at_one() != BigInt::from(0) {
                let expected =
                    BigRational::new(num.evaluate_at_one(), den.evaluate_at_one());
                prop_assert_eq!(r.evaluate_at_one().unwrap(), expected);
            }
            let at = rat(2, 1);
            if den.evaluate(&at) != rat(0, 1) {
                let expected = num.evaluate(&at) / den.evaluate(&at)
                    * super::pow_rational(&at, shift);
                prop_assert_eq!(r.evaluate(&at).unwrap(), expected);
            }
        }

        #[test]
        fn shift_is_equivalent_to_monomial_factors(
            num in arb_nonzero_poly(),
            den in arb_nonzero_poly(),
            up in 0u64..4,
        ) {
            let as_shift = QLaurentRatio::new(up as i64, num.clone(), den.clone()).unwrap();
            let as_factor = QLaurentRatio::new(0, num.shift_up(up), den).unwrap();
            prop_assert_eq!(as_shift, as_factor);
        }
    }
}
