//! Dense polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// A polynomial in `q` with integer coefficients, stored densely:
/// `coeffs[k]` is the coefficient of `q^k`. Invariant: no trailing zero
/// coefficients, so the zero polynomial is the empty vector and otherwise
/// `degree() == coeffs.len() - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        QPolynomial::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        QPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: u64) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[k as usize] = c;
        QPolynomial { coeffs }
    }

    /// Builds from a low-to-high coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Coefficients, low to high; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: u64) -> BigInt {
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.len().checked_sub(1).map(|d| d as u64)
    }

    /// Smallest exponent with nonzero coefficient, or `None` if zero.
    pub fn low_exponent(&self) -> Option<u64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| k as u64)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// True if the polynomial has a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: u64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divides by `q^k`, erroring unless every term has exponent `>= k`.
    pub fn shift_down(&self, k: u64) -> Result<Self, ArithError> {
        if self.is_zero() || k == 0 {
            return Ok(self.clone());
        }
        if self.low_exponent().unwrap_or(0) < k {
            return Err(ArithError::NotDivisibleByQPower(k));
        }
        Ok(QPolynomial {
            coeffs: self.coeffs[k as usize..].to_vec(),
        })
    }

    /// Multiplies by `q^k` for signed `k` (downward shifts must be exact).
    pub fn shift_signed(&self, k: i64) -> Result<Self, ArithError> {
        if k >= 0 {
            Ok(self.shift_up(k as u64))
        } else {
            self.shift_down(k.unsigned_abs())
        }
    }

    /// GCD of all coefficients (non-negative; zero only for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`, which must divide exactly.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self, ArithError> {
        if d.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quo, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(ArithError::InexactDivision);
            }
            coeffs.push(quo);
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Exact division: returns `self / divisor` when the remainder is zero
    /// and the quotient has integer coefficients; errors otherwise.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<Self, ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let (dn, dd) = (self.coeffs.len(), divisor.coeffs.len());
        if dn < dd {
            return Err(ArithError::InexactDivision);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        // Standard long division, top down; every step must divide exactly
        // for an integer quotient to exist.
        for k in (0..quo.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd - 1]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(ArithError::InexactDivision);
            }
            for (i, d) in divisor.coeffs.iter().enumerate().take(dd - 1) {
                rem[k + i] -= &c * d;
            }
            quo[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::InexactDivision);
        }
        Ok(QPolynomial::from_coeffs(quo))
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn evaluate(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from(c.clone());
        }
        acc
    }

    /// Evaluates at `q = 1`, i.e. sums the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients rendered as decimal strings, low to high (CLI format).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    /// Primitive part: `self` divided by its content. Zero stays zero.
    pub fn primitive_part(&self) -> QPolynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder: the remainder of `lc(other)^k * self` by `other`
    /// for a suitable `k >= 0`. Only meaningful up to scalar multiples,
    /// which is all the primitive GCD below needs.
    fn pseudo_rem(&self, other: &QPolynomial) -> QPolynomial {
        debug_assert!(!other.is_zero());
        let lead = other.leading_coeff();
        let dd = other.coeffs.len();
        let mut rem = self.coeffs.clone();
        loop {
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() < dd {
                break;
            }
            let top = rem.last().unwrap().clone();
            let k = rem.len() - dd;
            // rem := lc(other) * rem - top * q^k * other; the leading terms
            // cancel, so the degree strictly drops.
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, d) in other.coeffs.iter().enumerate() {
                rem[k + i] -= &top * d;
            }
        }
        QPolynomial::from_coeffs(rem)
    }
}

/// Polynomial GCD over the integers via the primitive Euclidean algorithm
/// (pseudo-division with content removal at every step — plain content/GCD
/// arithmetic, no factorization). The result is normalized to a positive
/// leading coefficient; `poly_gcd(0, 0) = 0`.
pub fn poly_gcd(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let content = a.content().gcd(&b.content());
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.coeffs.len() < y.coeffs.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.pseudo_rem(&y).primitive_part();
        x = y;
        y = r;
    }
    let mut g = x;
    if !content.is_one() {
        for c in g.coeffs.iter_mut() {
            *c *= &content;
        }
    }
    normalize_sign(g)
}

fn normalize_sign(mut p: QPolynomial) -> QPolynomial {
    if p.leading_coeff().is_negative() {
        for c in p.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    p
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: &QPolynomial) -> QPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{k}")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::q_int;
    use super::*;

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn construction_normalizes_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(poly(&[1, 2]).degree(), Some(1));
    }

    #[test]
    fn arithmetic_basics() {
        let p = poly(&[1, 1]); // 1 + q
        assert_eq!(&p * &p, poly(&[1, 2, 1]));
        assert_eq!(&p - &p, QPolynomial::zero());
        assert_eq!(&p * &QPolynomial::zero(), QPolynomial::zero());
        assert_eq!(
            &q_int(3).unwrap() - &q_int(1).unwrap(),
            poly(&[0, 1, 1]) // q + q^2
        );
    }

    #[test]
    fn div_exact_examples() {
        // [6]_q / [3]_q = 1 + q^3
        let q6 = q_int(6).unwrap();
        let q3 = q_int(3).unwrap();
        assert_eq!(q6.div_exact(&q3).unwrap(), poly(&[1, 0, 0, 1]));
        // (q + q^2) / q = 1 + q
        assert_eq!(
            poly(&[0, 1, 1]).div_exact(&poly(&[0, 1])).unwrap(),
            poly(&[1, 1])
        );
        // (1 + q) / q leaves a remainder
        assert_eq!(
            poly(&[1, 1]).div_exact(&poly(&[0, 1])),
            Err(ArithError::InexactDivision)
        );
        // integer-coefficient quotient required: (q^2 - 1) / (2q - 2)
        assert_eq!(
            poly(&[-1, 0, 1]).div_exact(&poly(&[-2, 2])),
            Err(ArithError::InexactDivision)
        );
        // dividing by zero
        assert_eq!(
            poly(&[1]).div_exact(&QPolynomial::zero()),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            q_int(3).unwrap().evaluate(&rat(1, 1)),
            BigRational::from(BigInt::from(3))
        );
        assert_eq!(
            QPolynomial::zero().evaluate(&rat(7, 3)),
            BigRational::zero()
        );
        // (q + q^2) at 1/2 = 3/4
        assert_eq!(poly(&[0, 1, 1]).evaluate(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn shift_and_low_exponent() {
        let p = poly(&[0, 0, 2, 3]);
        assert_eq!(p.low_exponent(), Some(2));
        assert_eq!(p.shift_down(2).unwrap(), poly(&[2, 3]));
        assert_eq!(p.shift_down(3), Err(ArithError::NotDivisibleByQPower(3)));
        assert_eq!(poly(&[1]).shift_up(2), poly(&[0, 0, 1]));
        assert_eq!(p.shift_signed(-2).unwrap(), poly(&[2, 3]));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = poly(&[2, 4, 6]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive_part(), poly(&[1, 2, 3]));
        assert_eq!(QPolynomial::zero().content(), BigInt::zero());
    }

    #[test]
    fn gcd_examples() {
        // gcd((1+q)(1+q+q^2), (1+q)q) = 1 + q
        let a = &poly(&[1, 1]) * &poly(&[1, 1, 1]);
        let b = &poly(&[1, 1]) * &poly(&[0, 1]);
        assert_eq!(poly_gcd(&a, &b), poly(&[1, 1]));
        // [2][6] vs [3][4] share the factor (1+q)(1+q+q^2) / ... exactly
        // gcd = [6]/[?]: compute and check it divides both.
        let x = &q_int(2).unwrap() * &q_int(6).unwrap();
        let y = &q_int(3).unwrap() * &q_int(4).unwrap();
        let g = poly_gcd(&x, &y);
        assert!(x.div_exact(&g).is_ok());
        assert!(y.div_exact(&g).is_ok());
        // coprime: gcd(q, 1+q) = 1
        assert_eq!(poly_gcd(&poly(&[0, 1]), &poly(&[1, 1])), QPolynomial::one());
        assert_eq!(
            poly_gcd(&QPolynomial::zero(), &poly(&[-1, -2])),
            poly(&[1, 2])
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(format!("{}", poly(&[1, 2, 0, 1])), "1 + 2*q + q^3");
        assert_eq!(format!("{}", QPolynomial::zero()), "0");
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = QPolynomial> {
        proptest::collection::vec(-5i64..=5, 0..6)
            .prop_map(|cs| QPolynomial::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
    }

    fn arb_nonzero_poly() -> impl proptest::strategy::Strategy<Value = QPolynomial> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a);
        }

        #[test]
        fn evaluation_is_a_ring_morphism(
            a in arb_poly(),
            b in arb_poly(),
            n in -3i64..=3,
            d in 1i64..=3,
        ) {
            let at = rat(n, d);
            prop_assert_eq!((&a * &b).evaluate(&at), a.evaluate(&at) * b.evaluate(&at));
            prop_assert_eq!((&a + &b).evaluate(&at), a.evaluate(&at) + b.evaluate(&at));
            prop_assert_eq!(
                a.evaluate_at_one(),
                a.coeffs().iter().sum::<BigInt>()
            );
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_nonzero_poly()) {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn gcd_divides_both_arguments(a in arb_nonzero_poly(), b in arb_nonzero_poly()) {
            let g = poly_gcd(&a, &b);
            prop_assert!(a.div_exact(&g).is_ok());
            prop_assert!(b.div_exact(&g).is_ok());
            // and is itself divisible by any shared monomial factor
            let shifted = poly_gcd(&a.shift_up(2), &b.shift_up(2));
            prop_assert!(shifted.div_exact(&poly(&[0, 0, 1])).is_ok());
        }

        #[test]
        fn shift_round_trips(a in arb_poly(), k in 0u64..5) {
            prop_assert_eq!(a.shift_up(k).shift_down(k).unwrap(), a.clone());
            prop_assert_eq!(a.shift_up(k).shift_signed(-(k as i64)).unwrap(), a);
        }
    }
}
