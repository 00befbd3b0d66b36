//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending order: index `i` holds the
//! coefficient of `X^i`. The zero polynomial is the single coefficient `0`.

mod gcd;
mod transform;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        match x.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { coeffs: vec![c] }
    }

    /// `c · X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading_coeff(&self) -> &BigInt {
        self.coeffs
            .last()
            .expect("coefficient vector is never empty")
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// Coefficient bitsize including one bit for the sign.
    pub fn bitsize(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0) + 1
    }

    /// Largest coefficient magnitude in bits, without the sign bit.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Sign of `A(q)`, computed from the homogenized sum
    /// `Σ a_i · num^i · den^(d−i)` so no division ever happens.
    pub fn evaluate_sign(&self, q: &Rational) -> Sign {
        Sign::of(&self.evaluate_homogeneous(q.numer(), q.denom()))
    }

    /// `den^d · A(num/den)`; for `den > 0` it has the sign of `A(num/den)`.
    pub fn evaluate_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Number of sign changes in the coefficient list, zeros ignored.
    pub fn sign_variations(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(sign_variations_of(self.coeffs.iter()))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides every coefficient by `c`; `None` unless all are divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }
}

/// Sign changes of a sequence of integers, zeros skipped.
pub(crate) fn sign_variations_of<'a>(values: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(prev) = last {
            if prev != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

impl fmt::Display for IntPoly {
    /// Dense ascending coefficient list, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        IntPoly::new(out)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl IntPoly {
    pub fn multiply(&self, other: &IntPoly) -> IntPoly {
        self * other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn trims_and_normalizes_zero() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert!(IntPoly::new(vec![]).is_zero());
        assert_eq!(p(&[0, 0, 3]).degree(), 2);
    }

    #[test]
    fn evaluate_sign_examples() {
        assert_eq!(p(&[-2, 0, 1]).evaluate_sign(&q(1, 1)), Sign::Negative);
        assert_eq!(p(&[-2, 0, 1]).evaluate_sign(&q(2, 1)), Sign::Positive);
        assert_eq!(p(&[2, -3, 1]).evaluate_sign(&q(1, 1)), Sign::Zero);
        // 2X - 1 at 1/2
        assert_eq!(p(&[-1, 2]).evaluate_sign(&q(1, 2)), Sign::Zero);
        assert_eq!(p(&[-1, 2]).evaluate_sign(&q(-1, 3)), Sign::Negative);
        assert_eq!(p(&[7]).evaluate_sign(&q(-5, 3)), Sign::Positive);
        assert_eq!(IntPoly::zero().evaluate_sign(&q(1, 3)), Sign::Zero);
    }

    #[test]
    fn sign_variations_examples() {
        assert_eq!(p(&[-2, 0, 1]).sign_variations().unwrap(), 1);
        assert_eq!(p(&[2, -3, 1]).sign_variations().unwrap(), 2);
        assert_eq!(p(&[1, 1, 1]).sign_variations().unwrap(), 0);
        assert_eq!(
            IntPoly::zero().sign_variations(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&p(&[-1, 1]) * &p(&[-2, 1]), p(&[2, -3, 1]));
        let a = p(&[3, -1, 4, 1]);
        assert_eq!(&a * &p(&[1]), a);
        assert!((&p(&[0]) * &a).is_zero());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p(&[-1, 1]);
        assert_eq!(a.pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(a.pow(0), p(&[1]));
    }

    #[test]
    fn bitsize_counts_sign_bit() {
        assert_eq!(p(&[0]).bitsize(), 1);
        assert_eq!(p(&[-1, 1]).bitsize(), 2);
        assert_eq!(p(&[255, 1]).bitsize(), 9);
    }
}
