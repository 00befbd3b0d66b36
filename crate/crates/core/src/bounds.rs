//! Bounds on the positive real roots, rounded to powers of two.
//!
//! The upper bound is `2 · max_j (|a_j| / a_d)^(1/(d−j))` over the indices
//! `j` whose coefficient has the sign opposite to the leading one, rounded
//! up to the next power of two. No radicals are evaluated: the exponent is
//! found with shifts and integer comparisons only.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pow2Bound {
    NoPositiveRoot,
    /// The bound `2^exponent`.
    Exponent(i64),
}

impl Pow2Bound {
    pub fn exponent(self) -> Option<i64> {
        match self {
            Pow2Bound::NoPositiveRoot => None,
            Pow2Bound::Exponent(e) => Some(e),
        }
    }

    pub fn to_rational(self) -> Option<Rational> {
        self.exponent().map(pow2_rational)
    }
}

pub(crate) fn pow2_rational(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// Smallest power of two bounding every positive root from above.
pub fn positive_root_upper_bound(a: &IntPoly) -> Result<Pow2Bound> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = a.degree();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let flip = a.leading_coeff().is_negative();
    let lead = a.leading_coeff().abs();
    let mut best: Option<i64> = None;
    for (j, c) in a.coeffs()[..d].iter().enumerate() {
        let opposing = if flip {
            c.is_positive()
        } else {
            c.is_negative()
        };
        if !opposing {
            continue;
        }
        let e = term_exponent(&lead, &c.abs(), (d - j) as u64);
        best = Some(best.map_or(e, |b| b.max(e)));
    }
    Ok(best.map_or(Pow2Bound::NoPositiveRoot, Pow2Bound::Exponent))
}

/// Largest power of two bounding every positive root from below, obtained
/// by inverting the upper bound of the reversed polynomial.
pub fn positive_lower_bound(a: &IntPoly) -> Result<Pow2Bound> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rev = a.reverse()?;
    if rev.degree() == 0 {
        return Ok(Pow2Bound::NoPositiveRoot);
    }
    Ok(match positive_root_upper_bound(&rev)? {
        Pow2Bound::NoPositiveRoot => Pow2Bound::NoPositiveRoot,
        Pow2Bound::Exponent(e) => Pow2Bound::Exponent(-e),
    })
}

/// Minimal `e` with `2^e ≥ 2 · (num / lead)^(1/k)`, i.e. minimal `t = e − 1`
/// with `lead · 2^(t·k) ≥ num`.
fn term_exponent(lead: &BigInt, num: &BigInt, k: u64) -> i64 {
    debug_assert!(!num.is_zero() && !lead.is_zero() && k > 0);
    let fits = |t: i64| -> bool {
        let shift = t.unsigned_abs() * k;
        if t >= 0 {
            (lead << shift) >= *num
        } else {
            *lead >= (num << shift)
        }
    };
    let diff = num.bits() as i64 - lead.bits() as i64;
    let mut t = diff.div_euclid(k as i64);
    while !fits(t) {
        t += 1;
    }
    while fits(t - 1) {
        t -= 1;
    }
    t + 1
}
