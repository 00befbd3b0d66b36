//! Möbius maps `X ↦ (kX + l)/(mX + n)` tracking the transformations a
//! solver branch has applied.
//!
//! When only shifts and unit inversions are composed, `k/m` and `l/n` are
//! consecutive convergents of the continued fraction being expanded.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    NegInfinity,
    Finite(Rational),
    Infinity,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        ExtendedRational::Finite(Rational::zero())
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(q: Rational) -> Self {
        ExtendedRational::Finite(q)
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (NegInfinity, NegInfinity) | (Infinity, Infinity) => Ordering::Equal,
            (NegInfinity, _) | (_, Infinity) => Ordering::Less,
            (_, NegInfinity) | (Infinity, _) => Ordering::Greater,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::NegInfinity => f.write_str("-inf"),
            ExtendedRational::Finite(q) => write!(f, "{q}"),
            ExtendedRational::Infinity => f.write_str("inf"),
        }
    }
}

/// Entries are kept unreduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    k: BigInt,
    l: BigInt,
    m: BigInt,
    n: BigInt,
}

impl MobiusMap {
    pub fn identity() -> Self {
        MobiusMap {
            k: BigInt::one(),
            l: BigInt::zero(),
            m: BigInt::zero(),
            n: BigInt::one(),
        }
    }

    pub fn new(k: BigInt, l: BigInt, m: BigInt, n: BigInt) -> Result<Self> {
        let map = MobiusMap { k, l, m, n };
        if map.determinant().is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(map)
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.k, &self.l, &self.m, &self.n)
    }

    pub fn determinant(&self) -> BigInt {
        &self.k * &self.n - &self.l * &self.m
    }

    /// `M ∘ (X ↦ X + c)`.
    pub fn compose_shift(&self, c: &BigInt) -> Self {
        MobiusMap {
            k: self.k.clone(),
            l: &self.k * c + &self.l,
            m: self.m.clone(),
            n: &self.m * c + &self.n,
        }
    }

    /// `M ∘ (X ↦ 2^beta · X)`.
    pub fn compose_homothety_pow2(&self, beta: u64) -> Self {
        MobiusMap {
            k: &self.k << beta,
            l: self.l.clone(),
            m: &self.m << beta,
            n: self.n.clone(),
        }
    }

    /// `M ∘ (X ↦ 1/(1 + X))`.
    pub fn compose_invert_unit(&self) -> Self {
        MobiusMap {
            k: self.l.clone(),
            l: &self.k + &self.l,
            m: self.n.clone(),
            n: &self.m + &self.n,
        }
    }

    pub fn image(&self, q: &ExtendedRational) -> Result<ExtendedRational> {
        let (num, den) = match q {
            ExtendedRational::Finite(q) => (
                &self.k * q.numer() + &self.l * q.denom(),
                &self.m * q.numer() + &self.n * q.denom(),
            ),
            ExtendedRational::Infinity => (self.k.clone(), self.m.clone()),
            ExtendedRational::NegInfinity => (-&self.k, -&self.m),
        };
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::DegenerateMap);
            }
            return Ok(if num.is_negative() {
                ExtendedRational::NegInfinity
            } else {
                ExtendedRational::Infinity
            });
        }
        Ok(ExtendedRational::Finite(Rational::new(num, den)))
    }

    pub fn image_of_zero(&self) -> Result<ExtendedRational> {
        self.image(&ExtendedRational::zero())
    }

    /// Endpoints `M(0)` and `M(∞)` in ascending order, with an infinite
    /// `M(∞)` replaced by `M(fallback_upper)`.
    pub fn to_interval(&self, fallback_upper: &Rational) -> Result<(Rational, Rational)> {
        let finite = |e: ExtendedRational, alt: &Rational| -> Result<Rational> {
            match e {
                ExtendedRational::Finite(q) => Ok(q),
                _ => match self.image(&ExtendedRational::Finite(alt.clone()))? {
                    ExtendedRational::Finite(q) => Ok(q),
                    _ => Err(Error::DegenerateMap),
                },
            }
        };
        let zero = Rational::zero();
        let a = finite(self.image_of_zero()?, &zero)?;
        let b = finite(self.image(&ExtendedRational::Infinity)?, fallback_upper)?;
        Ok(if a <= b { (a, b) } else { (b, a) })
    }
}

impl Default for MobiusMap {
    fn default() -> Self {
        Self::identity()
    }
}
