//! Benchmark polynomial families with exact integer coefficients.
//!
//! Random families draw from [`SplitMix64`], a fixed 64-bit generator, so
//! the same `(degree, coeff_bound, seed)` produces the same polynomial on
//! every platform and toolchain.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// SplitMix64 (Steele, Lea, Flood): `state += 0x9E3779B97F4A7C15`, then a
/// xor-shift-multiply finalizer.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` by rejection sampling.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let limit = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % n;
            }
        }
    }

    /// Uniform in `[-bound, bound]`.
    pub fn symmetric(&mut self, bound: u64) -> i64 {
        let n = 2 * bound + 1;
        self.below(n) as i64 - bound as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Laguerre,
    Chebyshev1,
    Chebyshev2,
    Wilkinson,
    Mignotte1,
    Mignotte2,
    Random,
    MonicRandom,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Laguerre,
        Family::Chebyshev1,
        Family::Chebyshev2,
        Family::Wilkinson,
        Family::Mignotte1,
        Family::Mignotte2,
        Family::Random,
        Family::MonicRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Laguerre => "laguerre",
            Family::Chebyshev1 => "chebyshev1",
            Family::Chebyshev2 => "chebyshev2",
            Family::Wilkinson => "wilkinson",
            Family::Mignotte1 => "mignotte1",
            Family::Mignotte2 => "mignotte2",
            Family::Random => "random",
            Family::MonicRandom => "monic_random",
        }
    }

    fn min_degree(self) -> usize {
        match self {
            Family::Mignotte1 | Family::Mignotte2 => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub degree: usize,
    /// Only used by the random families.
    pub seed: u64,
    pub coeff_bound: u64,
}

impl FamilySpec {
    pub fn new(family: Family, degree: usize) -> Self {
        FamilySpec {
            family,
            degree,
            seed: 0,
            coeff_bound: 1000,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_coeff_bound(mut self, bound: u64) -> Self {
        self.coeff_bound = bound;
        self
    }

    pub fn build(&self) -> Result<IntPoly> {
        let d = self.degree;
        if d < self.family.min_degree() {
            return Err(Error::InvalidConfig(format!(
                "{} needs degree >= {}, got {d}",
                self.family,
                self.family.min_degree()
            )));
        }
        if self.coeff_bound == 0 {
            return Err(Error::InvalidConfig(
                "coefficient bound must be positive".into(),
            ));
        }
        Ok(match self.family {
            Family::Laguerre => laguerre_scaled(d),
            Family::Chebyshev1 => chebyshev_t(d),
            Family::Chebyshev2 => chebyshev_u(d),
            Family::Wilkinson => wilkinson(d),
            Family::Mignotte1 => mignotte1(d),
            Family::Mignotte2 => mignotte2(d),
            Family::Random => random_poly(d, self.coeff_bound, self.seed),
            Family::MonicRandom => monic_random(d, self.coeff_bound, self.seed),
        })
    }
}

/// `Π_{i=1..d} (X − i)`
pub fn wilkinson(d: usize) -> IntPoly {
    (1..=d).fold(IntPoly::from_i64s(&[1]), |acc, i| {
        &acc * &IntPoly::new(vec![-BigInt::from(i), BigInt::one()])
    })
}

/// `d! · L_d(X)` via `P_{n+1} = (2n + 1 − X) P_n − n² P_{n−1}`.
pub fn laguerre_scaled(d: usize) -> IntPoly {
    assert!(d >= 1, "degree must be at least 1");
    let mut prev = IntPoly::from_i64s(&[1]);
    let mut cur = IntPoly::from_i64s(&[1, -1]);
    for n in 1..d {
        let lin = IntPoly::new(vec![BigInt::from(2 * n + 1), -BigInt::one()]);
        let next = &(&lin * &cur) - &prev.scale(&BigInt::from(n * n));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn chebyshev(d: usize, first: IntPoly) -> IntPoly {
    assert!(d >= 1, "degree must be at least 1");
    let two_x = IntPoly::from_i64s(&[0, 2]);
    let mut prev = IntPoly::from_i64s(&[1]);
    let mut cur = first;
    for _ in 1..d {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(d: usize) -> IntPoly {
    chebyshev(d, IntPoly::from_i64s(&[0, 1]))
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(d: usize) -> IntPoly {
    chebyshev(d, IntPoly::from_i64s(&[0, 2]))
}

/// `X^d − 2(101X − 1)²`: four real roots for even `d`, two of them very
/// close to `1/101`.
pub fn mignotte1(d: usize) -> IntPoly {
    assert!(d >= 3, "degree must be at least 3");
    let square = IntPoly::from_i64s(&[-1, 101])
        .pow(2)
        .scale(&BigInt::from(2));
    &IntPoly::monomial(BigInt::one(), d) - &square
}

/// `mignotte1(d) · (101² X^d − 2((101² + 1)X − 101)²)`; the second factor is
/// `X^d − 2((101 + 1/101)X − 1)²` scaled by `101²`.
pub fn mignotte2(d: usize) -> IntPoly {
    assert!(d >= 3, "degree must be at least 3");
    let square = IntPoly::from_i64s(&[-101, 101 * 101 + 1])
        .pow(2)
        .scale(&BigInt::from(2));
    let second = &IntPoly::monomial(BigInt::from(101 * 101), d) - &square;
    &mignotte1(d) * &second
}

/// Coefficients uniform in `[−coeff_bound, coeff_bound]`, drawn from
/// `a_0` upwards; the leading coefficient is redrawn while zero.
pub fn random_poly(d: usize, coeff_bound: u64, seed: u64) -> IntPoly {
    assert!(d >= 1 && coeff_bound >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut coeffs: Vec<BigInt> = (0..d).map(|_| rng.symmetric(coeff_bound).into()).collect();
    let lead = loop {
        let c = rng.symmetric(coeff_bound);
        if c != 0 {
            break c;
        }
    };
    coeffs.push(lead.into());
    IntPoly::new(coeffs)
}

/// Like [`random_poly`] with the leading coefficient forced to 1.
pub fn monic_random(d: usize, coeff_bound: u64, seed: u64) -> IntPoly {
    assert!(d >= 1 && coeff_bound >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut coeffs: Vec<BigInt> = (0..d).map(|_| rng.symmetric(coeff_bound).into()).collect();
    coeffs.push(BigInt::one());
    IntPoly::new(coeffs)
}
