//! Variable substitutions used by the continued-fraction solver.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

impl IntPoly {
    /// `A(X + c)` by the quadratic Horner/Pascal scheme.
    pub fn taylor_shift(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = self.degree();
        if c.is_one() {
            for i in 0..n {
                for j in (i..n).rev() {
                    let (lo, hi) = a.split_at_mut(j + 1);
                    lo[j] += &hi[0];
                }
            }
        } else if *c == -BigInt::one() {
            for i in 0..n {
                for j in (i..n).rev() {
                    let (lo, hi) = a.split_at_mut(j + 1);
                    lo[j] -= &hi[0];
                }
            }
        } else {
            for i in 0..n {
                for j in (i..n).rev() {
                    let (lo, hi) = a.split_at_mut(j + 1);
                    lo[j] += &hi[0] * c;
                }
            }
        }
        IntPoly::new(a)
    }

    pub fn taylor_shift_by_one(&self) -> IntPoly {
        self.taylor_shift(&BigInt::one())
    }

    /// `A(2^beta · X)` with the common power-of-two factor of the result
    /// removed. Roots are those of `A` divided by `2^beta`.
    pub fn homothety_pow2(&self, beta: u64) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let strip = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.trailing_zeros().map(|tz| tz + i as u64 * beta))
            .min()
            .expect("nonzero polynomial has a nonzero coefficient");
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let up = i as u64 * beta;
                if up >= strip {
                    c << (up - strip)
                } else {
                    c >> (strip - up)
                }
            })
            .collect();
        IntPoly::new(out)
    }

    /// `X^d · A(1/X)`: the coefficient list reversed.
    pub fn reverse(&self) -> Result<IntPoly> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(IntPoly::new(c))
    }

    /// `(1 + X)^d · A(1/(1 + X))`. Roots of `A` in `(0, 1)` become the
    /// positive roots of the result.
    pub fn invert_unit(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c).taylor_shift_by_one()
    }

    /// `A(−X)`.
    pub fn negate_variable(&self) -> IntPoly {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::new(out)
    }

    /// Splits `A = X^k · B` with `B(0) ≠ 0`.
    pub fn deflate_zero_roots(&self) -> Result<(IntPoly, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        Ok((IntPoly::new(self.coeffs[k..].to_vec()), k))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(out)
    }

    /// `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> IntPoly {
        (0..k).fold(self.clone(), |acc, _| acc.derivative())
    }
}
