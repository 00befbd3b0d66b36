//! Content, exact division, gcd and square-free decomposition over Z[X].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

impl IntPoly {
    /// `(content, primitive)` with `A = ±content · primitive` and the
    /// primitive part carrying a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let content = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let content = if self.leading_coeff().is_negative() {
            -content
        } else {
            content
        };
        let primitive = IntPoly::new(self.coeffs.iter().map(|c| c / &content).collect());
        Ok((content.abs(), primitive))
    }

    pub fn primitive_part(&self) -> Result<IntPoly> {
        self.content_and_primitive().map(|(_, p)| p)
    }

    /// Pseudo-remainder `lc(B)^(δ+1) · A mod B` with `δ = deg A − deg B`.
    /// Returns `A` unchanged when `deg A < deg B`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let db = divisor.degree();
        if self.degree() < db || self.is_zero() {
            return Ok(self.clone());
        }
        let lc = divisor.leading_coeff();
        let mut steps_left = (self.degree() - db + 1) as u32;
        let mut r = self.coeffs.clone();
        while !r.is_empty() && r.len() > db {
            let k = r.len() - 1 - db;
            let top = r.last().cloned().expect("non-empty");
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[k + j] -= &top * b;
            }
            steps_left -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        if r.is_empty() {
            return Ok(IntPoly::zero());
        }
        let pad = num_traits::pow(lc.clone(), steps_left as usize);
        Ok(IntPoly::new(r.into_iter().map(|c| c * &pad).collect()))
    }

    /// Exact quotient `A / B` in Z[X], or `None` when `B` does not divide `A`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let db = divisor.degree();
        if self.degree() < db {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[k + j] -= &t * b;
            }
            q[k] = t;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient, computed with a
    /// primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::ZeroPolynomial),
            (true, false) => return other.primitive_part(),
            (false, true) => return self.primitive_part(),
            _ => {}
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part()?, other.primitive_part()?)
        } else {
            (other.primitive_part()?, self.primitive_part()?)
        };
        loop {
            if b.degree() == 0 {
                return Ok(IntPoly::constant(BigInt::one()));
            }
            let r = a.pseudo_rem(&b)?;
            if r.is_zero() {
                return Ok(b);
            }
            a = b;
            b = r.primitive_part()?;
        }
    }

    /// Primitive part of `A / gcd(A, A′)`.
    pub fn square_free_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        self.div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Yun's square-free factorization: `[(B_i, i)]` with
    /// `A = c · Π B_i^i`, factors primitive, positive leading coefficient,
    /// pairwise coprime, listed by increasing multiplicity.
    pub fn yun_square_free_factorization(&self) -> Result<Vec<(IntPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let a = self.primitive_part()?;
        let da = a.derivative();
        let c = a.gcd(&da)?;
        let mut w = a.div_exact(&c).expect("gcd divides A");
        let mut y = da.div_exact(&c).expect("gcd divides A'");
        let mut factors = Vec::new();
        let mut i = 1;
        while w.degree() > 0 {
            let z = &y - &w.derivative();
            let g = w.gcd(&z)?;
            if g.degree() > 0 {
                factors.push((g.clone(), i));
            }
            w = w.div_exact(&g).expect("g divides w");
            y = z.div_exact(&g).expect("g divides z");
            i += 1;
        }
        Ok(factors)
    }
}
