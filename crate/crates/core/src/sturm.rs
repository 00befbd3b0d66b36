//! Sturm sequences and an independent checker for isolation reports.
//!
//! Everything here stays in integer arithmetic: remainders are signed
//! pseudo-remainders with positive multipliers, divided by their positive
//! content. None of the solver's transforms are reused, so the checker does
//! not share failure modes with the code it certifies.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mobius::ExtendedRational;
use crate::poly::{sign_variations_of, IntPoly, Rational, Sign};
use crate::solver::{IntervalKind, IsolatingInterval, IsolationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmSequence {
    /// `S_0 = A`, `S_1 = A′`, `S_{i+1} ∝ −rem(S_{i−1}, S_i)`, ending at
    /// `gcd(A, A′)` up to a constant.
    polys: Vec<IntPoly>,
    /// The same sequence divided by its last element, so that evaluation
    /// stays meaningful at multiple roots.
    reduced: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// `A / gcd(A, A′)`, up to sign.
    pub fn square_free(&self) -> &IntPoly {
        &self.reduced[0]
    }

    pub fn variations_at(&self, q: &ExtendedRational) -> usize {
        let signs: Vec<BigInt> = self
            .reduced
            .iter()
            .map(|p| sign_as_int(sign_at(p, q)))
            .collect();
        sign_variations_of(signs.iter())
    }
}

fn sign_as_int(s: Sign) -> BigInt {
    match s {
        Sign::Negative => BigInt::from(-1),
        Sign::Zero => BigInt::zero(),
        Sign::Positive => BigInt::from(1),
    }
}

fn sign_at(p: &IntPoly, q: &ExtendedRational) -> Sign {
    let lead = Sign::of(p.leading_coeff());
    match q {
        ExtendedRational::Finite(q) => p.evaluate_sign(q),
        ExtendedRational::Infinity => lead,
        ExtendedRational::NegInfinity if p.degree() % 2 == 1 => lead.flip(),
        ExtendedRational::NegInfinity => lead,
    }
}

fn strip_positive_content(p: IntPoly) -> IntPoly {
    match p.content_and_primitive() {
        Ok((c, _)) => p
            .div_scalar_exact(&c)
            .expect("content divides every coefficient"),
        Err(_) => p,
    }
}

/// `[p, q, r_2, ...]` with `r_{i+1}` a positive multiple of `−rem(r_{i−1}, r_i)`.
fn signed_remainder_sequence(p: IntPoly, q: IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p];
    if q.is_zero() {
        return seq;
    }
    seq.push(q);
    loop {
        let n = seq.len();
        let (prev, cur) = (&seq[n - 2], &seq[n - 1]);
        if cur.degree() == 0 {
            break;
        }
        let delta = prev.degree() - cur.degree();
        let r = prev.pseudo_rem(cur).expect("divisor is nonzero");
        if r.is_zero() {
            break;
        }
        // prem = lc^(δ+1) · rem; its sign is negative iff lc < 0 and δ+1 odd.
        let negative_multiplier = cur.leading_coeff().is_negative() && delta % 2 == 0;
        let next = if negative_multiplier { r } else { -&r };
        seq.push(strip_positive_content(next));
    }
    seq
}

/// gcd through the same remainder chain; primitive, positive leading
/// coefficient.
fn remainder_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let (a, b) = if p.degree() >= q.degree() {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let last = signed_remainder_sequence(a, b)
        .pop()
        .expect("sequence is never empty");
    last.content_and_primitive().map(|(_, g)| g).unwrap_or(last)
}

pub fn sturm_sequence(a: &IntPoly) -> Result<SturmSequence> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let polys = signed_remainder_sequence(a.clone(), a.derivative());
    let last = polys.last().expect("non-empty");
    let reduced = if last.degree() > 0 {
        let last = last.primitive_part()?;
        polys
            .iter()
            .map(|p| p.div_exact(&last).expect("gcd divides every member"))
            .collect()
    } else {
        polys.clone()
    };
    Ok(SturmSequence { polys, reduced })
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots_in(a: &IntPoly, lo: &ExtendedRational, hi: &ExtendedRational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::InvalidInterval(format!("({lo}, {hi}] is empty")));
    }
    if let ExtendedRational::Finite(l) = lo {
        if a.evaluate_sign(l) == Sign::Zero {
            return Err(Error::InvalidInterval(format!(
                "lower endpoint {l} is a root"
            )));
        }
    }
    let seq = sturm_sequence(a)?;
    Ok(count_with(&seq, lo, hi))
}

fn count_with(seq: &SturmSequence, lo: &ExtendedRational, hi: &ExtendedRational) -> usize {
    seq.variations_at(lo).saturating_sub(seq.variations_at(hi))
}

/// Number of distinct real roots.
pub fn count_real_roots(a: &IntPoly) -> Result<usize> {
    let seq = sturm_sequence(a)?;
    Ok(count_with(
        &seq,
        &ExtendedRational::NegInfinity,
        &ExtendedRational::Infinity,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// Point intervals must be exact roots.
    PointRoot,
    /// Open intervals must hold exactly one root and have non-root endpoints.
    OpenInterval,
    Disjoint,
    /// Every real root must be covered.
    RootCount,
    Multiplicity,
    Input,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: Check,
    pub interval: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.interval {
            Some(i) => write!(f, "{:?} (interval #{i}): {}", self.check, self.detail),
            None => write!(f, "{:?}: {}", self.check, self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Failure>,
    /// Distinct real roots according to the Sturm count.
    pub expected_roots: usize,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, check: Check) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }

    fn fail(&mut self, check: Check, interval: Option<usize>, detail: impl Into<String>) {
        self.failures.push(Failure {
            check,
            interval,
            detail: detail.into(),
        });
    }
}

fn overlaps(a: &IsolatingInterval, b: &IsolatingInterval) -> bool {
    use IntervalKind::*;
    match (a.kind, b.kind) {
        (Point, Point) => a.lo == b.lo,
        (Point, Open) => b.lo < a.lo && a.lo < b.hi,
        (Open, Point) => a.lo < b.lo && b.lo < a.hi,
        (Open, Open) => a.lo < b.hi && b.lo < a.hi,
    }
}

/// Largest `k` with `(den·X − num)^k` dividing `a`.
fn rational_root_multiplicity(a: &IntPoly, r: &Rational) -> usize {
    let factor = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
    let mut rest = a.clone();
    let mut k = 0;
    while let Some(q) = rest.div_exact(&factor) {
        rest = q;
        k += 1;
    }
    k
}

/// Checks a report against `a_in`: exact point roots, one root per open
/// interval with non-root endpoints, pairwise disjointness, complete root
/// coverage, and multiplicities (via vanishing derivatives).
pub fn verify_isolation(a_in: &IntPoly, report: &IsolationReport) -> Verdict {
    let mut verdict = Verdict::default();
    let seq = match sturm_sequence(a_in) {
        Ok(s) => s,
        Err(e) => {
            verdict.fail(Check::Input, None, e.to_string());
            return verdict;
        }
    };
    let sqf = seq.square_free().clone();
    let sqf_seq = sturm_sequence(&sqf).expect("square-free part of a nonconstant polynomial");
    verdict.expected_roots = count_with(
        &seq,
        &ExtendedRational::NegInfinity,
        &ExtendedRational::Infinity,
    );

    // gcd(sqf, A^(k)) for k = 1, 2, ... computed on demand
    let mut derivative_gcds: Vec<IntPoly> = Vec::new();

    for (i, iv) in report.intervals.iter().enumerate() {
        match iv.kind {
            IntervalKind::Point => {
                if iv.lo != iv.hi {
                    verdict.fail(Check::PointRoot, Some(i), "point interval with lo != hi");
                    continue;
                }
                let mult = rational_root_multiplicity(a_in, &iv.lo);
                if mult == 0 {
                    verdict.fail(
                        Check::PointRoot,
                        Some(i),
                        format!("{} is not a root", iv.lo),
                    );
                    continue;
                }
                if mult != iv.multiplicity {
                    verdict.fail(
                        Check::Multiplicity,
                        Some(i),
                        format!(
                            "root {} has multiplicity {mult}, reported {}",
                            iv.lo, iv.multiplicity
                        ),
                    );
                }
            }
            IntervalKind::Open => {
                if iv.lo >= iv.hi {
                    verdict.fail(Check::OpenInterval, Some(i), "empty open interval");
                    continue;
                }
                if sqf.evaluate_sign(&iv.lo) == Sign::Zero
                    || sqf.evaluate_sign(&iv.hi) == Sign::Zero
                {
                    verdict.fail(Check::OpenInterval, Some(i), "an endpoint is a root");
                    continue;
                }
                let lo = ExtendedRational::Finite(iv.lo.clone());
                let hi = ExtendedRational::Finite(iv.hi.clone());
                let n = count_with(&sqf_seq, &lo, &hi);
                if n != 1 {
                    verdict.fail(
                        Check::OpenInterval,
                        Some(i),
                        format!("({}, {}) contains {n} roots", iv.lo, iv.hi),
                    );
                    continue;
                }
                let mut mult = 1;
                loop {
                    if derivative_gcds.len() < mult {
                        let d = a_in.nth_derivative(mult);
                        derivative_gcds.push(remainder_gcd(&sqf, &d));
                    }
                    let g = &derivative_gcds[mult - 1];
                    let vanishes = g.degree() > 0
                        && sturm_sequence(g)
                            .map(|s| count_with(&s, &lo, &hi) > 0)
                            .unwrap_or(false);
                    if !vanishes {
                        break;
                    }
                    mult += 1;
                }
                if mult != iv.multiplicity {
                    verdict.fail(
                        Check::Multiplicity,
                        Some(i),
                        format!(
                            "root in ({}, {}) has multiplicity {mult}, reported {}",
                            iv.lo, iv.hi, iv.multiplicity
                        ),
                    );
                }
            }
        }
    }

    let ivs = &report.intervals;
    for i in 0..ivs.len() {
        for j in i + 1..ivs.len() {
            if overlaps(&ivs[i], &ivs[j]) {
                verdict.fail(Check::Disjoint, Some(j), format!("overlaps interval #{i}"));
            }
        }
    }

    if ivs.len() != verdict.expected_roots {
        let detail = format!(
            "{} intervals reported, {} distinct real roots",
            ivs.len(),
            verdict.expected_roots
        );
        verdict.fail(Check::RootCount, None, detail);
    }
    verdict
}
