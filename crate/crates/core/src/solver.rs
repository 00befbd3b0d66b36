//! Continued-fraction real root isolation.
//!
//! Each node of the search holds a transformed polynomial `A_v` and the
//! Möbius map `M_v` relating it to the input: positive roots of `A_v`
//! correspond, through `M_v`, to the input roots inside `M_v((0, ∞))`.
//! A node
//!
//! 1. reports `M_v(0)` and deflates when `A_v(0) = 0`,
//! 2. stops when Descartes' rule gives zero or one positive root,
//! 3. otherwise jumps towards the smallest positive root using the
//!    power-of-two lower bound (homothety when the bound is at least the
//!    configured threshold, shift otherwise), and
//! 4. splits into `(1, ∞)` via `X ↦ X + 1` and `(0, 1)` via `X ↦ 1/(1 + X)`.
//!
//! The `(0, 1)` child is skipped when the shift by one did not lose a sign
//! variation, since Budan's theorem then rules out roots in `(0, 1)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bounds::{positive_lower_bound, positive_root_upper_bound, Pow2Bound};
use crate::error::{Error, Result};
use crate::mobius::{ExtendedRational, MobiusMap};
use crate::poly::{IntPoly, Rational, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Lower bounds at or above this power of two trigger `X ↦ bX` instead
    /// of a shift.
    pub homothety_threshold: u64,
    pub budan_pruning: bool,
    pub collect_stats: bool,
    /// Abort after this many nodes. `None` uses `1024 · (d² + dτ + 16)`.
    pub node_ceiling: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            homothety_threshold: 16,
            budan_pruning: true,
            collect_stats: true,
            node_ceiling: None,
        }
    }
}

impl SolverConfig {
    fn threshold_exponent(&self) -> Result<i64> {
        let t = self.homothety_threshold;
        if t < 2 || !t.is_power_of_two() {
            return Err(Error::InvalidConfig(format!(
                "homothety threshold must be a power of two >= 2, got {t}"
            )));
        }
        Ok(t.trailing_zeros() as i64)
    }
}

/// Default non-termination guard for a degree-`d`, bitsize-`tau` input.
pub fn default_node_ceiling(d: usize, tau: u64) -> u64 {
    let d = d as u64;
    1024 * (d * d + d * tau + 16)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Nodes of the search tree visited.
    pub node_count: u64,
    /// Largest coefficient magnitude seen at any node, in bits.
    pub max_coeff_bits: u64,
    /// Bitsize of the integer advance taken at each splitting node: the
    /// power-of-two homothety exponents plus the bitsize of `b + 1`, where
    /// `b` is the bound-driven shift (0 when none).
    pub partial_quotient_bits: Vec<u64>,
    /// Bound-driven shifts `X ↦ X + b` with `b > 1`.
    pub shift_count: u64,
    pub homothety_count: u64,
}

impl SolverStats {
    pub fn merge(&mut self, other: SolverStats) {
        self.node_count += other.node_count;
        self.max_coeff_bits = self.max_coeff_bits.max(other.max_coeff_bits);
        self.partial_quotient_bits
            .extend(other.partial_quotient_bits);
        self.shift_count += other.shift_count;
        self.homothety_count += other.homothety_count;
    }

    pub fn mean_partial_quotient_bits(&self) -> Option<f64> {
        if self.partial_quotient_bits.is_empty() {
            return None;
        }
        let sum: u64 = self.partial_quotient_bits.iter().sum();
        Some(sum as f64 / self.partial_quotient_bits.len() as f64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// `lo == hi` is an exact root.
    Point,
    /// Exactly one distinct root in the open interval `(lo, hi)`.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub kind: IntervalKind,
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn point(root: Rational) -> Self {
        IsolatingInterval {
            kind: IntervalKind::Point,
            lo: root.clone(),
            hi: root,
            multiplicity: 1,
        }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        IsolatingInterval {
            kind: IntervalKind::Open,
            lo,
            hi,
            multiplicity: 1,
        }
    }

    pub fn is_point(&self) -> bool {
        self.kind == IntervalKind::Point
    }

    /// Image under `x ↦ −x`.
    pub fn mirrored(&self) -> Self {
        IsolatingInterval {
            kind: self.kind,
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            multiplicity: self.multiplicity,
        }
    }

    fn order(&self, other: &Self) -> Ordering {
        self.lo.cmp(&other.lo).then_with(|| self.hi.cmp(&other.hi))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationReport {
    /// Sorted ascending, pairwise disjoint.
    pub intervals: Vec<IsolatingInterval>,
    pub stats: SolverStats,
    pub square_free_used: IntPoly,
}

fn finite(e: ExtendedRational) -> Result<Rational> {
    match e {
        ExtendedRational::Finite(q) => Ok(q),
        _ => Err(Error::DegenerateMap),
    }
}

/// Endpoints of `outer ∘ local` over `(0, ∞)`, sorted, with an infinite
/// image of `∞` replaced by the image of `fallback_upper`.
fn composed_interval(
    outer: &MobiusMap,
    local: &MobiusMap,
    fallback_upper: &Rational,
) -> Result<(Rational, Rational)> {
    let through =
        |x: &ExtendedRational| -> Result<ExtendedRational> { outer.image(&local.image(x)?) };
    let a = finite(through(&ExtendedRational::zero())?)?;
    let b = match through(&ExtendedRational::Infinity)? {
        ExtendedRational::Finite(q) => q,
        _ => finite(through(&ExtendedRational::Finite(fallback_upper.clone()))?)?,
    };
    Ok(if a <= b { (a, b) } else { (b, a) })
}

/// The root of the square-free `a` in `(lo, hi)` when it is rational.
/// `a` must have exactly one root inside the interval; the endpoints may be
/// roots reported elsewhere.
///
/// A rational root `p/q` of `a` has `q | lc(a)`, so `lc · root` is an
/// integer: binary search over the integers `t` in `(lc·lo, lc·hi)` using
/// the sign of `a(t / lc)`.
fn rational_root_in(a: &IntPoly, lo: &Rational, hi: &Rational) -> Option<Rational> {
    // sign of `a` just inside the interval next to `x`
    let inner_sign = |x: &Rational, from_left: bool| match a.evaluate_sign(x) {
        Sign::Zero => {
            let slope = a.derivative().evaluate_sign(x);
            if from_left {
                slope
            } else {
                slope.flip()
            }
        }
        s => s,
    };
    let lc = a.leading_coeff().abs();
    let side_lo = inner_sign(lo, true);
    if side_lo == Sign::Zero || inner_sign(hi, false) != side_lo.flip() {
        return None;
    }
    let scale = Rational::from_integer(lc.clone());
    let mut first: BigInt = (lo * &scale).floor().to_integer() + 1;
    let mut last: BigInt = (hi * &scale).ceil().to_integer() - 1;
    while first <= last {
        let mid: BigInt = (&first + &last).div_floor(&BigInt::from(2));
        match Sign::of(&a.evaluate_homogeneous(&mid, &lc)) {
            Sign::Zero => return Some(Rational::new(mid, lc)),
            s if s == side_lo => first = mid + 1,
            _ => last = mid - 1,
        }
    }
    None
}

/// Isolates the roots of the input lying in `map((0, ∞))`, where `a` is the
/// input already transformed by `map`. `a` must be square-free.
///
/// Leaves with a single sign variation whose root turns out to be rational
/// are reported as exact points.
pub fn isolate_positive(
    a: &IntPoly,
    map: MobiusMap,
    cfg: &SolverConfig,
) -> Result<(Vec<IsolatingInterval>, SolverStats)> {
    let thr_exp = cfg.threshold_exponent()?;
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let ceiling = cfg
        .node_ceiling
        .unwrap_or_else(|| default_node_ceiling(a.degree(), a.bitsize()));

    let mut out = Vec::new();
    let mut stats = SolverStats::default();
    // Node maps are relative to `a`; `map` is applied when reporting.
    let mut stack = vec![(a.clone(), MobiusMap::identity())];

    while let Some((mut poly, mut local)) = stack.pop() {
        stats.node_count += 1;
        if stats.node_count > ceiling {
            return Err(Error::NodeCeilingExceeded {
                ceiling,
                degree: a.degree(),
            });
        }
        if cfg.collect_stats {
            stats.max_coeff_bits = stats.max_coeff_bits.max(poly.max_coeff_bits());
        }

        if poly.constant_term().is_zero() {
            let root = map.image(&local.image_of_zero()?)?;
            out.push(IsolatingInterval::point(finite(root)?));
            poly = poly.deflate_zero_roots()?.0;
        }
        if poly.degree() == 0 {
            continue;
        }

        let var = poly.sign_variations()?;
        if var == 0 {
            continue;
        }
        if var == 1 {
            let mut upper = positive_root_upper_bound(&poly)?
                .to_rational()
                .expect("a sign variation implies a positive root");
            while poly.evaluate_sign(&upper) == Sign::Zero {
                upper *= Rational::from_integer(BigInt::from(2));
            }
            let (lo, hi) = local.to_interval(&upper)?;
            match rational_root_in(a, &lo, &hi) {
                Some(r) => {
                    let root = map.image(&ExtendedRational::Finite(r))?;
                    out.push(IsolatingInterval::point(finite(root)?));
                }
                None => {
                    let (lo, hi) = composed_interval(&map, &local, &upper)?;
                    out.push(IsolatingInterval::open(lo, hi));
                }
            }
            continue;
        }

        // Jump towards the smallest positive root.
        let mut scaled_bits = 0u64;
        let mut shift: Option<BigInt> = None;
        loop {
            match positive_lower_bound(&poly)? {
                Pow2Bound::Exponent(e) if e >= thr_exp => {
                    let beta = e as u64;
                    poly = poly.homothety_pow2(beta);
                    local = local.compose_homothety_pow2(beta);
                    stats.homothety_count += 1;
                    scaled_bits += beta;
                }
                Pow2Bound::Exponent(e) if e >= 1 => {
                    let b = BigInt::one() << (e as u64);
                    poly = poly.taylor_shift(&b);
                    local = local.compose_shift(&b);
                    stats.shift_count += 1;
                    shift = Some(b);
                    break;
                }
                _ => break,
            }
        }
        if cfg.collect_stats {
            let advance = shift.clone().unwrap_or_else(BigInt::zero) + 1u32;
            stats
                .partial_quotient_bits
                .push(scaled_bits + advance.bits());
        }

        let var = if shift.is_some() {
            // The shift may land exactly on a root or leave a leaf behind.
            if poly.constant_term().is_zero() {
                stack.push((poly, local));
                continue;
            }
            let v = poly.sign_variations()?;
            if v <= 1 {
                stack.push((poly, local));
                continue;
            }
            v
        } else {
            var
        };

        let right = poly.taylor_shift_by_one();
        let right_map = local.compose_shift(&BigInt::one());
        let explore_left = !cfg.budan_pruning || right.sign_variations()? < var;
        if explore_left {
            let mut left = poly.invert_unit();
            // A root at 1 is reported by the right child.
            if left.constant_term().is_zero() {
                left = left.deflate_zero_roots()?.0;
            }
            stack.push((left, local.compose_invert_unit()));
        }
        stack.push((right, right_map));
    }

    Ok((out, stats))
}

/// Isolates all real roots of a square-free polynomial.
pub fn isolate_real(
    a: &IntPoly,
    cfg: &SolverConfig,
) -> Result<(Vec<IsolatingInterval>, SolverStats)> {
    cfg.threshold_exponent()?;
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut intervals = Vec::new();
    let mut stats = SolverStats::default();
    if a.degree() == 0 {
        return Ok((intervals, stats));
    }
    let (core, zeros) = a.deflate_zero_roots()?;
    if zeros > 0 {
        intervals.push(IsolatingInterval::point(Rational::zero()));
    }
    if core.degree() >= 1 {
        let (pos, pos_stats) = isolate_positive(&core, MobiusMap::identity(), cfg)?;
        let (neg, neg_stats) =
            isolate_positive(&core.negate_variable(), MobiusMap::identity(), cfg)?;
        intervals.extend(pos);
        intervals.extend(neg.iter().map(IsolatingInterval::mirrored));
        stats.merge(pos_stats);
        stats.merge(neg_stats);
    }
    intervals.sort_by(IsolatingInterval::order);
    Ok((intervals, stats))
}

/// Isolates the real roots of an arbitrary nonconstant polynomial and
/// reports their multiplicities.
pub fn isolate_all(a_in: &IntPoly, cfg: &SolverConfig) -> Result<IsolationReport> {
    if a_in.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a_in.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let square_free = a_in.square_free_part()?;
    let (intervals, stats) = isolate_real(&square_free, cfg)?;
    let factors = a_in.yun_square_free_factorization()?;
    let intervals = attach_multiplicities(intervals, &factors)?;
    Ok(IsolationReport {
        intervals,
        stats,
        square_free_used: square_free,
    })
}

/// Sets each interval's multiplicity to the index of the unique
/// square-free factor vanishing inside it.
pub fn attach_multiplicities(
    intervals: Vec<IsolatingInterval>,
    factors: &[(IntPoly, usize)],
) -> Result<Vec<IsolatingInterval>> {
    intervals
        .into_iter()
        .map(|mut iv| {
            let hits: Vec<usize> = factors
                .iter()
                .filter(|(f, _)| match iv.kind {
                    IntervalKind::Point => f.evaluate_sign(&iv.lo) == Sign::Zero,
                    IntervalKind::Open => {
                        let lo = f.evaluate_sign(&iv.lo);
                        let hi = f.evaluate_sign(&iv.hi);
                        lo != Sign::Zero && hi == lo.flip()
                    }
                })
                .map(|(_, m)| *m)
                .collect();
            match hits.as_slice() {
                [m] => {
                    iv.multiplicity = *m;
                    Ok(iv)
                }
                _ => Err(Error::MultiplicityMismatch {
                    lo: iv.lo.to_string(),
                    hi: iv.hi.to_string(),
                    matches: hits.len(),
                }),
            }
        })
        .collect()
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

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn positive_sqrt2_is_one_open_interval() {
        let (ivs, stats) =
            isolate_positive(&p(&[-2, 0, 1]), MobiusMap::identity(), &cfg()).unwrap();
        assert_eq!(ivs, vec![IsolatingInterval::open(q(0, 1), q(4, 1))]);
        assert_eq!(stats.node_count, 1);
    }

    #[test]
    fn positive_integer_roots_are_points() {
        let (mut ivs, _) =
            isolate_positive(&p(&[2, -3, 1]), MobiusMap::identity(), &cfg()).unwrap();
        ivs.sort_by(IsolatingInterval::order);
        assert_eq!(
            ivs,
            vec![
                IsolatingInterval::point(q(1, 1)),
                IsolatingInterval::point(q(2, 1))
            ]
        );
    }

    #[test]
    fn positive_without_roots() {
        let (ivs, _) = isolate_positive(&p(&[1, 0, 1]), MobiusMap::identity(), &cfg()).unwrap();
        assert!(ivs.is_empty());
        assert_eq!(
            isolate_positive(&p(&[3]), MobiusMap::identity(), &cfg()),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn real_examples() {
        let (ivs, _) = isolate_real(&p(&[-2, 0, 1]), &cfg()).unwrap();
        assert_eq!(
            ivs,
            vec![
                IsolatingInterval::open(q(-4, 1), q(0, 1)),
                IsolatingInterval::open(q(0, 1), q(4, 1)),
            ]
        );
        let (ivs, _) = isolate_real(&p(&[0, -1, 0, 1]), &cfg()).unwrap();
        assert_eq!(
            ivs,
            vec![
                IsolatingInterval::point(q(-1, 1)),
                IsolatingInterval::point(q(0, 1)),
                IsolatingInterval::point(q(1, 1)),
            ]
        );
        let (ivs, stats) = isolate_real(&p(&[5]), &cfg()).unwrap();
        assert!(ivs.is_empty());
        assert_eq!(stats.node_count, 0);
    }

    #[test]
    fn rational_roots_between_integers() {
        // (2X − 1)(3X − 2)(X − 5)
        let a = &(&p(&[-1, 2]) * &p(&[-2, 3])) * &p(&[-5, 1]);
        let (ivs, _) = isolate_real(&a, &cfg()).unwrap();
        let points: Vec<_> = ivs
            .iter()
            .filter(|i| i.is_point())
            .map(|i| i.lo.clone())
            .collect();
        assert_eq!(ivs.len(), 3);
        assert!(points.contains(&q(5, 1)));
        assert!(points.contains(&q(1, 2)));
    }

    #[test]
    fn large_root_uses_homothety() {
        // X − 1000000 and X − 3000000
        let a = &p(&[-1_000_000, 1]) * &p(&[-3_000_000, 1]);
        let (ivs, stats) = isolate_real(&a, &cfg()).unwrap();
        assert!(stats.homothety_count > 0);
        assert_eq!(ivs.len(), 2);
        for iv in &ivs {
            assert!(iv.lo <= q(3_000_000, 1) && iv.hi >= q(1_000_000, 1));
        }
    }

    #[test]
    fn all_with_multiplicities() {
        let xm1 = p(&[-1, 1]);
        let xp2 = p(&[2, 1]);
        let a = &xm1.pow(3) * &xp2.pow(2);
        let report = isolate_all(&a, &cfg()).unwrap();
        let got: Vec<_> = report
            .intervals
            .iter()
            .map(|i| (i.lo.clone(), i.hi.clone(), i.multiplicity))
            .collect();
        assert_eq!(got, vec![(q(-2, 1), q(-2, 1), 2), (q(1, 1), q(1, 1), 3)]);
        assert_eq!(report.square_free_used, &xm1 * &xp2);

        let report = isolate_all(&p(&[-2, 0, 1]).pow(3), &cfg()).unwrap();
        assert_eq!(report.intervals.len(), 2);
        assert!(report.intervals.iter().all(|i| i.multiplicity == 3));

        assert_eq!(
            isolate_all(&p(&[4]), &cfg()),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            isolate_all(&IntPoly::zero(), &cfg()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn attach_examples() {
        let ivs = vec![
            IsolatingInterval::point(q(0, 1)),
            IsolatingInterval::point(q(1, 1)),
        ];
        let factors = vec![(p(&[-1, 1]), 2), (p(&[0, 1]), 1)];
        let out = attach_multiplicities(ivs, &factors).unwrap();
        assert_eq!(out[0].multiplicity, 1);
        assert_eq!(out[1].multiplicity, 2);

        let bad = attach_multiplicities(vec![IsolatingInterval::point(q(7, 1))], &factors);
        assert!(matches!(
            bad,
            Err(Error::MultiplicityMismatch { matches: 0, .. })
        ));
    }

    #[test]
    fn node_ceiling_aborts() {
        let cfg = SolverConfig {
            node_ceiling: Some(2),
            ..SolverConfig::default()
        };
        let w = crate::families::wilkinson(10);
        assert!(matches!(
            isolate_real(&w, &cfg),
            Err(Error::NodeCeilingExceeded { ceiling: 2, .. })
        ));
    }

    #[test]
    fn rejects_bad_threshold() {
        let cfg = SolverConfig {
            homothety_threshold: 12,
            ..SolverConfig::default()
        };
        assert!(matches!(
            isolate_real(&p(&[-2, 0, 1]), &cfg),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn stats_merge_is_associative() {
        let mk = |n, b, pq: &[u64]| SolverStats {
            node_count: n,
            max_coeff_bits: b,
            partial_quotient_bits: pq.to_vec(),
            shift_count: n / 2,
            homothety_count: 1,
        };
        let (a, b, c) = (mk(3, 10, &[1, 2]), mk(5, 7, &[3]), mk(1, 12, &[]));
        let mut left = a.clone();
        left.merge(b.clone());
        left.merge(c.clone());
        let mut bc = b;
        bc.merge(c);
        let mut right = a;
        right.merge(bc);
        assert_eq!(left, right);
    }
}
