//! Exact real root isolation for univariate integer polynomials.
//!
//! The solver walks the continued-fraction expansion of every real root,
//! transforming the polynomial with shifts `X ↦ X + b`, inversions
//! `X ↦ 1/(1 + X)` and power-of-two homotheties until Descartes' rule of
//! signs certifies zero or one root per branch. A composed Möbius map tracks
//! where each branch sits on the original real line, so every leaf turns into
//! an interval with exact rational endpoints.
//!
//! Output can be certified independently with [`sturm::verify_isolation`].
//!
//! ```
//! use cfroots::{isolate_all, IntPoly, SolverConfig};
//!
//! // (X - 1)^2 (X^2 - 2)
//! let a = &IntPoly::from_i64s(&[-1, 1]).pow(2) * &IntPoly::from_i64s(&[-2, 0, 1]);
//! let report = isolate_all(&a, &SolverConfig::default()).unwrap();
//! assert_eq!(report.intervals.len(), 3);
//! assert_eq!(report.intervals[1].multiplicity, 2);
//! ```

pub mod bounds;
pub mod error;
pub mod families;
pub mod mobius;
pub mod poly;
pub mod solver;
pub mod sturm;

pub use bounds::{positive_lower_bound, positive_root_upper_bound, Pow2Bound};
pub use error::{Error, Result};
pub use mobius::{ExtendedRational, MobiusMap};
pub use poly::{IntPoly, Rational, Sign};
pub use solver::{
    attach_multiplicities, isolate_all, isolate_positive, isolate_real, IntervalKind,
    IsolatingInterval, IsolationReport, SolverConfig, SolverStats,
};
pub use sturm::{count_real_roots, count_roots_in, sturm_sequence, verify_isolation, Verdict};
