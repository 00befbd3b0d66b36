use std::fmt::Write as _;
use std::time::Duration;

use cfroots::sturm::Verdict;
use cfroots::{IntervalKind, IsolatingInterval, IsolationReport, SolverStats};
use serde::{Deserialize, Serialize};

use crate::input::format_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Point,
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub kind: Kind,
    pub lo: String,
    pub hi: String,
    pub multiplicity: usize,
}

impl From<&IsolatingInterval> for IntervalRecord {
    fn from(iv: &IsolatingInterval) -> Self {
        IntervalRecord {
            kind: match iv.kind {
                IntervalKind::Point => Kind::Point,
                IntervalKind::Open => Kind::Open,
            },
            lo: format_rational(&iv.lo),
            hi: format_rational(&iv.hi),
            multiplicity: iv.multiplicity,
        }
    }
}

impl IntervalRecord {
    /// `[1, 1] mult 1` for a point, `(0, 4) mult 1` for an open interval.
    pub fn to_text(&self) -> String {
        let (open, close) = match self.kind {
            Kind::Point => ('[', ']'),
            Kind::Open => ('(', ')'),
        };
        format!(
            "{open}{}, {}{close} mult {}",
            self.lo, self.hi, self.multiplicity
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub node_count: u64,
    pub shift_count: u64,
    pub homothety_count: u64,
    pub max_coeff_bits: u64,
    pub mean_partial_quotient_bits: Option<f64>,
}

impl From<&SolverStats> for StatsRecord {
    fn from(s: &SolverStats) -> Self {
        StatsRecord {
            node_count: s.node_count,
            shift_count: s.shift_count,
            homothety_count: s.homothety_count,
            max_coeff_bits: s.max_coeff_bits,
            mean_partial_quotient_bits: s.mean_partial_quotient_bits(),
        }
    }
}

impl StatsRecord {
    pub fn to_text(&self) -> String {
        let mean = match self.mean_partial_quotient_bits {
            Some(m) => format!("{m:.3}"),
            None => "-".into(),
        };
        format!(
            "nodes={} shifts={} homotheties={} max_coeff_bits={} mean_pq_bits={mean}",
            self.node_count, self.shift_count, self.homothety_count, self.max_coeff_bits
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub input: String,
    pub degree: usize,
    pub intervals: Vec<IntervalRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsRecord>,
    pub wall_time_s: f64,
}

impl RunRecord {
    pub fn new(
        input: String,
        degree: usize,
        report: &IsolationReport,
        elapsed: Duration,
        with_stats: bool,
    ) -> Self {
        RunRecord {
            input,
            degree,
            intervals: report.intervals.iter().map(IntervalRecord::from).collect(),
            stats: with_stats.then(|| StatsRecord::from(&report.stats)),
            wall_time_s: elapsed.as_secs_f64(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# input: {}", self.input);
        let _ = writeln!(
            s,
            "# degree {}, {} real roots",
            self.degree,
            self.intervals.len()
        );
        for iv in &self.intervals {
            let _ = writeln!(s, "{}", iv.to_text());
        }
        if let Some(stats) = &self.stats {
            let _ = writeln!(s, "# stats: {}", stats.to_text());
        }
        let _ = writeln!(s, "# time: {:.6} s", self.wall_time_s);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    #[serde(flatten)]
    pub run: RunRecord,
    pub passed: bool,
    /// Distinct real roots according to the Sturm count.
    pub expected_roots: usize,
    pub failures: Vec<String>,
}

impl VerifyRecord {
    pub fn new(run: RunRecord, verdict: &Verdict) -> Self {
        VerifyRecord {
            run,
            passed: verdict.passed(),
            expected_roots: verdict.expected_roots,
            failures: verdict.failures.iter().map(|f| f.to_string()).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = self.run.to_text();
        let tag = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{tag}: {} intervals, Sturm count {}",
            self.run.intervals.len(),
            self.expected_roots
        );
        for f in &self.failures {
            let _ = writeln!(s, "  {f}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub family: String,
    pub degree: usize,
    pub input: String,
    pub roots: usize,
    pub node_count: u64,
    pub wall_time_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsRecord>,
}

impl BenchRow {
    pub const TEXT_HEADER: &'static str = "family        degree  roots      nodes     time_s";

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:<12} {:>7} {:>6} {:>10} {:>10.4}",
            self.family, self.degree, self.roots, self.node_count, self.wall_time_s
        );
        if let Some(stats) = &self.stats {
            let _ = write!(s, "  {}", stats.to_text());
        }
        s
    }
}
