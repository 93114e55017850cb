//! Structured pass/fail records for the verification predicates.
//!
//! Every predicate run appears exactly once; a verdict derives
//! deterministically from the measured value and its threshold. The
//! `anchor` string states the property being checked in plain language so
//! a reviewer can trace each entry.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredicateEntry {
    pub name: String,
    pub verdict: Verdict,
    pub measured: f64,
    pub threshold: f64,
    pub anchor: String,
}

impl PredicateEntry {
    pub fn new(
        name: impl Into<String>,
        verdict: Verdict,
        measured: f64,
        threshold: f64,
        anchor: impl Into<String>,
    ) -> Self {
        PredicateEntry {
            name: name.into(),
            verdict,
            measured,
            threshold,
            anchor: anchor.into(),
        }
    }

    /// Pass when the measured defect is at most the threshold.
    pub fn defect(
        name: impl Into<String>,
        measured: f64,
        threshold: f64,
        anchor: impl Into<String>,
    ) -> Self {
        let verdict = if measured <= threshold {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        PredicateEntry::new(name, verdict, measured, threshold, anchor)
    }

    /// Pass when the measured value is at least the threshold.
    pub fn margin(
        name: impl Into<String>,
        measured: f64,
        threshold: f64,
        anchor: impl Into<String>,
    ) -> Self {
        let verdict = if measured >= threshold {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        PredicateEntry::new(name, verdict, measured, threshold, anchor)
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        PredicateEntry::new(name, Verdict::Skipped, f64::NAN, f64::NAN, anchor)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridInfo {
    pub n: usize,
    pub points: usize,
    pub length: f64,
}

impl From<&crate::grid::Grid> for GridInfo {
    fn from(g: &crate::grid::Grid) -> Self {
        GridInfo {
            n: g.dim(),
            points: g.points_per_axis(),
            length: g.box_length(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
    pub grid: GridInfo,
}

impl Environment {
    pub fn new(seed: u64, grid: &crate::grid::Grid) -> Self {
        Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            grid: grid.into(),
        }
    }
}

/// Ordered list of predicate outcomes plus the run environment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub environment: Environment,
    pub predicates: Vec<PredicateEntry>,
}

impl VerificationReport {
    pub fn new(environment: Environment) -> Self {
        VerificationReport {
            environment,
            predicates: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: PredicateEntry) {
        self.predicates.push(entry);
    }

    pub fn all_ok(&self) -> bool {
        self.predicates
            .iter()
            .all(|p| !matches!(p.verdict, Verdict::Fail))
    }

    pub fn entry(&self, name: &str) -> Option<&PredicateEntry> {
        self.predicates.iter().find(|p| p.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_derive_from_values() {
        let ok = PredicateEntry::defect("a", 1e-10, 1e-8, "small defect");
        assert_eq!(ok.verdict, Verdict::Pass);
        let bad = PredicateEntry::defect("b", 1e-6, 1e-8, "large defect");
        assert_eq!(bad.verdict, Verdict::Fail);
        let pos = PredicateEntry::margin("c", 0.5, 0.0, "positive margin");
        assert_eq!(pos.verdict, Verdict::Pass);

        let grid = crate::grid::Grid::new(1, 8, 8.0).unwrap();
        let mut rep = VerificationReport::new(Environment::new(1, &grid));
        rep.push(ok);
        rep.push(pos);
        assert!(rep.all_ok());
        rep.push(bad);
        assert!(!rep.all_ok());
        assert_eq!(rep.entry("b").unwrap().verdict, Verdict::Fail);
    }
}
