//! Machine-parseable check reports.
//!
//! Every axiom or lemma scan produces one [`LawResult`] per law id, and a
//! [`CheckReport`] is an ordered list of those. The rendering is
//! line-oriented and stable:
//!
//! ```text
//! PASS <id>
//! PASS <id> checked=<count>
//! PASS <id> checked=<count> sampled seed=<seed>
//! FAIL <id> witness=(i,j,k) lhs=a rhs=b
//! ```
//!
//! A result passes exactly when it lists no counterexamples, and every
//! listed counterexample must re-evaluate to a genuine violation of its
//! law on the tables it was produced from; the test suites re-check that
//! property with an independent evaluator.

use std::fmt;

use crate::table::ElementId;

/// Per-law cap on recorded counterexamples; scanning a law stops once the
/// cap is reached so reports stay bounded but diagnostic.
pub const MAX_COUNTEREXAMPLES: usize = 10;

/// A single witnessed violation: the witness tuple together with the two
/// sides of the law that disagreed at it. For existence-style failures
/// (no inverse, no bar-unit) the sides echo the witness elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub witness: Vec<ElementId>,
    pub lhs: ElementId,
    pub rhs: ElementId,
}

impl Counterexample {
    pub fn new(witness: Vec<ElementId>, lhs: ElementId, rhs: ElementId) -> Self {
        Counterexample { witness, lhs, rhs }
    }

    /// `(i,j,k)` with no spaces; the empty witness renders as `()`.
    pub fn witness_string(&self) -> String {
        let parts: Vec<String> = self.witness.iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Outcome of scanning one law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub id: &'static str,
    /// Number of instances evaluated.
    pub checked: u64,
    /// Seed used when the scan was sampled instead of exhaustive.
    pub sampled: Option<u64>,
    pub counterexamples: Vec<Counterexample>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Ordered collection of law results.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub results: Vec<LawResult>,
}

impl CheckReport {
    pub fn new(results: Vec<LawResult>) -> Self {
        CheckReport { results }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }

    pub fn result(&self, id: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// All `(law id, counterexample)` pairs, in report order.
    pub fn counterexamples(&self) -> impl Iterator<Item = (&'static str, &Counterexample)> {
        self.results
            .iter()
            .flat_map(|r| r.counterexamples.iter().map(move |c| (r.id, c)))
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.results.extend(other.results);
        self
    }

    /// Renders the stable line format. `with_counts` adds `checked=` (and
    /// sampling info) to PASS lines, as the `laws` output requires.
    pub fn lines(&self, with_counts: bool) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.results {
            if r.passed() {
                let mut line = format!("PASS {}", r.id);
                if with_counts {
                    line.push_str(&format!(" checked={}", r.checked));
                    if let Some(seed) = r.sampled {
                        line.push_str(&format!(" sampled seed={seed}"));
                    }
                }
                out.push(line);
            } else {
                for c in &r.counterexamples {
                    out.push(format!(
                        "FAIL {} witness={} lhs={} rhs={}",
                        r.id,
                        c.witness_string(),
                        c.lhs,
                        c.rhs
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines(true) {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Incremental builder for one law scan: collects up to
/// [`MAX_COUNTEREXAMPLES`] and tells the caller when to stop.
pub(crate) struct LawScan {
    id: &'static str,
    checked: u64,
    sampled: Option<u64>,
    counterexamples: Vec<Counterexample>,
}

impl LawScan {
    pub fn new(id: &'static str) -> Self {
        LawScan {
            id,
            checked: 0,
            sampled: None,
            counterexamples: Vec::new(),
        }
    }

    pub fn mark_sampled(&mut self, seed: u64) {
        self.sampled = Some(seed);
    }

    /// Records one evaluated instance; returns `false` once the
    /// counterexample cap is hit, signalling the scan to stop.
    pub fn record(&mut self, witness: &[ElementId], lhs: ElementId, rhs: ElementId) -> bool {
        self.checked += 1;
        if lhs != rhs {
            self.counterexamples
                .push(Counterexample::new(witness.to_vec(), lhs, rhs));
            if self.counterexamples.len() >= MAX_COUNTEREXAMPLES {
                return false;
            }
        }
        true
    }

    /// Records a failure that is not a two-sided disagreement (existence
    /// failures). Counts as one checked instance.
    pub fn record_failure(
        &mut self,
        witness: &[ElementId],
        lhs: ElementId,
        rhs: ElementId,
    ) -> bool {
        self.checked += 1;
        self.counterexamples
            .push(Counterexample::new(witness.to_vec(), lhs, rhs));
        self.counterexamples.len() < MAX_COUNTEREXAMPLES
    }

    /// Counts an instance that passed without producing values to compare.
    pub fn record_ok(&mut self) {
        self.checked += 1;
    }

    pub fn finish(self) -> LawResult {
        LawResult {
            id: self.id,
            checked: self.checked,
            sampled: self.sampled,
            counterexamples: self.counterexamples,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_caps_counterexamples() {
        let mut scan = LawScan::new("demo");
        let mut live = true;
        for i in 0..20 {
            if !live {
                break;
            }
            live = scan.record(&[ElementId(i)], ElementId(0), ElementId(1));
        }
        let result = scan.finish();
        assert_eq!(result.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert_eq!(result.checked, MAX_COUNTEREXAMPLES as u64);
        assert!(!result.passed());
    }

    #[test]
    fn lines_format_is_stable() {
        let report = CheckReport::new(vec![
            LawResult {
                id: "ok-law",
                checked: 8,
                sampled: None,
                counterexamples: vec![],
            },
            LawResult {
                id: "bad-law",
                checked: 3,
                sampled: None,
                counterexamples: vec![Counterexample::new(
                    vec![ElementId(1), ElementId(0), ElementId(2)],
                    ElementId(4),
                    ElementId(5),
                )],
            },
        ]);
        assert_eq!(
            report.lines(true),
            vec![
                "PASS ok-law checked=8".to_string(),
                "FAIL bad-law witness=(1,0,2) lhs=4 rhs=5".to_string(),
            ]
        );
        assert_eq!(report.lines(false)[0], "PASS ok-law");
        assert!(!report.passed());
    }

    #[test]
    fn empty_witness_renders_as_unit_tuple() {
        let c = Counterexample::new(vec![], ElementId(0), ElementId(0));
        assert_eq!(c.witness_string(), "()");
    }
}
