//! Machine-readable verdicts for the verification campaigns.

use std::time::Instant;

use serde::Serialize;

use crate::root_system::{RootSystemSpec, Weight};

/// One checked case inside a campaign.
#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    /// Stable case identifier within the campaign.
    pub id: String,
    /// The weight the case is about, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Weight>,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CaseResult {
    pub fn new(
        id: impl Into<String>,
        weight: Option<Weight>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        pass: bool,
    ) -> Self {
        CaseResult {
            id: id.into(),
            weight,
            expected: expected.into(),
            observed: observed.into(),
            pass,
        }
    }
}

/// Outcome of a named verification campaign. Identical inputs produce
/// identical reports apart from `wall_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub campaign: String,
    pub spec: RootSystemSpec,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub wall_ms: u128,
}

impl VerdictReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// Cases that failed, for diagnostics.
    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

/// Accumulates cases and stamps totals and wall time on finish.
pub struct ReportBuilder {
    campaign: String,
    spec: RootSystemSpec,
    cases: Vec<CaseResult>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(campaign: impl Into<String>, spec: RootSystemSpec) -> Self {
        ReportBuilder {
            campaign: campaign.into(),
            spec,
            cases: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn push(&mut self, case: CaseResult) {
        self.cases.push(case);
    }

    pub fn push_check(
        &mut self,
        id: impl Into<String>,
        weight: Option<Weight>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        pass: bool,
    ) {
        self.cases
            .push(CaseResult::new(id, weight, expected, observed, pass));
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = CaseResult>) {
        self.cases.extend(cases);
    }

    pub fn finish(self) -> VerdictReport {
        let passed = self.cases.iter().filter(|c| c.pass).count();
        let failed = self.cases.len() - passed;
        VerdictReport {
            campaign: self.campaign,
            spec: self.spec,
            cases: self.cases,
            passed,
            failed,
            pass: failed == 0,
            wall_ms: self.started.elapsed().as_millis(),
        }
    }
}
