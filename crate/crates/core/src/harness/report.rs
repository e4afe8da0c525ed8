use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::campaign::CampaignParams;

/// Classification of a single trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TrialOutcome {
    /// A verified certificate, or a verified certificate of non-existence.
    Success { detail: String },
    /// A hypothesis failed on the generated instance.
    Refusal { hypothesis: String },
    /// A budgeted search gave up.
    Unknown { detail: String },
    /// A failure under verified hypotheses or a disagreement with an oracle.
    HardError { detail: String },
}

impl TrialOutcome {
    pub fn success(detail: impl Into<String>) -> Self {
        TrialOutcome::Success { detail: detail.into() }
    }

    pub fn hard(detail: impl Into<String>) -> Self {
        TrialOutcome::HardError { detail: detail.into() }
    }

    pub fn is_hard_error(&self) -> bool {
        matches!(self, TrialOutcome::HardError { .. })
    }

    fn label(&self) -> String {
        match self {
            TrialOutcome::Success { detail } => format!("success ({detail})"),
            TrialOutcome::Refusal { hypothesis } => format!("refusal ({hypothesis})"),
            TrialOutcome::Unknown { detail } => format!("unknown ({detail})"),
            TrialOutcome::HardError { detail } => format!("HARD ERROR ({detail})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub index: usize,
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub outcome: TrialOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub index: usize,
    pub seed: u64,
    pub detail: String,
}

/// Campaign summary. Wall time is deliberately absent so that equal seeds
/// give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub params: CampaignParams,
    pub trials: usize,
    pub successes: usize,
    pub refusals: BTreeMap<String, usize>,
    pub unknowns: usize,
    pub hard_errors: Vec<TrialFailure>,
    pub rows: Vec<TrialRow>,
}

impl Report {
    pub(crate) fn from_rows(params: CampaignParams, rows: Vec<TrialRow>) -> Report {
        let mut successes = 0;
        let mut refusals = BTreeMap::new();
        let mut unknowns = 0;
        let mut hard_errors = Vec::new();
        for row in &rows {
            match &row.outcome {
                TrialOutcome::Success { .. } => successes += 1,
                TrialOutcome::Refusal { hypothesis } => {
                    *refusals.entry(hypothesis.clone()).or_insert(0) += 1
                }
                TrialOutcome::Unknown { .. } => unknowns += 1,
                TrialOutcome::HardError { detail } => hard_errors.push(TrialFailure {
                    index: row.index,
                    seed: row.seed,
                    detail: detail.clone(),
                }),
            }
        }
        Report {
            theorem: params.theorem.to_string(),
            trials: rows.len(),
            params,
            successes,
            refusals,
            unknowns,
            hard_errors,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The same content as [`Report::to_json`] as aligned text.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let _ = writeln!(s, "theorem      {}", self.theorem);
        let _ = writeln!(
            s,
            "params       k={} m={} m0={} t={} n={}..={} seed={} mode={:?}",
            p.params.k, p.params.m, p.params.m0, p.t, p.n_min, p.n_max, p.master_seed, p.mode
        );
        let _ = writeln!(s, "trials       {}", self.trials);
        let _ = writeln!(s, "successes    {}", self.successes);
        for (name, count) in &self.refusals {
            let _ = writeln!(s, "refusals     {count:>5}  {name}");
        }
        let _ = writeln!(s, "unknowns     {}", self.unknowns);
        let _ = writeln!(s, "hard errors  {}", self.hard_errors.len());
        for f in &self.hard_errors {
            let _ = writeln!(s, "  trial {:>5}  seed {:>20}  {}", f.index, f.seed, f.detail);
        }
        let _ = writeln!(s, "{:>6}  {:>20}  {:>4}  {:>5}  outcome", "trial", "seed", "n", "edges");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:>6}  {:>20}  {:>4}  {:>5}  {}",
                r.index,
                r.seed,
                r.vertices,
                r.edges,
                r.outcome.label()
            );
        }
        s
    }
}
