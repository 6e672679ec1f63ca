//! Falsifiable campaigns over generated instances, one per structural result
//! about Jacobi-orthogonality.
//!
//! Every suite enumerates its instances up front, evaluates them in parallel
//! with per-instance seeds `derive_seed(cfg.seed, index)` and merges results
//! by index, so reports are byte-identical for a fixed seed.

mod clifford;
mod dim3;
mod dim4;
mod duality;
mod eigen;
mod gen;
mod null_ext;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{Mode, PropertyReport};
use crate::tensor::{io, CurvatureTensor};

pub use clifford::suite_clifford_jo;
pub use dim3::suite_dim3;
pub use dim4::{eigenframe_identities, suite_dim4};
pub use duality::suite_duality_crosscheck;
pub use eigen::suite_eigenstructure;
pub use null_ext::suite_null_extension;

pub const SUITES: [&str; 6] = ["clifford-jo", "null-extension", "eigenstructure", "dim3", "dim4", "duality"];

/// Dimensions from which on results are labelled exploratory.
pub const EXPLORATORY_FROM: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?} (expected one of clifford-jo, null-extension, eigenstructure, dim3, dim4, duality)")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Signatures `(p, q)`; empty selects the suite's defaults.
    pub signatures: Vec<(usize, usize)>,
    /// Extra dimensions for exploratory campaigns (only `dim4` and
    /// `duality` use them).
    pub dims: Vec<usize>,
    /// Instances per signature (and per family where a suite iterates over
    /// families).
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Sample count for sampled checkers inside an instance.
    pub check_trials: usize,
    /// Adds one instance built from a family with a broken Hurwitz relation.
    pub include_corrupted: bool,
}

impl SuiteConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        SuiteConfig {
            signatures: Vec::new(),
            dims: Vec::new(),
            trials,
            seed,
            mode: Mode::Auto,
            check_trials: 6,
            include_corrupted: false,
        }
    }

    pub fn with_signatures(mut self, sigs: &[(usize, usize)]) -> Self {
        self.signatures = sigs.to_vec();
        self
    }

    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.trials == 0 {
            return Err(SuiteError::Config("trials must be at least 1".into()));
        }
        if self.check_trials == 0 {
            return Err(SuiteError::Config("check trials must be at least 1".into()));
        }
        for &(p, q) in &self.signatures {
            if !(2..=6).contains(&(p + q)) {
                return Err(SuiteError::Config(format!("signature ({p},{q}) has dimension outside 2..=6")));
            }
        }
        if let Some(d) = self.dims.iter().find(|d| !(2..=6).contains(*d)) {
            return Err(SuiteError::Config(format!("dimension {d} outside 2..=6")));
        }
        Ok(())
    }

    fn signatures_or(&self, defaults: &[(usize, usize)]) -> Vec<(usize, usize)> {
        if self.signatures.is_empty() {
            defaults.to_vec()
        } else {
            self.signatures.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The generator rejected the instance (e.g. a broken Hurwitz relation).
    InvalidInput,
    /// Outside the hypothesis of the result under test.
    Skipped,
    /// Dimension 5 or more: recorded, never gating.
    Exploratory,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub label: String,
    pub signature: [usize; 2],
    pub outcome: Outcome,
    /// Verdicts and other observations, keyed by name.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub results: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub label: String,
    /// The tensor in the file format of [`io::to_json`].
    pub tensor: serde_json::Value,
    pub reports: Vec<PropertyReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub invalid_input: usize,
    pub skipped: usize,
    pub exploratory: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub counts: Counts,
    /// Totals of the per-instance counts.
    pub metrics: BTreeMap<String, u64>,
    pub instances: Vec<InstanceReport>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn instances_with(&self, outcome: Outcome) -> impl Iterator<Item = &InstanceReport> {
        self.instances.iter().filter(move |i| i.outcome == outcome)
    }
}

/// Result of evaluating one instance.
pub(crate) struct Evaluated {
    pub report: InstanceReport,
    pub counterexample: Option<Counterexample>,
}

/// Builder for an instance's report.
pub(crate) struct Instance {
    report: InstanceReport,
    evidence: Vec<PropertyReport>,
    tensor: Option<CurvatureTensor>,
    failed: bool,
}

impl Instance {
    pub fn new(index: usize, label: impl Into<String>, (p, q): (usize, usize)) -> Self {
        Instance {
            report: InstanceReport {
                index,
                label: label.into(),
                signature: [p, q],
                outcome: Outcome::Pass,
                results: BTreeMap::new(),
                counts: BTreeMap::new(),
                notes: Vec::new(),
            },
            evidence: Vec::new(),
            tensor: None,
            failed: false,
        }
    }

    pub fn tensor(&mut self, r: &CurvatureTensor) {
        self.tensor = Some(r.clone());
    }

    pub fn result(&mut self, key: &str, value: impl Into<String>) {
        self.report.results.insert(key.to_string(), value.into());
    }

    /// Records a checker verdict; the report is kept as evidence.
    pub fn verdict(&mut self, rep: &PropertyReport) {
        let key = match rep.values.get("mode") {
            Some(m) => format!("{}-{m}", rep.property),
            None => rep.property.clone(),
        };
        self.result(&key, rep.verdict.to_string());
        self.evidence.push(rep.clone());
    }

    pub fn count(&mut self, key: &str, n: u64) {
        *self.report.counts.entry(key.to_string()).or_default() += n;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    /// Marks the instance failed when `ok` is false.
    pub fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failed = true;
            self.report.notes.push(what.into());
        }
    }

    pub fn finish(self) -> Evaluated {
        self.finish_as(None)
    }

    /// Finishes with an explicit outcome (skip, invalid input, exploratory)
    /// unless a failure was recorded.
    pub fn finish_as(mut self, outcome: Option<Outcome>) -> Evaluated {
        self.report.outcome = match (self.failed, outcome) {
            (true, Some(Outcome::Exploratory)) => Outcome::Exploratory,
            (true, _) => Outcome::Fail,
            (false, Some(o)) => o,
            (false, None) => Outcome::Pass,
        };
        let counterexample = (self.report.outcome == Outcome::Fail).then(|| Counterexample {
            index: self.report.index,
            label: self.report.label.clone(),
            tensor: self
                .tensor
                .as_ref()
                .map(|t| serde_json::from_str(&io::to_json(t)).expect("valid json"))
                .unwrap_or(serde_json::Value::Null),
            reports: self.evidence.clone(),
        });
        Evaluated { report: self.report, counterexample }
    }
}

/// Evaluates `specs` in parallel and merges in index order.
pub(crate) fn run<T: Sync>(
    suite: &str,
    cfg: &SuiteConfig,
    specs: Vec<T>,
    eval: impl Fn(usize, &T) -> Evaluated + Sync,
) -> SuiteReport {
    let results: Vec<Evaluated> = specs.par_iter().enumerate().map(|(i, s)| eval(i, s)).collect();
    let mut counts = Counts::default();
    let mut metrics = BTreeMap::new();
    let mut instances = Vec::with_capacity(results.len());
    let mut counterexamples = Vec::new();
    for e in results {
        match e.report.outcome {
            Outcome::Pass => counts.pass += 1,
            Outcome::Fail => counts.fail += 1,
            Outcome::InvalidInput => counts.invalid_input += 1,
            Outcome::Skipped => counts.skipped += 1,
            Outcome::Exploratory => counts.exploratory += 1,
        }
        for (k, v) in &e.report.counts {
            *metrics.entry(k.clone()).or_insert(0) += v;
        }
        instances.push(e.report);
        counterexamples.extend(e.counterexample);
    }
    SuiteReport {
        suite: suite.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        passed: counts.fail == 0,
        counts,
        metrics,
        instances,
        counterexamples,
    }
}

/// Runs a suite by its command-line name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    match name {
        "clifford-jo" => suite_clifford_jo(cfg),
        "null-extension" => suite_null_extension(cfg),
        "eigenstructure" => suite_eigenstructure(cfg),
        "dim3" => suite_dim3(cfg),
        "dim4" => suite_dim4(cfg),
        "duality" => suite_duality_crosscheck(cfg),
        other => Err(SuiteError::UnknownSuite(other.to_string())),
    }
}
