//! The claim registry: every stated theorem, corollary and conjecture as an
//! executable check at a concrete `m`, plus the comparison engine.
//!
//! A claim produces a list of parameter sets for each `m`. Running a claim on
//! one parameter set yields a [`VerificationReport`]; everything random in a
//! check is drawn up front and written into the parameters, so a report can be
//! replayed from `(claim, m, params)` alone.

mod claims;
mod support;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::codes::{CodeSummary, ExpectedTable};
use crate::error::{Error, Result};
use crate::gf2m::{FieldSpec, MAX_DEGREE};

pub use support::Outcome;

pub type Params = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Theorem,
    Corollary,
    Conjecture,
    ReportMode,
}

impl Kind {
    /// Proven statements: a mismatch here is a bug somewhere.
    pub fn is_proven(self) -> bool {
        matches!(self, Kind::Theorem | Kind::Corollary)
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Theorem => "theorem",
            Kind::Corollary => "corollary",
            Kind::Conjecture => "conjecture",
            Kind::ReportMode => "report-mode",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem" => Kind::Theorem,
            "corollary" => Kind::Corollary,
            "conjecture" => Kind::Conjecture,
            "report-mode" | "report" => Kind::ReportMode,
            _ => return Err(Error::Parse(format!("kind `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    Inapplicable,
    ReportOnly,
    Skipped,
}

pub(crate) type Instances = fn(u32) -> Vec<Params>;
pub(crate) type Runner = fn(&FieldSpec, &Params, &mut Outcome) -> Result<()>;

/// One registry row.
pub struct Claim {
    pub id: &'static str,
    pub kind: Kind,
    /// Label of the statement or table the row checks.
    pub anchor: &'static str,
    /// What is checked, in one line.
    pub checks: &'static str,
    /// Largest `m` run by default; rows above it are reported as skipped.
    pub max_m: u32,
    instances: Instances,
    run: Runner,
}

impl Claim {
    /// The parameter sets checked at `m`. Never empty: a claim with nothing to
    /// vary still runs once with no parameters, which is where an
    /// inapplicable `m` gets reported.
    pub fn instances(&self, m: u32) -> Vec<Params> {
        let mut v = (self.instances)(m);
        if v.is_empty() {
            v.push(Params::new());
        }
        v
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub kind: Kind,
    pub m: u32,
    pub params: Params,
    pub field: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<CodeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedTable>,
    pub diffs: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub observed: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    /// Mismatch on a theorem or corollary row.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch && self.kind.is_proven()
    }

    fn sort_key(&self) -> (&str, u32, &Params) {
        (&self.claim, self.m, &self.params)
    }
}

pub fn registry() -> &'static [Claim] {
    claims::REGISTRY
}

pub fn find(id: &str) -> Result<&'static Claim> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn skeleton(claim: &Claim, field: &str, m: u32, params: Params, verdict: Verdict) -> VerificationReport {
    VerificationReport {
        claim: claim.id.to_string(),
        kind: claim.kind,
        m,
        params,
        field: field.to_string(),
        verdict,
        reason: None,
        actual: None,
        expected: None,
        diffs: Vec::new(),
        observed: BTreeMap::new(),
        notes: Vec::new(),
        wall_ms: None,
    }
}

fn execute(claim: &Claim, m: u32, params: Params) -> VerificationReport {
    let field = match FieldSpec::new(m) {
        Ok(f) => f,
        Err(e) => {
            let mut r = skeleton(claim, "", m, params, Verdict::Inapplicable);
            r.reason = Some(e.to_string());
            return r;
        }
    };
    let start = Instant::now();
    let mut out = Outcome::default();
    let result = (claim.run)(&field, &params, &mut out);
    let mut r = skeleton(claim, &field.to_string(), m, params, Verdict::Match);
    r.wall_ms = Some(start.elapsed().as_millis() as u64);
    match result {
        Err(Error::Inapplicable { family, reason }) => {
            r.verdict = Verdict::Inapplicable;
            r.reason = Some(format!("{family}: {reason}"));
            r.notes = out.notes;
            return r;
        }
        Err(e) => out.diffs.push(format!("error: {e}")),
        Ok(()) => {}
    }
    r.verdict = if !out.diffs.is_empty() {
        Verdict::Mismatch
    } else if claim.kind == Kind::ReportMode || out.report_only {
        Verdict::ReportOnly
    } else {
        Verdict::Match
    };
    r.actual = out.code;
    r.expected = out.expected;
    r.diffs = out.diffs;
    r.observed = out.observed;
    r.notes = out.notes;
    r
}

/// Run one claim on one parameter set. Missing parameters take the claim's
/// defaults.
pub fn run_claim(id: &str, m: u32, params: &Params) -> Result<VerificationReport> {
    let claim = find(id)?;
    Ok(execute(claim, m, params.clone()))
}

/// Convenience wrapper taking `key=value` pairs.
pub fn run_claim_with(id: &str, m: u32, params: &[(&str, &str)]) -> Result<VerificationReport> {
    let p = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    run_claim(id, m, &p)
}

#[derive(Clone, Debug)]
pub struct Filter {
    /// Glob over claim ids; `None` selects every claim.
    pub ids: Option<glob::Pattern>,
    /// Kinds to keep; empty keeps all.
    pub kinds: Vec<Kind>,
    pub m_min: u32,
    pub m_max: u32,
}

impl Default for Filter {
    fn default() -> Self {
        Self { ids: None, kinds: Vec::new(), m_min: 1, m_max: 0 }
    }
}

impl Filter {
    pub fn new(ids: Option<&str>, m_min: u32, m_max: u32) -> Result<Self> {
        let ids = ids.map(|s| glob::Pattern::new(s).map_err(|e| Error::Parse(format!("id glob `{s}`: {e}")))).transpose()?;
        Ok(Self { ids, kinds: Vec::new(), m_min, m_max })
    }

    pub fn with_kinds(mut self, kinds: &[Kind]) -> Self {
        self.kinds = kinds.to_vec();
        self
    }

    pub fn selects(&self, claim: &Claim) -> bool {
        self.ids.as_ref().is_none_or(|p| p.matches(claim.id)) && (self.kinds.is_empty() || self.kinds.contains(&claim.kind))
    }
}

/// Caps on a suite run. Rows beyond a cap come back as `skipped`.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Overrides every claim's own `max_m` when set.
    pub max_m: Option<u32>,
    /// Parameter sets per `(claim, m)`.
    pub max_instances: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_m: None, max_instances: 256 }
    }
}

/// Every selected `(claim, m, params)`, run in parallel and returned in
/// `(id, m, params)` order.
pub fn run_suite(filter: &Filter, budget: Budget) -> Vec<VerificationReport> {
    let hi = filter.m_max.min(MAX_DEGREE);
    let mut jobs: Vec<(&Claim, u32, Params, bool)> = Vec::new();
    for claim in registry().iter().filter(|c| filter.selects(c)) {
        for m in filter.m_min.max(1)..=hi {
            let cap = budget.max_m.unwrap_or(claim.max_m);
            for (i, params) in claim.instances(m).into_iter().enumerate() {
                jobs.push((claim, m, params, m <= cap && i < budget.max_instances));
            }
        }
    }
    let mut reports: Vec<VerificationReport> = jobs
        .into_par_iter()
        .map(|(claim, m, params, run)| {
            if run {
                execute(claim, m, params)
            } else {
                let mut r = skeleton(claim, "", m, params, Verdict::Skipped);
                r.field = FieldSpec::new(m).map(|f| f.to_string()).unwrap_or_default();
                r.reason = Some("over budget".into());
                r
            }
        })
        .collect();
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    reports
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub id: &'static str,
    pub kind: Kind,
    pub anchor: &'static str,
    pub checks: &'static str,
    pub max_m: u32,
}

/// The `claims.json` manifest.
pub fn manifest() -> Value {
    let rows: Vec<ManifestEntry> = registry()
        .iter()
        .map(|c| ManifestEntry { id: c.id, kind: c.kind, anchor: c.anchor, checks: c.checks, max_m: c.max_m })
        .collect();
    serde_json::json!({ "schema": 1, "claims": rows })
}

/// Suite-level summary counts, keyed by verdict.
pub fn tally(reports: &[VerificationReport]) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    for r in reports {
        let k = match r.verdict {
            Verdict::Match => "match",
            Verdict::Mismatch if r.kind.is_proven() => "mismatch",
            Verdict::Mismatch => "finding",
            Verdict::Inapplicable => "inapplicable",
            Verdict::ReportOnly => "report-only",
            Verdict::Skipped => "skipped",
        };
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

/// The suite as a versioned JSON document. Wall times are dropped unless
/// `timings` is set, so that identical runs are byte-identical.
pub fn suite_json(filter: &Filter, reports: &[VerificationReport], timings: bool) -> Value {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if !timings {
                r.wall_ms = None;
            }
            serde_json::to_value(r).expect("report serializes")
        })
        .collect();
    serde_json::json!({
        "schema": 1,
        "filter": {
            "ids": filter.ids.as_ref().map(|p| p.as_str().to_string()),
            "kinds": filter.kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
            "m_min": filter.m_min,
            "m_max": filter.m_max,
        },
        "summary": tally(reports),
        "reports": rows,
    })
}
