//! Re-verification of the ideal-space results over a generated corpus of
//! finite rings, plus the integer certificates and the adversarial fixtures.

pub mod checks;
mod corpus;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::zsym::{prm_z_sober_bounded, reg_z_not_sober_certificate};
use checks::{Outcome, RingContext};

pub use corpus::{generate_corpus, CorpusSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    SoberEq,
    QcEq,
    QcCor,
    Chain,
    Noeth,
    SpectralSober,
    Inf,
    PrmIrrid,
    PrmSober,
    PrmLoc,
    QuotHomeo,
    Z,
    Adversarial,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::SoberEq,
        CheckId::QcEq,
        CheckId::QcCor,
        CheckId::Chain,
        CheckId::Noeth,
        CheckId::SpectralSober,
        CheckId::Inf,
        CheckId::PrmIrrid,
        CheckId::PrmSober,
        CheckId::PrmLoc,
        CheckId::QuotHomeo,
        CheckId::Z,
        CheckId::Adversarial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::SoberEq => "CHK-SOBER-EQ",
            CheckId::QcEq => "CHK-QC-EQ",
            CheckId::QcCor => "CHK-QC-COR",
            CheckId::Chain => "CHK-CHAIN",
            CheckId::Noeth => "CHK-NOETH",
            CheckId::SpectralSober => "CHK-SPECTRAL-SOBER",
            CheckId::Inf => "CHK-INF",
            CheckId::PrmIrrid => "CHK-PRM-IRRID",
            CheckId::PrmSober => "CHK-PRM-SOBER",
            CheckId::PrmLoc => "CHK-PRM-LOC",
            CheckId::QuotHomeo => "CHK-QUOT-HOMEO",
            CheckId::Z => "CHK-Z",
            CheckId::Adversarial => "CHK-ADVERSARIAL",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::SoberEq => "direct soberness agrees with the X-radical criterion on every family",
            CheckId::QcEq => "quasi-compact iff every point is below a maximal one and Max(X) is quasi-compact",
            CheckId::QcCor => "Max(R) lies in Max, Spec, Irs, Prm, Irr, Irc, Rad and Prp, each quasi-compact",
            CheckId::Chain => "every maximal chain of every family has an upper bound in the family",
            CheckId::Noeth => "Idl(R) is sober with generic point the intersection; sampled subspaces are quasi-compact",
            CheckId::SpectralSober => "spectral iff sober on every family",
            CheckId::Inf => "in sober families, lower-directed sets and maximal chains have their infimum inside",
            CheckId::PrmIrrid => "Prm(R) is not irreducible for non-local R, split by an idempotent",
            CheckId::PrmSober => "Prm(R) is sober and spectral",
            CheckId::PrmLoc => "localization at each maximal ideal is a homeomorphism onto Prm(R_m)",
            CheckId::QuotHomeo => "each quotient map is a homeomorphism from the primary ideals above onto Prm(R/a)",
            CheckId::Z => "Reg(Z) is irreducible and not sober; Prm(Z) is sober up to the bound",
            CheckId::Adversarial => "hand-built non-sober spaces are reported non-sober",
        }
    }

    /// Corpus-independent checks.
    pub fn is_global(self) -> bool {
        matches!(self, CheckId::Z | CheckId::Adversarial)
    }

    pub fn file_name(self) -> String {
        format!("{}.json", self.as_str().to_ascii_lowercase())
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        let upper = if upper.starts_with("CHK-") { upper } else { format!("CHK-{upper}") };
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == upper)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown check `{s}`")))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingVerdict {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<RingSpec>,
    pub status: Status,
    pub detail: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub check: CheckId,
    pub description: &'static str,
    pub seed: u64,
    pub status: Status,
    pub counts: Counts,
    pub verdicts: Vec<RingVerdict>,
    /// Wall-clock time; left out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremReport {
    fn new(check: CheckId, seed: u64, verdicts: Vec<RingVerdict>, elapsed: Duration) -> Self {
        let mut counts = Counts::default();
        for v in &verdicts {
            match v.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Skipped => counts.skipped += 1,
                Status::NotApplicable => counts.not_applicable += 1,
            }
        }
        let status = if counts.fail > 0 { Status::Fail } else { Status::Pass };
        TheoremReport {
            schema_version: SCHEMA_VERSION,
            check,
            description: check.description(),
            seed,
            status,
            counts,
            verdicts,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Result<String> {
        crate::report::to_canonical_json(self)
    }
}

pub struct VerifyRun {
    pub corpus_size: usize,
    pub reports: Vec<TheoremReport>,
    pub elapsed: Duration,
}

impl VerifyRun {
    /// Failures outside the adversarial fixtures, which decide the exit code.
    pub fn non_adversarial_failures(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.check != CheckId::Adversarial && !r.passed())
            .count()
    }

    pub fn report(&self, id: CheckId) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| r.check == id)
    }

    pub fn summary_json(&self, spec: &CorpusSpec) -> Result<String> {
        let checks: Vec<Value> = self
            .reports
            .iter()
            .map(|r| json!({ "check": r.check, "status": r.status, "counts": r.counts }))
            .collect();
        crate::report::to_canonical_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "corpus": spec,
            "corpus_size": self.corpus_size,
            "checks": checks,
            "non_adversarial_failures": self.non_adversarial_failures(),
        }))
    }

    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "{:<20} {:>6} {:>6} {:>6} {:>6} {:>10}\n",
            "check", "status", "pass", "fail", "skip", "seconds"
        );
        for r in &self.reports {
            out.push_str(&format!(
                "{:<20} {:>6} {:>6} {:>6} {:>6} {:>10.2}\n",
                r.check.as_str(),
                if r.passed() { "ok" } else { "FAIL" },
                r.counts.pass,
                r.counts.fail,
                r.counts.skipped,
                r.elapsed.as_secs_f64()
            ));
        }
        out.push_str(&format!(
            "{} rings, {:.2}s total\n",
            self.corpus_size,
            self.elapsed.as_secs_f64()
        ));
        out
    }
}

fn status(pass: bool) -> Status {
    if pass {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Runs one ring-level check on one ring.
pub fn run_ring_check(id: CheckId, ctx: &RingContext, spec: &CorpusSpec) -> Result<Option<Outcome>> {
    Ok(Some(match id {
        CheckId::SoberEq => checks::sober_eq(ctx)?,
        CheckId::QcEq => checks::qc_eq(ctx)?,
        CheckId::QcCor => checks::qc_cor(ctx)?,
        CheckId::Chain => checks::chain(ctx)?,
        CheckId::Noeth => checks::noeth(ctx, spec.seed, spec.noeth_samples)?,
        CheckId::SpectralSober => checks::spectral_sober(ctx)?,
        CheckId::Inf => checks::inf(ctx)?,
        CheckId::PrmIrrid => return checks::prm_irrid(ctx),
        CheckId::PrmSober => checks::prm_sober(ctx)?,
        CheckId::PrmLoc => checks::prm_loc(ctx, spec.max_ideals)?,
        CheckId::QuotHomeo => checks::quot_homeo(ctx, spec.max_ideals)?,
        CheckId::Z | CheckId::Adversarial => {
            return Err(Error::Precondition(format!("{id} is not a per-ring check")))
        }
    }))
}

fn verdict_for(ring: &RingSpec, result: Result<Option<Outcome>>) -> RingVerdict {
    let (status, detail) = match result {
        Ok(Some(o)) => (status(o.pass), o.detail),
        Ok(None) => (Status::NotApplicable, Value::Null),
        Err(e @ Error::ResourceCap { .. }) => (Status::Skipped, json!({ "reason": e.to_string() })),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    RingVerdict {
        ring: ring.to_string(),
        spec: Some(ring.clone()),
        status,
        detail,
    }
}

/// Replays one ring-level check on one ring, e.g. from a reported witness.
pub fn replay(id: CheckId, ring: &RingSpec, spec: &CorpusSpec) -> RingVerdict {
    let result = RingContext::build(ring, spec.max_ideals).and_then(|ctx| run_ring_check(id, &ctx, spec));
    verdict_for(ring, result)
}

fn z_report(spec: &CorpusSpec) -> TheoremReport {
    let start = Instant::now();
    let verdict = (|| -> Result<RingVerdict> {
        let reg = reg_z_not_sober_certificate(spec.z_bound)?;
        let prm = prm_z_sober_bounded(spec.z_bound)?;
        let reg_ok = reg.validate();
        let prm_ok = prm.validate() && prm.sober_bounded;
        Ok(RingVerdict {
            ring: "Z".into(),
            spec: None,
            status: status(reg_ok && prm_ok),
            detail: json!({
                "reg_z": reg,
                "reg_z_certificate_valid": reg_ok,
                "prm_z": prm,
                "prm_z_verdict_valid": prm_ok,
            }),
        })
    })()
    .unwrap_or_else(|e| RingVerdict {
        ring: "Z".into(),
        spec: None,
        status: Status::Fail,
        detail: json!({ "error": e.to_string() }),
    });
    TheoremReport::new(CheckId::Z, spec.seed, vec![verdict], start.elapsed())
}

const REG_Z_FIXTURE_BOUND: u64 = 100;

fn adversarial_report(spec: &CorpusSpec) -> TheoremReport {
    let start = Instant::now();
    let mut verdicts: Vec<RingVerdict> = fixtures::finite_fixtures()
        .iter()
        .map(|f| match fixtures::run_finite_fixture(f) {
            Ok(o) => RingVerdict {
                ring: o.name.clone(),
                spec: None,
                status: status(o.as_designed()),
                detail: json!(o),
            },
            Err(e) => RingVerdict {
                ring: f.name.into(),
                spec: None,
                status: Status::Fail,
                detail: json!({ "error": e.to_string() }),
            },
        })
        .collect();
    verdicts.push(match fixtures::reg_z_fixture(REG_Z_FIXTURE_BOUND) {
        Ok(g) => RingVerdict {
            ring: g.name.clone(),
            spec: None,
            status: status(g.as_designed()),
            detail: json!(g),
        },
        Err(e) => RingVerdict {
            ring: "reg-z".into(),
            spec: None,
            status: Status::Fail,
            detail: json!({ "error": e.to_string() }),
        },
    });
    TheoremReport::new(CheckId::Adversarial, spec.seed, verdicts, start.elapsed())
}

/// Runs the selected checks over the corpus described by `spec`.
pub fn run(spec: &CorpusSpec, selected: &[CheckId]) -> Result<VerifyRun> {
    let start = Instant::now();
    let corpus = generate_corpus(spec)?;
    let ring_checks: Vec<CheckId> = CheckId::ALL
        .into_iter()
        .filter(|c| selected.contains(c) && !c.is_global())
        .collect();

    // per ring: one verdict and one duration per selected check
    let per_ring: Vec<Vec<(RingVerdict, Duration)>> = if ring_checks.is_empty() {
        Vec::new()
    } else {
        corpus
            .par_iter()
            .map(|ring| match RingContext::build(ring, spec.max_ideals) {
                Ok(ctx) => ring_checks
                    .iter()
                    .map(|&id| {
                        let t = Instant::now();
                        let v = verdict_for(ring, run_ring_check(id, &ctx, spec));
                        (v, t.elapsed())
                    })
                    .collect(),
                Err(e) => {
                    let v = verdict_for(ring, Err(e));
                    ring_checks.iter().map(|_| (v.clone(), Duration::ZERO)).collect()
                }
            })
            .collect()
    };

    let mut reports = Vec::new();
    for id in CheckId::ALL.into_iter().filter(|c| selected.contains(c)) {
        if id == CheckId::Z {
            reports.push(z_report(spec));
        } else if id == CheckId::Adversarial {
            reports.push(adversarial_report(spec));
        } else {
            let k = ring_checks.iter().position(|&c| c == id).expect("selected");
            let verdicts: Vec<RingVerdict> = per_ring.iter().map(|row| row[k].0.clone()).collect();
            let elapsed = per_ring.iter().map(|row| row[k].1).sum();
            reports.push(TheoremReport::new(id, spec.seed, verdicts, elapsed));
        }
    }
    Ok(VerifyRun {
        corpus_size: corpus.len(),
        reports,
        elapsed: start.elapsed(),
    })
}
