//! The identity registry: every numbered display and theorem of the source
//! material as an executable claim with an exact or p-adic decision
//! procedure, verdicts, and minimal counterexamples.

mod runners;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{QError, Result};
use crate::padic::PadicContext;
use crate::rational::{rat_to_string, Rat};

/// How a claim was decided.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mode {
    ExactQq,
    BivariateQqt,
    Padic { p: u64, q: String, prec: u32 },
}

/// Machine outcome for one claim at one parameter tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    Verified,
    Falsified {
        lhs: String,
        rhs: String,
        difference: String,
    },
    NumericallyConsistent {
        agreement_valuation: i64,
    },
    Malformed {
        reason: String,
    },
}

impl VerdictKind {
    pub fn is_falsified(&self) -> bool {
        matches!(self, VerdictKind::Falsified { .. })
    }

    pub fn short(&self) -> &'static str {
        match self {
            VerdictKind::Verified => "VERIFIED",
            VerdictKind::Falsified { .. } => "FALSIFIED",
            VerdictKind::NumericallyConsistent { .. } => "NUMERICALLY_CONSISTENT",
            VerdictKind::Malformed { .. } => "MALFORMED",
        }
    }
}

/// One audited parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct AuditVerdict {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub params: BTreeMap<String, String>,
    pub mode: Mode,
    pub verdict: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub elapsed_ms: u64,
}

/// p-adic audit settings; thresholds default to prec - 2.
#[derive(Clone, Debug, Serialize)]
pub struct PadicSettings {
    pub p: u64,
    #[serde(serialize_with = "ser_rat")]
    pub q: Rat,
    pub prec: u32,
    pub threshold: i64,
    pub level: u32,
}

impl PadicSettings {
    pub fn new(p: u64, q: Rat, prec: u32) -> Self {
        PadicSettings {
            p,
            q,
            prec,
            threshold: prec as i64 - 2,
            level: prec,
        }
    }

    pub fn context(&self) -> Result<PadicContext> {
        PadicContext::new(self.p, self.q.clone(), self.prec)
    }
}

/// Audit configuration: parameter bound override and p-adic settings
/// (None = p-adic labels skipped by config).
#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub max_n: Option<u32>,
    pub padic: Option<PadicSettings>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_n: None,
            padic: Some(PadicSettings::new(
                3,
                Rat::from_integer(4.into()),
                8,
            )),
        }
    }
}

impl AuditConfig {
    /// Effective bound: explicit override, else the label default.
    pub(crate) fn bound(&self, default: u32) -> u32 {
        self.max_n.unwrap_or(default)
    }
}

/// Static registry entry for one identity label.
pub struct IdentityInfo {
    pub label: &'static str,
    /// empty slice = no variant dimension
    pub variants: &'static [&'static str],
    pub padic: bool,
    pub describe: &'static str,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

const S1_VARIANTS: &[&str] = &["gen-S1", "signed-S1"];

/// Every registered identity, in report order.
pub fn registry() -> &'static [IdentityInfo] {
    &[
        IdentityInfo { label: "EQ4_NEWTON", variants: &[], padic: false, describe: "Newton-type expansion of [x]_q^m over q-binomials of x" },
        IdentityInfo { label: "EQ8_VS_DELTA", variants: &[], padic: false, describe: "explicit second-kind numbers against the q-difference route" },
        IdentityInfo { label: "EQ7_CONVOLUTION", variants: &[], padic: false, describe: "first/second-kind generating products convolve to 1" },
        IdentityInfo { label: "EQ9_PADIC", variants: &[], padic: true, describe: "[1-x]_q^d as a (q-1)-power tail in powers of [x]_q" },
        IdentityInfo { label: "EQ10", variants: &[], padic: false, describe: "[x]_q^n expanded over scaled q-binomials of x" },
        IdentityInfo { label: "EQ11", variants: &[], padic: false, describe: "basis partition quotient equals [x]_q^i" },
        IdentityInfo { label: "EQ12_THM2_PADIC", variants: &[], padic: true, describe: "quadruple-sum beta self-representation, truncated p-adically" },
        IdentityInfo { label: "EQ13", variants: &[], padic: false, describe: "partition quotient as a second-kind expansion" },
        IdentityInfo { label: "EQ14", variants: &[], padic: false, describe: "exact integral of the q-binomial of x" },
        IdentityInfo { label: "POST14_COROLLARY", variants: &[], padic: false, describe: "beta as a signed second-kind sum (unbound summation limit)" },
        IdentityInfo { label: "EQ15_VS_EQ8", variants: &[], padic: false, describe: "alternating-sum second-kind variant against the explicit route" },
        IdentityInfo { label: "POST15_QBINOM", variants: &[], padic: false, describe: "Gaussian binomial as a (q-1)-weighted second-kind sum" },
        IdentityInfo { label: "EQ16", variants: &[], padic: false, describe: "q^{nx} expanded over q-falling factorials and over powers" },
        IdentityInfo { label: "EQ17", variants: &[], padic: false, describe: "moment law as a (q-1)-weighted beta sum" },
        IdentityInfo { label: "POST17_QBINOM", variants: &[], padic: false, describe: "Gaussian binomial as a (q-1)-weighted first-kind sum" },
        IdentityInfo { label: "THM1_PADIC", variants: &[], padic: true, describe: "integral of a basis polynomial against its beta tail sum" },
        IdentityInfo { label: "THM3", variants: &[], padic: false, describe: "basis polynomial as a first-kind weighted multiple of itself" },
        IdentityInfo { label: "EQ18", variants: S1_VARIANTS, padic: false, describe: "scaled q-falling factorial as a first-kind power sum" },
        IdentityInfo { label: "THM4", variants: S1_VARIANTS, padic: false, describe: "partition quotient as a double first/second-kind sum" },
        IdentityInfo { label: "COR5", variants: &[], padic: false, describe: "beta self-representation over first/second-kind numbers (free n)" },
        IdentityInfo { label: "EQ19_VS_BETA", variants: &[], padic: false, describe: "order-1 higher-order beta reduces to beta" },
        IdentityInfo { label: "EQ20_SIGN", variants: &[], padic: false, describe: "constant-sign inverse-order display against the alternating form" },
        IdentityInfo { label: "EQ21_INTERNAL", variants: &[], padic: false, describe: "internal chain of inverse-order rewrites" },
        IdentityInfo { label: "EQ22", variants: &[], padic: false, describe: "second-kind numbers from inverse-order numbers (both readings)" },
        IdentityInfo { label: "THM6", variants: &[], padic: false, describe: "partition quotient over inverse-order coefficients" },
        IdentityInfo { label: "EQ23", variants: &[], padic: false, describe: "q-binomial of x as a shifted signed first-kind sum" },
        IdentityInfo { label: "COR7", variants: S1_VARIANTS, padic: false, describe: "partition quotient over first-kind and inverse-order numbers" },
        IdentityInfo { label: "GENFUN_BERNSTEIN", variants: &[], padic: false, describe: "series coefficients of the generating function equal the basis" },
    ]
}

pub fn lookup(label: &str) -> Result<&'static IdentityInfo> {
    registry()
        .iter()
        .find(|i| i.label == label)
        .ok_or_else(|| QError::UnknownIdentity(label.to_string()))
}

/// Full report: metadata plus one verdict per audited tuple.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub meta: Meta,
    pub verdicts: Vec<AuditVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub timestamp: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u32>,
    pub padic: Option<PadicMeta>,
    pub variants: BTreeMap<String, Vec<String>>,
    pub notes: Vec<String>,
    pub skipped_by_config: Vec<String>,
    pub total_elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PadicMeta {
    pub p: u64,
    pub q: String,
    pub prec: u32,
    pub threshold: i64,
    pub level: u32,
}

/// Audit one label at the configured bounds; verdicts come back in
/// deterministic lexicographic parameter order.
pub fn audit_identity(label: &str, config: &AuditConfig) -> Result<Vec<AuditVerdict>> {
    let info = lookup(label)?;
    if info.padic && config.padic.is_none() {
        return Err(QError::InvalidArgument(format!(
            "{label} needs a p-adic context (enable padic settings)"
        )));
    }
    let mut out = Vec::new();
    if info.variants.is_empty() {
        runners::run(info.label, None, config, &mut out)?;
    } else {
        for v in info.variants {
            runners::run(info.label, Some(v), config, &mut out)?;
        }
    }
    Ok(out)
}

/// Report metadata for a config, before any verdicts are attached.
pub fn base_meta(config: &AuditConfig) -> Meta {
    let timestamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_default();
    Meta {
        timestamp,
        max_n: config.max_n,
        padic: config.padic.as_ref().map(|s| PadicMeta {
            p: s.p,
            q: rat_to_string(&s.q),
            prec: s.prec,
            threshold: s.threshold,
            level: s.level,
        }),
        variants: BTreeMap::new(),
        notes: runners::ledger_notes(),
        skipped_by_config: Vec::new(),
        total_elapsed_ms: 0,
    }
}

/// Audit every registered label at its default bounds.
pub fn audit_all(config: &AuditConfig) -> Result<AuditReport> {
    let started = Instant::now();
    let mut meta = base_meta(config);
    let mut verdicts = Vec::new();
    for info in registry() {
        if info.padic && config.padic.is_none() {
            meta.skipped_by_config.push(info.label.to_string());
            continue;
        }
        if !info.variants.is_empty() {
            meta.variants.insert(
                info.label.to_string(),
                info.variants.iter().map(|s| s.to_string()).collect(),
            );
        }
        verdicts.extend(audit_identity(info.label, config)?);
    }
    meta.total_elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(AuditReport { meta, verdicts })
}

/// Lexicographically smallest falsifying tuple for the label, given a tuple
/// known to falsify it.
pub fn minimize_counterexample(
    label: &str,
    falsifying: &BTreeMap<String, String>,
    config: &AuditConfig,
) -> Result<BTreeMap<String, String>> {
    let verdicts = audit_identity(label, config)?;
    let claimed = verdicts
        .iter()
        .find(|v| &v.params == falsifying)
        .ok_or(QError::NotACounterexample)?;
    if !claimed.verdict.is_falsified() {
        return Err(QError::NotACounterexample);
    }
    // verdicts are generated in lexicographic order; the first falsified
    // tuple within the same variant is minimal
    Ok(verdicts
        .iter()
        .find(|v| v.variant == claimed.variant && v.verdict.is_falsified())
        .expect("at least the claimed tuple falsifies")
        .params
        .clone())
}

/// JSON rendering of the report.
pub fn report_json(report: &AuditReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// JSON with all timing fields zeroed, for byte-comparison across runs.
pub fn report_json_normalized(report: &AuditReport) -> String {
    let mut r = report.clone();
    r.meta.timestamp = String::new();
    r.meta.total_elapsed_ms = 0;
    for v in &mut r.verdicts {
        v.elapsed_ms = 0;
    }
    report_json(&r)
}

/// Plain-text summary: one line per (label, variant) with verdict counts
/// and the minimal counterexample.
pub fn report_summary(report: &AuditReport) -> String {
    let mut lines = Vec::new();
    let mut seen: Vec<(String, Option<String>)> = Vec::new();
    for v in &report.verdicts {
        let key = (v.id.clone(), v.variant.clone());
        if !seen.contains(&key) {
            seen.push(key);
        }
    }
    for (id, variant) in seen {
        let group: Vec<&AuditVerdict> = report
            .verdicts
            .iter()
            .filter(|v| v.id == id && v.variant == variant)
            .collect();
        let count = |s: &str| group.iter().filter(|v| v.verdict.short() == s).count();
        let min_cx = group
            .iter()
            .find(|v| v.verdict.is_falsified())
            .map(|v| format_params(&v.params));
        let name = match &variant {
            Some(v) => format!("{id}[{v}]"),
            None => id.clone(),
        };
        let mut line = format!(
            "{name}: VERIFIED={} FALSIFIED={} NUMERICALLY_CONSISTENT={} MALFORMED={}",
            count("VERIFIED"),
            count("FALSIFIED"),
            count("NUMERICALLY_CONSISTENT"),
            count("MALFORMED"),
        );
        if let Some(cx) = min_cx {
            line.push_str(&format!(" min_counterexample={cx}"));
        }
        lines.push(line);
    }
    for s in &report.meta.skipped_by_config {
        lines.push(format!("{s}: SKIPPED-by-config"));
    }
    lines.join("\n") + "\n"
}

fn format_params(params: &BTreeMap<String, String>) -> String {
    let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("({})", inner.join(","))
}
