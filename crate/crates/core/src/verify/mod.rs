//! The reproduction harness: every desk-checkable claim about U-sets, run
//! against groups built from scratch, collected into one report.
//!
//! Each check compares a computed JSON value with an expected one and passes
//! only on exact equality. Checks that need a group above the enumeration
//! cap, or a group with no shipped generators, are reported as
//! `not_checked` with a note.

mod checks;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::invariants::{profile, InvariantProfile, DEFAULT_CENTRALIZER_CAP};
use crate::perm::{PermGroup, DEFAULT_ENUMERATION_CAP};

pub use checks::registered_ids;

/// Resource limits for a harness run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order whose elements are enumerated.
    pub enumeration: u64,
    /// Largest group order for centralizer counting.
    pub centralizer: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            enumeration: DEFAULT_ENUMERATION_CAP,
            centralizer: DEFAULT_CENTRALIZER_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotChecked,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotChecked => "not_checked",
        })
    }
}

/// Where the expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A published value, stored verbatim.
    Paper,
    /// Computed independently (a formula, an identity, a second construction).
    Derived,
}

/// How a failing check should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// Disagrees with a published value: a toolkit bug or a typo in the source.
    PaperMismatch,
    /// Violates an identity that must hold regardless of published values.
    InternalInconsistency,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub claim: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure_kind: Option<FailureKind>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_checked: usize,
}

impl Summary {
    pub fn tally(results: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: results.len(),
            ..Summary::default()
        };
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotChecked => s.not_checked += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub timestamp: String,
    pub caps: Caps,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn result(&self, check_id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == check_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable table, one line per check.
    pub fn to_text(&self) -> String {
        let width = self
            .results
            .iter()
            .map(|r| r.check_id.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<11} {:<width$}  computed={}  expected={}",
                r.status.to_string().to_uppercase(),
                r.check_id,
                compact(&r.computed),
                compact(&r.expected),
            );
            for n in &r.notes {
                let _ = writeln!(out, "{:<11} {:<width$}  note: {n}", "", "");
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} not checked",
            s.total, s.pass, s.fail, s.not_checked
        );
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// What a check produced.
pub(crate) enum Outcome {
    Compared {
        computed: Value,
        expected: Value,
        notes: Vec<String>,
    },
    NotChecked(String),
}

/// Groups and profiles shared by all checks, computed before any check runs.
pub(crate) struct Context<'a> {
    pub catalog: &'a Catalog,
    pub caps: Caps,
    groups: BTreeMap<String, Arc<PermGroup>>,
    profiles: BTreeMap<String, InvariantProfile>,
}

impl Context<'_> {
    pub fn group(&self, name: &str) -> std::result::Result<&Arc<PermGroup>, String> {
        self.groups
            .get(&Catalog::canonical_name(name))
            .ok_or_else(|| format!("{name} was not loaded"))
    }

    /// The profile of `name`, or why it is unavailable.
    pub fn profile(&self, name: &str) -> std::result::Result<&InvariantProfile, String> {
        let canonical = Catalog::canonical_name(name);
        if let Some(p) = self.profiles.get(&canonical) {
            return Ok(p);
        }
        let g = self.group(&canonical)?;
        Err(format!(
            "{canonical}: order {} exceeds enumeration cap {}",
            g.order(),
            self.caps.enumeration
        ))
    }
}

/// Runs the selected checks (all of them when `selection` is `None`).
/// Unknown check ids and catalog failures are errors; nothing runs then.
pub fn run_verification(
    catalog: &Catalog,
    selection: Option<&BTreeSet<String>>,
    caps: Caps,
) -> Result<VerificationReport> {
    let registry = checks::registry(catalog);
    if let Some(sel) = selection {
        let known: BTreeSet<&str> = registry.iter().map(|c| c.id.as_str()).collect();
        let unknown: Vec<&str> = sel
            .iter()
            .map(String::as_str)
            .filter(|id| !known.contains(id))
            .collect();
        if !unknown.is_empty() {
            return Err(Error::InvalidParameters(format!(
                "unknown check id(s): {}",
                unknown.join(", ")
            )));
        }
    }
    let selected: Vec<&checks::CheckDef> = registry
        .iter()
        .filter(|c| selection.is_none_or(|s| s.contains(&c.id)))
        .collect();

    let mut needed: BTreeSet<String> = BTreeSet::new();
    for c in &selected {
        needed.extend(c.groups.iter().map(|g| Catalog::canonical_name(g)));
    }
    let mut groups = BTreeMap::new();
    for name in &needed {
        groups.insert(name.clone(), catalog.get(name)?);
    }
    // Profiles one group at a time; each computation is parallel inside.
    let mut profiles = BTreeMap::new();
    for (name, g) in &groups {
        if g.order() <= caps.enumeration {
            profiles.insert(name.clone(), profile(g, caps.enumeration)?);
        }
    }
    let ctx = Context {
        catalog,
        caps,
        groups,
        profiles,
    };

    let results: Vec<CheckResult> = selected.par_iter().map(|c| c.execute(&ctx)).collect();
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        caps,
        summary: Summary::tally(&results),
        results,
    })
}
