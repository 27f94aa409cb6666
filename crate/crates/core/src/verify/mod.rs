//! Check records and the verification suites shared by the CLI and the
//! integration tests.

mod suites;

pub use suites::{
    birational_relations, certificates, char_grid, claim_checks, claim_classes, conserved_checks,
    degree_growth_checks, kac_checks, lattice_relations, specialization_checks, truncation_check,
    ultradiscrete_relations, GridSpec,
};

use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One executed check. `witness` holds a residual, a counterexample or an
/// error message.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: f64,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Runs `f` and records its outcome: `Ok((ok, witness))` or an error that
/// counts as a failure.
pub fn run_check<E: std::fmt::Display>(
    check: &str,
    instance: impl Into<String>,
    f: impl FnOnce() -> Result<(bool, Option<String>), E>,
) -> CheckRecord {
    let start = Instant::now();
    let (status, witness) = match f() {
        Ok((true, w)) => (Status::Pass, w),
        Ok((false, w)) => (Status::Fail, w),
        Err(e) => (Status::Fail, Some(e.to_string())),
    };
    CheckRecord {
        check: check.to_string(),
        instance: instance.into(),
        status,
        witness,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

pub fn skipped(check: &str, instance: impl Into<String>, why: &str) -> CheckRecord {
    CheckRecord {
        check: check.to_string(),
        instance: instance.into(),
        status: Status::Skip,
        witness: Some(why.to_string()),
        elapsed_ms: 0.0,
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = CheckRecord>) {
        self.records.extend(rs);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    /// JSON lines ordered by check id; timings are left out unless asked
    /// for so that equal runs give equal bytes.
    pub fn write_jsonl<W: Write>(&self, mut w: W, timings: bool) -> io::Result<()> {
        let mut rs: Vec<&CheckRecord> = self.records.iter().collect();
        rs.sort_by(|a, b| a.check.cmp(&b.check));
        for r in rs {
            let mut v = serde_json::to_value(r)?;
            if !timings {
                if let Some(o) = v.as_object_mut() {
                    o.remove("elapsed_ms");
                }
            }
            writeln!(w, "{v}")?;
        }
        Ok(())
    }
}
