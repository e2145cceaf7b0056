//! Pass/fail/skipped check results with witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One named check. Failures always carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    pub check: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckResult {
            tower: None,
            stage: None,
            check: check.into(),
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckResult {
            status: Status::Fail,
            witness: Some(witness.into()),
            ..Self::pass(check)
        }
    }

    pub fn skipped(check: impl Into<String>, note: impl Into<String>) -> Self {
        CheckResult {
            status: Status::Skipped,
            note: Some(note.into()),
            ..Self::pass(check)
        }
    }

    /// Pass when `witness` is `None`, otherwise fail with it.
    pub fn from_witness(check: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(check),
            Some(w) => Self::fail(check, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_stage(mut self, stage: impl Into<String>) -> Self {
        self.stage = Some(stage.into());
        self
    }

    pub fn with_tower(mut self, tower: impl Into<String>) -> Self {
        self.tower = Some(tower.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.status)?;
        if let Some(t) = &self.tower {
            write!(f, " {t}")?;
        }
        if let Some(s) = &self.stage {
            write!(f, " {s}")?;
        }
        write!(f, " {}", self.check)?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// An ordered collection of check results.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: CheckResult) {
        self.entries.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = CheckResult>) {
        self.entries.extend(rs);
    }

    pub fn any_failed(&self) -> bool {
        self.entries.iter().any(CheckResult::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|r| r.failed())
    }

    pub fn find(&self, check: &str) -> Option<&CheckResult> {
        self.entries.iter().find(|r| r.check == check)
    }

    /// Tags every entry with a tower name and stage label.
    pub fn tag(mut self, tower: &str, stage: &str) -> Self {
        for e in &mut self.entries {
            e.tower.get_or_insert_with(|| tower.to_string());
            e.stage.get_or_insert_with(|| stage.to_string());
        }
        self
    }
}

impl FromIterator<CheckResult> for Report {
    fn from_iter<I: IntoIterator<Item = CheckResult>>(iter: I) -> Self {
        Report {
            entries: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = CheckResult::fail("antipode", "c3:1").with_stage("n=1").with_tower("padic");
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["witness"], "c3:1");
        assert_eq!(v["tower"], "padic");
        let p = serde_json::to_value(CheckResult::pass("x")).unwrap();
        assert!(p.get("witness").is_none());
    }
}
