use std::collections::BTreeMap;
use std::fmt::Write as _;

use qdouble::{CheckResult, Status};
use serde::{Deserialize, Serialize};

/// One report line: the suite and its parameters, a check result, and the
/// wall time of the suite run it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    #[serde(flatten)]
    pub result: CheckResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub entries: Vec<Entry>,
}

impl RunReport {
    pub fn any_failed(&self) -> bool {
        self.entries.iter().any(|e| e.result.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// The JSON report without timing, for run-to-run comparison.
    pub fn body(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(entries) = v.get_mut("entries").and_then(|e| e.as_array_mut()) {
            for e in entries {
                if let Some(obj) = e.as_object_mut() {
                    obj.remove("elapsed_ms");
                }
            }
        }
        serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let r = &e.result;
            let mut place = String::new();
            if let Some(t) = &r.tower {
                place.push_str(t);
            }
            if let Some(st) = &r.stage {
                if !place.is_empty() {
                    place.push(' ');
                }
                place.push_str(st);
            }
            let _ = write!(
                s,
                "[{:7}] {} {}",
                r.status.to_string().to_uppercase(),
                e.suite,
                params.join(" ")
            );
            if !place.is_empty() {
                let _ = write!(s, " ({place})");
            }
            let _ = write!(s, ": {}", r.check);
            if let Some(w) = &r.witness {
                let _ = write!(s, "; witness {w}");
            }
            if let Some(n) = &r.note {
                let _ = write!(s, "; {n}");
            }
            s.push('\n');
        }
        let count = |st: Status| self.entries.iter().filter(|e| e.result.status == st).count();
        let _ = writeln!(
            s,
            "{} checks: {} pass, {} fail, {} skipped",
            self.entries.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(ms: u64) -> Entry {
        Entry {
            suite: "finsym".into(),
            params: BTreeMap::from([("l".to_string(), "3".to_string())]),
            result: CheckResult::pass("carrier commutative"),
            details: None,
            elapsed_ms: ms,
        }
    }

    #[test]
    fn body_ignores_timing() {
        let a = RunReport { entries: vec![entry(3)] };
        let b = RunReport { entries: vec![entry(70)] };
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(a.body(), b.body());
        assert!(!a.body().contains("elapsed_ms"));
    }

    #[test]
    fn json_round_trip() {
        let a = RunReport { entries: vec![entry(5)] };
        let back: RunReport = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["entries"][0]["check"], "carrier commutative");
        assert_eq!(v["entries"][0]["status"], "pass");
    }

    #[test]
    fn text_summary() {
        let t = RunReport { entries: vec![entry(1)] }.to_text();
        assert!(t.contains("[PASS   ] finsym l=3: carrier commutative"), "{t}");
        assert!(t.ends_with("1 checks: 1 pass, 0 fail, 0 skipped\n"));
    }
}
