use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use qdouble::doubling::{double, standard_automorphism, DoublingKind};
use qdouble::filtration::action_faithful_span;
use qdouble::hopf::verify_hopf_axioms;
use qdouble::perm::interval;
use qdouble::tower::{
    finsym_check, nonexistence_scan, padic_tower, partition_tower_check, reflection_obstruction,
    symmetric_tower,
};
use qdouble::{CheckResult, FiniteGroup, GroupAlgebra, Report};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::args::{Command, GroupSpec, SuiteCli, ThetaArg};
use crate::output::{Entry, RunReport};
use clap::Parser;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qdouble::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid manifest: {0}")]
    ManifestJson(#[from] serde_json::Error),
    #[error("manifest entry {index}: {message}")]
    ManifestEntry { index: usize, message: String },
}

/// A list of suites to run, in order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckManifest {
    pub entries: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub suite: String,
    #[serde(default)]
    pub params: BTreeMap<String, serde_json::Value>,
}

impl ManifestEntry {
    /// Validates the entry by parsing it as a suite command line.
    pub fn command(&self, index: usize) -> Result<Command, CliError> {
        let mut argv = vec![self.suite.clone()];
        for (k, v) in &self.params {
            argv.push(format!("--{}", k.replace('_', "-")));
            argv.push(match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            });
        }
        let parsed = SuiteCli::try_parse_from(&argv).map_err(|e| CliError::ManifestEntry {
            index,
            message: e.kind().to_string() + ": " + &argv.join(" "),
        })?;
        if matches!(parsed.command, Command::Manifest(_)) {
            return Err(CliError::ManifestEntry {
                index,
                message: "manifests cannot be nested".into(),
            });
        }
        Ok(parsed.command)
    }
}

pub fn load_manifest(path: &Path) -> Result<CheckManifest, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// Every manifest entry is validated before any suite runs.
pub fn run_manifest(m: &CheckManifest) -> Result<RunReport, CliError> {
    let commands: Vec<Command> = m
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| e.command(i))
        .collect::<Result<_, _>>()?;
    let mut out = RunReport::default();
    for c in &commands {
        out.entries.extend(run_suite(c)?.entries);
    }
    Ok(out)
}

fn build_group(spec: GroupSpec) -> Result<Arc<FiniteGroup>, CliError> {
    Ok(Arc::new(match spec {
        GroupSpec::Cyclic(l) => FiniteGroup::cyclic(l)?,
        GroupSpec::Symmetric(n) => FiniteGroup::symmetric(interval(1, n as i64))?,
    }))
}

fn kind(t: ThetaArg) -> DoublingKind {
    match t {
        ThetaArg::Flip => DoublingKind::Flip,
        ThetaArg::Inverse => DoublingKind::Inverse,
        ThetaArg::Id => DoublingKind::Identity,
    }
}

/// Runs one suite; every entry carries the suite's wall time.
pub fn run_suite(cmd: &Command) -> Result<RunReport, CliError> {
    if let Command::Manifest(a) = cmd {
        return run_manifest(&load_manifest(&a.path)?);
    }
    let start = Instant::now();
    let (report, details) = execute(cmd)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let params = cmd.params();
    let mut details = details.into_iter();
    let entries = report
        .entries
        .into_iter()
        .map(|result| Entry {
            suite: cmd.suite().to_string(),
            params: params.clone(),
            result,
            details: details.next().flatten(),
            elapsed_ms,
        })
        .collect();
    Ok(RunReport { entries })
}

type Details = Vec<Option<serde_json::Value>>;

fn execute(cmd: &Command) -> Result<(Report, Details), CliError> {
    let report = match cmd {
        Command::Axioms(a) => {
            let g = build_group(a.group)?;
            let alg = GroupAlgebra::new(g.clone());
            match a.double {
                None => verify_hopf_axioms(&alg),
                Some(t) => {
                    let theta = standard_automorphism(&g, kind(t))?;
                    verify_hopf_axioms(&double(&alg, &theta)?)
                }
            }
        }
        Command::Double(a) => {
            let g = build_group(a.group)?;
            let theta = standard_automorphism(&g, kind(a.theta))?;
            double(&GroupAlgebra::new(g), &theta)?.verify()
        }
        Command::Faithful(a) => faithful(a.group, a.theta)?,
        Command::Padic(a) => padic_tower(a.p, a.stages)?.verify()?,
        Command::Finsym(a) => finsym_check(a.l)?,
        Command::Symtower(a) => symmetric_tower(a.parity.into(), a.max_n)?.verify()?,
        Command::Partitions(a) => partition_tower_check(a.parity.into(), a.n)?,
        Command::Obstruction(a) => {
            let (data, r) = reflection_obstruction(a.n)?;
            let first = Some(serde_json::to_value(&data)?);
            return Ok((r, vec![first]));
        }
        Command::Nonexistence(a) => {
            let scan = nonexistence_scan(a.n)?;
            let details = scan
                .scans
                .iter()
                .chain(&scan.control)
                .map(|s| serde_json::to_value(s).map(Some))
                .collect::<Result<_, _>>()?;
            return Ok((scan.report(), details));
        }
        Command::Manifest(_) => unreachable!("handled by run_suite"),
    };
    Ok((report, Vec::new()))
}

/// Generated slice algebra has dimension `2|Γ|` when θ moves a generator
/// and `|Γ|` otherwise; both faithfulness predicates must agree.
fn faithful(group: GroupSpec, t: ThetaArg) -> Result<Report, CliError> {
    let g = build_group(group)?;
    let theta = standard_automorphism(&g, kind(t))?;
    let d = double(&GroupAlgebra::new(g.clone()), &theta)?;
    let fs = action_faithful_span(&d);
    let order = g.order();
    let expected = if d.theta_moves_generator() { 2 * order } else { order };
    let mut r = Report::new();
    r.push(
        CheckResult::from_witness(
            "generated slice algebra dimension",
            (fs.generated != expected).then(|| format!("{} ≠ {expected}", fs.generated)),
        )
        .with_note(format!(
            "generated {} of {}, slice span {}, {}",
            fs.generated,
            fs.total,
            fs.span,
            if fs.faithful() { "faithful" } else { "not faithful" }
        )),
    );
    let preds = (d.theta_nontrivial(), d.theta_moves_generator(), fs.faithful());
    r.push(CheckResult::from_witness(
        "faithfulness predicates agree",
        (preds.0 != preds.1 || preds.1 != preds.2).then(|| {
            format!(
                "theta nontrivial {}, moves a generator {}, faithful {}",
                preds.0, preds.1, preds.2
            )
        }),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(suite: &str, params: &[(&str, serde_json::Value)]) -> ManifestEntry {
        ManifestEntry {
            suite: suite.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    #[test]
    fn manifest_entries_validate() {
        let ok = entry("padic", &[("p", 3.into()), ("stages", 2.into())]);
        assert!(matches!(ok.command(0), Ok(Command::Padic(_))));
        let snake = entry("symtower", &[("parity", "odd".into()), ("max_n", 5.into())]);
        assert!(snake.command(0).is_ok());
        let bad = entry("padic", &[("q", 3.into())]);
        assert!(matches!(bad.command(4), Err(CliError::ManifestEntry { index: 4, .. })));
        let unknown = entry("frobnicate", &[]);
        assert!(unknown.command(0).is_err());
        let nested = entry("manifest", &[]);
        assert!(nested.command(0).is_err());
    }

    #[test]
    fn faithful_dichotomy_for_z3() {
        let r = faithful(GroupSpec::Cyclic(3), ThetaArg::Id).unwrap();
        assert!(!r.any_failed(), "{r}");
        assert!(r.entries[0].note.as_deref().unwrap().starts_with("generated 3 of 6"));
        let r = faithful(GroupSpec::Cyclic(3), ThetaArg::Inverse).unwrap();
        assert!(r.entries[0].note.as_deref().unwrap().starts_with("generated 6 of 6"));
    }

    #[test]
    fn nonexistence_has_table_details() {
        let r = run_suite(&Command::Nonexistence(crate::args::NArgs { n: 4 })).unwrap();
        assert_eq!(r.entries.len(), 4 + 3);
        assert!(r.entries.iter().all(|e| e.details.is_some()));
        assert!(!r.any_failed());
    }
}
