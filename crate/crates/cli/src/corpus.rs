//! Directory-driven regression cases: each `*.json` file names a command,
//! its inputs and the expected verdict, clause statuses and outputs.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{Map, Value};

use lfk_core::Report;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub dim: usize,
    pub flavor: String,
    #[serde(default)]
    pub homogeneous: bool,
    pub command: String,
    #[serde(default)]
    pub inputs: Map<String, Value>,
    pub expect: Expect,
    #[serde(default)]
    pub note: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub verdict: String,
    #[serde(default)]
    pub exit: Option<i32>,
    #[serde(default)]
    pub clauses: BTreeMap<String, String>,
    #[serde(default)]
    pub output: BTreeMap<String, String>,
}

impl Case {
    pub fn argv(&self) -> Vec<String> {
        let mut a: Vec<String> = vec![
            "lfk".into(),
            "--dim".into(),
            self.dim.to_string(),
            "--flavor".into(),
            self.flavor.clone(),
        ];
        if self.homogeneous {
            a.push("--homogeneous".into());
        }
        a.push(self.command.clone());
        for (k, v) in &self.inputs {
            match v {
                Value::Bool(true) => a.push(format!("--{}", k)),
                Value::Bool(false) | Value::Null => {}
                Value::String(s) => a.push(format!("--{}={}", k, s)),
                other => a.push(format!("--{}={}", k, other)),
            }
        }
        a
    }
}

fn collect(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    let mut entries: Vec<PathBuf> = fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>()?;
    entries.sort();
    for p in entries {
        if p.is_dir() {
            collect(&p, out)?;
        } else if p.extension().is_some_and(|e| e == "json") {
            out.push(p);
        }
    }
    Ok(())
}

/// Differences between an actual run and the expectation; empty on a match.
pub fn compare(case: &Case, run: &crate::Run) -> Vec<String> {
    let mut bad = Vec::new();
    let Some(json) = &run.json else {
        bad.push(format!("no report (exit {}): {}", run.code, run.stderr.trim()));
        return bad;
    };
    let verdict = json["verdict"].as_str().unwrap_or("");
    if verdict != case.expect.verdict {
        bad.push(format!("verdict {} != expected {}", verdict, case.expect.verdict));
    }
    if let Some(code) = case.expect.exit {
        if code != run.code {
            bad.push(format!("exit {} != expected {}", run.code, code));
        }
    }
    if verdict == "FAIL" {
        let w = json["witness"].as_str().unwrap_or("");
        if w.is_empty() || w == "0" {
            bad.push("FAIL without a nonzero witness".into());
        }
    }
    let clauses = json["clauses"].as_array().cloned().unwrap_or_default();
    for (name, status) in &case.expect.clauses {
        let found = clauses.iter().find(|c| c["name"] == name.as_str());
        match found.and_then(|c| c["status"].as_str()) {
            Some(s) if s == status => {}
            Some(s) => bad.push(format!("clause {}: {} != expected {}", name, s, status)),
            None => bad.push(format!("clause {} missing", name)),
        }
    }
    for (key, want) in &case.expect.output {
        match json["output"][key].as_str() {
            Some(got) if got == want => {}
            Some(got) => bad.push(format!("output {}: {} != expected {}", key, got, want)),
            None => bad.push(format!("output {} missing", key)),
        }
    }
    bad
}

pub fn load(path: &Path) -> Result<Case, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

/// One clause per case, named by its path relative to `dir`.
pub fn run_dir(dir: &Path) -> Report {
    let mut files = Vec::new();
    if let Err(e) = collect(dir, &mut files) {
        return Report::error("corpus", format!("{}: {}", dir.display(), e));
    }
    if files.is_empty() {
        return Report::error("corpus", format!("{}: no cases", dir.display()));
    }
    let mut r = Report::new();
    let mut passed = 0;
    for path in &files {
        let name = path
            .strip_prefix(dir)
            .unwrap_or(path)
            .with_extension("")
            .display()
            .to_string();
        let (note, bad) = match load(path) {
            Ok(case) => (case.note.clone(), compare(&case, &crate::run(case.argv()))),
            Err(e) => (String::new(), vec![format!("unreadable case: {}", e)]),
        };
        let detail = if note.is_empty() { "matches expectation".to_string() } else { note };
        if bad.is_empty() {
            passed += 1;
            r.pass(&name, detail);
        } else {
            r.fail(&name, detail, bad.join("; "));
        }
    }
    r.output("cases", files.len()).output("passed", passed);
    r
}
