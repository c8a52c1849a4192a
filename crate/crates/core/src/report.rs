//! Machine-readable verdicts: a list of named clauses, each pass, fail or
//! informational, with a printed witness for every failure.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    /// Witness of the first failing clause.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Named results (forms, functions) in canonical print.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub output: BTreeMap<String, String>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            verdict: Verdict::Pass,
            clauses: Vec::new(),
            witness: None,
            output: BTreeMap::new(),
        }
    }

    /// A report holding a single error clause.
    pub fn error(name: &str, err: impl Display) -> Self {
        let mut r = Report::new();
        r.verdict = Verdict::Error;
        r.clauses.push(Clause {
            name: name.to_string(),
            status: Status::Fail,
            detail: err.to_string(),
            witness: None,
        });
        r
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) -> &mut Self {
        self.clauses.push(Clause {
            name: name.to_string(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        });
        self
    }

    /// Record a failure; `witness` must print as something other than `0`.
    pub fn fail(&mut self, name: &str, detail: impl Into<String>, witness: impl Display) -> &mut Self {
        let w = witness.to_string();
        debug_assert!(w != "0" && !w.is_empty(), "failure without a witness");
        if self.witness.is_none() {
            self.witness = Some(w.clone());
        }
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
        self.clauses.push(Clause {
            name: name.to_string(),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(w),
        });
        self
    }

    pub fn info(&mut self, name: &str, detail: impl Into<String>) -> &mut Self {
        self.clauses.push(Clause {
            name: name.to_string(),
            status: Status::Info,
            detail: detail.into(),
            witness: None,
        });
        self
    }

    /// Pass if `witness` is zero, fail with it otherwise.
    pub fn check_zero<W: Display>(&mut self, name: &str, detail: &str, is_zero: bool, witness: W) -> bool {
        if is_zero {
            self.pass(name, detail);
        } else {
            self.fail(name, detail, witness);
        }
        is_zero
    }

    pub fn output(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.output.insert(key.to_string(), value.to_string());
        self
    }

    /// Append another report's clauses, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) -> &mut Self {
        if other.verdict == Verdict::Error {
            self.verdict = Verdict::Error;
        } else if other.verdict == Verdict::Fail && self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        for mut c in other.clauses {
            c.name = format!("{}.{}", prefix, c.name);
            self.clauses.push(c);
        }
        for (k, v) in other.output {
            self.output.insert(format!("{}.{}", prefix, k), v);
        }
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

pub(crate) fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_opt_display<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_clauses() {
        let mut r = Report::new();
        r.pass("a", "ok").info("b", "note");
        assert!(r.is_pass());
        r.fail("c", "bad", "z1");
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.witness.as_deref(), Some("z1"));
        let mut outer = Report::new();
        outer.absorb("inner", r);
        assert_eq!(outer.verdict, Verdict::Fail);
        assert_eq!(outer.clauses[2].name, "inner.c");
    }
}
