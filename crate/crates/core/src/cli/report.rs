//! Command reports with a machine-readable mirror.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not decided because the instance exceeds a size bound.
    Unchecked,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unchecked => "UNCHECKED",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    /// Facts about the input that are not verdicts.
    pub info: Vec<(String, String)>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), info: Vec::new(), checks: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.info.push((key.into(), value.to_string()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), verdict, detail: detail.into(), witness: None });
        self
    }

    pub fn check_with(
        &mut self,
        name: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
        witness: Option<String>,
    ) -> &mut Self {
        self.checks.push(Check { name: name.into(), verdict, detail: detail.into(), witness });
        self
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }

    /// 0 when no check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "$ {}", self.command);
        for (k, v) in &self.info {
            let _ = writeln!(s, "  {k}: {v}");
        }
        for c in &self.checks {
            let _ = writeln!(s, "{:<9} {}: {}", c.verdict.tag(), c.name, c.detail);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "          witness: {w}");
            }
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} unchecked in {:.2?}",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Unchecked),
            self.elapsed
        );
        s
    }
}
