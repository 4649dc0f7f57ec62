//! Verification reports: a tree of named checks with witnesses.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Failure witnesses kept per check; further failures are only counted.
pub const MAX_WITNESSES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Where a check failed: the basis tuple and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub at: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(at: Vec<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            at,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub checked: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl Report {
    pub fn leaf(name: impl Into<String>, status: Status) -> Self {
        Report {
            name: name.into(),
            status,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
            note: None,
            children: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Report::leaf(name, Status::Skip).with_note(reason)
    }

    /// A single yes/no verdict; a failure must supply its witness.
    pub fn verdict(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        let mut check = Check::new(name);
        check.record(ok, witness);
        check.finish()
    }

    /// Status is `Fail` if any child fails, `Skip` if all children skip,
    /// `Pass` otherwise.
    pub fn group(name: impl Into<String>, children: Vec<Report>) -> Self {
        let status = if children.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if !children.is_empty() && children.iter().all(|c| c.status == Status::Skip) {
            Status::Skip
        } else {
            Status::Pass
        };
        Report {
            children,
            ..Report::leaf(name, status)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Depth-first search for a node by name.
    pub fn find(&self, name: &str) -> Option<&Report> {
        if self.name == name {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(name))
    }

    /// Every failing leaf, depth first.
    pub fn failing_leaves(&self) -> Vec<&Report> {
        let mut out = Vec::new();
        self.collect_failures(&mut out);
        out
    }

    fn collect_failures<'a>(&'a self, out: &mut Vec<&'a Report>) {
        if self.status != Status::Fail {
            return;
        }
        if self.children.is_empty() {
            out.push(self);
        }
        for c in &self.children {
            c.collect_failures(out);
        }
    }

    /// Total number of basis tuples checked in this subtree.
    pub fn total_checked(&self) -> usize {
        self.checked + self.children.iter().map(Report::total_checked).sum::<usize>()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let mark = match self.status {
            Status::Pass => "ok  ",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        let _ = write!(out, "{}[{mark}] {}", "  ".repeat(depth), self.name);
        if self.checked > 0 {
            let _ = write!(out, " ({} checked", self.checked);
            if self.failures > 0 {
                let _ = write!(out, ", {} failed", self.failures);
            }
            out.push(')');
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(out, " [{ms} ms]");
        }
        if let Some(note) = &self.note {
            let _ = write!(out, " -- {note}");
        }
        out.push('\n');
        for w in &self.witnesses {
            let _ = writeln!(
                out,
                "{}  at ({}): lhs = {} ; rhs = {}",
                "  ".repeat(depth),
                w.at.join(", "),
                w.lhs,
                w.rhs
            );
        }
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}

/// Accumulates verdicts for one named check.
#[derive(Debug)]
pub struct Check {
    name: String,
    checked: usize,
    failures: usize,
    witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) -> bool {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
        ok
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn finish(self) -> Report {
        let status = if self.failures > 0 { Status::Fail } else { Status::Pass };
        Report {
            checked: self.checked,
            failures: self.failures,
            witnesses: self.witnesses,
            ..Report::leaf(self.name, status)
        }
    }
}

/// Formats a coordinate vector as `c·name + ...` for witnesses.
pub fn format_vector<F: fmt::Display + num_traits::Zero>(v: &[F], basis: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, b)| format!("({c})·{b}"))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_witnesses() {
        let mut c = Check::new("assoc");
        c.record(true, || unreachable!());
        c.record(false, || Witness::new(vec!["X".into()], 1, 0));
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checked, 2);
        assert_eq!(r.witnesses.len(), 1);
        let g = Report::group("all", vec![r, Report::skip("other", "n/a")]);
        assert!(!g.passed());
        assert_eq!(g.failing_leaves().len(), 1);
    }

    #[test]
    fn group_of_skips_is_skip() {
        let g = Report::group("g", vec![Report::skip("a", "x")]);
        assert_eq!(g.status, Status::Skip);
        assert!(g.passed());
    }

    #[test]
    fn json_round_trip() {
        let r = Report::group("g", vec![Report::verdict("v", false, || Witness::new(vec![], "a", "b"))]);
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
