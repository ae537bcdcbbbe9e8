//! Itemized pass/fail results. Every checker in the crate returns a
//! [`Verdict`]; failing checks carry the locus of the first mismatch.

use std::fmt;

use serde::Serialize;

use crate::exactla::{format_scalar, Mat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// Human-readable name of the identity being checked.
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, pass: bool, counterexample: Option<String>) -> Self {
        let mut c = Check { id: id.into(), anchor: anchor.into(), pass, counterexample };
        if !c.pass && c.counterexample.is_none() {
            c.counterexample = Some("condition is false".into());
        }
        c
    }

    /// Entrywise comparison of two matrices.
    pub fn equal(id: impl Into<String>, anchor: impl Into<String>, lhs: &Mat, rhs: &Mat) -> Self {
        let cx = mismatch(lhs, rhs);
        Check::new(id, anchor, cx.is_none(), cx)
    }
}

/// `None` when equal, otherwise a description of the first differing entry.
pub fn mismatch(lhs: &Mat, rhs: &Mat) -> Option<String> {
    if lhs.shape() != rhs.shape() {
        return Some(format!(
            "shape {}x{} vs {}x{}",
            lhs.rows(),
            lhs.cols(),
            rhs.rows(),
            rhs.cols()
        ));
    }
    lhs.first_difference(rhs).map(|(r, c, a, b)| {
        format!("entry ({r}, {c}): {} vs {}", format_scalar(&a), format_scalar(&b))
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn equal(&mut self, id: &str, anchor: &str, lhs: &Mat, rhs: &Mat) {
        self.push(Check::equal(id, anchor, lhs, rhs));
    }

    pub fn holds(&mut self, id: &str, anchor: &str, pass: bool, detail: Option<String>) {
        self.push(Check::new(id, anchor, pass, detail));
    }

    pub fn extend(&mut self, other: Verdict) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every id prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Verdict) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.id = format!("{prefix}/{}", c.id);
            c
        }));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Whether the named check exists and passed.
    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn counts(&self) -> (usize, usize) {
        let pass = self.checks.iter().filter(|c| c.pass).count();
        (pass, self.checks.len() - pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {} ({})", if c.pass { "pass" } else { "FAIL" }, c.id, c.anchor)?;
            if let Some(cx) = &c.counterexample {
                if !c.pass {
                    write!(f, ": {cx}")?;
                }
            }
            writeln!(f)?;
        }
        let (p, q) = self.counts();
        write!(f, "{p} passed, {q} failed")
    }
}
