//! Pass/fail reports shared by every verification suite.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::exactnum::Ring;
use crate::pseries::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failing comparison of a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    pub order: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: u64,
    /// Human-readable side results, e.g. solved constants. Not part of the JSON schema.
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub checks: usize,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            status: Status::Pass,
            first_failure: None,
            elapsed_ms: 0,
            notes: Vec::new(),
            checks: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn fail(&mut self, check: &str, order: Option<i64>, lhs: String, rhs: String) {
        self.checks += 1;
        self.status = Status::Fail;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                check: check.to_string(),
                order,
                lhs,
                rhs,
            });
        }
    }

    /// Records `lhs == rhs`.
    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, check: &str, order: Option<i64>, lhs: &T, rhs: &T) -> bool {
        if lhs == rhs {
            self.checks += 1;
            true
        } else {
            self.fail(check, order, lhs.to_string(), rhs.to_string());
            false
        }
    }

    pub fn check(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        if ok {
            self.checks += 1;
        } else {
            self.fail(check, None, detail(), String::new());
        }
        ok
    }

    /// Coefficientwise equality through `x^order` (both series must reach it).
    pub fn check_series<R: Ring>(
        &mut self,
        check: &str,
        lhs: &TruncatedSeries<R>,
        rhs: &TruncatedSeries<R>,
        order: usize,
    ) -> bool {
        if lhs.order() < order || rhs.order() < order {
            self.fail(
                check,
                Some(order as i64),
                format!("series of order {}", lhs.order()),
                format!("series of order {}", rhs.order()),
            );
            return false;
        }
        match lhs.truncate(order).first_mismatch(&rhs.truncate(order)) {
            None => {
                self.checks += 1;
                true
            }
            Some(k) => {
                self.fail(
                    check,
                    Some(k as i64),
                    lhs.coeff(k).to_string(),
                    rhs.coeff(k).to_string(),
                );
                false
            }
        }
    }

    pub fn error(&mut self, check: &str, e: &crate::Error) {
        self.fail(check, None, format!("error: {e}"), String::new());
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        if other.status == Status::Fail {
            self.status = Status::Fail;
            if self.first_failure.is_none() {
                self.first_failure = other.first_failure.map(|mut f| {
                    f.check = format!("{}: {}", other.suite, f.check);
                    f
                });
            }
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{}: {n}", other.suite)));
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{:<10} {status} ({} checks, {} ms)",
            self.suite, self.checks, self.elapsed_ms
        )?;
        if let Some(ff) = &self.first_failure {
            write!(f, "\n  first failure: {}", ff.check)?;
            if let Some(o) = ff.order {
                write!(f, " at order {o}")?;
            }
            write!(f, "\n    lhs = {}\n    rhs = {}", ff.lhs, ff.rhs)?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_has_exactly_the_schema_keys() {
        let mut r = Report::new("pf");
        r.check_eq("x", Some(3), &1, &2);
        let v = r.finish().to_json();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["elapsed_ms", "first_failure", "status", "suite"]);
        assert_eq!(v["status"], "fail");
        assert_eq!(v["first_failure"]["order"], 3);
    }
}
