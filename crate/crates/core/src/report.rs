//! Outcome of a single verification check.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First point where the two sides of a check disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub params: String,
    /// Number of individual comparisons made.
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

/// Flat JSON row: `{check, params, status, lhs, rhs, location}`.
#[derive(Serialize)]
struct JsonRow<'a> {
    check: &'a str,
    params: &'a str,
    status: Status,
    lhs: Option<&'a str>,
    rhs: Option<&'a str>,
    location: Option<&'a str>,
    compared: usize,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, params: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            params: params.into(),
            compared: 0,
            mismatch: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.mismatch.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    /// Records one comparison. Only the first mismatch is kept; returns
    /// whether this comparison agreed.
    pub fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        location: impl fmt::Display,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.compared += 1;
        let ok = lhs == rhs;
        if !ok && self.mismatch.is_none() {
            self.mismatch = Some(Mismatch {
                location: location.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    /// Folds another report's comparisons into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.compared += other.compared;
        if self.mismatch.is_none() {
            self.mismatch = other.mismatch.map(|m| Mismatch {
                location: format!("{}: {}", other.check, m.location),
                ..m
            });
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = self.mismatch.as_ref();
        serde_json::to_value(JsonRow {
            check: &self.check,
            params: &self.params,
            status: self.status(),
            lhs: m.map(|m| m.lhs.as_str()),
            rhs: m.map(|m| m.rhs.as_str()),
            location: m.map(|m| m.location.as_str()),
            compared: self.compared,
        })
        .expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "PASS {} [{}] ({} compared)",
                self.check, self.params, self.compared
            ),
            Some(m) => write!(
                f,
                "FAIL {} [{}] at {}: lhs = {}, rhs = {}",
                self.check, self.params, m.location, m.lhs, m.rhs
            ),
        }
    }
}
