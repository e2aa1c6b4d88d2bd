//! Pass/fail records shared by the catalog self-check, the odd-reflection
//! check and the verification ledger.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// A value recorded on either side of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Scalar(Rational),
    Vector(Vec<Rational>),
    /// A (g^♮-weight, conformal weight) pair.
    WWeight {
        weight: Vec<Rational>,
        conformal: Rational,
    },
    Flag(bool),
    Text(String),
}

impl From<Rational> for CheckValue {
    fn from(r: Rational) -> Self {
        CheckValue::Scalar(r)
    }
}

impl From<Vec<Rational>> for CheckValue {
    fn from(v: Vec<Rational>) -> Self {
        CheckValue::Vector(v)
    }
}

impl From<bool> for CheckValue {
    fn from(b: bool) -> Self {
        CheckValue::Flag(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check_id: String,
    /// Short description of the identity being verified.
    pub anchor: String,
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Rational>,
    pub expected: CheckValue,
    pub computed: CheckValue,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Records a check; `pass` is `expected == computed`.
    pub fn push(
        &mut self,
        check_id: &str,
        anchor: &str,
        algebra: impl ToString,
        k: Option<&Rational>,
        expected: impl Into<CheckValue>,
        computed: impl Into<CheckValue>,
    ) {
        let expected = expected.into();
        let computed = computed.into();
        let pass = expected == computed;
        self.entries.push(CheckEntry {
            check_id: check_id.to_string(),
            anchor: anchor.to_string(),
            algebra: algebra.to_string(),
            k: k.cloned(),
            expected,
            computed,
            pass,
        });
    }

    /// Records a boolean property that must hold.
    pub fn push_holds(
        &mut self,
        check_id: &str,
        anchor: &str,
        algebra: impl ToString,
        k: Option<&Rational>,
        holds: bool,
    ) {
        self.push(check_id, anchor, algebra, k, true, holds);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
