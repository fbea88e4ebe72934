//! Formula checks and graph constructions run on concrete instances.
//!
//! Every check produces [`VerificationResult`]s comparing an expected value (from a
//! closed formula) with a computed one. Computations refused by the [`CostGate`] are
//! reported as `skipped: cost`, and checks whose hypotheses fail on the given input
//! are reported as `inapplicable`; neither is ever dropped silently.

mod claims;
mod constructions;
mod suites;
mod sweep;

pub use claims::*;
pub use constructions::*;
pub use suites::*;
pub use sweep::*;

use serde::Serialize;

use crate::betti::{betti_koszul_gated, graded_betti_hochster, GradedBetti, View};
use crate::complex::FieldTag;
use crate::cost::CostGate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hilbert::Poly;
use crate::ideal::MonomialIdeal;

/// Field and cost limits shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub field: FieldTag,
    pub gate: CostGate,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            field: FieldTag::Q,
            gate: CostGate::default(),
        }
    }
}

impl Settings {
    pub fn with_field(field: FieldTag) -> Self {
        Settings {
            field,
            ..Settings::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Poly(Poly),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<Poly> for Value {
    fn from(v: Poly) -> Self {
        Value::Poly(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped: cost")]
    SkippedCost,
    #[serde(rename = "inapplicable")]
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub claim: String,
    pub instance: String,
    pub expected: Value,
    pub computed: Option<Value>,
    pub status: Status,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationResult {
    pub fn compare(claim: &str, instance: &str, expected: impl Into<Value>, computed: impl Into<Value>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let pass = expected == computed;
        VerificationResult {
            claim: claim.to_string(),
            instance: instance.to_string(),
            expected,
            computed: Some(computed),
            status: if pass { Status::Pass } else { Status::Fail },
            pass,
            note: None,
        }
    }

    fn unresolved(claim: &str, instance: &str, expected: Value, status: Status, note: String) -> Self {
        VerificationResult {
            claim: claim.to_string(),
            instance: instance.to_string(),
            expected,
            computed: None,
            status,
            pass: false,
            note: Some(note),
        }
    }

    pub fn inapplicable(claim: &str, instance: &str, expected: impl Into<Value>, why: &str) -> Self {
        Self::unresolved(claim, instance, expected.into(), Status::Inapplicable, why.to_string())
    }

    /// Runs `compute`; a cost-gate refusal becomes a `skipped: cost` result.
    pub fn measure<V: Into<Value>>(
        claim: &str,
        instance: &str,
        expected: impl Into<Value>,
        compute: impl FnOnce() -> Result<V>,
    ) -> Result<Self> {
        let expected = expected.into();
        match compute() {
            Ok(v) => Ok(Self::compare(claim, instance, expected, v)),
            Err(e @ Error::CostExceeded { .. }) => {
                Ok(Self::unresolved(claim, instance, expected, Status::SkippedCost, e.to_string()))
            }
            Err(e) => Err(e),
        }
    }

    /// A check that could not run at all because of an error.
    pub fn errored(claim: &str, instance: &str, err: &Error) -> Self {
        let status = match err {
            Error::CostExceeded { .. } => Status::SkippedCost,
            _ => Status::Fail,
        };
        Self::unresolved(claim, instance, Value::Bool(true), status, err.to_string())
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// `reg(S/I(G))`, `pd` and `depth` from one Hochster run.
pub(crate) fn hochster_table(g: &Graph, settings: &Settings) -> Result<GradedBetti> {
    graded_betti_hochster(g, settings.field, &settings.gate)
}

pub(crate) fn reg_quotient(g: &Graph, settings: &Settings) -> Result<i64> {
    Ok(hochster_table(g, settings)?.regularity(View::Quotient))
}

pub(crate) fn depth(g: &Graph, settings: &Settings) -> Result<usize> {
    Ok(hochster_table(g, settings)?.pd_depth().1)
}

/// `reg(I)` of an arbitrary monomial ideal via upper-Koszul complexes.
pub(crate) fn reg_ideal(i: &MonomialIdeal, settings: &Settings) -> Result<i64> {
    Ok(betti_koszul_gated(i, settings.field, &settings.gate)?.regularity(View::Ideal))
}
