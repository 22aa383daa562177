//! Serializable reports. The layout is described by `schema/report.schema.json`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::Verdict;
use crate::decimal;
use crate::mc::McReport;

pub const SCHEMA_VERSION: u32 = 1;

/// Significant digits in rendered decimals.
pub const DECIMAL_DIGITS: usize = 12;

/// A rational with its decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Num {
    pub rational: String,
    pub decimal: String,
}

impl Num {
    pub fn parse(&self) -> Option<BigRational> {
        decimal::parse_rational(&self.rational)
    }
}

impl From<&BigRational> for Num {
    fn from(r: &BigRational) -> Self {
        Num {
            rational: r.to_string(),
            decimal: decimal::render_sig(r, DECIMAL_DIGITS),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub label: String,
    pub spec: String,
    pub order: u64,
    pub soluble: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactBlock {
    pub value: Num,
    pub term_count: usize,
    pub sieve_count: usize,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrownRecord {
    pub label: String,
    pub p: u64,
    pub n_raw: usize,
    pub q: u64,
    pub n: usize,
    pub delta: u32,
    pub theta: u32,
    pub central: bool,
    pub h_order: usize,
    pub p_fix: Num,
    pub m: Option<u32>,
    pub iso_heuristic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRecord {
    pub index: usize,
    pub order: usize,
    pub abelian: bool,
    pub complemented: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrownTable {
    pub chief_length: usize,
    pub classes: Vec<CrownRecord>,
    pub excluded: Vec<ExcludedRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub ratio: f64,
    pub threshold: f64,
    pub passes: bool,
    pub exceptional_case: Option<u8>,
    pub lambda: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorBound {
    pub label: String,
    pub central: bool,
    pub branch1: Option<Num>,
    pub branch2: Num,
    pub value: Num,
    pub ratio_check: Option<RatioRecord>,
    /// Set when the ratio check raised an error.
    pub ratio_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub thm2: Verdict,
    pub cor36: Verdict,
    pub five_thirds: Verdict,
    pub v_property: Verdict,
}

impl Verdicts {
    pub fn all(&self) -> [(&'static str, Verdict); 4] {
        [
            ("crown bound", self.thm2),
            ("d(G) crown bound", self.cor36),
            ("5/3 sqrt|G|", self.five_thirds),
            ("V-property sum", self.v_property),
        ]
    }

    pub fn any_violated(&self) -> bool {
        self.all().iter().any(|(_, v)| *v == Verdict::Violated)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub group_id: String,
    pub order: u64,
    pub exact: Option<Num>,
    pub d_g: usize,
    pub thm2_bound: Option<Num>,
    /// `d(G) + σ` when there are no non-central classes.
    pub cor36_bound: Option<Num>,
    pub v_property_bound: Option<Num>,
    pub five_thirds_bound: Num,
    pub five_thirds_equality: bool,
    pub per_factor: Vec<FactorBound>,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyItem {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub group: Option<GroupInfo>,
    pub chebotarev: Option<ExactBlock>,
    pub monte_carlo: Option<McReport>,
    pub crowns: Option<CrownTable>,
    pub bounds: Option<BoundReport>,
    pub verify: Option<Vec<VerifyItem>>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            group: None,
            chebotarev: None,
            monte_carlo: None,
            crowns: None,
            bounds: None,
            verify: None,
            timings_ms: BTreeMap::new(),
        }
    }

    /// False when a bound is violated or a verify item failed.
    pub fn ok(&self) -> bool {
        let bounds_ok = self
            .bounds
            .as_ref()
            .is_none_or(|b| !b.verdicts.any_violated());
        let verify_ok = self
            .verify
            .as_ref()
            .is_none_or(|items| items.iter().all(|i| i.passed));
        bounds_ok && verify_ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
