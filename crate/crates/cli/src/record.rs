// SPDX-License-Identifier: Apache-2.0

//! Serialized output rows.

use quadrep::arith::Factorization;
use quadrep::classify::PrimeClass;
use quadrep::count::{Branch, CountReport};
use quadrep::rings::Solution;
use serde::{Deserialize, Serialize};

/// A [`CountReport`] plus the optional extras the individual commands attach.
///
/// Absent fields are omitted from JSON, so a record re-serializes to the same
/// bytes it was parsed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub a: u64,
    pub x_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_count_error: Option<String>,
    pub branch: Branch,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_nq: Option<u64>,
    pub factorization: Factorization,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution_count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<Solution>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_oracle_count: Option<u64>,
    #[serde(default, rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

impl OutputRecord {
    /// The report without `y_count`; callers opt in with [`Self::with_y`].
    pub fn from_report(report: CountReport) -> Self {
        Self {
            n: report.n,
            a: report.a,
            x_count: report.x_count,
            y_count: None,
            y_count_error: None,
            branch: report.branch,
            n_q: report.n_q,
            tau_nq: report.tau_nq,
            factorization: report.factorization,
            solution_count: None,
            solutions: None,
            oracle_count: None,
            y_oracle_count: None,
            matches: None,
        }
    }

    pub fn with_y(mut self, y_count: Option<u64>) -> Self {
        match y_count {
            Some(y) => self.y_count = Some(y),
            None => {
                self.y_count_error =
                    Some("Y(n, a) is not defined for a = 27; use a = 3".to_string())
            }
        }
        self
    }

    pub fn with_oracle(mut self, oracle_count: u64, y_oracle_count: Option<u64>) -> Self {
        self.oracle_count = Some(oracle_count);
        self.y_oracle_count = y_oracle_count;
        let y_ok = match (self.y_count, y_oracle_count) {
            (Some(y), Some(oracle)) => y == oracle,
            _ => true,
        };
        self.matches = Some(oracle_count == self.x_count && y_ok);
        self
    }

    pub fn csv_header() -> &'static str {
        "n,a,x_count,branch,n_q,tau_nq"
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.a,
            self.x_count,
            self.branch,
            opt(self.n_q),
            opt(self.tau_nq)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub p: u64,
    pub a: u64,
    pub class: PrimeClass,
    pub kronecker: i32,
    pub expressible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic_residue_two: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub n: u64,
    pub factorization: Factorization,
    pub tau: u64,
}

/// Final line of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub a: Vec<u64>,
    pub n_max: u64,
    pub checked: u64,
    pub mismatches: u64,
}
