// Copyright 2026 The coherent-shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Structured pass/fail reports shared by every check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::stabilizer::ValidationReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Evidence attached to a failing entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A coset shift whose signed sum is not zero. `omega` lives on the support of `a`.
    Omega { omega: String, embedded: String },
    /// A connected component of the weight-2 graph.
    Component { qubits: Vec<usize>, size: usize, y_weight: usize },
    /// A word whose weight residue is not divisible.
    DualWord { word: String, residue: i64 },
    /// A Z-type word violating a membership or sign requirement.
    ZWord { word: String, reason: String },
    /// Two generators that anticommute.
    Generators { first: usize, second: usize },
    /// An X-component with the wrong weight parity.
    Support { a: String, weight: usize },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Omega { omega, embedded } => write!(f, "coset shift {omega} (embedded {embedded})"),
            Witness::Component { qubits, size, y_weight } => {
                write!(f, "component {qubits:?} of size {size} with y weight {y_weight}")
            }
            Witness::DualWord { word, residue } => write!(f, "word {word} with residue {residue}"),
            Witness::ZWord { word, reason } => write!(f, "Z word {word}: {reason}"),
            Witness::Generators { first, second } => write!(f, "generators {first} and {second}"),
            Witness::Support { a, weight } => write!(f, "X component {a} of weight {weight}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    /// X-component the entry refers to, if any.
    pub representative: Option<String>,
    /// Generator selector producing the representative.
    pub selector: Option<String>,
    pub condition: String,
    /// Verdict of the exact integer route, when one exists.
    pub exact: Option<bool>,
    /// Worst numeric deviation observed.
    pub residual: Option<f64>,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckEntry {
    pub fn new(condition: impl Into<String>, pass: bool) -> Self {
        Self {
            representative: None,
            selector: None,
            condition: condition.into(),
            exact: None,
            residual: None,
            pass,
            witness: None,
        }
    }

    pub fn representative(mut self, a: impl ToString, selector: Option<String>) -> Self {
        self.representative = Some(a.to_string());
        self.selector = selector;
        self
    }

    pub fn residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }

    pub fn exact(mut self, e: Option<bool>) -> Self {
        self.exact = e;
        self
    }

    pub fn witness(mut self, w: Option<Witness>) -> Self {
        self.witness = w;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    pub verdict: Verdict,
    pub parameters: BTreeMap<String, String>,
    /// How the set of checked objects was reduced, e.g. one per X-component.
    pub reduction: Option<String>,
    pub entries: Vec<CheckEntry>,
    /// Disagreements between independent routes. Never expected.
    pub anomalies: Vec<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            check: check.into(),
            verdict: Verdict::Pass,
            parameters: BTreeMap::new(),
            reduction: None,
            entries: Vec::new(),
            anomalies: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, entry: CheckEntry) {
        if !entry.pass {
            self.verdict = Verdict::Fail;
        }
        self.entries.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = CheckEntry>) {
        for e in entries {
            self.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.failures().find_map(|e| e.witness.as_ref())
    }

    /// Largest residual over all entries.
    pub fn max_residual(&self) -> Option<f64> {
        self.entries.iter().filter_map(|e| e.residual).reduce(f64::max)
    }
}

impl From<&ValidationReport> for CheckReport {
    fn from(v: &ValidationReport) -> Self {
        let mut r = CheckReport::new("validate").param("generators", v.generator_count).param("rank", v.rank);
        let mut commute = CheckEntry::new("commuting", v.anticommuting.is_empty());
        if let Some(&(first, second)) = v.anticommuting.first() {
            commute = commute.witness(Some(Witness::Generators { first, second }));
        }
        r.push(commute);
        r.push(CheckEntry::new("independent", v.independent));
        r
    }
}
