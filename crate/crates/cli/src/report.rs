use std::collections::BTreeMap;

use serde::Serialize;

/// One verified condition inside a report.
#[derive(Serialize, Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The JSON document every subcommand emits. Field order and the sorted
/// maps make serialization byte-identical for identical inputs and seeds;
/// the published schema lives at `schema/report.schema.json`.
#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: bool,
    pub witnesses: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub bounds: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            verdict: false,
            witnesses: BTreeMap::new(),
            checks: Vec::new(),
            bounds: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn witness(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.witnesses.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl ToString) -> &mut Self {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.to_string(),
        });
        self
    }

    pub fn bound(&mut self, key: &str, value: u64) -> &mut Self {
        self.bounds.insert(key.to_string(), value);
        self
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Exit status contract: 0 for a true verdict or a constructed witness, 1
/// for a false verdict or negative evidence, 2 for input or precondition
/// errors.
pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
