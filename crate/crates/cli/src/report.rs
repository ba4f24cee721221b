use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Serialize)]
pub struct PosetDescriptor {
    pub source: String,
    pub elements: usize,
    pub strict_relations: usize,
    pub cover_relations: usize,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub step: String,
    pub seconds: f64,
}

/// Everything a command produced. Timings are the only field that varies
/// between runs with the same flags.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDescriptor>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pass: bool,
    pub timings: Vec<Timing>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Self {
            command,
            poset: None,
            results: Map::new(),
            checks: Vec::new(),
            seed: None,
            pass: true,
            timings: Vec::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_owned(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    /// Runs `f`, recording its wall time under `step`.
    pub fn timed<T>(&mut self, step: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push(Timing {
            step: step.to_owned(),
            seconds: start.elapsed().as_secs_f64(),
        });
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(p) = &self.poset {
            out += &format!(
                "poset: {} ({} elements, {} strict relations)\n",
                p.source, p.elements, p.strict_relations
            );
        }
        if let Some(seed) = self.seed {
            out += &format!("seed: {seed}\n");
        }
        for (key, value) in &self.results {
            out += &format!("{key}: {}\n", render(value));
        }
        for c in &self.checks {
            let tag = if c.pass { "ok" } else { "FAILED" };
            out += &format!(
                "[{tag}] {}: expected {}, got {}\n",
                c.name, c.expected, c.actual
            );
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.pass).count();
            out += &format!("{passed}/{} checks passed\n", self.checks.len());
        }
        out
    }
}

fn render(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let parts: Vec<String> = items.iter().map(render).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            let lines: Vec<String> = rows.iter().map(|r| format!("\n  {}", render(r))).collect();
            lines.concat()
        }
        other => other.to_string(),
    }
}

/// Decimal strings, so consumers never lose precision.
pub fn strings<T: Display>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(
        items
            .into_iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}
