//! Structured command reports.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::labeling::GammaTriple;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Value {
    Bool(bool),
    Count(u64),
    Text(String),
    /// A labeling or orientation as a `0`/`1` string, index 0 first.
    Bits(String),
    Gamma(GammaTriple),
    List(Vec<Value>),
}

impl Value {
    fn render(&self, out: &mut String) {
        match self {
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::Count(c) => {
                let _ = write!(out, "{c}");
            }
            Value::Text(s) | Value::Bits(s) => out.push_str(s),
            Value::Gamma(t) => {
                let _ = write!(out, "{t}");
            }
            Value::List(items) => {
                out.push('[');
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    v.render(out);
                }
                out.push(']');
            }
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<u64> for Value {
    fn from(c: u64) -> Self {
        Value::Count(c)
    }
}

impl From<usize> for Value {
    fn from(c: usize) -> Self {
        Value::Count(c as u64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<GammaTriple> for Value {
    fn from(t: GammaTriple) -> Self {
        Value::Gamma(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub key: String,
    pub value: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub verdicts: Vec<Verdict>,
    pub elapsed_micros: u64,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.verdicts.push(Verdict {
            key: key.to_string(),
            value: value.into(),
        });
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.verdicts
            .iter()
            .find(|v| v.key == key)
            .map(|v| &v.value)
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.elapsed_micros = d.as_micros().min(u64::MAX as u128) as u64;
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "input.{k}: {v}");
        }
        for v in &self.verdicts {
            let _ = write!(out, "{}: ", v.key);
            v.value.render(&mut out);
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "elapsed_ms: {:.3}",
            self.elapsed_micros as f64 / 1000.0
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn value() -> impl Strategy<Value = Value> {
        let leaf = prop_oneof![
            any::<bool>().prop_map(Value::Bool),
            any::<u64>().prop_map(Value::Count),
            "[a-z ]{0,12}".prop_map(Value::Text),
            "[01]{0,20}".prop_map(Value::Bits),
            (0usize..50, 0usize..50, 0usize..50)
                .prop_map(|(a, b, c)| Value::Gamma(GammaTriple::new(a, b, c))),
        ];
        leaf.prop_recursive(2, 12, 4, |inner| {
            proptest::collection::vec(inner, 0..4).prop_map(Value::List)
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(
            command in "[a-z-]{1,12}",
            inputs in proptest::collection::vec(("[a-z]{1,6}", "[a-z0-9]{0,6}"), 0..3),
            verdicts in proptest::collection::vec(("[a-z_]{1,8}", value()), 0..5),
            elapsed in any::<u64>(),
        ) {
            let r = RunReport {
                command,
                inputs,
                verdicts: verdicts.into_iter().map(|(key, value)| Verdict { key, value }).collect(),
                elapsed_micros: elapsed,
            };
            prop_assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn text_rendering() {
        let mut r = RunReport::new("bounds");
        r.input("n", 6)
            .verdict("z", 6usize)
            .verdict("gamma", GammaTriple::new(1, 1, 1))
            .verdict(
                "list",
                Value::List(vec![Value::Bits("01".into()), Value::Count(3)]),
            );
        let text = r.to_text();
        assert!(text.contains("command: bounds\n"));
        assert!(text.contains("input.n: 6\n"));
        assert!(text.contains("z: 6\n"));
        assert!(text.contains("gamma: (1, 1, 1)\n"));
        assert!(text.contains("list: [01, 3]\n"));
        assert_eq!(r.get("z"), Some(&Value::Count(6)));
    }
}
