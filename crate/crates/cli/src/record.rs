//! One output record per result, rendered either as a single JSON line or as
//! the indented text layout that `ortho_core::text::parse_section` reads back.

use std::io::{self, Write};

use num_bigint::BigInt;
use ortho_core::IntVector;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum Item {
    Scalar(Value),
    /// A list of tuples, printed as `(a,b,c)` lines.
    Rows(Vec<Vec<String>>),
}

pub fn int(x: &BigInt) -> Item {
    Item::Scalar(Value::String(x.to_string()))
}

pub fn text(s: impl Into<String>) -> Item {
    Item::Scalar(Value::String(s.into()))
}

pub fn flag(b: bool) -> Item {
    Item::Scalar(Value::Bool(b))
}

pub fn vectors(vs: &[IntVector]) -> Item {
    Item::Rows(
        vs.iter()
            .map(|v| v.coords().iter().map(|c| c.to_string()).collect())
            .collect(),
    )
}

pub fn vector(v: &IntVector) -> Item {
    text(v.to_string())
}

#[derive(Debug, Clone)]
pub struct Record {
    pub command: &'static str,
    pub input: Vec<(&'static str, Item)>,
    pub result: Vec<(&'static str, Item)>,
    pub verification: Vec<(&'static str, bool)>,
    /// Text mode prints only this line when set.
    pub bare: Option<String>,
}

impl Record {
    pub fn new(command: &'static str) -> Self {
        Record {
            command,
            input: Vec::new(),
            result: Vec::new(),
            verification: Vec::new(),
            bare: None,
        }
    }

    pub fn input(mut self, name: &'static str, item: Item) -> Self {
        self.input.push((name, item));
        self
    }

    pub fn result(mut self, name: &'static str, item: Item) -> Self {
        self.result.push((name, item));
        self
    }

    pub fn check(mut self, name: &'static str, pass: bool) -> Self {
        self.verification.push((name, pass));
        self
    }

    pub fn checks(mut self, checks: Vec<(&'static str, bool)>) -> Self {
        self.verification.extend(checks);
        self
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.verification
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        fn fields(items: &[(&'static str, Item)]) -> Value {
            let mut m = Map::new();
            for (name, item) in items {
                let v = match item {
                    Item::Scalar(v) => v.clone(),
                    Item::Rows(rows) => Value::Array(
                        rows.iter()
                            .map(|r| Value::Array(r.iter().cloned().map(Value::String).collect()))
                            .collect(),
                    ),
                };
                m.insert(name.to_string(), v);
            }
            Value::Object(m)
        }
        let verification: Map<String, Value> = self
            .verification
            .iter()
            .map(|(n, ok)| (n.to_string(), Value::String(if *ok { "pass" } else { "fail" }.into())))
            .collect();
        json!({
            "command": self.command,
            "input": fields(&self.input),
            "result": fields(&self.result),
            "verification": verification,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn to_text(&self) -> String {
        if let Some(line) = &self.bare {
            return format!("{line}\n");
        }
        let mut s = format!("command: {}\n", self.command);
        for (name, item) in self.input.iter().chain(&self.result) {
            match item {
                Item::Scalar(Value::String(v)) => s.push_str(&format!("{name}: {v}\n")),
                Item::Scalar(v) => s.push_str(&format!("{name}: {v}\n")),
                Item::Rows(rows) => {
                    s.push_str(&format!("{name}:\n"));
                    for r in rows {
                        s.push_str(&format!("  ({})\n", r.join(",")));
                    }
                }
            }
        }
        s.push_str("verification:\n");
        for (name, ok) in &self.verification {
            s.push_str(&format!("  {name}: {}\n", if *ok { "pass" } else { "fail" }));
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Writes records as they are produced; text records with several fields
/// are separated by blank lines.
pub struct Emitter {
    format: Format,
    written: usize,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Emitter { format, written: 0 }
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        let mut out = io::stdout().lock();
        match self.format {
            Format::Json => writeln!(out, "{}", record.to_json())?,
            Format::Text => {
                if self.written > 0 && record.bare.is_none() {
                    writeln!(out)?;
                }
                write!(out, "{}", record.to_text())?;
            }
        }
        self.written += 1;
        out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let r = Record::new("demo")
            .input("vector", vector(&IntVector::from_i64s(&[1, 2, 2])))
            .result("basis", vectors(&[IntVector::from_i64s(&[1, -2])]))
            .result("exact", flag(true))
            .check("ok", true);
        assert_eq!(
            r.to_json().to_string(),
            format!(
                r#"{{"command":"demo","input":{{"vector":"(1,2,2)"}},"result":{{"basis":[["1","-2"]],"exact":true}},"verification":{{"ok":"pass"}},"version":"{}"}}"#,
                env!("CARGO_PKG_VERSION")
            )
        );
    }

    #[test]
    fn text_layout() {
        let r = Record::new("demo")
            .result("basis", vectors(&[IntVector::from_i64s(&[1, -2])]))
            .result("length_sq", int(&BigInt::from(5)))
            .check("ok", false);
        assert_eq!(
            r.to_text(),
            "command: demo\nbasis:\n  (1,-2)\nlength_sq: 5\nverification:\n  ok: fail\n"
        );
        assert_eq!(r.failed_checks(), vec!["ok"]);
    }
}
