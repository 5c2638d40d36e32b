use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{json, Value};

pub const TOOL: &str = "minmat";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Wraps a payload in the JSON envelope shared by every command.
pub fn envelope(command: &str, seed: Option<u64>, payload: Value) -> Value {
    let mut meta = json!({
        "tool": TOOL,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
    });
    if let Some(seed) = seed {
        meta["seed"] = json!(seed);
    }
    json!({ "metadata": meta, "payload": payload })
}

pub fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializing a json Value cannot fail")
    );
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row<T: Display>(cells: impl IntoIterator<Item = T>) -> String {
    cells
        .into_iter()
        .map(|c| csv_field(&c.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

/// `c1,c2,...,cn`
pub fn column_header(n: usize) -> String {
    csv_row((1..=n).map(|c| format!("c{c}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("12"), "12");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
        assert_eq!(csv_row(["1", "x,y"]), "1,\"x,y\"");
        assert_eq!(column_header(3), "c1,c2,c3");
    }

    #[test]
    fn envelope_shape() {
        let e = envelope("det", Some(4), json!({"x": 1}));
        assert_eq!(e["metadata"]["tool"], "minmat");
        assert_eq!(e["metadata"]["seed"], 4);
        assert_eq!(e["payload"]["x"], 1);
        assert!(envelope("det", None, json!(null))["metadata"].get("seed").is_none());
    }
}
