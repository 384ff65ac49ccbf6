use std::fs;
use std::path::Path;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "v1";

pub fn read_json(path: &Path) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{} is not valid JSON: {e}", path.display()))
}

/// Adds the schema tag to an object report.
pub fn versioned(value: Value) -> Value {
    match value {
        Value::Object(mut map) => {
            map.insert("v".into(), Value::String(SCHEMA_VERSION.into()));
            Value::Object(map)
        }
        other => {
            let mut map = Map::new();
            map.insert("v".into(), Value::String(SCHEMA_VERSION.into()));
            map.insert("value".into(), other);
            Value::Object(map)
        }
    }
}

pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn write_json(path: &Path, value: &Value) -> Result<(), String> {
    fs::write(path, render(&versioned(value.clone()))).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Reads the `"scalar"` tag of an algebra file (rational when absent).
pub fn scalar_kind(algebra: &Value) -> &str {
    algebra.get("scalar").and_then(Value::as_str).unwrap_or("rational")
}
