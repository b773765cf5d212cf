use serde::Serialize;
use serde_json::{json, Value};

/// Top-level JSON report shared by every command. Keys are emitted sorted.
pub fn envelope(command: &str, inputs: Value, cutoff: Option<usize>, results: Value, oracle_verified: bool) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "cutoff": cutoff,
        "results": results,
        "oracle_verified": oracle_verified,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

pub fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values print"));
}
