//! JSON documents for instances and assignments.
//!
//! An instance is an object with `tasks` (array of positive numbers),
//! `agents` (non-negative integer) and exactly one of `p` (number in [0, 1])
//! or `alpha` (integer, at most `agents`):
//!
//! ```json
//! {"tasks": [90, 65, 55, 30, 15], "agents": 9, "alpha": 3}
//! ```
//!
//! An assignment is either a bare array of counts in input task order or any
//! object carrying such an array under `assignment`, so solver output can be
//! fed straight back in.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::types::{ProblemInstance, TaskProfile};

const INSTANCE_FIELDS: [&str; 4] = ["tasks", "agents", "p", "alpha"];

fn schema(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_json(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema(what, format!("not valid JSON: {e}")))
}

fn as_count(value: &Value, field: &str) -> Result<usize> {
    value
        .as_u64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| schema(field, format!("expected a non-negative integer, found {value}")))
}

fn as_number(value: &Value, field: &str) -> Result<f64> {
    value
        .as_f64()
        .ok_or_else(|| schema(field, format!("expected a number, found {value}")))
}

fn required<'a>(obj: &'a Map<String, Value>, field: &str) -> Result<&'a Value> {
    obj.get(field).ok_or_else(|| schema(field, "missing field"))
}

/// Parses an instance document.
pub fn parse_instance(text: &str) -> Result<ProblemInstance> {
    let doc = parse_json(text, "instance")?;
    let obj = doc
        .as_object()
        .ok_or_else(|| schema("instance", "expected a JSON object"))?;
    if let Some(unknown) = obj.keys().find(|k| !INSTANCE_FIELDS.contains(&k.as_str())) {
        return Err(schema(unknown.as_str(), "unknown field"));
    }

    let tasks = required(obj, "tasks")?
        .as_array()
        .ok_or_else(|| schema("tasks", "expected an array of numbers"))?
        .iter()
        .enumerate()
        .map(|(i, v)| as_number(v, &format!("tasks[{i}]")))
        .collect::<Result<Vec<f64>>>()?;
    let tasks = TaskProfile::new(tasks)?;
    let agents = as_count(required(obj, "agents")?, "agents")?;

    match (obj.get("p"), obj.get("alpha")) {
        (Some(p), None) => ProblemInstance::stochastic(tasks, agents, as_number(p, "p")?),
        (None, Some(alpha)) => ProblemInstance::adversarial(tasks, agents, as_count(alpha, "alpha")?),
        (Some(_), Some(_)) => Err(schema("p/alpha", "give exactly one of `p` or `alpha`, not both")),
        (None, None) => Err(schema("p/alpha", "missing field: one of `p` or `alpha` is required")),
    }
}

/// Parses an assignment document into counts in input task order.
pub fn parse_assignment(text: &str) -> Result<Vec<usize>> {
    let doc = parse_json(text, "assignment")?;
    let counts = match &doc {
        Value::Array(items) => items,
        Value::Object(obj) => required(obj, "assignment")?
            .as_array()
            .ok_or_else(|| schema("assignment", "expected an array of counts"))?,
        _ => return Err(schema("assignment", "expected an array or an object")),
    };
    counts
        .iter()
        .enumerate()
        .map(|(i, v)| as_count(v, &format!("assignment[{i}]")))
        .collect()
}
