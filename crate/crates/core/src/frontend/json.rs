//! JSON encoding of source ASTs, so algorithm tests can bypass the parser.
//!
//! One document per compilation unit: `{"nodes": [...], "methods": [...]}`.
//! Child links are inline id lists in document order; reference links are
//! plain ids.

use crate::ast::{AstUnit, NodeId, SourceNode};
use crate::error::{Error, Result};
use serde::Serialize;
use std::path::Path;

#[derive(Serialize)]
struct UnitRepr<'a> {
    nodes: Vec<&'a SourceNode>,
    methods: &'a [NodeId],
}

/// Serialize a unit to the canonical JSON document.
pub fn dump_ast_json(unit: &AstUnit) -> String {
    let repr = UnitRepr {
        nodes: unit.nodes.values().collect(),
        methods: &unit.methods,
    };
    serde_json::to_string_pretty(&repr).expect("source nodes serialize to JSON")
}

/// Parse the canonical JSON document into a validated unit.
pub fn parse_ast_json(text: &str) -> Result<AstUnit> {
    let document: serde_json::Value = serde_json::from_str(text).map_err(|e| schema("$", e))?;
    let object = document
        .as_object()
        .ok_or_else(|| schema("$", "document must be a JSON object"))?;
    for key in object.keys() {
        if key != "nodes" && key != "methods" {
            return Err(schema("$", format!("unknown key '{key}'")));
        }
    }

    let nodes = object
        .get("nodes")
        .ok_or_else(|| schema("$", "missing 'nodes'"))?
        .as_array()
        .ok_or_else(|| schema("nodes", "'nodes' must be an array"))?;
    let mut unit = AstUnit::new();
    for (i, value) in nodes.iter().enumerate() {
        let path = format!("nodes[{i}]");
        let node: SourceNode =
            serde_json::from_value(value.clone()).map_err(|e| schema(&path, e))?;
        if unit.nodes.contains_key(&node.id) {
            return Err(schema(&path, format!("duplicate node id {}", node.id)));
        }
        unit.nodes.insert(node.id, node);
    }

    let methods = object
        .get("methods")
        .ok_or_else(|| schema("$", "missing 'methods'"))?
        .as_array()
        .ok_or_else(|| schema("methods", "'methods' must be an array"))?;
    for (i, value) in methods.iter().enumerate() {
        let id = value
            .as_u64()
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| schema(&format!("methods[{i}]"), "entry must be a node id"))?;
        unit.methods.push(NodeId(id));
    }

    super::validate_unit(&unit)?;
    Ok(unit)
}

/// Load and validate a unit from a JSON file.
pub fn load_ast_json(path: &Path) -> Result<AstUnit> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_ast_json(&text)
}

fn schema(path: &str, message: impl ToString) -> Error {
    Error::SchemaError {
        path: path.to_string(),
        message: message.to_string(),
    }
}
