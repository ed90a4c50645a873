//! Ingestion of compilation units from source text or JSON documents,
//! with a shared structural validation pass.

pub mod json;
pub mod lexer;
pub mod parser;

pub use json::{dump_ast_json, load_ast_json, parse_ast_json};
pub use lexer::{tokenize, Keyword, Token, TokenKind};
pub use parser::parse_unit;

use crate::ast::{AstUnit, NodeId, SourceKind};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Tokenize, parse, and validate source text in one step.
pub fn parse_source(text: &str) -> Result<AstUnit> {
    let tokens = tokenize(text)?;
    let unit = parse_unit(&tokens)?;
    validate_unit(&unit)?;
    Ok(unit)
}

const PRIMITIVE_TYPE_NAMES: [&str; 9] = [
    "int", "boolean", "long", "short", "byte", "char", "float", "double", "void",
];

/// Check the structural invariants every later stage relies on.
///
/// Verifies that method entries point at Method nodes, all child and
/// reference ids exist, containment forms a forest, every position
/// holds a node of an acceptable kind, identifier references target
/// variables or parameters, and labeled jumps target an enclosing
/// label.
pub fn validate_unit(unit: &AstUnit) -> Result<()> {
    let mut seen_methods = std::collections::BTreeSet::new();
    for id in &unit.methods {
        let node = unit.get(*id).ok_or(Error::DanglingReference(id.0))?;
        if !matches!(node.kind, SourceKind::Method { .. }) {
            return Err(schema("methods", format!("id {} is not a Method node", id)));
        }
        if !seen_methods.insert(*id) {
            return Err(schema("methods", format!("duplicate method id {id}")));
        }
    }

    let mut parent: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    for node in unit.nodes.values() {
        for child in unit.containment_children(node.id) {
            if unit.get(child).is_none() {
                return Err(Error::DanglingReference(child.0));
            }
            if let Some(prev) = parent.insert(child, node.id) {
                return Err(schema(
                    format!("node {child}"),
                    format!("contained by both node {prev} and node {}", node.id),
                ));
            }
        }
        for target in unit.reference_targets(node.id) {
            if unit.get(target).is_none() {
                return Err(Error::DanglingReference(target.0));
            }
        }
    }

    let step_cap = unit.nodes.len();
    for start in unit.nodes.keys() {
        let mut current = *start;
        let mut steps = 0usize;
        while let Some(p) = parent.get(&current) {
            current = *p;
            steps += 1;
            if steps > step_cap {
                return Err(schema(
                    format!("node {start}"),
                    "containment cycle".to_string(),
                ));
            }
        }
    }

    for node in unit.nodes.values() {
        check_positions(unit, node.id)?;
    }

    for node in unit.nodes.values() {
        match &node.kind {
            SourceKind::IdentifierReference { target } => {
                let target_kind = &unit.node(*target).kind;
                if !matches!(
                    target_kind,
                    SourceKind::LocalVariable { .. } | SourceKind::Parameter { .. }
                ) {
                    return Err(schema(
                        format!("node {}", node.id),
                        format!(
                            "identifier reference target must be a variable or parameter, found {}",
                            target_kind.name()
                        ),
                    ));
                }
            }
            SourceKind::Break { target: Some(t) } | SourceKind::Continue { target: Some(t) } => {
                let target_kind = &unit.node(*t).kind;
                if !matches!(target_kind, SourceKind::JumpLabel { .. }) {
                    return Err(schema(
                        format!("node {}", node.id),
                        format!(
                            "jump target must be a JumpLabel, found {}",
                            target_kind.name()
                        ),
                    ));
                }
                let mut current = node.id;
                let mut enclosed = false;
                while let Some(p) = parent.get(&current) {
                    if *p == *t {
                        enclosed = true;
                        break;
                    }
                    current = *p;
                }
                if !enclosed {
                    return Err(schema(
                        format!("node {}", node.id),
                        format!("target label {t} does not enclose the jump"),
                    ));
                }
            }
            _ => {}
        }
    }

    Ok(())
}

fn check_positions(unit: &AstUnit, id: NodeId) -> Result<()> {
    let is_stmt = |c: NodeId| unit.node(c).kind.is_statement();
    let is_expr = |c: NodeId| unit.node(c).kind.is_expression();
    let demand = |ok: bool, child: NodeId, want: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(schema(
                format!("node {id}"),
                format!(
                    "child node {child} must be {want}, found {}",
                    unit.node(child).kind.name()
                ),
            ))
        }
    };

    match &unit.node(id).kind {
        SourceKind::Method {
            parameters,
            statements,
            ..
        } => {
            for p in parameters {
                demand(
                    matches!(unit.node(*p).kind, SourceKind::Parameter { .. }),
                    *p,
                    "a Parameter",
                )?;
            }
            for s in statements {
                demand(is_stmt(*s), *s, "a statement")?;
            }
        }
        SourceKind::Parameter { type_ref, .. } => {
            demand(
                matches!(unit.node(*type_ref).kind, SourceKind::PrimitiveType { .. }),
                *type_ref,
                "a PrimitiveType",
            )?;
        }
        SourceKind::LocalVariableStatement { variable } => {
            demand(
                matches!(unit.node(*variable).kind, SourceKind::LocalVariable { .. }),
                *variable,
                "a LocalVariable",
            )?;
        }
        SourceKind::LocalVariable {
            type_ref,
            initial_value,
            ..
        } => {
            demand(
                matches!(unit.node(*type_ref).kind, SourceKind::PrimitiveType { .. }),
                *type_ref,
                "a PrimitiveType",
            )?;
            if let Some(v) = initial_value {
                demand(is_expr(*v), *v, "an expression")?;
            }
        }
        SourceKind::ExpressionStatement { expression } => {
            demand(is_expr(*expression), *expression, "an expression")?;
        }
        SourceKind::Condition {
            condition,
            statement,
            else_statement,
        } => {
            demand(is_expr(*condition), *condition, "an expression")?;
            demand(is_stmt(*statement), *statement, "a statement")?;
            if let Some(e) = else_statement {
                demand(is_stmt(*e), *e, "a statement")?;
            }
        }
        SourceKind::WhileLoop {
            condition,
            statement,
        } => {
            demand(is_expr(*condition), *condition, "an expression")?;
            demand(is_stmt(*statement), *statement, "a statement")?;
        }
        SourceKind::Block { statements } => {
            for s in statements {
                demand(is_stmt(*s), *s, "a statement")?;
            }
        }
        SourceKind::JumpLabel { statement, .. } => {
            demand(is_stmt(*statement), *statement, "a statement")?;
        }
        SourceKind::Break { .. } | SourceKind::Continue { .. } => {}
        SourceKind::Return { return_value } => {
            if let Some(v) = return_value {
                demand(is_expr(*v), *v, "an expression")?;
            }
        }
        SourceKind::AssignmentExpr { child, value, .. } => {
            demand(is_expr(*child), *child, "an expression")?;
            demand(is_expr(*value), *value, "an expression")?;
        }
        SourceKind::AdditiveExpr { left, right, .. }
        | SourceKind::MultiplicativeExpr { left, right, .. }
        | SourceKind::EqualityExpr { left, right, .. }
        | SourceKind::RelationExpr { left, right, .. } => {
            demand(is_expr(*left), *left, "an expression")?;
            demand(is_expr(*right), *right, "an expression")?;
        }
        SourceKind::UnaryExpr { child, .. }
        | SourceKind::SuffixUnaryModificationExpr { child, .. } => {
            demand(is_expr(*child), *child, "an expression")?;
        }
        SourceKind::IdentifierReference { .. } | SourceKind::DecimalIntegerLiteral { .. } => {}
        SourceKind::PrimitiveType { name } => {
            if !PRIMITIVE_TYPE_NAMES.contains(&name.to_lowercase().as_str()) {
                return Err(schema(
                    format!("node {id}"),
                    format!("unknown primitive type '{name}'"),
                ));
            }
        }
    }
    Ok(())
}

fn schema(path: impl ToString, message: impl ToString) -> Error {
    Error::SchemaError {
        path: path.to_string(),
        message: message.to_string(),
    }
}
