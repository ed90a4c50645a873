//! Source AST for the Java subset: an arena of typed nodes addressed by id.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Identifier of a source node within one compilation unit.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Operator tags; the closed set the parser may emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operator {
    Multiplication,
    Subtraction,
    Addition,
    Division,
    LessThan,
    GreaterThan,
    Assignment,
    MinusMinus,
    PlusPlus,
    AssignmentPlus,
    Equal,
}

/// The payload of a source node, tagged by syntactic kind.
///
/// Child fields hold ids of contained nodes; `target` fields on
/// `IdentifierReference`, `Break`, and `Continue` are cross-references,
/// not containment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SourceKind {
    Method {
        name: String,
        parameters: Vec<NodeId>,
        statements: Vec<NodeId>,
    },
    Parameter {
        name: String,
        #[serde(rename = "typeRef")]
        type_ref: NodeId,
    },
    LocalVariableStatement {
        variable: NodeId,
    },
    LocalVariable {
        name: String,
        #[serde(rename = "typeRef")]
        type_ref: NodeId,
        #[serde(
            rename = "initialValue",
            skip_serializing_if = "Option::is_none",
            default
        )]
        initial_value: Option<NodeId>,
    },
    ExpressionStatement {
        expression: NodeId,
    },
    Condition {
        condition: NodeId,
        statement: NodeId,
        #[serde(
            rename = "elseStatement",
            skip_serializing_if = "Option::is_none",
            default
        )]
        else_statement: Option<NodeId>,
    },
    WhileLoop {
        condition: NodeId,
        statement: NodeId,
    },
    Block {
        statements: Vec<NodeId>,
    },
    JumpLabel {
        name: String,
        statement: NodeId,
    },
    Break {
        #[serde(skip_serializing_if = "Option::is_none", default)]
        target: Option<NodeId>,
    },
    Continue {
        #[serde(skip_serializing_if = "Option::is_none", default)]
        target: Option<NodeId>,
    },
    Return {
        #[serde(
            rename = "returnValue",
            skip_serializing_if = "Option::is_none",
            default
        )]
        return_value: Option<NodeId>,
    },
    AssignmentExpr {
        child: NodeId,
        operator: Operator,
        value: NodeId,
    },
    AdditiveExpr {
        left: NodeId,
        operator: Operator,
        right: NodeId,
    },
    MultiplicativeExpr {
        left: NodeId,
        operator: Operator,
        right: NodeId,
    },
    EqualityExpr {
        left: NodeId,
        operator: Operator,
        right: NodeId,
    },
    RelationExpr {
        left: NodeId,
        operator: Operator,
        right: NodeId,
    },
    UnaryExpr {
        operators: Vec<Operator>,
        child: NodeId,
    },
    SuffixUnaryModificationExpr {
        child: NodeId,
        operator: Operator,
    },
    IdentifierReference {
        target: NodeId,
    },
    DecimalIntegerLiteral {
        #[serde(rename = "decimalValue", with = "decimal_value")]
        decimal_value: BigUint,
    },
    PrimitiveType {
        name: String,
    },
}

impl SourceKind {
    /// The kind's name as it appears in the JSON encoding.
    pub fn name(&self) -> &'static str {
        match self {
            SourceKind::Method { .. } => "Method",
            SourceKind::Parameter { .. } => "Parameter",
            SourceKind::LocalVariableStatement { .. } => "LocalVariableStatement",
            SourceKind::LocalVariable { .. } => "LocalVariable",
            SourceKind::ExpressionStatement { .. } => "ExpressionStatement",
            SourceKind::Condition { .. } => "Condition",
            SourceKind::WhileLoop { .. } => "WhileLoop",
            SourceKind::Block { .. } => "Block",
            SourceKind::JumpLabel { .. } => "JumpLabel",
            SourceKind::Break { .. } => "Break",
            SourceKind::Continue { .. } => "Continue",
            SourceKind::Return { .. } => "Return",
            SourceKind::AssignmentExpr { .. } => "AssignmentExpr",
            SourceKind::AdditiveExpr { .. } => "AdditiveExpr",
            SourceKind::MultiplicativeExpr { .. } => "MultiplicativeExpr",
            SourceKind::EqualityExpr { .. } => "EqualityExpr",
            SourceKind::RelationExpr { .. } => "RelationExpr",
            SourceKind::UnaryExpr { .. } => "UnaryExpr",
            SourceKind::SuffixUnaryModificationExpr { .. } => "SuffixUnaryModificationExpr",
            SourceKind::IdentifierReference { .. } => "IdentifierReference",
            SourceKind::DecimalIntegerLiteral { .. } => "DecimalIntegerLiteral",
            SourceKind::PrimitiveType { .. } => "PrimitiveType",
        }
    }

    /// Whether this kind can stand in expression position.
    pub fn is_expression(&self) -> bool {
        matches!(
            self,
            SourceKind::AssignmentExpr { .. }
                | SourceKind::AdditiveExpr { .. }
                | SourceKind::MultiplicativeExpr { .. }
                | SourceKind::EqualityExpr { .. }
                | SourceKind::RelationExpr { .. }
                | SourceKind::UnaryExpr { .. }
                | SourceKind::SuffixUnaryModificationExpr { .. }
                | SourceKind::IdentifierReference { .. }
                | SourceKind::DecimalIntegerLiteral { .. }
        )
    }

    /// Whether this kind can stand in statement position.
    pub fn is_statement(&self) -> bool {
        matches!(
            self,
            SourceKind::LocalVariableStatement { .. }
                | SourceKind::ExpressionStatement { .. }
                | SourceKind::Condition { .. }
                | SourceKind::WhileLoop { .. }
                | SourceKind::Block { .. }
                | SourceKind::JumpLabel { .. }
                | SourceKind::Break { .. }
                | SourceKind::Continue { .. }
                | SourceKind::Return { .. }
        )
    }
}

/// One node of the source AST.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SourceNode {
    pub id: NodeId,
    #[serde(flatten)]
    pub kind: SourceKind,
}

/// One compilation unit: all nodes plus the list of its methods.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AstUnit {
    pub nodes: BTreeMap<NodeId, SourceNode>,
    pub methods: Vec<NodeId>,
}

impl AstUnit {
    pub fn new() -> AstUnit {
        AstUnit::default()
    }

    /// Insert a node under a fresh id and return that id.
    pub fn add(&mut self, kind: SourceKind) -> NodeId {
        let id = NodeId(self.nodes.last_key_value().map_or(0, |(k, _)| k.0 + 1));
        self.nodes.insert(id, SourceNode { id, kind });
        id
    }

    pub fn get(&self, id: NodeId) -> Option<&SourceNode> {
        self.nodes.get(&id)
    }

    /// Look up a node that is known to exist.
    ///
    /// Panics if the id is absent; callers must hold a validated unit.
    pub fn node(&self, id: NodeId) -> &SourceNode {
        self.nodes
            .get(&id)
            .unwrap_or_else(|| panic!("no source node with id {id}"))
    }

    /// Contained children of a node in document order.
    ///
    /// Cross-reference fields (`IdentifierReference.target`,
    /// `Break.target`, `Continue.target`) are not children.
    pub fn containment_children(&self, id: NodeId) -> Vec<NodeId> {
        match &self.node(id).kind {
            SourceKind::Method {
                parameters,
                statements,
                ..
            } => parameters
                .iter()
                .chain(statements.iter())
                .copied()
                .collect(),
            SourceKind::Parameter { type_ref, .. } => vec![*type_ref],
            SourceKind::LocalVariableStatement { variable } => vec![*variable],
            SourceKind::LocalVariable {
                type_ref,
                initial_value,
                ..
            } => {
                let mut out = vec![*type_ref];
                out.extend(initial_value.iter().copied());
                out
            }
            SourceKind::ExpressionStatement { expression } => vec![*expression],
            SourceKind::Condition {
                condition,
                statement,
                else_statement,
            } => {
                let mut out = vec![*condition, *statement];
                out.extend(else_statement.iter().copied());
                out
            }
            SourceKind::WhileLoop {
                condition,
                statement,
            } => vec![*condition, *statement],
            SourceKind::Block { statements } => statements.clone(),
            SourceKind::JumpLabel { statement, .. } => vec![*statement],
            SourceKind::Break { .. } | SourceKind::Continue { .. } => Vec::new(),
            SourceKind::Return { return_value } => return_value.iter().copied().collect(),
            SourceKind::AssignmentExpr { child, value, .. } => vec![*child, *value],
            SourceKind::AdditiveExpr { left, right, .. }
            | SourceKind::MultiplicativeExpr { left, right, .. }
            | SourceKind::EqualityExpr { left, right, .. }
            | SourceKind::RelationExpr { left, right, .. } => vec![*left, *right],
            SourceKind::UnaryExpr { child, .. } => vec![*child],
            SourceKind::SuffixUnaryModificationExpr { child, .. } => vec![*child],
            SourceKind::IdentifierReference { .. }
            | SourceKind::DecimalIntegerLiteral { .. }
            | SourceKind::PrimitiveType { .. } => Vec::new(),
        }
    }

    /// Ids referenced by a node without containing them.
    pub fn reference_targets(&self, id: NodeId) -> Vec<NodeId> {
        match &self.node(id).kind {
            SourceKind::IdentifierReference { target } => vec![*target],
            SourceKind::Break { target } | SourceKind::Continue { target } => {
                target.iter().copied().collect()
            }
            _ => Vec::new(),
        }
    }
}

mod decimal_value {
    use num_bigint::BigUint;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(v) {
            Ok(n) => s.serialize_u64(n),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = BigUint;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or a decimal digit string")
            }

            fn visit_u64<E: de::Error>(self, n: u64) -> Result<BigUint, E> {
                Ok(BigUint::from(n))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<BigUint, E> {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(E::custom("decimalValue string must be decimal digits"));
                }
                s.parse()
                    .map_err(|_| E::custom("invalid decimal digit string"))
            }

            fn visit_f64<E: de::Error>(self, _: f64) -> Result<BigUint, E> {
                Err(E::custom(
                    "decimalValue too large for a JSON number, use a digit string",
                ))
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(n: u64) -> SourceKind {
        SourceKind::DecimalIntegerLiteral {
            decimal_value: BigUint::from(n),
        }
    }

    #[test]
    fn fresh_ids_are_distinct_and_dense() {
        let mut unit = AstUnit::new();
        let a = unit.add(lit(1));
        let b = unit.add(lit(2));
        assert_ne!(a, b);
        assert_eq!(a, NodeId(0));
        assert_eq!(b, NodeId(1));
    }

    #[test]
    fn containment_excludes_reference_targets() {
        let mut unit = AstUnit::new();
        let ty = unit.add(SourceKind::PrimitiveType { name: "int".into() });
        let var = unit.add(SourceKind::LocalVariable {
            name: "a".into(),
            type_ref: ty,
            initial_value: None,
        });
        let r = unit.add(SourceKind::IdentifierReference { target: var });
        assert!(unit.containment_children(r).is_empty());
        assert_eq!(unit.reference_targets(r), vec![var]);
        let lbl = unit.add(SourceKind::JumpLabel {
            name: "l".into(),
            statement: r,
        });
        let brk = unit.add(SourceKind::Break { target: Some(lbl) });
        assert!(unit.containment_children(brk).is_empty());
        assert_eq!(unit.reference_targets(brk), vec![lbl]);
    }

    #[test]
    fn decimal_value_round_trips_small_and_large() {
        let small = SourceNode {
            id: NodeId(0),
            kind: lit(100),
        };
        let text = serde_json::to_string(&small).unwrap();
        assert!(text.contains("\"decimalValue\":100"));
        let back: SourceNode = serde_json::from_str(&text).unwrap();
        assert_eq!(back, small);

        let big: BigUint = "123456789012345678901234567890".parse().unwrap();
        let node = SourceNode {
            id: NodeId(1),
            kind: SourceKind::DecimalIntegerLiteral {
                decimal_value: big.clone(),
            },
        };
        let text = serde_json::to_string(&node).unwrap();
        assert!(text.contains("\"123456789012345678901234567890\""));
        let back: SourceNode = serde_json::from_str(&text).unwrap();
        assert_eq!(back, node);
    }

    #[test]
    fn decimal_value_rejects_negative_and_junk_strings() {
        assert!(serde_json::from_str::<SourceNode>(
            r#"{"id":0,"kind":"DecimalIntegerLiteral","decimalValue":"-3"}"#
        )
        .is_err());
        assert!(serde_json::from_str::<SourceNode>(
            r#"{"id":0,"kind":"DecimalIntegerLiteral","decimalValue":"1x"}"#
        )
        .is_err());
    }
}
