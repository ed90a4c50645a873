//! Model-to-text: maps each source node to the concrete-syntax text that
//! becomes the `txt` attribute of the corresponding flow node.

use crate::ast::{AstUnit, NodeId, Operator, SourceKind};

/// The lexeme of an operator tag.
pub fn operator_text(op: Operator) -> &'static str {
    match op {
        Operator::Multiplication => "*",
        Operator::Subtraction => "-",
        Operator::Addition => "+",
        Operator::Division => "/",
        Operator::LessThan => "<",
        Operator::GreaterThan => ">",
        Operator::Assignment => "=",
        Operator::MinusMinus => "--",
        Operator::PlusPlus => "++",
        Operator::AssignmentPlus => "+=",
        Operator::Equal => "==",
    }
}

/// Render a source node to its concrete-syntax text.
///
/// Structural containers render to fixed placeholders: a block is always
/// `{...}`, a condition is always `if`, a while loop is always `while`.
/// Binary operands are separated by single spaces; suffix operators attach
/// without a space. Parenthesized sub-expressions re-render without their
/// parentheses, and integer literals render unsigned in base 10.
pub fn render(unit: &AstUnit, id: NodeId) -> String {
    match &unit.node(id).kind {
        SourceKind::Method { name, .. } => format!("{name}()"),
        SourceKind::Parameter { name, .. } => name.clone(),
        SourceKind::LocalVariableStatement { variable } => {
            format!("{};", render_local_variable(unit, *variable))
        }
        SourceKind::LocalVariable { name, .. } => name.clone(),
        SourceKind::ExpressionStatement { expression } => {
            format!("{};", render(unit, *expression))
        }
        SourceKind::Condition { .. } => "if".to_string(),
        SourceKind::WhileLoop { .. } => "while".to_string(),
        SourceKind::Block { .. } => "{...}".to_string(),
        SourceKind::JumpLabel { name, .. } => format!("{name}:"),
        SourceKind::Break { target } => jump_text(unit, "break", *target),
        SourceKind::Continue { target } => jump_text(unit, "continue", *target),
        SourceKind::Return { return_value } => match return_value {
            Some(v) => format!("return {};", render(unit, *v)),
            None => "return;".to_string(),
        },
        SourceKind::AssignmentExpr {
            child,
            operator,
            value,
        } => format!(
            "{} {} {}",
            render(unit, *child),
            operator_text(*operator),
            render(unit, *value)
        ),
        SourceKind::AdditiveExpr {
            left,
            operator,
            right,
        }
        | SourceKind::MultiplicativeExpr {
            left,
            operator,
            right,
        }
        | SourceKind::EqualityExpr {
            left,
            operator,
            right,
        }
        | SourceKind::RelationExpr {
            left,
            operator,
            right,
        } => format!(
            "{} {} {}",
            render(unit, *left),
            operator_text(*operator),
            render(unit, *right)
        ),
        SourceKind::UnaryExpr { operators, child } => {
            let mut out = String::new();
            for op in operators {
                out.push_str(operator_text(*op));
            }
            out.push_str(&render(unit, *child));
            out
        }
        SourceKind::SuffixUnaryModificationExpr { child, operator } => {
            format!("{}{}", render(unit, *child), operator_text(*operator))
        }
        SourceKind::IdentifierReference { target } => render(unit, *target),
        SourceKind::DecimalIntegerLiteral { decimal_value } => decimal_value.to_string(),
        SourceKind::PrimitiveType { name } => name.to_lowercase(),
    }
}

fn render_local_variable(unit: &AstUnit, id: NodeId) -> String {
    match &unit.node(id).kind {
        SourceKind::LocalVariable {
            name,
            type_ref,
            initial_value,
        } => {
            let ty = render(unit, *type_ref);
            match initial_value {
                Some(init) => format!("{ty} {name} = {}", render(unit, *init)),
                None => format!("{ty} {name}"),
            }
        }
        other => panic!(
            "declaration statement must contain a LocalVariable, found {}",
            other.name()
        ),
    }
}

fn jump_text(unit: &AstUnit, keyword: &str, target: Option<NodeId>) -> String {
    match target {
        None => format!("{keyword};"),
        Some(t) => match &unit.node(t).kind {
            SourceKind::JumpLabel { name, .. } => format!("{keyword} {name};"),
            other => panic!(
                "break or continue target must be a JumpLabel, found {}",
                other.name()
            ),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn operator_table_is_exact() {
        let cases = [
            (Operator::Multiplication, "*"),
            (Operator::Subtraction, "-"),
            (Operator::Addition, "+"),
            (Operator::Division, "/"),
            (Operator::LessThan, "<"),
            (Operator::GreaterThan, ">"),
            (Operator::Assignment, "="),
            (Operator::MinusMinus, "--"),
            (Operator::PlusPlus, "++"),
            (Operator::AssignmentPlus, "+="),
            (Operator::Equal, "=="),
        ];
        for (op, text) in cases {
            assert_eq!(operator_text(op), text);
        }
    }

    fn unit_with<F: FnOnce(&mut AstUnit) -> NodeId>(build: F) -> (AstUnit, NodeId) {
        let mut unit = AstUnit::new();
        let id = build(&mut unit);
        (unit, id)
    }

    #[test]
    fn renders_method_header_and_fixed_containers() {
        let (unit, m) = unit_with(|u| {
            u.add(SourceKind::Method {
                name: "testMethod".into(),
                parameters: vec![],
                statements: vec![],
            })
        });
        assert_eq!(render(&unit, m), "testMethod()");

        let (unit, b) = unit_with(|u| u.add(SourceKind::Block { statements: vec![] }));
        assert_eq!(render(&unit, b), "{...}");

        let (unit, w) = unit_with(|u| {
            let c = u.add(SourceKind::DecimalIntegerLiteral {
                decimal_value: BigUint::from(1u32),
            });
            let s = u.add(SourceKind::Block { statements: vec![] });
            u.add(SourceKind::WhileLoop {
                condition: c,
                statement: s,
            })
        });
        assert_eq!(render(&unit, w), "while");
    }

    #[test]
    fn renders_declaration_assignment_and_suffix() {
        let mut unit = AstUnit::new();
        let ty = unit.add(SourceKind::PrimitiveType { name: "int".into() });
        let hundred = unit.add(SourceKind::DecimalIntegerLiteral {
            decimal_value: BigUint::from(100u32),
        });
        let var = unit.add(SourceKind::LocalVariable {
            name: "i".into(),
            type_ref: ty,
            initial_value: Some(hundred),
        });
        let decl = unit.add(SourceKind::LocalVariableStatement { variable: var });
        assert_eq!(render(&unit, decl), "int i = 100;");

        let i_ref = unit.add(SourceKind::IdentifierReference { target: var });
        let ten = unit.add(SourceKind::DecimalIntegerLiteral {
            decimal_value: BigUint::from(10u32),
        });
        let sub = unit.add(SourceKind::AdditiveExpr {
            left: i_ref,
            operator: Operator::Subtraction,
            right: ten,
        });
        let lhs = unit.add(SourceKind::IdentifierReference { target: var });
        let assign = unit.add(SourceKind::AssignmentExpr {
            child: lhs,
            operator: Operator::Assignment,
            value: sub,
        });
        let stmt = unit.add(SourceKind::ExpressionStatement { expression: assign });
        assert_eq!(render(&unit, stmt), "i = i - 10;");

        let i_ref2 = unit.add(SourceKind::IdentifierReference { target: var });
        let dec = unit.add(SourceKind::SuffixUnaryModificationExpr {
            child: i_ref2,
            operator: Operator::MinusMinus,
        });
        let dec_stmt = unit.add(SourceKind::ExpressionStatement { expression: dec });
        assert_eq!(render(&unit, dec_stmt), "i--;");
    }

    #[test]
    fn renders_jumps_and_returns() {
        let mut unit = AstUnit::new();
        let ret = unit.add(SourceKind::Return { return_value: None });
        assert_eq!(render(&unit, ret), "return;");

        let plain_break = unit.add(SourceKind::Break { target: None });
        assert_eq!(render(&unit, plain_break), "break;");

        let inner = unit.add(SourceKind::Return { return_value: None });
        let label = unit.add(SourceKind::JumpLabel {
            name: "outer".into(),
            statement: inner,
        });
        assert_eq!(render(&unit, label), "outer:");
        let labeled_break = unit.add(SourceKind::Break {
            target: Some(label),
        });
        assert_eq!(render(&unit, labeled_break), "break outer;");
        let labeled_continue = unit.add(SourceKind::Continue {
            target: Some(label),
        });
        assert_eq!(render(&unit, labeled_continue), "continue outer;");
    }

    #[test]
    fn renders_unary_operator_runs_without_spaces() {
        let mut unit = AstUnit::new();
        let lit = unit.add(SourceKind::DecimalIntegerLiteral {
            decimal_value: BigUint::from(5u32),
        });
        let neg = unit.add(SourceKind::UnaryExpr {
            operators: vec![Operator::Subtraction, Operator::Subtraction],
            child: lit,
        });
        assert_eq!(render(&unit, neg), "--5");
    }
}
