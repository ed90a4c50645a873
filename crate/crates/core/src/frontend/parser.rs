//! Recursive-descent parser producing a source AST from a token stream.
//!
//! Accepts bare method declarations or methods wrapped in a single
//! `class Name { ... }`. Identifier references and jump labels are
//! resolved while parsing; a variable becomes visible only after its
//! initializer, and redeclared names resolve to the innermost, latest
//! declaration.

use super::lexer::{Keyword, Token, TokenKind};
use crate::ast::{AstUnit, NodeId, Operator, SourceKind};
use crate::error::{Error, Result};

/// Parse a token stream into a compilation unit.
pub fn parse_unit(tokens: &[Token]) -> Result<AstUnit> {
    let mut parser = Parser {
        tokens,
        pos: 0,
        unit: AstUnit::new(),
        scope: Vec::new(),
        labels: Vec::new(),
    };
    parser.parse_compilation_unit()?;
    Ok(parser.unit)
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    unit: AstUnit,
    scope: Vec<(String, NodeId)>,
    labels: Vec<(String, NodeId)>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn peek2_kind(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos + 1).map(|t| &t.kind)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err_here(&self, expected: &str) -> Error {
        match self.peek() {
            Some(t) => Error::ParseError {
                line: t.line,
                col: t.col,
                expected: expected.to_string(),
                found: t.kind.describe(),
            },
            None => {
                let (line, col) = self.tokens.last().map_or((1, 1), |t| (t.line, t.col));
                Error::ParseError {
                    line,
                    col,
                    expected: expected.to_string(),
                    found: "end of input".to_string(),
                }
            }
        }
    }

    fn expect(&mut self, kind: &TokenKind, expected: &str) -> Result<()> {
        match self.peek() {
            Some(t) if &t.kind == kind => {
                self.bump();
                Ok(())
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek_kind() == Some(kind) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_ident(&mut self, expected: &str) -> Result<String> {
        match self.peek_kind() {
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                self.bump();
                Ok(name)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn at_kw(&self, kw: Keyword) -> bool {
        self.peek_kind() == Some(&TokenKind::Kw(kw))
    }

    fn skip_modifiers(&mut self) {
        while matches!(
            self.peek_kind(),
            Some(TokenKind::Kw(Keyword::Public | Keyword::Static))
        ) {
            self.bump();
        }
    }

    fn resolve_name(&self, name: &str) -> Result<NodeId> {
        self.scope
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, id)| *id)
            .ok_or_else(|| Error::UnresolvedName(name.to_string()))
    }

    fn resolve_label(&self, name: &str) -> Result<NodeId> {
        self.labels
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, id)| *id)
            .ok_or_else(|| Error::UnresolvedLabel(name.to_string()))
    }

    fn parse_compilation_unit(&mut self) -> Result<()> {
        let save = self.pos;
        self.skip_modifiers();
        if self.at_kw(Keyword::Class) {
            self.bump();
            self.expect_ident("a class name")?;
            self.expect(&TokenKind::LBrace, "'{'")?;
            while !self.eat(&TokenKind::RBrace) {
                if self.peek().is_none() {
                    return Err(self.err_here("'}'"));
                }
                self.parse_method()?;
            }
            if self.peek().is_some() {
                return Err(self.err_here("end of input"));
            }
            Ok(())
        } else {
            self.pos = save;
            while self.peek().is_some() {
                self.parse_method()?;
            }
            Ok(())
        }
    }

    fn parse_method(&mut self) -> Result<()> {
        self.skip_modifiers();
        self.parse_type_keyword("a return type")?;
        let name = self.expect_ident("a method name")?;
        let scope_mark = self.scope.len();
        self.expect(&TokenKind::LParen, "'('")?;
        let mut parameters = Vec::new();
        if !self.eat(&TokenKind::RParen) {
            loop {
                parameters.push(self.parse_parameter()?);
                if !self.eat(&TokenKind::Comma) {
                    break;
                }
            }
            self.expect(&TokenKind::RParen, "')' or ','")?;
        }
        self.expect(&TokenKind::LBrace, "'{'")?;
        let mut statements = Vec::new();
        while !self.eat(&TokenKind::RBrace) {
            if self.peek().is_none() {
                return Err(self.err_here("'}'"));
            }
            statements.push(self.parse_statement()?);
        }
        self.scope.truncate(scope_mark);
        let id = self.unit.add(SourceKind::Method {
            name,
            parameters,
            statements,
        });
        self.unit.methods.push(id);
        Ok(())
    }

    fn parse_parameter(&mut self) -> Result<NodeId> {
        let type_ref = self.parse_type()?;
        let name = self.expect_ident("a parameter name")?;
        let id = self.unit.add(SourceKind::Parameter {
            name: name.clone(),
            type_ref,
        });
        self.scope.push((name, id));
        Ok(id)
    }

    fn parse_type_keyword(&mut self, expected: &str) -> Result<Keyword> {
        match self.peek_kind() {
            Some(TokenKind::Kw(kw)) if kw.is_type() => {
                let kw = *kw;
                self.bump();
                Ok(kw)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn parse_type(&mut self) -> Result<NodeId> {
        let kw = self.parse_type_keyword("a type name")?;
        Ok(self.unit.add(SourceKind::PrimitiveType {
            name: kw.text().to_string(),
        }))
    }

    fn parse_statement(&mut self) -> Result<NodeId> {
        match self.peek_kind() {
            Some(TokenKind::Kw(kw)) if kw.is_type() => self.parse_declaration(),
            Some(TokenKind::LBrace) => self.parse_block(),
            Some(TokenKind::Kw(Keyword::If)) => self.parse_if(),
            Some(TokenKind::Kw(Keyword::While)) => self.parse_while(),
            Some(TokenKind::Kw(Keyword::Break)) => self.parse_jump(true),
            Some(TokenKind::Kw(Keyword::Continue)) => self.parse_jump(false),
            Some(TokenKind::Kw(Keyword::Return)) => self.parse_return(),
            Some(TokenKind::Ident(_)) if self.peek2_kind() == Some(&TokenKind::Colon) => {
                self.parse_label()
            }
            Some(_) => self.parse_expression_statement(),
            None => Err(self.err_here("a statement")),
        }
    }

    fn parse_declaration(&mut self) -> Result<NodeId> {
        let type_ref = self.parse_type()?;
        let name = self.expect_ident("a variable name")?;
        let initial_value = if self.eat(&TokenKind::Assign) {
            Some(self.parse_expression()?)
        } else {
            None
        };
        self.expect(&TokenKind::Semi, "';'")?;
        let variable = self.unit.add(SourceKind::LocalVariable {
            name: name.clone(),
            type_ref,
            initial_value,
        });
        self.scope.push((name, variable));
        Ok(self
            .unit
            .add(SourceKind::LocalVariableStatement { variable }))
    }

    fn parse_block(&mut self) -> Result<NodeId> {
        self.expect(&TokenKind::LBrace, "'{'")?;
        let scope_mark = self.scope.len();
        let mut statements = Vec::new();
        while !self.eat(&TokenKind::RBrace) {
            if self.peek().is_none() {
                return Err(self.err_here("'}'"));
            }
            statements.push(self.parse_statement()?);
        }
        self.scope.truncate(scope_mark);
        Ok(self.unit.add(SourceKind::Block { statements }))
    }

    fn parse_if(&mut self) -> Result<NodeId> {
        self.bump();
        self.expect(&TokenKind::LParen, "'('")?;
        let condition = self.parse_expression()?;
        self.expect(&TokenKind::RParen, "')'")?;
        let statement = self.parse_statement()?;
        let else_statement = if self.eat(&TokenKind::Kw(Keyword::Else)) {
            Some(self.parse_statement()?)
        } else {
            None
        };
        Ok(self.unit.add(SourceKind::Condition {
            condition,
            statement,
            else_statement,
        }))
    }

    fn parse_while(&mut self) -> Result<NodeId> {
        self.bump();
        self.expect(&TokenKind::LParen, "'('")?;
        let condition = self.parse_expression()?;
        self.expect(&TokenKind::RParen, "')'")?;
        let statement = self.parse_statement()?;
        Ok(self.unit.add(SourceKind::WhileLoop {
            condition,
            statement,
        }))
    }

    fn parse_label(&mut self) -> Result<NodeId> {
        let name = self.expect_ident("a label name")?;
        self.expect(&TokenKind::Colon, "':'")?;
        let label = self.unit.add(SourceKind::JumpLabel {
            name: name.clone(),
            statement: NodeId(u32::MAX),
        });
        self.labels.push((name, label));
        let inner = self.parse_statement();
        self.labels.pop();
        let statement = inner?;
        match &mut self
            .unit
            .nodes
            .get_mut(&label)
            .expect("label node exists")
            .kind
        {
            SourceKind::JumpLabel {
                statement: slot, ..
            } => *slot = statement,
            _ => unreachable!("label id points at a JumpLabel"),
        }
        Ok(label)
    }

    fn parse_jump(&mut self, is_break: bool) -> Result<NodeId> {
        self.bump();
        let target = match self.peek_kind() {
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                self.bump();
                Some(self.resolve_label(&name)?)
            }
            _ => None,
        };
        self.expect(&TokenKind::Semi, "';'")?;
        let kind = if is_break {
            SourceKind::Break { target }
        } else {
            SourceKind::Continue { target }
        };
        Ok(self.unit.add(kind))
    }

    fn parse_return(&mut self) -> Result<NodeId> {
        self.bump();
        let return_value = if self.peek_kind() == Some(&TokenKind::Semi) {
            None
        } else {
            Some(self.parse_expression()?)
        };
        self.expect(&TokenKind::Semi, "';'")?;
        Ok(self.unit.add(SourceKind::Return { return_value }))
    }

    fn parse_expression_statement(&mut self) -> Result<NodeId> {
        let expression = self.parse_expression()?;
        self.expect(&TokenKind::Semi, "';'")?;
        Ok(self
            .unit
            .add(SourceKind::ExpressionStatement { expression }))
    }

    fn parse_expression(&mut self) -> Result<NodeId> {
        self.parse_assignment()
    }

    fn parse_assignment(&mut self) -> Result<NodeId> {
        let operator = match (self.peek_kind(), self.peek2_kind()) {
            (Some(TokenKind::Ident(_)), Some(TokenKind::Assign)) => Operator::Assignment,
            (Some(TokenKind::Ident(_)), Some(TokenKind::PlusAssign)) => Operator::AssignmentPlus,
            _ => return self.parse_equality(),
        };
        let name = self.expect_ident("an identifier")?;
        let target = self.resolve_name(&name)?;
        let child = self.unit.add(SourceKind::IdentifierReference { target });
        self.bump();
        let value = self.parse_assignment()?;
        Ok(self.unit.add(SourceKind::AssignmentExpr {
            child,
            operator,
            value,
        }))
    }

    fn parse_equality(&mut self) -> Result<NodeId> {
        let mut left = self.parse_relational()?;
        while self.eat(&TokenKind::EqEq) {
            let right = self.parse_relational()?;
            left = self.unit.add(SourceKind::EqualityExpr {
                left,
                operator: Operator::Equal,
                right,
            });
        }
        Ok(left)
    }

    fn parse_relational(&mut self) -> Result<NodeId> {
        let mut left = self.parse_additive()?;
        loop {
            let operator = match self.peek_kind() {
                Some(TokenKind::Less) => Operator::LessThan,
                Some(TokenKind::Greater) => Operator::GreaterThan,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.parse_additive()?;
            left = self.unit.add(SourceKind::RelationExpr {
                left,
                operator,
                right,
            });
        }
    }

    fn parse_additive(&mut self) -> Result<NodeId> {
        let mut left = self.parse_multiplicative()?;
        loop {
            let operator = match self.peek_kind() {
                Some(TokenKind::Plus) => Operator::Addition,
                Some(TokenKind::Minus) => Operator::Subtraction,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.parse_multiplicative()?;
            left = self.unit.add(SourceKind::AdditiveExpr {
                left,
                operator,
                right,
            });
        }
    }

    fn parse_multiplicative(&mut self) -> Result<NodeId> {
        let mut left = self.parse_unary()?;
        loop {
            let operator = match self.peek_kind() {
                Some(TokenKind::Star) => Operator::Multiplication,
                Some(TokenKind::Slash) => Operator::Division,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.parse_unary()?;
            left = self.unit.add(SourceKind::MultiplicativeExpr {
                left,
                operator,
                right,
            });
        }
    }

    fn parse_unary(&mut self) -> Result<NodeId> {
        let mut operators = Vec::new();
        loop {
            match self.peek_kind() {
                Some(TokenKind::Minus) => operators.push(Operator::Subtraction),
                Some(TokenKind::Plus) => operators.push(Operator::Addition),
                _ => break,
            }
            self.bump();
        }
        if operators.is_empty() {
            self.parse_suffix()
        } else {
            let child = self.parse_suffix()?;
            Ok(self.unit.add(SourceKind::UnaryExpr { operators, child }))
        }
    }

    fn parse_suffix(&mut self) -> Result<NodeId> {
        let child = self.parse_primary()?;
        let operator = match self.peek_kind() {
            Some(TokenKind::MinusMinus) => Operator::MinusMinus,
            Some(TokenKind::PlusPlus) => Operator::PlusPlus,
            _ => return Ok(child),
        };
        if !matches!(
            self.unit.node(child).kind,
            SourceKind::IdentifierReference { .. }
        ) {
            return Err(self.err_here("an identifier before a suffix operator"));
        }
        self.bump();
        Ok(self
            .unit
            .add(SourceKind::SuffixUnaryModificationExpr { child, operator }))
    }

    fn parse_primary(&mut self) -> Result<NodeId> {
        match self.peek_kind() {
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                self.bump();
                let target = self.resolve_name(&name)?;
                Ok(self.unit.add(SourceKind::IdentifierReference { target }))
            }
            Some(TokenKind::IntLit(value)) => {
                let decimal_value = value.clone();
                self.bump();
                Ok(self
                    .unit
                    .add(SourceKind::DecimalIntegerLiteral { decimal_value }))
            }
            Some(TokenKind::LParen) => {
                self.bump();
                let inner = self.parse_expression()?;
                self.expect(&TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err_here("an expression")),
        }
    }
}
