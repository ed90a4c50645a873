//! Lowering of source methods into the structure graph: one rule per
//! source kind, ordered dispatch for statements and variable creation,
//! and memoized traces so repeated applications share target nodes.

use crate::ast::{AstUnit, NodeId, SourceKind};
use crate::error::{Error, Result};
use crate::flowgraph::{FlowGraph, FlowId, FlowKind};
use crate::render::render;
use std::collections::BTreeMap;

/// Per-rule record of source node id to created flow node id.
///
/// The method rule records its (Method, Exit) pair; every other rule
/// records a single node.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceStore {
    pub method2method: BTreeMap<NodeId, (FlowId, FlowId)>,
    pub param2param: BTreeMap<NodeId, FlowId>,
    pub local_var2var: BTreeMap<NodeId, FlowId>,
    pub local_var_stmt2simple_stmt: BTreeMap<NodeId, FlowId>,
    pub stmt2simple_stmt: BTreeMap<NodeId, FlowId>,
    pub label2label: BTreeMap<NodeId, FlowId>,
    pub expression2expr: BTreeMap<NodeId, FlowId>,
    pub condition2if: BTreeMap<NodeId, FlowId>,
    pub block2block: BTreeMap<NodeId, FlowId>,
    pub return2return: BTreeMap<NodeId, FlowId>,
    pub break2break: BTreeMap<NodeId, FlowId>,
    pub continue2continue: BTreeMap<NodeId, FlowId>,
    pub while_loop2loop: BTreeMap<NodeId, FlowId>,
}

impl TraceStore {
    /// Union of the statement-dispatch subrule traces.
    pub fn stmt2item(&self) -> BTreeMap<NodeId, FlowId> {
        let mut out = BTreeMap::new();
        for map in [
            &self.local_var_stmt2simple_stmt,
            &self.condition2if,
            &self.block2block,
            &self.return2return,
            &self.while_loop2loop,
            &self.break2break,
            &self.continue2continue,
            &self.label2label,
            &self.stmt2simple_stmt,
        ] {
            out.extend(map.iter().map(|(k, v)| (*k, *v)));
        }
        out
    }

    /// Union of the variable-creating subrule traces.
    pub fn var_creating(&self) -> BTreeMap<NodeId, FlowId> {
        let mut out = BTreeMap::new();
        out.extend(self.param2param.iter().map(|(k, v)| (*k, *v)));
        out.extend(self.local_var2var.iter().map(|(k, v)| (*k, *v)));
        out
    }

    /// Every recorded (source id, flow id) pair; the method rule
    /// contributes its Method node (the Exit has no source node).
    pub fn entries(&self) -> Vec<(NodeId, FlowId)> {
        let mut out: Vec<(NodeId, FlowId)> = Vec::new();
        out.extend(self.method2method.iter().map(|(k, (m, _))| (*k, *m)));
        out.extend(self.expression2expr.iter().map(|(k, v)| (*k, *v)));
        out.extend(self.stmt2item());
        out.extend(self.var_creating());
        out
    }
}

/// Declaration targets of every identifier reference contained in a node,
/// in depth-first pre-order, deduplicated keeping first occurrence.
pub fn used_vars(unit: &AstUnit, node: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    for id in containment_closure(unit, node) {
        if let SourceKind::IdentifierReference { target } = unit.node(id).kind {
            if !out.contains(&target) {
                out.push(target);
            }
        }
    }
    out
}

/// Reflexive-transitive containment closure in depth-first pre-order.
fn containment_closure(unit: &AstUnit, root: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(id) = stack.pop() {
        out.push(id);
        let mut children = unit.containment_children(id);
        children.reverse();
        stack.extend(children);
    }
    out
}

fn push_unique(list: &mut Vec<FlowId>, value: FlowId) {
    if !list.contains(&value) {
        list.push(value);
    }
}

/// Transform every method of a unit into one flow graph.
pub fn java_to_flowgraph(unit: &AstUnit) -> Result<(FlowGraph, TraceStore)> {
    let mut transform = Transform::new(unit);
    for method in unit.methods.clone() {
        transform.rule_method2method(method)?;
    }
    Ok(transform.finish())
}

/// One transformation run over one compilation unit.
///
/// Rules may be invoked individually; each is memoized, so a repeat
/// application (direct or through dispatch) returns the node created
/// the first time.
pub struct Transform<'u> {
    unit: &'u AstUnit,
    pub graph: FlowGraph,
    pub traces: TraceStore,
}

impl<'u> Transform<'u> {
    pub fn new(unit: &'u AstUnit) -> Transform<'u> {
        Transform {
            unit,
            graph: FlowGraph::new(),
            traces: TraceStore::default(),
        }
    }

    /// Consume the run, yielding the graph and its traces.
    pub fn finish(self) -> (FlowGraph, TraceStore) {
        (self.graph, self.traces)
    }

    fn mismatch(&self, id: NodeId) -> Error {
        Error::RuleMismatch(self.unit.node(id).kind.name())
    }

    /// Transform a Method into a Method node plus its Exit.
    pub fn rule_method2method(&mut self, id: NodeId) -> Result<(FlowId, FlowId)> {
        if let Some(&pair) = self.traces.method2method.get(&id) {
            return Ok(pair);
        }
        let (parameters, statements) = match &self.unit.node(id).kind {
            SourceKind::Method {
                parameters,
                statements,
                ..
            } => (parameters.clone(), statements.clone()),
            _ => return Err(self.mismatch(id)),
        };
        let fgm = self.graph.add_node(FlowKind::Method, render(self.unit, id));
        let fgex = self.graph.add_node(FlowKind::Exit, "Exit");
        self.traces.method2method.insert(id, (fgm, fgex));
        self.graph.methods.push(fgm);
        let mut stmts = Vec::new();
        for s in &statements {
            stmts.push(self.dispatch_stmt2item(*s)?);
        }
        self.graph.node_mut(fgm).stmts = stmts;
        self.graph.node_mut(fgm).exit = Some(fgex);
        let mut defs = Vec::new();
        for p in &parameters {
            push_unique(&mut defs, self.rule_param2param(*p)?);
        }
        self.graph.node_mut(fgm).defs = defs;
        Ok((fgm, fgex))
    }

    /// Transform a Parameter into a Param data node.
    pub fn rule_param2param(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.param2param.get(&id) {
            return Ok(f);
        }
        if !matches!(self.unit.node(id).kind, SourceKind::Parameter { .. }) {
            return Err(self.mismatch(id));
        }
        let f = self.graph.add_node(FlowKind::Param, render(self.unit, id));
        self.traces.param2param.insert(id, f);
        Ok(f)
    }

    /// Transform a LocalVariable into a Var data node.
    pub fn rule_local_var2var(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.local_var2var.get(&id) {
            return Ok(f);
        }
        if !matches!(self.unit.node(id).kind, SourceKind::LocalVariable { .. }) {
            return Err(self.mismatch(id));
        }
        let f = self.graph.add_node(FlowKind::Var, render(self.unit, id));
        self.traces.local_var2var.insert(id, f);
        Ok(f)
    }

    /// Transform a declaration statement into a SimpleStmt that defines
    /// the declared variable and uses the variables of its initializer.
    pub fn rule_local_var_stmt2simple_stmt(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.local_var_stmt2simple_stmt.get(&id) {
            return Ok(f);
        }
        let variable = match &self.unit.node(id).kind {
            SourceKind::LocalVariableStatement { variable } => *variable,
            _ => return Err(self.mismatch(id)),
        };
        let fgss = self
            .graph
            .add_node(FlowKind::SimpleStmt, render(self.unit, id));
        self.traces.local_var_stmt2simple_stmt.insert(id, fgss);
        let v = self.rule_local_var2var(variable)?;
        self.graph.node_mut(fgss).defs = vec![v];
        let initial_value = match &self.unit.node(variable).kind {
            SourceKind::LocalVariable { initial_value, .. } => *initial_value,
            _ => return Err(self.mismatch(variable)),
        };
        if let Some(init) = initial_value {
            let mut uses = Vec::new();
            for uv in used_vars(self.unit, init) {
                push_unique(&mut uses, self.dispatch_var_creating_rule(uv)?);
            }
            self.graph.node_mut(fgss).uses = uses;
        }
        Ok(fgss)
    }

    /// Catch-all statement rule: a SimpleStmt whose def set comes from
    /// the assignment and suffix-modification expressions contained in
    /// the statement, and whose use set comes from their read sides.
    pub fn rule_stmt2simple_stmt(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.stmt2simple_stmt.get(&id) {
            return Ok(f);
        }
        if !self.unit.node(id).kind.is_statement() {
            return Err(self.mismatch(id));
        }
        let fgss = self
            .graph
            .add_node(FlowKind::SimpleStmt, render(self.unit, id));
        self.traces.stmt2simple_stmt.insert(id, fgss);
        let mut defs = Vec::new();
        let mut uses = Vec::new();
        for n in containment_closure(self.unit, id) {
            if let SourceKind::AssignmentExpr { child, value, .. } = self.unit.node(n).kind {
                let written = used_vars(self.unit, child);
                if written.len() != 1 {
                    return Err(Error::MalformedLhs(written.len()));
                }
                let dv = self.dispatch_var_creating_rule(written[0])?;
                push_unique(&mut defs, dv);
                for uv in used_vars(self.unit, value) {
                    push_unique(&mut uses, self.dispatch_var_creating_rule(uv)?);
                }
            }
        }
        for n in containment_closure(self.unit, id) {
            if let SourceKind::SuffixUnaryModificationExpr { child, .. } = self.unit.node(n).kind {
                let modified = used_vars(self.unit, child);
                if modified.len() != 1 {
                    return Err(Error::MalformedLhs(modified.len()));
                }
                let v = self.dispatch_var_creating_rule(modified[0])?;
                push_unique(&mut defs, v);
                push_unique(&mut uses, v);
            }
        }
        self.graph.node_mut(fgss).defs = defs;
        self.graph.node_mut(fgss).uses = uses;
        Ok(fgss)
    }

    /// Transform a JumpLabel into a Label node wrapping its statement.
    pub fn rule_label2label(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.label2label.get(&id) {
            return Ok(f);
        }
        let statement = match &self.unit.node(id).kind {
            SourceKind::JumpLabel { statement, .. } => *statement,
            _ => return Err(self.mismatch(id)),
        };
        let fgl = self.graph.add_node(FlowKind::Label, render(self.unit, id));
        self.traces.label2label.insert(id, fgl);
        let stmt = self.dispatch_stmt2item(statement)?;
        self.graph.node_mut(fgl).stmt = Some(stmt);
        Ok(fgl)
    }

    /// Transform an expression into an Expr node using its variables.
    pub fn rule_expression2expr(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.expression2expr.get(&id) {
            return Ok(f);
        }
        if !self.unit.node(id).kind.is_expression() {
            return Err(self.mismatch(id));
        }
        let fge = self.graph.add_node(FlowKind::Expr, render(self.unit, id));
        self.traces.expression2expr.insert(id, fge);
        let mut uses = Vec::new();
        for uv in used_vars(self.unit, id) {
            push_unique(&mut uses, self.dispatch_var_creating_rule(uv)?);
        }
        self.graph.node_mut(fge).uses = uses;
        Ok(fge)
    }

    /// Transform a Condition into an If with condition, then, and
    /// optional else references.
    pub fn rule_condition2if(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.condition2if.get(&id) {
            return Ok(f);
        }
        let (condition, statement, else_statement) = match &self.unit.node(id).kind {
            SourceKind::Condition {
                condition,
                statement,
                else_statement,
            } => (*condition, *statement, *else_statement),
            _ => return Err(self.mismatch(id)),
        };
        let fgif = self.graph.add_node(FlowKind::If, render(self.unit, id));
        self.traces.condition2if.insert(id, fgif);
        let expr = self.rule_expression2expr(condition)?;
        self.graph.node_mut(fgif).expr = Some(expr);
        let then = self.dispatch_stmt2item(statement)?;
        self.graph.node_mut(fgif).then = Some(then);
        if let Some(e) = else_statement {
            let els = self.dispatch_stmt2item(e)?;
            self.graph.node_mut(fgif).els = Some(els);
        }
        Ok(fgif)
    }

    /// Transform a Block into a Block node over its statements.
    pub fn rule_block2block(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.block2block.get(&id) {
            return Ok(f);
        }
        let statements = match &self.unit.node(id).kind {
            SourceKind::Block { statements } => statements.clone(),
            _ => return Err(self.mismatch(id)),
        };
        let fgb = self.graph.add_node(FlowKind::Block, render(self.unit, id));
        self.traces.block2block.insert(id, fgb);
        let mut stmts = Vec::new();
        for s in &statements {
            stmts.push(self.dispatch_stmt2item(*s)?);
        }
        self.graph.node_mut(fgb).stmts = stmts;
        Ok(fgb)
    }

    /// Transform a Return into a Return node using its value's variables.
    pub fn rule_return2return(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.return2return.get(&id) {
            return Ok(f);
        }
        if !matches!(self.unit.node(id).kind, SourceKind::Return { .. }) {
            return Err(self.mismatch(id));
        }
        let fgr = self.graph.add_node(FlowKind::Return, render(self.unit, id));
        self.traces.return2return.insert(id, fgr);
        let mut uses = Vec::new();
        for uv in used_vars(self.unit, id) {
            push_unique(&mut uses, self.dispatch_var_creating_rule(uv)?);
        }
        self.graph.node_mut(fgr).uses = uses;
        Ok(fgr)
    }

    /// Transform a Break; a labeled break shares the Label node with the
    /// labeled statement's transformation.
    pub fn rule_break2break(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.break2break.get(&id) {
            return Ok(f);
        }
        let target = match &self.unit.node(id).kind {
            SourceKind::Break { target } => *target,
            _ => return Err(self.mismatch(id)),
        };
        let fgb = self.graph.add_node(FlowKind::Break, render(self.unit, id));
        self.traces.break2break.insert(id, fgb);
        if let Some(t) = target {
            let label = self.rule_label2label(t)?;
            self.graph.node_mut(fgb).label = Some(label);
        }
        Ok(fgb)
    }

    /// Transform a Continue; label handling as for break.
    pub fn rule_continue2continue(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.continue2continue.get(&id) {
            return Ok(f);
        }
        let target = match &self.unit.node(id).kind {
            SourceKind::Continue { target } => *target,
            _ => return Err(self.mismatch(id)),
        };
        let fgc = self
            .graph
            .add_node(FlowKind::Continue, render(self.unit, id));
        self.traces.continue2continue.insert(id, fgc);
        if let Some(t) = target {
            let label = self.rule_label2label(t)?;
            self.graph.node_mut(fgc).label = Some(label);
        }
        Ok(fgc)
    }

    /// Transform a WhileLoop into a Loop with condition and body.
    pub fn rule_while_loop2loop(&mut self, id: NodeId) -> Result<FlowId> {
        if let Some(&f) = self.traces.while_loop2loop.get(&id) {
            return Ok(f);
        }
        let (condition, statement) = match &self.unit.node(id).kind {
            SourceKind::WhileLoop {
                condition,
                statement,
            } => (*condition, *statement),
            _ => return Err(self.mismatch(id)),
        };
        let fgl = self.graph.add_node(FlowKind::Loop, render(self.unit, id));
        self.traces.while_loop2loop.insert(id, fgl);
        let expr = self.rule_expression2expr(condition)?;
        self.graph.node_mut(fgl).expr = Some(expr);
        let body = self.dispatch_stmt2item(statement)?;
        self.graph.node_mut(fgl).body = Some(body);
        Ok(fgl)
    }

    /// Apply the first statement subrule whose source kind matches, in
    /// the fixed order: declaration, if, block, return, while, break,
    /// continue, label, then the catch-all.
    pub fn dispatch_stmt2item(&mut self, id: NodeId) -> Result<FlowId> {
        match &self.unit.node(id).kind {
            SourceKind::LocalVariableStatement { .. } => self.rule_local_var_stmt2simple_stmt(id),
            SourceKind::Condition { .. } => self.rule_condition2if(id),
            SourceKind::Block { .. } => self.rule_block2block(id),
            SourceKind::Return { .. } => self.rule_return2return(id),
            SourceKind::WhileLoop { .. } => self.rule_while_loop2loop(id),
            SourceKind::Break { .. } => self.rule_break2break(id),
            SourceKind::Continue { .. } => self.rule_continue2continue(id),
            SourceKind::JumpLabel { .. } => self.rule_label2label(id),
            kind if kind.is_statement() => self.rule_stmt2simple_stmt(id),
            kind => Err(Error::NoApplicableRule(kind.name())),
        }
    }

    /// Apply the matching variable-creating rule: Parameter, then
    /// LocalVariable.
    pub fn dispatch_var_creating_rule(&mut self, id: NodeId) -> Result<FlowId> {
        match &self.unit.node(id).kind {
            SourceKind::Parameter { .. } => self.rule_param2param(id),
            SourceKind::LocalVariable { .. } => self.rule_local_var2var(id),
            kind => Err(Error::NoApplicableRule(kind.name())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{parse_ast_json, parse_source};

    const TEST4_SOURCE: &str = "void testMethod() { int i = 100; while (i > 0) { while (i > 50) { i = i - 10; if (i == 50) break; } i--; } }";

    fn kind_census(graph: &FlowGraph) -> BTreeMap<FlowKind, usize> {
        let mut out = BTreeMap::new();
        for node in graph.iter() {
            *out.entry(node.kind).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn empty_method_becomes_method_plus_exit() {
        let unit = parse_source("void m() { }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        assert_eq!(graph.len(), 2);
        let (m, e) = traces.method2method[&unit.methods[0]];
        assert_eq!(graph.node(m).kind, FlowKind::Method);
        assert_eq!(graph.node(m).txt, "m()");
        assert_eq!(graph.node(m).exit, Some(e));
        assert_eq!(graph.node(e).kind, FlowKind::Exit);
        assert_eq!(graph.node(e).txt, "Exit");
        assert_eq!(graph.methods, vec![m]);
    }

    #[test]
    fn nested_loop_program_produces_expected_census() {
        let unit = parse_source(TEST4_SOURCE).unwrap();
        let (graph, _) = java_to_flowgraph(&unit).unwrap();
        let census = kind_census(&graph);
        assert_eq!(census[&FlowKind::Method], 1);
        assert_eq!(census[&FlowKind::Exit], 1);
        assert_eq!(census[&FlowKind::Loop], 2);
        assert_eq!(census[&FlowKind::If], 1);
        assert_eq!(census[&FlowKind::Expr], 3);
        assert_eq!(census[&FlowKind::SimpleStmt], 3);
        assert_eq!(census[&FlowKind::Break], 1);
        assert_eq!(census[&FlowKind::Var], 1);
        assert_eq!(census[&FlowKind::Block], 2);
        assert_eq!(graph.len(), 15);
    }

    #[test]
    fn declaration_defines_and_initializer_uses() {
        let unit = parse_source("void m(int a, int b) { int c = a + b; }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        let stmt = *traces.local_var_stmt2simple_stmt.values().next().unwrap();
        let node = graph.node(stmt);
        assert_eq!(node.txt, "int c = a + b;");
        assert_eq!(node.defs.len(), 1);
        assert_eq!(graph.node(node.defs[0]).kind, FlowKind::Var);
        assert_eq!(graph.node(node.defs[0]).txt, "c");
        let use_txt: Vec<&str> = node
            .uses
            .iter()
            .map(|u| graph.node(*u).txt.as_str())
            .collect();
        assert_eq!(use_txt, vec!["a", "b"]);
        assert!(node
            .uses
            .iter()
            .all(|u| graph.node(*u).kind == FlowKind::Param));
    }

    #[test]
    fn suffix_modification_defines_and_uses_same_variable() {
        let unit = parse_source("void m() { int i = 1; i--; }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        let stmt = *traces.stmt2simple_stmt.values().next().unwrap();
        let node = graph.node(stmt);
        assert_eq!(node.txt, "i--;");
        assert_eq!(node.defs, node.uses);
        assert_eq!(node.defs.len(), 1);
        assert_eq!(graph.node(node.defs[0]).txt, "i");
    }

    #[test]
    fn compound_assignment_reads_only_the_value_side() {
        let unit = parse_source("void m(int a, int b) { b += a; }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        let stmt = *traces.stmt2simple_stmt.values().next().unwrap();
        let node = graph.node(stmt);
        assert_eq!(node.txt, "b += a;");
        assert_eq!(graph.node(node.defs[0]).txt, "b");
        let use_txt: Vec<&str> = node
            .uses
            .iter()
            .map(|u| graph.node(*u).txt.as_str())
            .collect();
        assert_eq!(use_txt, vec!["a"]);
    }

    #[test]
    fn variable_nodes_are_shared_across_statements() {
        let unit = parse_source("void m() { int i = 1; i = i + 1; i--; }").unwrap();
        let (graph, _) = java_to_flowgraph(&unit).unwrap();
        let census = kind_census(&graph);
        assert_eq!(census[&FlowKind::Var], 1);
    }

    #[test]
    fn condition_without_else_leaves_else_unset() {
        let unit = parse_source("void m(int a) { if (a > 0) return; }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        let iff = *traces.condition2if.values().next().unwrap();
        let node = graph.node(iff);
        assert_eq!(node.txt, "if");
        assert!(node.expr.is_some());
        assert!(node.then.is_some());
        assert!(node.els.is_none());
    }

    #[test]
    fn labeled_break_shares_the_label_node() {
        let unit = parse_source("void m(int i) { l: while (i > 0) break l; }").unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        assert_eq!(traces.label2label.len(), 1);
        let label = *traces.label2label.values().next().unwrap();
        let brk = *traces.break2break.values().next().unwrap();
        assert_eq!(graph.node(brk).label, Some(label));
        assert_eq!(graph.node(label).txt, "l:");
        assert_eq!(graph.node(brk).txt, "break l;");
    }

    #[test]
    fn rules_memoize_and_dispatch_is_stable() {
        let unit = parse_source(TEST4_SOURCE).unwrap();
        let mut transform = Transform::new(&unit);
        transform.rule_method2method(unit.methods[0]).unwrap();
        let before = transform.graph.len();
        let stmt_trace = transform.traces.stmt2item();
        for (src, flow) in &stmt_trace {
            assert_eq!(transform.dispatch_stmt2item(*src).unwrap(), *flow);
        }
        let again = transform.rule_method2method(unit.methods[0]).unwrap();
        assert_eq!(again, transform.traces.method2method[&unit.methods[0]]);
        assert_eq!(transform.graph.len(), before);
    }

    #[test]
    fn trace_texts_match_rendered_sources() {
        let unit = parse_source(TEST4_SOURCE).unwrap();
        let (graph, traces) = java_to_flowgraph(&unit).unwrap();
        for (src, flow) in traces.entries() {
            assert_eq!(graph.node(flow).txt, render(&unit, src));
        }
    }

    #[test]
    fn wrong_kind_raises_rule_mismatch_and_dispatch_rejects_non_statements() {
        let unit = parse_source("void m(int a) { return; }").unwrap();
        let ret = unit
            .nodes
            .values()
            .find(|n| matches!(n.kind, SourceKind::Return { .. }))
            .unwrap()
            .id;
        let param = unit
            .nodes
            .values()
            .find(|n| matches!(n.kind, SourceKind::Parameter { .. }))
            .unwrap()
            .id;
        let mut transform = Transform::new(&unit);
        assert!(matches!(
            transform.rule_condition2if(ret),
            Err(Error::RuleMismatch("Return"))
        ));
        assert!(matches!(
            transform.dispatch_stmt2item(param),
            Err(Error::NoApplicableRule("Parameter"))
        ));
        assert!(matches!(
            transform.dispatch_var_creating_rule(ret),
            Err(Error::NoApplicableRule("Return"))
        ));
    }

    #[test]
    fn assignment_to_non_variable_is_malformed() {
        let unit = parse_ast_json(
            r#"{"nodes":[
                {"id":0,"kind":"Method","name":"m","parameters":[],"statements":[1]},
                {"id":1,"kind":"ExpressionStatement","expression":2},
                {"id":2,"kind":"AssignmentExpr","child":3,"operator":"Assignment","value":4},
                {"id":3,"kind":"DecimalIntegerLiteral","decimalValue":1},
                {"id":4,"kind":"DecimalIntegerLiteral","decimalValue":2}
            ],"methods":[0]}"#,
        )
        .unwrap();
        assert!(matches!(
            java_to_flowgraph(&unit),
            Err(Error::MalformedLhs(0))
        ));
    }

    #[test]
    fn used_vars_walks_closure_in_order_and_dedupes() {
        let unit = parse_source("void m(int a, int b) { int c = a + b * a; return; }").unwrap();
        let init = unit
            .nodes
            .values()
            .find_map(|n| match &n.kind {
                SourceKind::LocalVariable { initial_value, .. } => *initial_value,
                _ => None,
            })
            .unwrap();
        let names: Vec<String> = used_vars(&unit, init)
            .iter()
            .map(|v| match &unit.node(*v).kind {
                SourceKind::Parameter { name, .. } | SourceKind::LocalVariable { name, .. } => {
                    name.clone()
                }
                other => panic!("unexpected target {}", other.name()),
            })
            .collect();
        assert_eq!(names, vec!["a", "b"]);

        let ret = unit
            .nodes
            .values()
            .find(|n| matches!(n.kind, SourceKind::Return { .. }))
            .unwrap()
            .id;
        assert!(used_vars(&unit, ret).is_empty());
    }
}
