//! Control-flow synthesis: a look-ahead traversal over each method's
//! statement sequence that links every flow instruction to the first
//! flow instruction of its successor.
//!
//! The traversal carries the enclosing loop's condition and successor
//! plus a map from labels to their following elements; loops splice
//! their condition around the body, and an if-statement spawns a nested
//! sequence for its then-branch under a snapshot of the current state.

use crate::error::{Error, Result};
use crate::flowgraph::{FlowGraph, FlowId, FlowKind};
use std::collections::{BTreeMap, VecDeque};

/// Traversal state for one synthesis sequence.
#[derive(Clone, Debug)]
pub struct CfState {
    /// Elements still to process; the head is the current element and
    /// the one after it is its potential successor.
    pub pending: VecDeque<FlowId>,
    /// The owning method's Exit node, targeted by return statements.
    pub exit: FlowId,
    /// Condition of the innermost loop spliced so far, if any.
    pub loop_expr: Option<FlowId>,
    /// Element following the innermost loop spliced so far, if any.
    pub loop_succ: Option<FlowId>,
    /// For each Label, the element that followed the labeled statement
    /// (which may have been nothing).
    pub label_succ: BTreeMap<FlowId, Option<FlowId>>,
}

impl CfState {
    /// Initial state for one method: pending holds just the method, the
    /// exit is bound, and loop and label context are empty.
    pub fn for_method(method: FlowId, exit: FlowId) -> CfState {
        CfState {
            pending: VecDeque::from(vec![method]),
            exit,
            loop_expr: None,
            loop_succ: None,
            label_succ: BTreeMap::new(),
        }
    }
}

/// The element itself when it is a flow instruction, or otherwise the
/// first flow instruction inside it, found by repeatedly taking the
/// first traversal child.
pub fn cf_peek(graph: &FlowGraph, el: FlowId) -> Result<FlowId> {
    let mut current = el;
    let step_cap = graph.len() + 1;
    for _ in 0..step_cap {
        let node = graph.get(current).ok_or(Error::UnknownId(current.0))?;
        if node.kind.is_flow_instr() {
            return Ok(current);
        }
        match graph.traversal_children(current).first() {
            Some(first) => current = *first,
            None => return Err(Error::EmptyContainer(current.0)),
        }
    }
    Err(Error::EmptyContainer(el.0))
}

/// Process one synthesis sequence to completion, adding cfNext edges.
///
/// Runs iteratively over a stack of sequences: the nested sequence an
/// if-statement creates for its then-branch is pushed on top and
/// processed before the outer sequence resumes.
pub fn cf_synth(
    graph: &mut FlowGraph,
    state: CfState,
    implicit_exit_fallthrough: bool,
) -> Result<()> {
    let mut frames = vec![state];
    while !frames.is_empty() {
        let top = frames.len() - 1;
        let Some(el) = frames[top].pending.pop_front() else {
            frames.pop();
            continue;
        };
        let n = frames[top].pending.front().copied();
        let kind = graph.get(el).ok_or(Error::UnknownId(el.0))?.kind;
        match kind {
            FlowKind::Method => {
                let children = graph.traversal_children(el);
                let first = children
                    .first()
                    .copied()
                    .ok_or(Error::EmptyContainer(el.0))?;
                let entry = cf_peek(graph, first)?;
                graph.add_cf_edge(el, entry)?;
                let frame = &mut frames[top];
                frame.pending = children.into();
                frame.loop_expr = None;
                frame.loop_succ = None;
                frame.label_succ.clear();
            }
            FlowKind::SimpleStmt | FlowKind::Expr => match n {
                Some(next) => {
                    let target = cf_peek(graph, next)?;
                    graph.add_cf_edge(el, target)?;
                }
                None if implicit_exit_fallthrough => {
                    let exit = frames[top].exit;
                    graph.add_cf_edge(el, exit)?;
                }
                None => {}
            },
            FlowKind::Block => {
                let mut contents = graph.traversal_children(el);
                contents.reverse();
                for child in contents {
                    frames[top].pending.push_front(child);
                }
            }
            FlowKind::Label => {
                let stmt = graph.node(el).stmt.ok_or(Error::EmptyContainer(el.0))?;
                let frame = &mut frames[top];
                frame.label_succ.insert(el, n);
                frame.pending.push_front(stmt);
            }
            FlowKind::Return => {
                let exit = frames[top].exit;
                graph.add_cf_edge(el, exit)?;
            }
            FlowKind::Break => {
                let target = match graph.node(el).label {
                    Some(label) => {
                        let succ = frames[top]
                            .label_succ
                            .get(&label)
                            .copied()
                            .flatten()
                            .ok_or(Error::MissingLabelTarget(label.0))?;
                        cf_peek(graph, succ)?
                    }
                    None => {
                        let succ = frames[top]
                            .loop_succ
                            .ok_or(Error::MissingLoopContext(el.0))?;
                        cf_peek(graph, succ)?
                    }
                };
                graph.add_cf_edge(el, target)?;
            }
            FlowKind::Continue => {
                let target = match graph.node(el).label {
                    Some(label) => {
                        let peeked = cf_peek(graph, label)?;
                        if !is_loop_condition(graph, peeked) {
                            return Err(Error::MissingLoopContext(el.0));
                        }
                        peeked
                    }
                    None => frames[top]
                        .loop_expr
                        .ok_or(Error::MissingLoopContext(el.0))?,
                };
                graph.add_cf_edge(el, target)?;
            }
            FlowKind::Loop => {
                let node = graph.node(el);
                let expr = node.expr.ok_or(Error::EmptyContainer(el.0))?;
                let body = node.body.ok_or(Error::EmptyContainer(el.0))?;
                let frame = &mut frames[top];
                frame.pending.push_front(expr);
                frame.pending.push_front(body);
                frame.pending.push_front(expr);
                frame.loop_expr = Some(expr);
                frame.loop_succ = n;
            }
            FlowKind::If => {
                let node = graph.node(el);
                let expr = node.expr.ok_or(Error::EmptyContainer(el.0))?;
                let then = node.then.ok_or(Error::EmptyContainer(el.0))?;
                let els = node.els;
                let peeked = match n {
                    Some(next) => cf_peek(graph, next)?,
                    None if implicit_exit_fallthrough => frames[top].exit,
                    None => return Err(Error::AbsentSuccessor(el.0)),
                };
                let frame = &mut frames[top];
                if let Some(e) = els {
                    frame.pending.push_front(e);
                }
                frame.pending.push_front(expr);
                let nested = CfState {
                    pending: VecDeque::from(vec![expr, then, peeked]),
                    exit: frame.exit,
                    loop_expr: frame.loop_expr,
                    loop_succ: frame.loop_succ,
                    label_succ: frame.label_succ.clone(),
                };
                frames.push(nested);
            }
            FlowKind::Exit => {
                if n.is_some() {
                    return Err(Error::ExitNotLast(el.0));
                }
            }
            FlowKind::Var | FlowKind::Param => return Err(Error::NotFlowInstr(el.0)),
        }
    }
    Ok(())
}

fn is_loop_condition(graph: &FlowGraph, id: FlowId) -> bool {
    graph
        .iter()
        .any(|n| n.kind == FlowKind::Loop && n.expr == Some(id))
}

/// Run control-flow synthesis for every method of the graph, binding
/// each method's own exit.
pub fn synthesize_cf_edges(graph: &mut FlowGraph, implicit_exit_fallthrough: bool) -> Result<()> {
    for method in graph.methods.clone() {
        let exit = graph
            .node(method)
            .exit
            .ok_or(Error::EmptyContainer(method.0))?;
        cf_synth(
            graph,
            CfState::for_method(method, exit),
            implicit_exit_fallthrough,
        )?;
    }
    Ok(())
}
