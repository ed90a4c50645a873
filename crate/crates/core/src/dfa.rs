//! Data-flow synthesis: for every use of a variable, link each nearest
//! reaching definition to the using instruction, then prune the data
//! nodes the analysis consumed.
//!
//! A nearest definer is found by walking control-flow edges backwards;
//! instructions that redefine the variable absorb their branch of the
//! search. An independent forward reachability check over the same
//! graph is provided for cross-validation.

use crate::error::Result;
use crate::flowgraph::{FlowGraph, FlowId, FlowKind};
use std::collections::{BTreeSet, VecDeque};

/// Instructions that define `uv` and are reachable backwards from `fi`
/// over control-flow edges without passing another definer of `uv`.
///
/// The search proceeds frontier by frontier: definers in the current
/// frontier are collected and not expanded, the rest contribute their
/// control-flow predecessors to the next frontier, and nodes already
/// seen are never revisited.
pub fn find_nearest_definers(graph: &FlowGraph, fi: FlowId, uv: FlowId) -> Vec<FlowId> {
    let mut frontier: Vec<FlowId> = graph.cf_prev(fi).to_vec();
    frontier.dedup();
    let mut known: BTreeSet<FlowId> = BTreeSet::new();
    let mut result: Vec<FlowId> = Vec::new();
    while !frontier.is_empty() {
        let mut others: Vec<FlowId> = Vec::new();
        for &p in &frontier {
            if graph.node(p).defs.contains(&uv) {
                result.push(p);
            } else {
                others.push(p);
            }
        }
        known.extend(frontier.iter().copied());
        let mut next: Vec<FlowId> = Vec::new();
        for &o in &others {
            for &p in graph.cf_prev(o) {
                if !known.contains(&p) && !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    result
}

/// Add a dfNext edge from every nearest definer of every used variable
/// to the instruction using it, then delete all Var and Param nodes
/// unless `keep_vars` is set.
pub fn synthesize_df_edges(graph: &mut FlowGraph, keep_vars: bool) -> Result<()> {
    let instrs: Vec<FlowId> = graph
        .iter()
        .filter(|n| n.kind.is_flow_instr())
        .map(|n| n.id)
        .collect();
    for fi in instrs {
        let uses = graph.node(fi).uses.clone();
        for uv in uses {
            for definer in find_nearest_definers(graph, fi, uv) {
                graph.add_df_edge(definer, fi)?;
            }
        }
    }
    if !keep_vars {
        let data: Vec<FlowId> = graph
            .iter()
            .filter(|n| matches!(n.kind, FlowKind::Var | FlowKind::Param))
            .map(|n| n.id)
            .collect();
        for v in data {
            graph.delete_node(v)?;
        }
    }
    Ok(())
}

/// Recompute the data-flow relation by forward reachability, for
/// checking `synthesize_df_edges` against an independent formulation.
///
/// For each instruction `d` and each variable it defines, control-flow
/// successors are explored breadth-first; every reached instruction
/// using the variable yields a pair, and instructions redefining it are
/// not expanded further. Must run while defs and uses are still
/// populated, so before pruning.
pub fn df_oracle(graph: &FlowGraph) -> BTreeSet<(FlowId, FlowId)> {
    let mut result = BTreeSet::new();
    for d in graph.iter() {
        if !d.kind.is_flow_instr() {
            continue;
        }
        for &v in &d.defs {
            let mut queue: VecDeque<FlowId> = graph.cf_next(d.id).iter().copied().collect();
            let mut visited: BTreeSet<FlowId> = queue.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                let node = graph.node(x);
                if node.uses.contains(&v) {
                    result.insert((d.id, x));
                }
                if node.defs.contains(&v) {
                    continue;
                }
                for &succ in graph.cf_next(x) {
                    if visited.insert(succ) {
                        queue.push_back(succ);
                    }
                }
            }
        }
    }
    result
}
