//! The structure-graph intermediate representation: typed nodes with
//! ordered containment, analysis edges with a maintained inverse, and
//! DOT/JSON export.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Identifier of a node within one flow graph.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct FlowId(pub u32);

impl fmt::Display for FlowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Kinds of flow-graph nodes.
///
/// The flow-instruction subset is {Method, Exit, SimpleStmt, Expr, Return,
/// Break, Continue}; {Block, If, Loop, Label} are structural containers;
/// {Var, Param} are data nodes and never traversal children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlowKind {
    Method,
    Exit,
    SimpleStmt,
    Expr,
    Block,
    If,
    Loop,
    Return,
    Break,
    Continue,
    Label,
    Var,
    Param,
}

impl FlowKind {
    /// Whether a node of this kind may be a control- or data-flow edge endpoint.
    pub fn is_flow_instr(self) -> bool {
        matches!(
            self,
            FlowKind::Method
                | FlowKind::Exit
                | FlowKind::SimpleStmt
                | FlowKind::Expr
                | FlowKind::Return
                | FlowKind::Break
                | FlowKind::Continue
        )
    }

    /// The kind's display name.
    pub fn name(self) -> &'static str {
        match self {
            FlowKind::Method => "Method",
            FlowKind::Exit => "Exit",
            FlowKind::SimpleStmt => "SimpleStmt",
            FlowKind::Expr => "Expr",
            FlowKind::Block => "Block",
            FlowKind::If => "If",
            FlowKind::Loop => "Loop",
            FlowKind::Return => "Return",
            FlowKind::Break => "Break",
            FlowKind::Continue => "Continue",
            FlowKind::Label => "Label",
            FlowKind::Var => "Var",
            FlowKind::Param => "Param",
        }
    }
}

/// One flow-graph node: kind, rendered text, and kind-specific references.
///
/// Unused reference fields stay empty; which fields are meaningful depends
/// on `kind` (a Method has `stmts`, `exit`, `defs`; an If has `expr`,
/// `then`, `els`; and so on).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowNode {
    pub id: FlowId,
    pub kind: FlowKind,
    pub txt: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stmts: Vec<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exit: Option<FlowId>,
    #[serde(rename = "def", default, skip_serializing_if = "Vec::is_empty")]
    pub defs: Vec<FlowId>,
    #[serde(rename = "use", default, skip_serializing_if = "Vec::is_empty")]
    pub uses: Vec<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub then: Option<FlowId>,
    #[serde(rename = "else", default, skip_serializing_if = "Option::is_none")]
    pub els: Option<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub body: Option<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<FlowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stmt: Option<FlowId>,
}

impl FlowNode {
    fn new(id: FlowId, kind: FlowKind, txt: String) -> FlowNode {
        FlowNode {
            id,
            kind,
            txt,
            stmts: Vec::new(),
            exit: None,
            defs: Vec::new(),
            uses: Vec::new(),
            expr: None,
            then: None,
            els: None,
            body: None,
            label: None,
            stmt: None,
        }
    }
}

/// Which analysis edge relation to read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    CfNext,
    DfNext,
}

/// A structure graph with control-flow and data-flow adjacency.
///
/// `cf_prev` is kept as the exact inverse of `cf_next` by construction;
/// adjacency lists are ordered and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlowGraph {
    nodes: BTreeMap<FlowId, FlowNode>,
    cf_next: BTreeMap<FlowId, Vec<FlowId>>,
    cf_prev: BTreeMap<FlowId, Vec<FlowId>>,
    df_next: BTreeMap<FlowId, Vec<FlowId>>,
    pub methods: Vec<FlowId>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    nodes: Vec<FlowNode>,
    #[serde(rename = "cfNext")]
    cf_next: Vec<(FlowId, FlowId)>,
    #[serde(rename = "dfNext")]
    df_next: Vec<(FlowId, FlowId)>,
}

fn insert_unique(list: &mut Vec<FlowId>, value: FlowId) {
    if !list.contains(&value) {
        list.push(value);
    }
}

impl FlowGraph {
    pub fn new() -> FlowGraph {
        FlowGraph::default()
    }

    /// Insert a node under a fresh id and return that id.
    pub fn add_node(&mut self, kind: FlowKind, txt: impl Into<String>) -> FlowId {
        let id = FlowId(self.nodes.last_key_value().map_or(0, |(k, _)| k.0 + 1));
        self.nodes.insert(id, FlowNode::new(id, kind, txt.into()));
        id
    }

    pub fn get(&self, id: FlowId) -> Option<&FlowNode> {
        self.nodes.get(&id)
    }

    /// Look up a node that is known to exist.
    ///
    /// Panics if the id is absent; use `get` for fallible lookup.
    pub fn node(&self, id: FlowId) -> &FlowNode {
        self.nodes
            .get(&id)
            .unwrap_or_else(|| panic!("no flow node with id {id}"))
    }

    /// Mutable access to a node's reference fields.
    pub fn node_mut(&mut self, id: FlowId) -> &mut FlowNode {
        self.nodes
            .get_mut(&id)
            .unwrap_or_else(|| panic!("no flow node with id {id}"))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// All node ids in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = FlowId> + '_ {
        self.nodes.keys().copied()
    }

    /// All nodes in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = &FlowNode> + '_ {
        self.nodes.values()
    }

    fn check_flow_instr(&self, id: FlowId) -> Result<()> {
        let node = self.nodes.get(&id).ok_or(Error::UnknownId(id.0))?;
        if !node.kind.is_flow_instr() {
            return Err(Error::NotFlowInstr(id.0));
        }
        Ok(())
    }

    /// Append a control-flow edge, maintaining the inverse relation.
    ///
    /// Duplicate inserts are no-ops; both endpoints must be flow
    /// instructions.
    pub fn add_cf_edge(&mut self, from: FlowId, to: FlowId) -> Result<()> {
        self.check_flow_instr(from)?;
        self.check_flow_instr(to)?;
        insert_unique(self.cf_next.entry(from).or_default(), to);
        insert_unique(self.cf_prev.entry(to).or_default(), from);
        Ok(())
    }

    /// Append a data-flow edge. Duplicate inserts are no-ops; both
    /// endpoints must be flow instructions. Self edges are allowed.
    pub fn add_df_edge(&mut self, from: FlowId, to: FlowId) -> Result<()> {
        self.check_flow_instr(from)?;
        self.check_flow_instr(to)?;
        insert_unique(self.df_next.entry(from).or_default(), to);
        Ok(())
    }

    /// Control-flow successors of a node.
    pub fn cf_next(&self, id: FlowId) -> &[FlowId] {
        self.cf_next.get(&id).map_or(&[], |v| v.as_slice())
    }

    /// Control-flow predecessors of a node.
    pub fn cf_prev(&self, id: FlowId) -> &[FlowId] {
        self.cf_prev.get(&id).map_or(&[], |v| v.as_slice())
    }

    /// Data-flow successors of a node.
    pub fn df_next(&self, id: FlowId) -> &[FlowId] {
        self.df_next.get(&id).map_or(&[], |v| v.as_slice())
    }

    /// All control-flow edges in deterministic order.
    pub fn cf_edges(&self) -> impl Iterator<Item = (FlowId, FlowId)> + '_ {
        self.cf_next
            .iter()
            .flat_map(|(f, ts)| ts.iter().map(move |t| (*f, *t)))
    }

    /// All data-flow edges in deterministic order.
    pub fn df_edges(&self) -> impl Iterator<Item = (FlowId, FlowId)> + '_ {
        self.df_next
            .iter()
            .flat_map(|(f, ts)| ts.iter().map(move |t| (*f, *t)))
    }

    /// Remove a node along with every edge and reference that mentions it.
    pub fn delete_node(&mut self, id: FlowId) -> Result<()> {
        if self.nodes.remove(&id).is_none() {
            return Err(Error::UnknownId(id.0));
        }
        for map in [&mut self.cf_next, &mut self.cf_prev, &mut self.df_next] {
            map.remove(&id);
            for list in map.values_mut() {
                list.retain(|x| *x != id);
            }
            map.retain(|_, list| !list.is_empty());
        }
        self.methods.retain(|m| *m != id);
        for node in self.nodes.values_mut() {
            node.stmts.retain(|x| *x != id);
            node.defs.retain(|x| *x != id);
            node.uses.retain(|x| *x != id);
            for slot in [
                &mut node.exit,
                &mut node.expr,
                &mut node.then,
                &mut node.els,
                &mut node.body,
                &mut node.label,
                &mut node.stmt,
            ] {
                if *slot == Some(id) {
                    *slot = None;
                }
            }
        }
        Ok(())
    }

    /// Contained children in traversal order.
    ///
    /// Method yields its statements then its exit; If yields condition,
    /// then-branch, and else-branch when present; Loop yields condition
    /// then body; Block yields its statements; Label yields its statement.
    /// Every other kind, data nodes included, yields nothing.
    pub fn traversal_children(&self, id: FlowId) -> Vec<FlowId> {
        let node = self.node(id);
        match node.kind {
            FlowKind::Method => node.stmts.iter().copied().chain(node.exit).collect(),
            FlowKind::If => {
                let mut out = Vec::new();
                out.extend(node.expr);
                out.extend(node.then);
                out.extend(node.els);
                out
            }
            FlowKind::Loop => {
                let mut out = Vec::new();
                out.extend(node.expr);
                out.extend(node.body);
                out
            }
            FlowKind::Block => node.stmts.clone(),
            FlowKind::Label => node.stmt.into_iter().collect(),
            _ => Vec::new(),
        }
    }

    /// The set of (source text, target text) pairs over one edge relation.
    ///
    /// Distinct edges whose endpoint texts coincide collapse to one pair.
    pub fn cross_pairs(&self, edge: EdgeKind) -> BTreeSet<(String, String)> {
        let map = match edge {
            EdgeKind::CfNext => &self.cf_next,
            EdgeKind::DfNext => &self.df_next,
        };
        let mut out = BTreeSet::new();
        for (from, tos) in map {
            for to in tos {
                out.insert((self.node(*from).txt.clone(), self.node(*to).txt.clone()));
            }
        }
        out
    }

    /// Render the graph as Graphviz DOT.
    ///
    /// Nodes appear in id order labeled with text and kind; control-flow
    /// edges are solid, data-flow edges dashed, containment dotted.
    pub fn export_dot(&self) -> String {
        fn escape(text: &str) -> String {
            text.replace('\\', "\\\\").replace('"', "\\\"")
        }
        let mut out = String::from("digraph flowgraph {\n");
        for node in self.nodes.values() {
            out.push_str(&format!(
                "  n{} [label=\"{} ({})\"];\n",
                node.id,
                escape(&node.txt),
                node.kind.name()
            ));
        }
        for node in self.nodes.values() {
            for child in self.traversal_children(node.id) {
                out.push_str(&format!("  n{} -> n{child} [style=dotted];\n", node.id));
            }
        }
        for (from, to) in self.cf_edges() {
            out.push_str(&format!("  n{from} -> n{to};\n"));
        }
        for (from, to) in self.df_edges() {
            out.push_str(&format!("  n{from} -> n{to} [style=dashed];\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Serialize the full graph to JSON.
    pub fn export_json(&self) -> String {
        let repr = GraphRepr {
            nodes: self.nodes.values().cloned().collect(),
            cf_next: self.cf_edges().collect(),
            df_next: self.df_edges().collect(),
        };
        serde_json::to_string_pretty(&repr).expect("flow nodes serialize to JSON")
    }

    /// Rebuild a graph from its JSON export.
    pub fn import_json(text: &str) -> Result<FlowGraph> {
        let repr: GraphRepr = serde_json::from_str(text).map_err(|e| Error::SchemaError {
            path: "$".to_string(),
            message: e.to_string(),
        })?;
        let mut graph = FlowGraph::new();
        for node in repr.nodes {
            if graph.nodes.contains_key(&node.id) {
                return Err(Error::SchemaError {
                    path: "nodes".to_string(),
                    message: format!("duplicate node id {}", node.id),
                });
            }
            graph.nodes.insert(node.id, node);
        }
        graph.methods = graph
            .nodes
            .values()
            .filter(|n| n.kind == FlowKind::Method)
            .map(|n| n.id)
            .collect();
        for (from, to) in repr.cf_next {
            graph.add_cf_edge(from, to)?;
        }
        for (from, to) in repr.df_next {
            graph.add_df_edge(from, to)?;
        }
        Ok(graph)
    }
}
