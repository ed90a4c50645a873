//! Flow-graph construction for a small imperative Java subset.
//!
//! The pipeline has four stages: the [`frontend`] parses source text
//! (or loads an AST document) into an [`ast::AstUnit`]; [`transform`]
//! lowers the AST to a [`flowgraph::FlowGraph`] whose nodes carry
//! rendered statement text plus def/use variable lists; [`cfa`] links
//! every flow instruction to its control-flow successors; and [`dfa`]
//! links each definition to the instructions it reaches. The
//! [`harness`] runs the stages end to end and checks the resulting
//! edge sets against declarative expectation files, and [`generate`]
//! produces seeded random programs for testing the analyses at scale.
//!
//! ```
//! use flowgraph_core::flowgraph::EdgeKind;
//!
//! let unit = flowgraph_core::parse_source(
//!     "void m() { int i = 2; while (i > 0) { i--; } }",
//! )
//! .unwrap();
//! let (mut graph, _) = flowgraph_core::java_to_flowgraph(&unit).unwrap();
//! flowgraph_core::synthesize_cf_edges(&mut graph, false).unwrap();
//! flowgraph_core::synthesize_df_edges(&mut graph, false).unwrap();
//!
//! let cf = graph.cross_pairs(EdgeKind::CfNext);
//! assert!(cf.contains(&("m()".into(), "int i = 2;".into())));
//! let df = graph.cross_pairs(EdgeKind::DfNext);
//! assert!(df.contains(&("i--;".into(), "i > 0".into())));
//! ```

pub mod ast;
pub mod cfa;
pub mod dfa;
pub mod error;
pub mod flowgraph;
pub mod frontend;
pub mod generate;
pub mod harness;
pub mod render;
pub mod transform;

pub use ast::{AstUnit, NodeId, Operator, SourceKind, SourceNode};
pub use cfa::{cf_peek, cf_synth, synthesize_cf_edges, CfState};
pub use dfa::{df_oracle, find_nearest_definers, synthesize_df_edges};
pub use error::{Error, Result};
pub use flowgraph::{EdgeKind, FlowGraph, FlowId, FlowKind, FlowNode};
pub use frontend::{parse_source, validate_unit};
pub use generate::{generate_source, GenConfig};
pub use harness::{
    load_expectation, load_input, run_pipeline, run_pipeline_to, validate, Expectation,
    PipelineOptions, PipelineRun, SideExpectation, SideReport, Stage, StageTimings,
    ValidationReport,
};
pub use render::{operator_text, render};
pub use transform::{java_to_flowgraph, used_vars, TraceStore, Transform};
