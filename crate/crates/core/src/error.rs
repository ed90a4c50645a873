//! Error surface shared by every stage of the pipeline.

use thiserror::Error;

/// Errors produced by tokenizing, parsing, AST loading, graph editing,
/// transformation, and edge synthesis.
#[derive(Debug, Error)]
pub enum Error {
    /// A character outside the accepted lexical alphabet.
    #[error("unknown character {ch:?} at line {line}, column {col}")]
    UnknownCharacter { ch: char, line: u32, col: u32 },

    /// Malformed input at a known position.
    #[error("parse error at line {line}, column {col}: expected {expected}, found {found}")]
    ParseError {
        line: u32,
        col: u32,
        expected: String,
        found: String,
    },

    /// An identifier that does not resolve to a visible declaration.
    #[error("unresolved name '{0}'")]
    UnresolvedName(String),

    /// A break or continue label that does not resolve to an enclosing label.
    #[error("unresolved label '{0}'")]
    UnresolvedLabel(String),

    /// A structurally invalid document (unknown kind, missing field, bad shape).
    #[error("schema error at {path}: {message}")]
    SchemaError { path: String, message: String },

    /// A reference to a node id that does not exist in the document.
    #[error("reference to nonexistent node id {0}")]
    DanglingReference(u32),

    /// An edge endpoint that is not a flow instruction.
    #[error("node {0} is not a flow instruction")]
    NotFlowInstr(u32),

    /// A lookup of a graph node id that does not exist.
    #[error("no node with id {0}")]
    UnknownId(u32),

    /// A transformation rule invoked on a source node outside its domain.
    #[error("rule does not apply to a {0} node")]
    RuleMismatch(&'static str),

    /// No subrule of a dispatching rule accepts the source node.
    #[error("no rule applies to a {0} node")]
    NoApplicableRule(&'static str),

    /// An assignment target that does not denote exactly one variable.
    #[error("expected exactly one variable on the written side, found {0}")]
    MalformedLhs(usize),

    /// A structural node with no flow instruction inside it.
    #[error("structural node {0} contains no flow instruction")]
    EmptyContainer(u32),

    /// A labeled break whose label has no recorded successor.
    #[error("no recorded successor for label node {0}")]
    MissingLabelTarget(u32),

    /// A break or continue with no enclosing loop to act on.
    #[error("break or continue without an enclosing loop (node {0})")]
    MissingLoopContext(u32),

    /// An exit node followed by further traversal elements.
    #[error("exit node {0} is not the last element of its traversal")]
    ExitNotLast(u32),

    /// A structural node that needs a following element but has none.
    #[error("node {0} has no following element to link to")]
    AbsentSuccessor(u32),

    /// A downstream error tagged with the pipeline stage that raised it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    /// A file could not be read or written.
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Wrap an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// The stage tag if this error was raised inside a pipeline run.
    pub fn stage(&self) -> Option<&'static str> {
        match self {
            Error::Stage { stage, .. } => Some(stage),
            _ => None,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
