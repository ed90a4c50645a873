//! Command-line driver: analyze a program into a flow graph, validate
//! it against an expectation file, or print its rendered statements.
//!
//! Exit codes: 0 on success (validation passed), 1 when validation
//! found differences, 2 on any error (usage, IO, parsing, analysis).

use clap::{Parser, Subcommand, ValueEnum};
use flowgraph_core::error::Error;
use flowgraph_core::harness::{self, PipelineOptions, Stage};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "flowgraph",
    version,
    about = "Flow-graph analysis for a small imperative Java subset"
)]
struct Cli {
    /// Link statements with no following element to the method exit
    /// instead of leaving them unlinked or failing.
    #[arg(long, global = true)]
    implicit_exit_fallthrough: bool,

    /// Retain Var and Param nodes after data-flow synthesis.
    #[arg(long, global = true)]
    keep_vars: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline over a source (.java) or AST (.json) file and
    /// print the resulting graph.
    Analyze {
        input: PathBuf,

        /// How far to run: structure only, control flow, or data flow.
        #[arg(long, value_enum, default_value_t = StageArg::Df)]
        stage: StageArg,

        /// Output format.
        #[arg(long, value_enum, default_value_t = EmitArg::Json)]
        emit: EmitArg,

        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Run the pipeline over an expectation file's input and compare
    /// the edge sets it declares.
    Validate {
        spec: PathBuf,

        /// Print the report as JSON instead of text.
        #[arg(long)]
        json_report: bool,
    },

    /// Print the rendered text of every statement, one per line, in
    /// document order.
    Render { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum StageArg {
    Struct,
    Cf,
    Df,
}

impl From<StageArg> for Stage {
    fn from(stage: StageArg) -> Stage {
        match stage {
            StageArg::Struct => Stage::Struct,
            StageArg::Cf => Stage::Cf,
            StageArg::Df => Stage::Df,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = PipelineOptions {
        implicit_exit_fallthrough: cli.implicit_exit_fallthrough,
        keep_vars: cli.keep_vars,
    };
    match run(cli.command, &options) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, options: &PipelineOptions) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze {
            input,
            stage,
            emit,
            output,
        } => {
            let run = harness::run_pipeline_to(&input, options, stage.into())?;
            let text = match emit {
                EmitArg::Json => run.graph.export_json(),
                EmitArg::Dot => run.graph.export_dot(),
            };
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { spec, json_report } => {
            let expectation = harness::load_expectation(&spec)?;
            let report = harness::validate(&expectation, options);
            if json_report {
                let value = report.to_json();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("report serializes")
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.error.is_some() {
                ExitCode::from(2)
            } else if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render { input } => {
            let unit = harness::load_input(&input)?;
            for &method in &unit.methods {
                let mut stack = vec![method];
                while let Some(id) = stack.pop() {
                    let node = unit.node(id);
                    if node.kind.is_statement() {
                        println!("{}", flowgraph_core::render(&unit, id));
                    }
                    let mut children = unit.containment_children(id);
                    children.reverse();
                    stack.extend(children);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
