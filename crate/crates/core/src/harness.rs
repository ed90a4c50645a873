//! Validation surface: load a declarative expectation file, run the
//! pipeline over its input, and diff the resulting edge text pairs or
//! their counts against the expectation.
//!
//! An expectation file is JSON with an `input` path plus, per edge
//! relation, either an exact pair set, a lower-bound subset, a count,
//! or nothing.

use crate::ast::AstUnit;
use crate::cfa::synthesize_cf_edges;
use crate::dfa::synthesize_df_edges;
use crate::error::{Error, Result};
use crate::flowgraph::{EdgeKind, FlowGraph};
use crate::frontend::{load_ast_json, parse_source};
use crate::transform::java_to_flowgraph;
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

/// One (source text, target text) edge as compared by validation.
pub type TxtPair = (String, String);

/// The set such pairs are collected into; equal texts collapse.
pub type PairSet = BTreeSet<TxtPair>;

/// What a validation run expects of one edge relation.
#[derive(Clone, Debug, PartialEq)]
pub enum SideExpectation {
    /// No expectation recorded; the side is reported as skipped.
    Skip,
    /// The actual pair set must equal this set exactly.
    Pairs(PairSet),
    /// Every listed pair must be present; extras are allowed.
    Subset(PairSet),
    /// The actual pair set must have exactly this many elements.
    Count(usize),
}

/// A parsed expectation file.
#[derive(Clone, Debug)]
pub struct Expectation {
    /// The program to analyze: `.json` loads an AST document, anything
    /// else is parsed as source text. Relative paths are resolved
    /// against the expectation file's directory.
    pub input: PathBuf,
    pub cf: SideExpectation,
    pub df: SideExpectation,
}

/// Toggles threaded through the pipeline stages.
#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    /// Link statements with no following element to the exit instead of
    /// leaving them unlinked or failing.
    pub implicit_exit_fallthrough: bool,
    /// Retain Var and Param nodes after data-flow synthesis.
    pub keep_vars: bool,
}

/// How far to run the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    /// Stop after transformation: structure only, no synthesized edges.
    Struct,
    /// Stop after control-flow synthesis.
    Cf,
    /// Run everything including data-flow synthesis and pruning.
    Df,
}

/// Wall-clock milliseconds spent in each pipeline stage.
#[derive(Clone, Copy, Debug, Default)]
pub struct StageTimings {
    pub parse_ms: f64,
    pub transform_ms: f64,
    pub cf_ms: f64,
    pub df_ms: f64,
}

/// A completed pipeline run.
#[derive(Debug)]
pub struct PipelineRun {
    pub graph: FlowGraph,
    pub timings: StageTimings,
}

/// Comparison outcome for one edge relation.
#[derive(Clone, Debug, Default)]
pub struct SideReport {
    /// True when the expectation recorded nothing for this side.
    pub skipped: bool,
    /// Expected pairs absent from the actual set.
    pub missing: PairSet,
    /// Actual pairs absent from the expected set; always empty in
    /// subset mode.
    pub extra: PairSet,
    pub count_expected: Option<usize>,
    pub count_actual: Option<usize>,
}

impl SideReport {
    /// Whether this side passed (skipped sides pass vacuously).
    pub fn ok(&self) -> bool {
        let counts_ok = match (self.count_expected, self.count_actual) {
            (Some(expected), Some(actual)) => expected == actual,
            _ => true,
        };
        self.missing.is_empty() && self.extra.is_empty() && counts_ok
    }

    fn against(expectation: &SideExpectation, actual: &PairSet) -> SideReport {
        match expectation {
            SideExpectation::Skip => SideReport {
                skipped: true,
                ..SideReport::default()
            },
            SideExpectation::Pairs(expected) => SideReport {
                missing: expected.difference(actual).cloned().collect(),
                extra: actual.difference(expected).cloned().collect(),
                ..SideReport::default()
            },
            SideExpectation::Subset(expected) => SideReport {
                missing: expected.difference(actual).cloned().collect(),
                ..SideReport::default()
            },
            SideExpectation::Count(expected) => SideReport {
                count_expected: Some(*expected),
                count_actual: Some(actual.len()),
                ..SideReport::default()
            },
        }
    }

    fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("skipped".into(), json!(self.skipped));
        map.insert("missing".into(), pairs_json(&self.missing));
        map.insert("extra".into(), pairs_json(&self.extra));
        if let Some(expected) = self.count_expected {
            map.insert("count_expected".into(), json!(expected));
        }
        if let Some(actual) = self.count_actual {
            map.insert("count_actual".into(), json!(actual));
        }
        Value::Object(map)
    }
}

/// Everything a validation run reports.
#[derive(Debug)]
pub struct ValidationReport {
    /// True when both sides passed and the pipeline did not error.
    pub pass: bool,
    /// The pipeline error that aborted the run, if any.
    pub error: Option<String>,
    pub cf: SideReport,
    pub df: SideReport,
    pub timings: StageTimings,
}

impl ValidationReport {
    /// Machine-readable report.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("pass".into(), json!(self.pass));
        if let Some(error) = &self.error {
            map.insert("error".into(), json!(error));
        }
        map.insert("cf".into(), self.cf.to_json());
        map.insert("df".into(), self.df.to_json());
        map.insert(
            "timings_ms".into(),
            json!({
                "parse": self.timings.parse_ms,
                "transform": self.timings.transform_ms,
                "cf": self.timings.cf_ms,
                "df": self.timings.df_ms,
            }),
        );
        Value::Object(map)
    }

    /// Human-readable report, one line per side plus diff details.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(error) = &self.error {
            out.push_str(&format!("error: {error}\n"));
            return out;
        }
        for (name, side) in [("cf", &self.cf), ("df", &self.df)] {
            if side.skipped {
                out.push_str(&format!("{name}: skipped (no expectation)\n"));
                continue;
            }
            if let (Some(expected), Some(actual)) = (side.count_expected, side.count_actual) {
                let verdict = if expected == actual { "ok" } else { "mismatch" };
                out.push_str(&format!(
                    "{name}: count {verdict} (expected {expected}, actual {actual})\n"
                ));
                continue;
            }
            if side.ok() {
                out.push_str(&format!("{name}: ok\n"));
                continue;
            }
            out.push_str(&format!(
                "{name}: {} missing, {} unexpected\n",
                side.missing.len(),
                side.extra.len()
            ));
            for (from, to) in &side.missing {
                out.push_str(&format!("  missing: [{from:?} {to:?}]\n"));
            }
            for (from, to) in &side.extra {
                out.push_str(&format!("  unexpected: [{from:?} {to:?}]\n"));
            }
        }
        out.push_str(if self.pass {
            "result: pass\n"
        } else {
            "result: fail\n"
        });
        out
    }
}

fn pairs_json(pairs: &PairSet) -> Value {
    Value::Array(pairs.iter().map(|(from, to)| json!([from, to])).collect())
}

fn schema_error(path: &Path, message: impl Into<String>) -> Error {
    Error::SchemaError {
        path: path.display().to_string(),
        message: message.into(),
    }
}

fn parse_pairs(path: &Path, key: &str, value: &Value) -> Result<PairSet> {
    let items = value
        .as_array()
        .ok_or_else(|| schema_error(path, format!("'{key}' must be an array of pairs")))?;
    let mut out = PairSet::new();
    for item in items {
        let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            schema_error(
                path,
                format!("every '{key}' entry must be a two-element array"),
            )
        })?;
        let from = pair[0].as_str().filter(|s| !s.is_empty());
        let to = pair[1].as_str().filter(|s| !s.is_empty());
        match (from, to) {
            (Some(from), Some(to)) => {
                out.insert((from.to_string(), to.to_string()));
            }
            _ => {
                return Err(schema_error(
                    path,
                    format!("every '{key}' entry must hold two non-empty strings"),
                ))
            }
        }
    }
    Ok(out)
}

fn parse_side(path: &Path, doc: &Map<String, Value>, key: &str) -> Result<SideExpectation> {
    let subset_key = format!("{key}_subset");
    let exact = doc.get(key);
    let subset = doc.get(subset_key.as_str());
    if exact.is_some() && subset.is_some() {
        return Err(schema_error(
            path,
            format!("'{key}' and '{subset_key}' are mutually exclusive"),
        ));
    }
    if let Some(value) = exact {
        return match value {
            Value::Array(_) => Ok(SideExpectation::Pairs(parse_pairs(path, key, value)?)),
            Value::Number(n) => {
                let count = n.as_u64().ok_or_else(|| {
                    schema_error(
                        path,
                        format!("'{key}' count must be a non-negative integer"),
                    )
                })?;
                Ok(SideExpectation::Count(count as usize))
            }
            _ => Err(schema_error(
                path,
                format!("'{key}' must be an array of pairs or a count"),
            )),
        };
    }
    if let Some(value) = subset {
        return Ok(SideExpectation::Subset(parse_pairs(
            path,
            subset_key.as_str(),
            value,
        )?));
    }
    Ok(SideExpectation::Skip)
}

/// Parse an expectation file.
pub fn load_expectation(path: &Path) -> Result<Expectation> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| schema_error(path, e.to_string()))?;
    let doc = value
        .as_object()
        .ok_or_else(|| schema_error(path, "expectation must be a JSON object"))?;
    for key in doc.keys() {
        if !matches!(
            key.as_str(),
            "input" | "cf" | "cf_subset" | "df" | "df_subset"
        ) {
            return Err(schema_error(path, format!("unknown key '{key}'")));
        }
    }
    let input = doc
        .get("input")
        .and_then(Value::as_str)
        .ok_or_else(|| schema_error(path, "'input' must be a string"))?;
    let mut input = PathBuf::from(input);
    if input.is_relative() {
        if let Some(dir) = path.parent() {
            input = dir.join(input);
        }
    }
    Ok(Expectation {
        input,
        cf: parse_side(path, doc, "cf")?,
        df: parse_side(path, doc, "df")?,
    })
}

/// Load a pipeline input: `.json` files as AST documents, anything
/// else as source text.
pub fn load_input(input: &Path) -> Result<AstUnit> {
    if input.extension().is_some_and(|e| e == "json") {
        load_ast_json(input)
    } else {
        fs::read_to_string(input)
            .map_err(|e| Error::Io {
                path: input.display().to_string(),
                message: e.to_string(),
            })
            .and_then(|text| parse_source(&text))
    }
}

/// Run the pipeline over a source or AST file up to the given stage.
pub fn run_pipeline_to(
    input: &Path,
    options: &PipelineOptions,
    stage: Stage,
) -> Result<PipelineRun> {
    let mut timings = StageTimings::default();

    let started = Instant::now();
    let unit = load_input(input).map_err(|e| e.in_stage("frontend"))?;
    timings.parse_ms = started.elapsed().as_secs_f64() * 1000.0;

    let started = Instant::now();
    let (mut graph, _) = java_to_flowgraph(&unit).map_err(|e| e.in_stage("transform"))?;
    timings.transform_ms = started.elapsed().as_secs_f64() * 1000.0;

    if stage != Stage::Struct {
        let started = Instant::now();
        synthesize_cf_edges(&mut graph, options.implicit_exit_fallthrough)
            .map_err(|e| e.in_stage("cf"))?;
        timings.cf_ms = started.elapsed().as_secs_f64() * 1000.0;
    }

    if stage == Stage::Df {
        let started = Instant::now();
        synthesize_df_edges(&mut graph, options.keep_vars).map_err(|e| e.in_stage("df"))?;
        timings.df_ms = started.elapsed().as_secs_f64() * 1000.0;
    }

    Ok(PipelineRun { graph, timings })
}

/// Run the whole pipeline over a source or AST file.
pub fn run_pipeline(input: &Path, options: &PipelineOptions) -> Result<PipelineRun> {
    run_pipeline_to(input, options, Stage::Df)
}

/// Run the pipeline over an expectation's input and compare both sides.
///
/// Pipeline failures do not raise; they are reported in `error` with
/// both sides skipped.
pub fn validate(expectation: &Expectation, options: &PipelineOptions) -> ValidationReport {
    match run_pipeline(&expectation.input, options) {
        Err(error) => ValidationReport {
            pass: false,
            error: Some(error.to_string()),
            cf: SideReport {
                skipped: true,
                ..SideReport::default()
            },
            df: SideReport {
                skipped: true,
                ..SideReport::default()
            },
            timings: StageTimings::default(),
        },
        Ok(run) => {
            let cf = SideReport::against(&expectation.cf, &run.graph.cross_pairs(EdgeKind::CfNext));
            let df = SideReport::against(&expectation.df, &run.graph.cross_pairs(EdgeKind::DfNext));
            ValidationReport {
                pass: cf.ok() && df.ok(),
                error: None,
                cf,
                df,
                timings: run.timings,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowgraph::FlowKind;
    use crate::frontend::dump_ast_json;

    const TEST4_SOURCE: &str = "void testMethod() { int i = 100; while (i > 0) { while (i > 50) { i = i - 10; if (i == 50) break; } i--; } }";

    const TEST4_CF: [(&str, &str); 11] = [
        ("testMethod()", "int i = 100;"),
        ("int i = 100;", "i > 0"),
        ("i > 0", "Exit"),
        ("i > 0", "i > 50"),
        ("i > 50", "i--;"),
        ("i > 50", "i = i - 10;"),
        ("i = i - 10;", "i == 50"),
        ("i == 50", "break;"),
        ("i == 50", "i > 50"),
        ("break;", "i--;"),
        ("i--;", "i > 0"),
    ];

    const TEST4_DF: [(&str, &str); 12] = [
        ("int i = 100;", "i > 0"),
        ("int i = 100;", "i > 50"),
        ("int i = 100;", "i = i - 10;"),
        ("int i = 100;", "i--;"),
        ("i = i - 10;", "i == 50"),
        ("i = i - 10;", "i > 50"),
        ("i = i - 10;", "i = i - 10;"),
        ("i = i - 10;", "i--;"),
        ("i--;", "i > 0"),
        ("i--;", "i > 50"),
        ("i--;", "i = i - 10;"),
        ("i--;", "i--;"),
    ];

    fn temp_dir(tag: &str) -> PathBuf {
        let dir =
            std::env::temp_dir().join(format!("flowgraph-harness-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        dir
    }

    fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
        let path = dir.join(name);
        fs::write(&path, content).unwrap();
        path
    }

    fn pairs_value(pairs: &[(&str, &str)]) -> String {
        let items: Vec<String> = pairs
            .iter()
            .map(|(a, b)| format!("[{a:?}, {b:?}]"))
            .collect();
        format!("[{}]", items.join(", "))
    }

    #[test]
    fn expectation_files_parse_in_every_mode() {
        let dir = temp_dir("modes");
        let spec = write(
            &dir,
            "pairs.json",
            r#"{"input": "a.java", "cf": [["x", "y"]], "df": 3}"#,
        );
        let exp = load_expectation(&spec).unwrap();
        assert_eq!(exp.input, dir.join("a.java"));
        assert_eq!(
            exp.cf,
            SideExpectation::Pairs([("x".to_string(), "y".to_string())].into())
        );
        assert_eq!(exp.df, SideExpectation::Count(3));

        let spec = write(&dir, "skip.json", r#"{"input": "a.java"}"#);
        let exp = load_expectation(&spec).unwrap();
        assert_eq!(exp.cf, SideExpectation::Skip);
        assert_eq!(exp.df, SideExpectation::Skip);

        let spec = write(
            &dir,
            "subset.json",
            r#"{"input": "/abs/a.java", "cf_subset": [["x", "y"]]}"#,
        );
        let exp = load_expectation(&spec).unwrap();
        assert_eq!(exp.input, PathBuf::from("/abs/a.java"));
        assert!(matches!(exp.cf, SideExpectation::Subset(_)));
    }

    #[test]
    fn malformed_expectation_files_are_rejected() {
        let dir = temp_dir("bad");
        for (name, content) in [
            ("unknown-key.json", r#"{"input": "a.java", "cfg": []}"#),
            (
                "both-modes.json",
                r#"{"input": "a.java", "cf": [], "cf_subset": []}"#,
            ),
            ("negative.json", r#"{"input": "a.java", "cf": -1}"#),
            ("float.json", r#"{"input": "a.java", "cf": 1.5}"#),
            ("no-input.json", r#"{"cf": []}"#),
            ("bad-pair.json", r#"{"input": "a.java", "cf": [["x"]]}"#),
            (
                "empty-text.json",
                r#"{"input": "a.java", "cf": [["", "y"]]}"#,
            ),
            ("not-object.json", r#"[1, 2]"#),
        ] {
            let spec = write(&dir, name, content);
            assert!(
                matches!(load_expectation(&spec), Err(Error::SchemaError { .. })),
                "{name} should be rejected"
            );
        }
    }

    #[test]
    fn exact_expectations_validate_cleanly() {
        let dir = temp_dir("exact");
        write(&dir, "Test4.java", TEST4_SOURCE);
        let spec = write(
            &dir,
            "Test4.spec.json",
            &format!(
                r#"{{"input": "Test4.java", "cf": {}, "df": {}}}"#,
                pairs_value(&TEST4_CF),
                pairs_value(&TEST4_DF)
            ),
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(report.pass, "{}", report.render_text());
        assert!(report.cf.missing.is_empty() && report.cf.extra.is_empty());
        assert!(report.df.missing.is_empty() && report.df.extra.is_empty());
        assert!(!report.cf.skipped && !report.df.skipped);
    }

    #[test]
    fn perturbed_expectations_report_exactly_one_difference() {
        let dir = temp_dir("perturbed");
        write(&dir, "Test4.java", TEST4_SOURCE);

        let mut padded: Vec<(&str, &str)> = TEST4_CF.to_vec();
        padded.push(("no such", "pair"));
        let spec = write(
            &dir,
            "added.json",
            &format!(
                r#"{{"input": "Test4.java", "cf": {}}}"#,
                pairs_value(&padded)
            ),
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        assert_eq!(report.cf.missing.len(), 1);
        assert_eq!(report.cf.extra.len(), 0);
        assert!(report.df.skipped);

        let trimmed: Vec<(&str, &str)> = TEST4_CF[1..].to_vec();
        let spec = write(
            &dir,
            "removed.json",
            &format!(
                r#"{{"input": "Test4.java", "cf": {}}}"#,
                pairs_value(&trimmed)
            ),
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        assert_eq!(report.cf.missing.len(), 0);
        assert_eq!(report.cf.extra.len(), 1);
    }

    #[test]
    fn count_mode_compares_set_cardinality() {
        let dir = temp_dir("count");
        write(&dir, "Test4.java", TEST4_SOURCE);
        let spec = write(
            &dir,
            "good.json",
            r#"{"input": "Test4.java", "cf": 11, "df": 12}"#,
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(report.pass);
        assert_eq!(report.cf.count_actual, Some(11));

        let spec = write(&dir, "bad.json", r#"{"input": "Test4.java", "cf": 10}"#);
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        assert_eq!(report.cf.count_expected, Some(10));
        assert_eq!(report.cf.count_actual, Some(11));
    }

    #[test]
    fn subset_mode_allows_extras_but_not_absences() {
        let dir = temp_dir("subset");
        write(&dir, "Test4.java", TEST4_SOURCE);
        let spec = write(
            &dir,
            "ok.json",
            r#"{"input": "Test4.java", "cf_subset": [["testMethod()", "int i = 100;"]]}"#,
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(report.pass);

        let spec = write(
            &dir,
            "absent.json",
            r#"{"input": "Test4.java", "cf_subset": [["no such", "pair"]]}"#,
        );
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        assert_eq!(report.cf.missing.len(), 1);
        assert!(report.cf.extra.is_empty());
    }

    #[test]
    fn pipeline_failures_are_reported_not_raised() {
        let dir = temp_dir("errs");
        let spec = write(&dir, "gone.json", r#"{"input": "gone.java", "cf": 1}"#);
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        let error = report.error.unwrap();
        assert!(error.contains("frontend"), "{error}");

        write(&dir, "broken.java", "void m() { int = ; }");
        let spec = write(&dir, "broken.spec.json", r#"{"input": "broken.java"}"#);
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        assert!(!report.pass);
        assert!(report.error.unwrap().contains("frontend"));
    }

    #[test]
    fn stages_gate_which_edges_exist() {
        let dir = temp_dir("stages");
        let input = write(&dir, "Test4.java", TEST4_SOURCE);
        let options = PipelineOptions::default();

        let run = run_pipeline_to(&input, &options, Stage::Struct).unwrap();
        assert_eq!(run.graph.cf_edges().count(), 0);
        assert_eq!(run.graph.df_edges().count(), 0);
        assert!(run
            .graph
            .iter()
            .any(|n| matches!(n.kind, FlowKind::Var | FlowKind::Param)));

        let run = run_pipeline_to(&input, &options, Stage::Cf).unwrap();
        assert!(run.graph.cf_edges().count() > 0);
        assert_eq!(run.graph.df_edges().count(), 0);

        let run = run_pipeline_to(&input, &options, Stage::Df).unwrap();
        assert!(run.graph.df_edges().count() > 0);
        assert!(run
            .graph
            .iter()
            .all(|n| !matches!(n.kind, FlowKind::Var | FlowKind::Param)));
    }

    #[test]
    fn ast_documents_analyze_like_their_source() {
        let dir = temp_dir("ast");
        let source = write(&dir, "Test4.java", TEST4_SOURCE);
        let unit = parse_source(TEST4_SOURCE).unwrap();
        let doc = write(&dir, "Test4.ast.json", &dump_ast_json(&unit));
        let options = PipelineOptions::default();
        let from_source = run_pipeline(&source, &options).unwrap();
        let from_doc = run_pipeline(&doc, &options).unwrap();
        assert_eq!(
            from_source.graph.cross_pairs(EdgeKind::CfNext),
            from_doc.graph.cross_pairs(EdgeKind::CfNext)
        );
        assert_eq!(
            from_source.graph.cross_pairs(EdgeKind::DfNext),
            from_doc.graph.cross_pairs(EdgeKind::DfNext)
        );
    }

    #[test]
    fn report_json_has_the_documented_shape() {
        let dir = temp_dir("shape");
        write(&dir, "Test4.java", TEST4_SOURCE);
        let spec = write(&dir, "spec.json", r#"{"input": "Test4.java", "cf": 11}"#);
        let report = validate(
            &load_expectation(&spec).unwrap(),
            &PipelineOptions::default(),
        );
        let value = report.to_json();
        assert_eq!(value["pass"], Value::Bool(true));
        assert!(value["cf"]["missing"].is_array());
        assert!(value["cf"]["extra"].is_array());
        assert_eq!(value["cf"]["count_expected"], json!(11));
        assert!(value["df"]["skipped"].as_bool().unwrap());
        for stage in ["parse", "transform", "cf", "df"] {
            assert!(value["timings_ms"][stage].is_number());
        }
        assert!(value.get("error").is_none());
    }
}
