//! Per-stage and end-to-end timings on a small fixture and a larger
//! generated program.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use flowgraph_core::{
    generate_source, java_to_flowgraph, parse_source, synthesize_cf_edges, synthesize_df_edges,
    GenConfig,
};
use std::fs;
use std::hint::black_box;
use std::path::Path;

fn fixture_source() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/Test4.java");
    fs::read_to_string(path).expect("fixture is readable")
}

fn generated_source() -> String {
    generate_source(&GenConfig {
        max_statements: 120,
        max_depth: 4,
        seed: 7,
    })
}

fn stage_benches(c: &mut Criterion) {
    let inputs = [
        ("Test4", fixture_source()),
        ("generated", generated_source()),
    ];
    for (label, source) in inputs {
        let unit = parse_source(&source).expect("source parses");
        let (structure, _) = java_to_flowgraph(&unit).expect("unit transforms");
        let mut with_cf = structure.clone();
        synthesize_cf_edges(&mut with_cf, false).expect("control flow synthesizes");

        c.bench_function(&format!("parse/{label}"), |b| {
            b.iter(|| parse_source(black_box(&source)).unwrap())
        });
        c.bench_function(&format!("transform/{label}"), |b| {
            b.iter(|| java_to_flowgraph(black_box(&unit)).unwrap())
        });
        c.bench_function(&format!("cf/{label}"), |b| {
            b.iter_batched(
                || structure.clone(),
                |mut graph| synthesize_cf_edges(&mut graph, false).unwrap(),
                BatchSize::SmallInput,
            )
        });
        c.bench_function(&format!("df/{label}"), |b| {
            b.iter_batched(
                || with_cf.clone(),
                |mut graph| synthesize_df_edges(&mut graph, false).unwrap(),
                BatchSize::SmallInput,
            )
        });
        c.bench_function(&format!("end_to_end/{label}"), |b| {
            b.iter(|| {
                let unit = parse_source(black_box(&source)).unwrap();
                let (mut graph, _) = java_to_flowgraph(&unit).unwrap();
                synthesize_cf_edges(&mut graph, false).unwrap();
                synthesize_df_edges(&mut graph, false).unwrap();
                graph.len()
            })
        });
    }
}

criterion_group!(benches, stage_benches);
criterion_main!(benches);
