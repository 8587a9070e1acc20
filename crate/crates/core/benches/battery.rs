//! Parallel against sequential execution on the suite battery.

use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fovea::modcat::{enumerate_indecomposables, Algebra};
use fovea::quiver::parse_bound_quiver;
use fovea::suite::{run_suite, Input, Options, Suite};
use fovea::Exec;

fn input(name: &str) -> Input {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    Input::read(&p.to_string_lossy()).expect("fixture readable")
}

const EXECS: [(&str, Exec); 2] = [
    ("parallel", Exec::Parallel),
    ("sequential", Exec::Sequential),
];

fn suites(c: &mut Criterion) {
    let runs = [
        (
            Suite::PhiIdentities,
            vec![input("line-k2.vq"), input("nakayama2.vq")],
        ),
        (
            Suite::Kg0,
            vec![input("line-k2.vq"), input("a3.bq"), input("kronecker.bq")],
        ),
    ];
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    for (suite, inputs) in &runs {
        for (name, exec) in EXECS {
            let opts = Options {
                exec,
                ..Options::default()
            };
            g.bench_with_input(BenchmarkId::new(suite.name(), name), inputs, |b, ins| {
                b.iter(|| run_suite(*suite, ins, &opts).unwrap())
            });
        }
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let bq = parse_bound_quiver(&input("kronecker.bq").text).unwrap();
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (name, exec) in EXECS {
        let alg = Algebra::new(&bq).unwrap().with_exec(exec);
        g.bench_function(BenchmarkId::new("kronecker", name), |b| {
            b.iter(|| enumerate_indecomposables(&alg, 12, 256).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, suites, enumeration);
criterion_main!(benches);
