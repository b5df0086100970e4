//! Benchmarks for the hot paths: the generic translation's multiplication
//! against the hand-written oracle, one full diagram check, and a demo
//! program evaluation.

use std::collections::BTreeMap;
use std::rc::Rc;

use criterion::{criterion_group, criterion_main, Criterion};

use fx_cli::eval::{demo_stack, eval_with, StackKind};
use fx_cli::parser::parse_program;
use fx_core::harness::Budget;
use fx_core::instances::state::{lift_monad_trivially, make_state_adjunction};
use fx_core::monad::option_monad;
use fx_core::oracle::oracle_state;
use fx_core::registry::bool_ty;
use fx_core::translate::{check_translation_diagrams, translate};
use fx_core::universe::{values_of, FiniteType};

fn z2() -> FiniteType {
    FiniteType::Mod(2)
}

fn bench_translated_mult(c: &mut Criterion) {
    let adj = make_state_adjunction(z2());
    let lifted = lift_monad_trivially(&option_monad(), &adj);
    let derived = translate(Rc::new(adj), &lifted).expect("owners match");
    let oracle = oracle_state(&option_monad(), &z2());
    let budget = Budget::default();
    let ppx = derived.lift_type(&derived.lift_type(&bool_ty()));
    let inputs = values_of(&ppx, &budget);

    let mut group = c.benchmark_group("state-join");
    group.bench_function("derived", |b| {
        b.iter(|| {
            for input in &inputs {
                std::hint::black_box(derived.mult_value(&bool_ty(), input));
            }
        })
    });
    group.bench_function("oracle", |b| {
        b.iter(|| {
            for input in &inputs {
                std::hint::black_box(oracle.mult_value(&bool_ty(), input));
            }
        })
    });
    group.finish();
}

fn bench_diagram_cells(c: &mut Criterion) {
    let adj = Rc::new(make_state_adjunction(z2()));
    let lifted = lift_monad_trivially(&option_monad(), &adj);
    let budget = Budget::default().with_samples(16);
    c.bench_function("diagram-cells/state-option", |b| {
        b.iter(|| {
            let report = check_translation_diagrams(
                adj.clone(),
                &lifted,
                &[bool_ty()],
                &budget,
            )
            .expect("owners match");
            assert!(report.passed());
            std::hint::black_box(report);
        })
    });
}

fn bench_demo_eval(c: &mut Criterion) {
    let monad = demo_stack(StackKind::Derived).expect("demo stack builds");
    let expr = parse_program("let a = get in let _ = put(a + 1) in log(get) * 3").unwrap();
    let env: BTreeMap<String, i64> = BTreeMap::new();
    c.bench_function("demo-eval/state-chain", |b| {
        b.iter(|| {
            let outcome = eval_with(&expr, &env, 4, &monad).expect("evaluates");
            std::hint::black_box(outcome);
        })
    });
}

criterion_group!(
    benches,
    bench_translated_mult,
    bench_diagram_cells,
    bench_demo_eval
);
criterion_main!(benches);
