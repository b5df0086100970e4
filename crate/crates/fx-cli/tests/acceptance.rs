//! Acceptance suite: every gate criterion, one pass/fail line each.
//!
//! Run with `cargo test -p fx-cli --test acceptance -- --nocapture` to see
//! the per-criterion lines; the test fails if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::rc::Rc;
use std::time::{Duration, Instant};

use fx_cli::corpus::corpus;
use fx_cli::eval::{demo_stack, eval_with, StackKind};
use fx_cli::parser::parse_program;
use fx_core::adjunction::check_triangle_identities;
use fx_core::fixtures;
use fx_core::harness::Budget;
use fx_core::instances::error::make_error_adjunction;
use fx_core::instances::reader::make_reader_adjunction;
use fx_core::instances::state::make_state_adjunction;
use fx_core::instances::writer::{
    check_distributive_law, check_mset_lift, make_writer_adjunction,
};
use fx_core::laws::check_strength_laws;
use fx_core::monad::canonical_strength;
use fx_core::monoid::Monoid;
use fx_core::registry::{bool_ty, standard_monoids, unit_ty, z2, z3, BaseMonad};
use fx_core::suites;
use fx_core::Adjunction;

struct Outcome {
    label: &'static str,
    passed: bool,
    elapsed: Duration,
    detail: String,
}

fn check(
    outcomes: &mut Vec<Outcome>,
    label: &'static str,
    bound: Option<Duration>,
    run: impl FnOnce() -> Result<String, String>,
) {
    let start = Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    let within_bound = bound.is_none_or(|b| elapsed <= b);
    let (passed, detail) = match result {
        Ok(detail) if within_bound => (true, detail),
        Ok(detail) => (false, format!("{detail}; exceeded {bound:?}")),
        Err(detail) => (false, detail),
    };
    outcomes.push(Outcome {
        label,
        passed,
        elapsed,
        detail,
    });
}

fn assert_all_pass(report: &fx_core::LawReport, what: &str) -> Result<(), String> {
    if report.passed() {
        Ok(())
    } else {
        Err(format!("{what} failing: {:?}", report.failing()))
    }
}

fn fx_binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fx"))
}

#[test]
fn acceptance() {
    let budget = Budget::default();
    let bases = BaseMonad::all();
    let mut outcomes = Vec::new();

    // 1. Triangle identities, exhaustive over {1, bool, z3}, all instances.
    check(
        &mut outcomes,
        "criterion 1: triangle identities hold exhaustively for all four instances",
        Some(Duration::from_secs(10)),
        || {
            let universe = [unit_ty(), bool_ty(), z3()];
            let mut instances: Vec<Rc<dyn Adjunction>> =
                vec![Rc::new(make_state_adjunction(z2()))];
            for monoid in standard_monoids() {
                instances.push(Rc::new(make_writer_adjunction(monoid).unwrap()));
            }
            instances.push(Rc::new(make_reader_adjunction(z2())));
            instances.push(Rc::new(make_error_adjunction(z2())));
            let mut cases = 0;
            for adj in &instances {
                let report = check_triangle_identities(adj.as_ref(), &universe, &budget);
                assert_all_pass(&report, &adj.name())?;
                cases += report.total_cases();
            }
            Ok(format!("{} instances, {cases} cases", instances.len()))
        },
    );

    // 2. Translated monads pass functor/monad laws; every diagram cell
    //    passes individually for every (instance, base) pair.
    let mut translation_slot: Option<fx_core::LawReport> = None;
    check(
        &mut outcomes,
        "criterion 2: translated monads lawful, all diagram cells pass per (instance, base)",
        Some(Duration::from_secs(60)),
        || {
            let translation = suites::suite_translation(&budget, &bases);
            assert_all_pass(&translation, "translation suite")?;
            let cells = [
                "unit-diagram/counit-unit-triangle-right",
                "unit-diagram/counit-unit-triangle-left",
                "unit-diagram/monad-left-identity",
                "unit-diagram/monad-right-identity",
                "unit-diagram/unit-naturality-square",
                "unit-diagram/counit-naturality-square",
                "assoc-diagram/counit-naturality-square-a",
                "assoc-diagram/counit-naturality-square-b",
                "assoc-diagram/mult-naturality-square",
                "assoc-diagram/monad-associativity-square",
            ];
            let instances = [
                "state(z2)",
                "writer(z4-add)",
                "writer(bool-and)",
                "reader(z2)",
                "error(z2)",
            ];
            let mut seen = 0;
            for instance in instances {
                for base in bases {
                    for cell in cells {
                        let name = format!("{instance}/{}/{cell}", base.name());
                        let found = translation
                            .checks
                            .iter()
                            .find(|c| c.name == name)
                            .ok_or_else(|| format!("missing cell check {name}"))?;
                        if !found.passed() {
                            return Err(format!("cell {name} failed"));
                        }
                        seen += 1;
                    }
                }
            }
            let detail = format!(
                "{seen} named cells over {} pairs, {} cases total",
                instances.len() * bases.len(),
                translation.total_cases()
            );
            translation_slot = Some(translation);
            Ok(detail)
        },
    );
    let translation = translation_slot.unwrap_or_default();

    // 3. Differential equivalence with the transformer oracles.
    check(
        &mut outcomes,
        "criterion 3: derived unit and mult match the oracle transformers with zero mismatches",
        Some(Duration::from_secs(60)),
        || {
            let mut cases = 0;
            for report in [
                suites::suite_state(&budget, &bases),
                suites::suite_writer(&budget, &bases),
                suites::suite_reader(&budget, &bases),
                suites::suite_error(&budget, &bases),
            ] {
                for check in &report.checks {
                    let differential = check.name.ends_with("carrier-agreement")
                        || check.name.ends_with("unit-vs-oracle")
                        || check.name.ends_with("mult-vs-oracle");
                    if differential {
                        if !check.passed() {
                            return Err(format!(
                                "{}/{} has {} mismatches",
                                report.suite,
                                check.name,
                                check.failures()
                            ));
                        }
                        cases += check.cases;
                    }
                }
            }
            Ok(format!("{cases} differential cases"))
        },
    );

    // 4. Strength suite, exhaustive, plus verdict equivalence with the
    //    distributive-law reading on passing and corrupted strengths.
    check(
        &mut outcomes,
        "criterion 4: strength axioms exhaustive; distributive-law verdict matches",
        Some(Duration::from_secs(10)),
        || {
            let option = BaseMonad::Option.descriptor();
            let list = BaseMonad::List.descriptor();
            let option_universe = [bool_ty(), z3()];
            let list_universe = [bool_ty()];

            let option_strength = canonical_strength(&option);
            let report =
                check_strength_laws(&option, &option_strength, &option_universe, &budget);
            assert_all_pass(&report, "option strength")?;
            let option_cases = report.total_cases();

            let list_strength = canonical_strength(&list);
            let report = check_strength_laws(&list, &list_strength, &list_universe, &budget);
            assert_all_pass(&report, "list strength")?;
            let list_cases = report.total_cases();

            for (m, t, universe) in [
                (&option, &option_strength, &option_universe[..]),
                (&list, &list_strength, &list_universe[..]),
            ] {
                for monoid in standard_monoids() {
                    let dist = check_distributive_law(m, t, &monoid, universe, &budget);
                    let strength = check_strength_laws(m, t, universe, &budget);
                    if dist.passed() != strength.passed() {
                        return Err(format!(
                            "verdicts diverge for {} over {}",
                            m.name, monoid.name
                        ));
                    }
                }
            }

            let (m, corrupted) = fixtures::corrupted_strength();
            let strength = check_strength_laws(&m, &corrupted, &[bool_ty()], &budget);
            let dist = check_distributive_law(
                &m,
                &corrupted,
                &Monoid::bool_and(),
                &[bool_ty()],
                &budget,
            );
            if strength.passed() || dist.passed() {
                return Err("corrupted strength was not rejected".to_string());
            }
            Ok(format!(
                "option: {option_cases} cases, list: {list_cases} cases, verdicts agree"
            ))
        },
    );

    // 5. Writer structure: induced-action axioms and equivariance for
    //    every registered (monad, monoid) pair.
    check(
        &mut outcomes,
        "criterion 5: induced actions lawful, lifted unit and mult equivariant",
        Some(Duration::from_secs(10)),
        || {
            let mut cases = 0;
            for base in bases {
                let m = base.descriptor();
                let strength = canonical_strength(&m);
                for monoid in standard_monoids() {
                    let adj = Rc::new(make_writer_adjunction(monoid.clone()).unwrap());
                    let report = check_mset_lift(&m, &strength, &adj, &budget);
                    assert_all_pass(
                        &report,
                        &format!("mset lift of {} over {}", m.name, monoid.name),
                    )?;
                    cases += report.total_cases();
                }
            }
            Ok(format!("{cases} cases"))
        },
    );

    // 6. Reader category: star-composition laws and lifting
    //    functoriality.
    check(
        &mut outcomes,
        "criterion 6: star-composition lawful, lifted functor preserves it",
        None,
        || {
            let report = suites::suite_reader(&budget, &bases);
            assert_all_pass(&report, "reader suite")?;
            for required in [
                "identity-is-pr1",
                "composition-associativity",
                "option/lift-preserves-identity",
                "option/lift-preserves-composition",
                "option/mult-naturality-in-d",
            ] {
                if !report.checks.iter().any(|c| c.name == required) {
                    return Err(format!("missing check {required}"));
                }
            }
            Ok(format!("{} cases", report.total_cases()))
        },
    );

    // 7. Negative controls: each fixture fails on the law it breaks, and
    //    the process exits with status 1.
    check(
        &mut outcomes,
        "criterion 7: injected faults are caught by name and exit status is 1",
        None,
        || {
            let report = suites::negative_controls(&budget);
            if report.passed() {
                return Err("negative controls unexpectedly passed".to_string());
            }
            let failing = report.failing();
            for expected in [
                "broken-mult/associativity",
                "corrupted-counit/counit-unit-triangle-F",
                "corrupted-counit/counit-unit-triangle-U",
            ] {
                if !failing.contains(&expected) {
                    return Err(format!("{expected} did not fail"));
                }
            }
            if !failing
                .iter()
                .any(|name| name.starts_with("corrupted-strength/naturality"))
            {
                return Err("corrupted strength did not fail naturality".to_string());
            }

            let output = fx_binary()
                .args(["lawcheck", "--negative-controls", "--output", "json"])
                .output()
                .map_err(|e| format!("spawning fx: {e}"))?;
            if output.status.code() != Some(1) {
                return Err(format!(
                    "expected exit status 1, got {:?}",
                    output.status.code()
                ));
            }
            Ok(format!("{} failing checks, exit status 1", failing.len()))
        },
    );

    // 8. Recovery: translating the identity monad agrees with the induced
    //    monad for all instances.
    check(
        &mut outcomes,
        "criterion 8: identity-monad translation recovers the induced monad",
        None,
        || {
            let mut cases = 0;
            for check in &translation.checks {
                if check.name.ends_with("recovery-identity-monad") {
                    if !check.passed() {
                        return Err(format!("{} failed", check.name));
                    }
                    cases += check.cases;
                }
            }
            if cases == 0 {
                return Err("no recovery checks ran".to_string());
            }
            Ok(format!("{cases} cases over 5 instances"))
        },
    );

    // 9. Demo: derived and oracle stacks agree on the corpus, and the
    //    full-suite JSON is byte-stable across two runs of the binary.
    check(
        &mut outcomes,
        "criterion 9: demo corpus matches the oracle stack; JSON output byte-stable",
        None,
        || {
            let programs = corpus();
            if programs.len() < 20 {
                return Err(format!("corpus has only {} programs", programs.len()));
            }
            let derived = demo_stack(StackKind::Derived).map_err(|e| e.to_string())?;
            let oracle = demo_stack(StackKind::Oracle).map_err(|e| e.to_string())?;
            for program in &programs {
                let expr = parse_program(program.source)
                    .map_err(|e| format!("{}: {e}", program.name))?;
                let env: BTreeMap<String, i64> = program
                    .env
                    .iter()
                    .map(|(k, v)| (k.to_string(), *v))
                    .collect();
                let lhs = eval_with(&expr, &env, program.init_state, &derived)
                    .map_err(|e| e.to_string())?;
                let rhs = eval_with(&expr, &env, program.init_state, &oracle)
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!(
                        "{}: derived {lhs:?} vs oracle {rhs:?}",
                        program.name
                    ));
                }
            }

            let run = || {
                fx_binary()
                    .args([
                        "lawcheck",
                        "--suite",
                        "all",
                        "--seed",
                        "42",
                        "--output",
                        "json",
                    ])
                    .output()
                    .map_err(|e| format!("spawning fx: {e}"))
            };
            let first = run()?;
            let second = run()?;
            if first.status.code() != Some(0) {
                return Err(format!(
                    "full suite exited with {:?}",
                    first.status.code()
                ));
            }
            if first.stdout != second.stdout {
                return Err("JSON output differs between consecutive runs".to_string());
            }
            if !first.stdout.ends_with(b"\n") {
                return Err("JSON output is not newline-terminated".to_string());
            }
            Ok(format!(
                "{} programs agree; {} bytes of stable JSON",
                programs.len(),
                first.stdout.len()
            ))
        },
    );

    let mut all_passed = true;
    for outcome in &outcomes {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "[{verdict}] {} ({:.2?}) — {}",
            outcome.label, outcome.elapsed, outcome.detail
        );
        all_passed &= outcome.passed;
    }
    assert!(all_passed, "acceptance criteria failed");
}
