//! End-to-end runs of the named suites over the registered universes.

use fx_core::harness::Budget;
use fx_core::registry::BaseMonad;
use fx_core::suites;

fn budget() -> Budget {
    // Smaller sample count than the CLI default; the acceptance suite runs
    // the full budget.
    Budget::default().with_samples(24)
}

#[test]
fn adjunction_suite_passes() {
    let report = suites::suite_adjunction(&budget());
    assert!(report.passed(), "failing: {:?}", report.failing());
    assert!(report.checks.iter().all(|c| c.cases > 0));
}

#[test]
fn translation_suite_passes_for_every_instance_and_base() {
    let report = suites::suite_translation(&budget(), &BaseMonad::all());
    assert!(report.passed(), "failing: {:?}", report.failing());
}

#[test]
fn state_suite_passes() {
    let report = suites::suite_state(&budget(), &BaseMonad::all());
    assert!(report.passed(), "failing: {:?}", report.failing());
}

#[test]
fn writer_suite_passes() {
    let report = suites::suite_writer(&budget(), &BaseMonad::all());
    assert!(report.passed(), "failing: {:?}", report.failing());
}

#[test]
fn reader_suite_passes() {
    let report = suites::suite_reader(&budget(), &BaseMonad::all());
    assert!(report.passed(), "failing: {:?}", report.failing());
}

#[test]
fn error_suite_passes() {
    let report = suites::suite_error(&budget(), &BaseMonad::all());
    assert!(report.passed(), "failing: {:?}", report.failing());
}

#[test]
fn base_monad_filter_restricts_the_checks() {
    let report = suites::suite_writer(&budget(), &[BaseMonad::Option]);
    assert!(report.passed());
    assert!(report.checks.iter().all(|c| c.name.starts_with("option/")));
    assert!(!report.checks.is_empty());
}

#[test]
fn negative_controls_fail_on_the_injected_laws() {
    let report = suites::negative_controls(&budget());
    assert!(!report.passed());
    let failing = report.failing();

    assert!(failing.contains(&"broken-mult/associativity"));
    assert!(failing
        .iter()
        .any(|name| name.starts_with("corrupted-strength/naturality")));
    assert!(failing.contains(&"corrupted-counit/counit-unit-triangle-F"));
    assert!(failing.contains(&"corrupted-counit/counit-unit-triangle-U"));
    assert!(failing.contains(&"corrupted-lifted-mult/unit-diagram/monad-left-identity"));
    assert!(
        failing.contains(&"corrupted-lifted-mult/assoc-diagram/monad-associativity-square")
    );

    // The corrupted multiplication must not disturb the naturality cells.
    for name in [
        "corrupted-lifted-mult/unit-diagram/unit-naturality-square",
        "corrupted-lifted-mult/unit-diagram/counit-naturality-square",
        "corrupted-lifted-mult/assoc-diagram/counit-naturality-square-a",
        "corrupted-lifted-mult/assoc-diagram/counit-naturality-square-b",
        "corrupted-lifted-mult/assoc-diagram/mult-naturality-square",
    ] {
        assert!(!failing.contains(&name), "{name} should still pass");
    }
}

#[test]
fn verdict_equivalence_holds_for_the_corrupted_strength() {
    use fx_core::fixtures::corrupted_strength;
    use fx_core::instances::writer::check_distributive_law;
    use fx_core::laws::check_strength_laws;
    use fx_core::monoid::Monoid;
    use fx_core::registry::bool_ty;

    let budget = budget();
    let (m, strength) = corrupted_strength();
    let strength_report = check_strength_laws(&m, &strength, &[bool_ty()], &budget);
    let dist_report =
        check_distributive_law(&m, &strength, &Monoid::bool_and(), &[bool_ty()], &budget);
    assert_eq!(strength_report.passed(), dist_report.passed());
    assert!(!strength_report.passed());
}
