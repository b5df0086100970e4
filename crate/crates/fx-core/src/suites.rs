//! The named check suites behind `fx lawcheck`.
//!
//! Each suite aggregates the per-module checkers over the registered
//! universes, base monads, and monoids. Check names are prefixed with the
//! instance and base monad they exercise, so a single aggregated report
//! stays readable.

use std::rc::Rc;

use crate::adjunction::{
    check_adjunction_naturality, check_triangle_identities, identity_monad_on, induced_monad,
    Adjunction, MonadOnD,
};
use crate::fixtures;
use crate::harness::{Budget, Check, CheckResult, LawReport};
use crate::instances::error::{check_coslice_lift, lift_monad_to_coslice, make_error_adjunction};
use crate::instances::reader::{lift_monad_to_reader, make_reader_adjunction};
use crate::instances::state::{lift_monad_trivially, make_state_adjunction};
use crate::instances::writer::{
    check_distributive_law, check_mset_lift, lift_monad_to_mset, make_writer_adjunction,
};
use crate::laws::{check_functor_laws, check_monad_laws, check_strength_laws};
use crate::monad::{canonical_strength, MonadDescriptor};
use crate::oracle::{oracle_error, oracle_reader, oracle_state, oracle_writer};
use crate::registry::{
    bool_ty, diagram_universe, standard_monoids, standard_universe, unit_ty, z2, z3, BaseMonad,
};
use crate::translate::{check_translation_diagrams, translate};
use crate::universe::{values_of, FiniteType, Value};

/// The five parameterized adjunction instances every suite runs against.
fn registered_instances() -> Vec<Rc<dyn Adjunction>> {
    let mut instances: Vec<Rc<dyn Adjunction>> =
        vec![Rc::new(make_state_adjunction(z2()))];
    for monoid in standard_monoids() {
        instances.push(Rc::new(
            make_writer_adjunction(monoid).expect("registered monoids pass their laws"),
        ));
    }
    instances.push(Rc::new(make_reader_adjunction(z2())));
    instances.push(Rc::new(make_error_adjunction(z2())));
    instances
}

/// Lift a base monad onto the instance category of `adj`, the way each
/// instance prescribes.
pub fn lift_base(adj: &Rc<dyn Adjunction>, base: &MonadDescriptor) -> MonadOnD {
    let name = adj.name();
    if name.starts_with("state(") {
        let state = make_state_adjunction(z2());
        lift_monad_trivially(base, &state)
    } else if name.starts_with("writer(") {
        let monoid = standard_monoids()
            .into_iter()
            .find(|m| name == format!("writer({})", m.name))
            .expect("registered writer instance");
        let writer = Rc::new(make_writer_adjunction(monoid).expect("lawful monoid"));
        let strength = canonical_strength(base);
        lift_monad_to_mset(base, &strength, &writer, &Budget::default())
            .expect("registered strengths verify")
    } else if name.starts_with("reader(") {
        let reader = make_reader_adjunction(z2());
        let strength = canonical_strength(base);
        lift_monad_to_reader(base, &strength, &reader)
    } else {
        let error = Rc::new(make_error_adjunction(z2()));
        lift_monad_to_coslice(base, &error, &Budget::default())
            .expect("registered monads lift pointedly")
    }
}

/// Triangle identities, transpose bijectivity, unit/counit naturality, and
/// the induced monads, for all registered instances.
pub fn suite_adjunction(budget: &Budget) -> LawReport {
    let mut report = LawReport::new("adjunction");
    let universe = [unit_ty(), bool_ty(), z3()];
    for adj in registered_instances() {
        let name = adj.name();
        report.absorb(&name, check_triangle_identities(adj.as_ref(), &universe, budget));
        report.absorb(
            &name,
            check_adjunction_naturality(adj.as_ref(), &universe, budget),
        );
        let induced = induced_monad(adj.clone());
        let small = diagram_universe();
        report.absorb(
            format!("{name}/induced"),
            check_functor_laws(&induced, &small, budget),
        );
        report.absorb(
            format!("{name}/induced"),
            check_monad_laws(&induced, &small, budget),
        );
    }
    report
}

fn selected_bases(bases: &[BaseMonad]) -> Vec<(BaseMonad, MonadDescriptor)> {
    bases.iter().map(|b| (*b, b.descriptor())).collect()
}

/// Base-monad laws, translated-monad laws, every diagram cell, and the
/// identity-monad recovery, for every (instance, base) pair.
pub fn suite_translation(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("translation");
    let universe = standard_universe();

    for (_, base) in selected_bases(bases) {
        report.absorb(
            format!("base/{}", base.name),
            check_functor_laws(&base, &universe, budget),
        );
        report.absorb(
            format!("base/{}", base.name),
            check_monad_laws(&base, &universe, budget),
        );
    }

    let small = diagram_universe();
    for adj in registered_instances() {
        let name = adj.name();
        for (kind, base) in selected_bases(bases) {
            let lifted = lift_base(&adj, &base);
            let translated = translate(adj.clone(), &lifted).expect("owners match");
            let prefix = format!("{name}/{}", kind.name());
            report.absorb(&prefix, check_functor_laws(&translated, &small, budget));
            report.absorb(&prefix, check_monad_laws(&translated, &small, budget));
            report.absorb(
                &prefix,
                check_translation_diagrams(adj.clone(), &lifted, &small, budget)
                    .expect("owners match"),
            );
        }

        // Translating the identity monad recovers the induced monad.
        let recovered = translate(adj.clone(), &identity_monad_on(adj.clone()))
            .expect("owners match");
        let induced = induced_monad(adj.clone());
        let mut check = Check::new("recovery-identity-monad", "translation.recovery");
        for x in &small {
            for v in values_of(x, budget) {
                check.case_eq(
                    &recovered.unit_value(x, &v),
                    &induced.unit_value(x, &v),
                    || format!("unit at X={x}, v={v}"),
                );
            }
            let ttx = induced.lift_type(&induced.lift_type(x));
            for v in values_of(&ttx, budget) {
                check.case_eq(
                    &recovered.mult_value(x, &v),
                    &induced.mult_value(x, &v),
                    || format!("mult at X={x}, v={v}"),
                );
            }
        }
        let mut wrapped = LawReport::new("recovery");
        wrapped.push(check.finish());
        report.absorb(&name, wrapped);
    }
    report
}

/// Pointwise agreement of a derived transformer with its oracle: carriers,
/// unit, and multiplication.
fn differential_checks(
    derived: &MonadDescriptor,
    oracle: &MonadDescriptor,
    xs: &[FiniteType],
    budget: &Budget,
) -> Vec<CheckResult> {
    let mut carrier = Check::new("carrier-agreement", "differential.carrier");
    let mut unit = Check::new("unit-vs-oracle", "differential.unit");
    let mut mult = Check::new("mult-vs-oracle", "differential.mult");
    for x in xs {
        carrier.case(derived.lift_type(x) == oracle.lift_type(x), || {
            format!(
                "X={x}: derived carrier {} vs oracle carrier {}",
                derived.lift_type(x),
                oracle.lift_type(x)
            )
        });
        for v in values_of(x, budget) {
            unit.case_eq(
                &derived.unit_value(x, &v),
                &oracle.unit_value(x, &v),
                || format!("X={x}, v={v}"),
            );
        }
        let ttx = derived.lift_type(&derived.lift_type(x));
        for v in values_of(&ttx, budget) {
            mult.case_eq(
                &derived.mult_value(x, &v),
                &oracle.mult_value(x, &v),
                || format!("X={x}, v={v}"),
            );
        }
    }
    vec![carrier.finish(), unit.finish(), mult.finish()]
}

/// Derived state transformer vs the `StateT` oracle, plus the explicit
/// unit formula.
pub fn suite_state(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("state");
    let s = z2();
    let adj = make_state_adjunction(s.clone());
    let xs = [unit_ty(), bool_ty()];
    let states = s.enumerate().expect("state carrier is enumerable");

    for (kind, base) in selected_bases(bases) {
        let lifted = lift_monad_trivially(&base, &adj);
        let derived = translate(Rc::new(adj.clone()), &lifted).expect("owners match");
        let oracle = oracle_state(&base, &s);
        let prefix = kind.name();

        for check in differential_checks(&derived, &oracle, &xs, budget) {
            let mut wrapped = LawReport::new("differential");
            wrapped.push(check);
            report.absorb(prefix, wrapped);
        }
        let mut wrapped = LawReport::new("oracle");
        wrapped.absorb("oracle", check_monad_laws(&oracle, &[bool_ty()], budget));
        report.absorb(prefix, wrapped);

        // unit x = table s -> unit_T (x, s).
        let mut formula = Check::new("unit-formula", "state.unit-formula");
        for x in &xs {
            let xsn = FiniteType::prod(x.clone(), s.clone());
            for v in values_of(x, budget) {
                let expected = Value::table(
                    s.clone(),
                    states
                        .iter()
                        .map(|sv| base.unit_value(&xsn, &Value::pair(v.clone(), sv.clone())))
                        .collect(),
                );
                formula.case_eq(&derived.unit_value(x, &v), &expected, || {
                    format!("X={x}, v={v}")
                });
            }
        }
        let mut wrapped = LawReport::new("formula");
        wrapped.push(formula.finish());
        report.absorb(prefix, wrapped);
    }
    report
}

/// Strength laws, the induced-action and equivariance checks, the
/// distributive-law reading, and the derived-vs-oracle writer join.
pub fn suite_writer(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("writer");
    let strength_universe = [bool_ty(), z3()];
    let xs = [unit_ty(), bool_ty(), z3()];

    for (kind, base) in selected_bases(bases) {
        let strength = canonical_strength(&base);
        report.absorb(
            kind.name(),
            check_strength_laws(&base, &strength, &strength_universe, budget),
        );

        for monoid in standard_monoids() {
            let adj = Rc::new(make_writer_adjunction(monoid.clone()).expect("lawful monoid"));
            let prefix = format!("{}/{}", kind.name(), monoid.name);

            report.absorb(&prefix, check_mset_lift(&base, &strength, &adj, budget));

            let dist = check_distributive_law(&base, &strength, &monoid, &strength_universe, budget);
            let strength_verdict =
                check_strength_laws(&base, &strength, &strength_universe, budget).passed();
            let mut verdicts = Check::new(
                "distributive-verdict-matches-strength-verdict",
                "writer.distributive.verdict",
            );
            verdicts.case(dist.passed() == strength_verdict, || {
                format!(
                    "distributive-law verdict {} but strength verdict {}",
                    dist.passed(),
                    strength_verdict
                )
            });
            report.absorb(&prefix, dist);
            let mut wrapped = LawReport::new("verdict");
            wrapped.push(verdicts.finish());
            report.absorb(&prefix, wrapped);

            let lifted =
                lift_monad_to_mset(&base, &strength, &adj, budget).expect("strength verified");
            let derived = translate(adj.clone(), &lifted).expect("owners match");
            let oracle = oracle_writer(&base, &monoid);
            for check in differential_checks(&derived, &oracle, &xs, budget) {
                let mut wrapped = LawReport::new("differential");
                wrapped.push(check);
                report.absorb(&prefix, wrapped);
            }

            // unit x = unit_T (x, 1).
            let mut formula = Check::new("unit-formula", "writer.unit-formula");
            for x in &xs {
                let xm = FiniteType::prod(x.clone(), monoid.carrier.clone());
                for v in values_of(x, budget) {
                    formula.case_eq(
                        &derived.unit_value(x, &v),
                        &base.unit_value(&xm, &Value::pair(v.clone(), monoid.unit.clone())),
                        || format!("X={x}, v={v}"),
                    );
                }
            }
            let mut wrapped = LawReport::new("formula");
            wrapped.push(formula.finish());
            report.absorb(&prefix, wrapped);
        }
    }
    report
}

/// Star-composition laws, lifting functoriality, naturality of the lifted
/// multiplication, and the derived-vs-oracle reader join.
pub fn suite_reader(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("reader");
    let env = z2();
    let adj = make_reader_adjunction(env.clone());
    let rc_adj: Rc<dyn Adjunction> = Rc::new(adj.clone());
    let xs = [unit_ty(), bool_ty()];
    let objects = rc_adj.d_universe(&[bool_ty(), z2()]);

    // Composition laws of the instance category itself, at Bool/Z2 scale.
    let mut identity = Check::new("identity-is-pr1", "reader.compose.identity");
    let mut assoc = Check::new("composition-associativity", "reader.compose.associativity");
    for a in &objects {
        for b in &objects {
            let dom = FiniteType::prod(a.carrier.clone(), env.clone());
            for f in rc_adj.hom_sample(a, b, budget).iter().take(12) {
                let left = rc_adj.compose(f, &rc_adj.identity(a));
                let right = rc_adj.compose(&rc_adj.identity(b), f);
                for v in values_of(&dom, budget) {
                    identity.case_eq(&left.payload.apply(&v), &f.payload.apply(&v), || {
                        format!("f . pr1 at {v}")
                    });
                    identity.case_eq(&right.payload.apply(&v), &f.payload.apply(&v), || {
                        format!("pr1 . f at {v}")
                    });
                }
                for c in objects.iter().take(2) {
                    for g in rc_adj.hom_sample(b, c, budget).iter().take(6) {
                        for d in objects.iter().take(1) {
                            for h in rc_adj.hom_sample(c, d, budget).iter().take(6) {
                                let hg_f =
                                    rc_adj.compose(&rc_adj.compose(h, g), f);
                                let h_gf =
                                    rc_adj.compose(h, &rc_adj.compose(g, f));
                                for v in values_of(&dom, budget) {
                                    assoc.case_eq(
                                        &hg_f.payload.apply(&v),
                                        &h_gf.payload.apply(&v),
                                        || format!("at {v}"),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(identity.finish());
    report.push(assoc.finish());

    for (kind, base) in selected_bases(bases) {
        let strength = canonical_strength(&base);
        let lifted = lift_monad_to_reader(&base, &strength, &adj);
        let prefix = kind.name();

        // The lifting preserves identities and star-composition.
        let mut lift_id = Check::new("lift-preserves-identity", "reader.lift.identity");
        let mut lift_comp = Check::new("lift-preserves-composition", "reader.lift.composition");
        for a in &objects {
            let ta = lifted.lift_obj(a);
            let t_id = lifted.map_mor(&rc_adj.identity(a));
            let dom = FiniteType::prod(ta.carrier.clone(), env.clone());
            for v in values_of(&dom, budget) {
                lift_id.case_eq(
                    &t_id.payload.apply(&v),
                    &rc_adj.identity(&ta).payload.apply(&v),
                    || format!("A={}, v={v}", a.carrier),
                );
            }
            for b in objects.iter().take(2) {
                for f in rc_adj.hom_sample(a, b, budget).iter().take(6) {
                    for c in objects.iter().take(2) {
                        for g in rc_adj.hom_sample(b, c, budget).iter().take(6) {
                            let lhs = lifted.map_mor(&rc_adj.compose(g, f));
                            let rhs =
                                rc_adj.compose(&lifted.map_mor(g), &lifted.map_mor(f));
                            for v in values_of(&dom, budget) {
                                lift_comp.case_eq(
                                    &lhs.payload.apply(&v),
                                    &rhs.payload.apply(&v),
                                    || format!("at {v}"),
                                );
                            }
                        }
                    }
                }
            }
        }
        let mut wrapped = LawReport::new("lift");
        wrapped.push(lift_id.finish());
        wrapped.push(lift_comp.finish());
        report.absorb(prefix, wrapped);

        // Naturality of the lifted multiplication inside the instance
        // category: mult_Y * TT(f) = T(f) * mult_X.
        let mut mult_nat = Check::new("mult-naturality-in-d", "reader.mult.naturality");
        for a in &objects {
            for b in objects.iter().take(2) {
                for f in rc_adj.hom_sample(a, b, budget).iter().take(6) {
                    let tta = lifted.lift_obj(&lifted.lift_obj(a));
                    let lhs = rc_adj.compose(
                        &lifted.map_mor(f),
                        &lifted.mult_at(a),
                    );
                    let rhs = rc_adj.compose(
                        &lifted.mult_at(b),
                        &lifted.map_mor(&lifted.map_mor(f)),
                    );
                    let dom = FiniteType::prod(tta.carrier.clone(), env.clone());
                    for v in values_of(&dom, budget) {
                        mult_nat.case_eq(
                            &lhs.payload.apply(&v),
                            &rhs.payload.apply(&v),
                            || format!("f : {} -> {}, v={v}", a.carrier, b.carrier),
                        );
                    }
                }
            }
        }
        let mut wrapped = LawReport::new("mult");
        wrapped.push(mult_nat.finish());
        report.absorb(prefix, wrapped);

        let derived = translate(rc_adj.clone(), &lifted).expect("owners match");
        let oracle = oracle_reader(&base, &env);
        for check in differential_checks(&derived, &oracle, &xs, budget) {
            let mut wrapped = LawReport::new("differential");
            wrapped.push(check);
            report.absorb(prefix, wrapped);
        }

        // unit x = table e -> unit_T x.
        let mut formula = Check::new("unit-formula", "reader.unit-formula");
        let env_count = env.card().expect("finite") as usize;
        for x in &xs {
            for v in values_of(x, budget) {
                formula.case_eq(
                    &derived.unit_value(x, &v),
                    &Value::table(env.clone(), vec![base.unit_value(x, &v); env_count]),
                    || format!("X={x}, v={v}"),
                );
            }
        }
        let mut wrapped = LawReport::new("formula");
        wrapped.push(formula.finish());
        report.absorb(prefix, wrapped);
    }
    report
}

/// Pointedness of the lifted structure and the derived-vs-oracle error
/// join.
pub fn suite_error(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("error");
    let errors = z2();
    let adj = Rc::new(make_error_adjunction(errors.clone()));
    let rc_adj: Rc<dyn Adjunction> = adj.clone();
    let xs = [unit_ty(), bool_ty()];

    for (kind, base) in selected_bases(bases) {
        let prefix = kind.name();
        report.absorb(prefix, check_coslice_lift(&base, &adj, budget));

        let lifted = lift_monad_to_coslice(&base, &adj, budget).expect("pointed lift");
        let derived = translate(rc_adj.clone(), &lifted).expect("owners match");
        let oracle = oracle_error(&base, &errors);
        for check in differential_checks(&derived, &oracle, &xs, budget) {
            let mut wrapped = LawReport::new("differential");
            wrapped.push(check);
            report.absorb(prefix, wrapped);
        }

        // unit = unit_T . inr.
        let mut formula = Check::new("unit-formula", "error.unit-formula");
        for x in &xs {
            let ex = FiniteType::sum(errors.clone(), x.clone());
            for v in values_of(x, budget) {
                formula.case_eq(
                    &derived.unit_value(x, &v),
                    &base.unit_value(&ex, &Value::inr(v.clone())),
                    || format!("X={x}, v={v}"),
                );
            }
        }
        let mut wrapped = LawReport::new("formula");
        wrapped.push(formula.finish());
        report.absorb(prefix, wrapped);
    }
    report
}

/// The three injected-fault fixtures. This report is expected to fail;
/// the exercise is that each fixture fails on the law it breaks.
pub fn negative_controls(budget: &Budget) -> LawReport {
    let mut report = LawReport::new("negative-controls");

    report.absorb(
        "broken-mult",
        check_monad_laws(&fixtures::broken_list_mult(), &[bool_ty()], budget),
    );

    let (m, strength) = fixtures::corrupted_strength();
    report.absorb(
        "corrupted-strength",
        check_strength_laws(&m, &strength, &[bool_ty()], budget),
    );
    report.absorb(
        "corrupted-strength",
        check_distributive_law(
            &m,
            &strength,
            &crate::monoid::Monoid::bool_and(),
            &[bool_ty()],
            budget,
        ),
    );

    let corrupted = fixtures::corrupted_counit_state(z2());
    report.absorb(
        "corrupted-counit",
        check_triangle_identities(&corrupted, &[bool_ty(), z3()], budget),
    );

    let (adj, tbar) = fixtures::state_list_tbar_with_dropped_mult(z2());
    report.absorb(
        "corrupted-lifted-mult",
        check_translation_diagrams(adj, &tbar, &[bool_ty()], budget).expect("owners match"),
    );
    report
}

/// All named suites in order.
pub fn suite_all(budget: &Budget, bases: &[BaseMonad]) -> LawReport {
    let mut report = LawReport::new("all");
    for sub in [
        suite_adjunction(budget),
        suite_translation(budget, bases),
        suite_state(budget, bases),
        suite_writer(budget, bases),
        suite_reader(budget, bases),
        suite_error(budget, bases),
    ] {
        let prefix = sub.suite.clone();
        report.absorb(prefix, sub);
    }
    report
}
