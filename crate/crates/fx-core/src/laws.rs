//! Pointwise law checkers for functors, monads, and strengths.
//!
//! Each checker walks every enumerated (or sampled) value of the relevant
//! carriers and records counterexamples instead of aborting, so a broken
//! structure yields a diagnosable report rather than a panic.

use crate::function::{hom_set, FiniteFunction};
use crate::harness::{Budget, Check, LawReport};
use crate::monad::{MonadDescriptor, Strength};
use crate::universe::{values_of, FiniteType, Value};

/// `map(id) = id` and `map(g . f) = map(g) . map(f)` over every universe
/// object, sampled hom-set, and enumerated `T`-value.
pub fn check_functor_laws(
    m: &MonadDescriptor,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    assert!(!universe.is_empty(), "universe must be non-empty");
    let mut report = LawReport::new(format!("functor({})", m.name));

    let mut identity = Check::new("identity", "functor.identity");
    for x in universe {
        let id = FiniteFunction::identity(x.clone());
        for tv in values_of(&m.lift_type(x), budget) {
            identity.case_eq(&m.map_value(&id, &tv), &tv, || format!("X={x}, v={tv}"));
        }
    }
    report.push(identity.finish());

    let mut composition = Check::new("composition", "functor.composition");
    for x in universe {
        for y in universe {
            let fs = hom_set(x, y, budget);
            for z in universe {
                let gs = hom_set(y, z, budget);
                let tvs = values_of(&m.lift_type(x), budget);
                for f in &fs {
                    for g in &gs {
                        let gf = FiniteFunction::compose(g, f);
                        for tv in &tvs {
                            composition.case_eq(
                                &m.map_value(&gf, tv),
                                &m.map_value(g, &m.map_value(f, tv)),
                                || format!("X={x}, Y={y}, Z={z}, v={tv}"),
                            );
                        }
                    }
                }
            }
        }
    }
    report.push(composition.finish());
    report
}

/// Left identity, right identity, and associativity of the multiplication,
/// pointwise over enumerated `T T`- and `T T T`-values.
pub fn check_monad_laws(
    m: &MonadDescriptor,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    assert!(!universe.is_empty(), "universe must be non-empty");
    let mut report = LawReport::new(format!("monad({})", m.name));

    let mut left = Check::new("left-identity", "monad.left-identity");
    let mut right = Check::new("right-identity", "monad.right-identity");
    for x in universe {
        let tx = m.lift_type(x);
        let unit_inner = m.unit_fn(x);
        for tv in values_of(&tx, budget) {
            // mult . unit_{T X} = id
            left.case_eq(
                &m.mult_value(x, &m.unit_value(&tx, &tv)),
                &tv,
                || format!("X={x}, v={tv}"),
            );
            // mult . T(unit_X) = id
            right.case_eq(
                &m.mult_value(x, &m.map_value(&unit_inner, &tv)),
                &tv,
                || format!("X={x}, v={tv}"),
            );
        }
    }
    report.push(left.finish());
    report.push(right.finish());

    let mut assoc = Check::new("associativity", "monad.associativity");
    for x in universe {
        let tx = m.lift_type(x);
        let ttx = m.lift_type(&tx);
        let tttx = m.lift_type(&ttx);
        let mult_inner = m.mult_fn(x);
        for ttt in values_of(&tttx, budget) {
            assoc.case_eq(
                &m.mult_value(x, &m.mult_value(&tx, &ttt)),
                &m.mult_value(x, &m.map_value(&mult_inner, &ttt)),
                || format!("X={x}, v={ttt}"),
            );
        }
    }
    report.push(assoc.finish());
    report
}

/// The four strength axioms plus naturality in both arguments.
///
/// Axioms checked: compatibility with the unit and with the multiplication,
/// the projection axiom at the terminal object, and the associativity
/// pentagon.
pub fn check_strength_laws(
    m: &MonadDescriptor,
    t: &Strength,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    assert_eq!(m.name, t.owner.name, "strength owner mismatch");
    let mut report = LawReport::new(format!("strength({})", m.name));

    let mut unit_compat = Check::new("unit-compatibility", "strength.unit");
    for x in universe {
        for y in universe {
            let xy = FiniteType::prod(x.clone(), y.clone());
            for xv in values_of(x, budget) {
                for yv in values_of(y, budget) {
                    unit_compat.case_eq(
                        &t.apply(x, y, &m.unit_value(x, &xv), &yv),
                        &m.unit_value(&xy, &Value::pair(xv.clone(), yv.clone())),
                        || format!("X={x}, Y={y}, x={xv}, y={yv}"),
                    );
                }
            }
        }
    }
    report.push(unit_compat.finish());

    let mut mult_compat = Check::new("mult-compatibility", "strength.mult");
    for x in universe {
        for y in universe {
            let tx = m.lift_type(x);
            let ttx = m.lift_type(&tx);
            let xy = FiniteType::prod(x.clone(), y.clone());
            let t_inner = t.as_fn(x, y);
            for tt in values_of(&ttx, budget) {
                for yv in values_of(y, budget) {
                    // t . (mult x id) = mult . T(t) . t
                    let lhs = t.apply(x, y, &m.mult_value(x, &tt), &yv);
                    let staged = t.apply(&tx, y, &tt, &yv);
                    let rhs = m.mult_value(&xy, &m.map_value(&t_inner, &staged));
                    mult_compat.case_eq(&lhs, &rhs, || {
                        format!("X={x}, Y={y}, tt={tt}, y={yv}")
                    });
                }
            }
        }
    }
    report.push(mult_compat.finish());

    let mut unit_object = Check::new("unit-object-projection", "strength.unit-object");
    for x in universe {
        let pr1 = FiniteFunction::pr1(x.clone(), FiniteType::Unit);
        for c in values_of(&m.lift_type(x), budget) {
            // T(pr1) . t_{X,1} = pr1
            unit_object.case_eq(
                &m.map_value(&pr1, &t.apply(x, &FiniteType::Unit, &c, &Value::Unit)),
                &c,
                || format!("X={x}, c={c}"),
            );
        }
    }
    report.push(unit_object.finish());

    let mut pentagon = Check::new("associativity-pentagon", "strength.pentagon");
    for x in universe {
        for y in universe {
            for zt in universe {
                let alpha = FiniteFunction::assoc_right(x.clone(), y.clone(), zt.clone());
                for c in &values_of(&m.lift_type(x), budget) {
                    for yv in values_of(y, budget) {
                        for zv in values_of(zt, budget) {
                            // t_{X,YxZ} . alpha = T(alpha) . t_{XxY,Z} . (t x id)
                            let lhs = t.apply(
                                x,
                                &FiniteType::prod(y.clone(), zt.clone()),
                                c,
                                &Value::pair(yv.clone(), zv.clone()),
                            );
                            let staged = t.apply(
                                &FiniteType::prod(x.clone(), y.clone()),
                                zt,
                                &t.apply(x, y, c, &yv),
                                &zv,
                            );
                            let rhs = m.map_value(&alpha, &staged);
                            pentagon.case_eq(&lhs, &rhs, || {
                                format!("X={x}, Y={y}, Z={zt}, c={c}, y={yv}, z={zv}")
                            });
                        }
                    }
                }
            }
        }
    }
    report.push(pentagon.finish());

    let mut nat_first = Check::new("naturality-first-argument", "strength.naturality.first");
    for x in universe {
        for x2 in universe {
            let fs = hom_set(x, x2, budget);
            for y in universe {
                let id_y = FiniteFunction::identity(y.clone());
                for f in &fs {
                    let f_x_id = FiniteFunction::product(f, &id_y);
                    for c in values_of(&m.lift_type(x), budget) {
                        for yv in values_of(y, budget) {
                            nat_first.case_eq(
                                &t.apply(x2, y, &m.map_value(f, &c), &yv),
                                &m.map_value(&f_x_id, &t.apply(x, y, &c, &yv)),
                                || format!("X={x}->{x2}, Y={y}, c={c}, y={yv}"),
                            );
                        }
                    }
                }
            }
        }
    }
    report.push(nat_first.finish());

    let mut nat_second = Check::new("naturality-second-argument", "strength.naturality.second");
    for x in universe {
        let id_x = FiniteFunction::identity(x.clone());
        for y in universe {
            for y2 in universe {
                let gs = hom_set(y, y2, budget);
                for g in &gs {
                    let id_x_g = FiniteFunction::product(&id_x, g);
                    for c in values_of(&m.lift_type(x), budget) {
                        for yv in values_of(y, budget) {
                            nat_second.case_eq(
                                &t.apply(x, y2, &c, &g.apply(&yv)),
                                &m.map_value(&id_x_g, &t.apply(x, y, &c, &yv)),
                                || format!("X={x}, Y={y}->{y2}, c={c}, y={yv}"),
                            );
                        }
                    }
                }
            }
        }
    }
    report.push(nat_second.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::{canonical_strength, identity_monad, list_monad, option_monad};
    use crate::universe::FiniteType;

    fn bool_universe() -> Vec<FiniteType> {
        vec![FiniteType::Bool]
    }

    #[test]
    fn option_passes_functor_laws_over_bool() {
        let report = check_functor_laws(&option_monad(), &bool_universe(), &Budget::default());
        assert!(report.passed(), "failing: {:?}", report.failing());
    }

    #[test]
    fn identity_passes_functor_laws_over_unit() {
        let report = check_functor_laws(
            &identity_monad(),
            &[FiniteType::Unit],
            &Budget::default(),
        );
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.cases >= 1));
    }

    #[test]
    fn broken_map_is_reported_against_identity() {
        let broken = MonadDescriptor::new(
            "broken-option",
            |x| FiniteType::opt(x.clone()),
            |_, _| Value::Nothing,
            |_, v| Value::just(v.clone()),
            |_, v| match v {
                Value::Nothing => Value::Nothing,
                Value::Just(inner) => (**inner).clone(),
                _ => unreachable!(),
            },
        );
        let report = check_functor_laws(&broken, &bool_universe(), &Budget::default());
        assert!(!report.passed());
        assert!(report.failing().contains(&"identity"));
        let identity = report.checks.iter().find(|c| c.name == "identity").unwrap();
        assert!(!identity.counterexamples.is_empty());
    }

    #[test]
    fn list_passes_monad_laws_over_bool() {
        let report = check_monad_laws(&list_monad(3), &bool_universe(), &Budget::default());
        assert!(report.passed(), "failing: {:?}", report.failing());
    }

    #[test]
    fn identity_passes_monad_laws_over_z3() {
        let report = check_monad_laws(
            &identity_monad(),
            &[FiniteType::Mod(3)],
            &Budget::default(),
        );
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.cases >= 1));
    }

    #[test]
    fn dropping_an_outer_element_breaks_associativity() {
        let broken = MonadDescriptor::new(
            "list-drop-first",
            |x| FiniteType::list(x.clone(), 3),
            |f, v| match v {
                Value::List(vs) => Value::List(vs.iter().map(|x| f.apply(x)).collect()),
                _ => unreachable!(),
            },
            |_, v| Value::List(vec![v.clone()]),
            |_, v| match v {
                Value::List(vs) => Value::List(
                    vs.iter()
                        .skip(1)
                        .flat_map(|inner| match inner {
                            Value::List(xs) => xs.clone(),
                            _ => unreachable!(),
                        })
                        .collect(),
                ),
                _ => unreachable!(),
            },
        );
        let report = check_monad_laws(&broken, &bool_universe(), &Budget::default());
        assert!(!report.passed());
        assert!(report.failing().contains(&"associativity"));
    }

    #[test]
    fn canonical_strengths_pass_over_bool_and_z3() {
        let universe = vec![FiniteType::Bool, FiniteType::Mod(3)];
        let budget = Budget::default();
        for m in [option_monad(), list_monad(3)] {
            let t = canonical_strength(&m);
            let report = check_strength_laws(&m, &t, &universe, &budget);
            assert!(report.passed(), "{}: {:?}", m.name, report.failing());
        }
    }

    #[test]
    fn swapped_pair_strength_fails_naturality() {
        let (m, swapped) = crate::fixtures::corrupted_strength();
        let report = check_strength_laws(&m, &swapped, &[FiniteType::Bool], &Budget::default());
        assert!(!report.passed());
        let failing = report.failing();
        assert!(
            failing.contains(&"naturality-first-argument")
                || failing.contains(&"naturality-second-argument"),
            "expected a naturality counterexample, got {failing:?}"
        );
    }
}
