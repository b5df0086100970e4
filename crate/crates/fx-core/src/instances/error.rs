//! The error instance: the coslice category under a fixed carrier of
//! errors.
//!
//! Objects are base points `point : E -> X`; a morphism from `(X, point)`
//! to `(Y, point')` is a function `X -> Y` carrying one point to the other.
//! The left adjoint sends `X` to the left injection `E -> E + X`; the
//! right adjoint forgets the point; the counit at `(X, point)` is the case
//! split `point v id`. Any monad lifts — no strength is needed, only the
//! unit — by pointing `T X` with `T(point) . unit_E`. Translation yields
//! `P X = T (E + X)`, the error transformer.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DMorphism, DObject, DStructure, MonadOnD};
use crate::function::{hom_set, FiniteFunction};
use crate::harness::{Budget, Check, LawReport};
use crate::monad::MonadDescriptor;
use crate::translate::translate;
use crate::universe::{FiniteType, Value};
use crate::{Error, Result};

#[derive(Clone)]
pub struct ErrorAdjunction {
    errors: FiniteType,
}

/// The adjunction determined by an error carrier `E`.
pub fn make_error_adjunction(errors: FiniteType) -> ErrorAdjunction {
    ErrorAdjunction { errors }
}

impl ErrorAdjunction {
    pub fn error_type(&self) -> &FiniteType {
        &self.errors
    }

    fn free_point(&self, x: &FiniteType) -> FiniteFunction {
        FiniteFunction::inl_into(self.errors.clone(), x.clone())
    }
}

/// An object of the error instance: a carrier with a total base point.
pub fn coslice_object(carrier: FiniteType, point: FiniteFunction) -> DObject {
    DObject::with_point(carrier, point)
}

impl Adjunction for ErrorAdjunction {
    fn name(&self) -> String {
        format!("error({})", self.errors)
    }

    fn f_obj(&self, x: &FiniteType) -> DObject {
        DObject::with_point(
            FiniteType::sum(self.errors.clone(), x.clone()),
            self.free_point(x),
        )
    }

    fn f_mor(&self, f: &FiniteFunction) -> DMorphism {
        // id_E + f.
        let id_e = FiniteFunction::identity(self.errors.clone());
        let inl = FiniteFunction::inl_into(self.errors.clone(), f.cod().clone());
        let inr = FiniteFunction::inr_into(self.errors.clone(), f.cod().clone());
        let payload = FiniteFunction::vee(
            &FiniteFunction::compose(&inl, &id_e),
            &FiniteFunction::compose(&inr, f),
        );
        DMorphism {
            source: self.f_obj(f.dom()),
            target: self.f_obj(f.cod()),
            payload,
        }
    }

    fn u_obj(&self, y: &DObject) -> FiniteType {
        y.carrier.clone()
    }

    fn u_mor(&self, f: &DMorphism) -> FiniteFunction {
        f.payload.clone()
    }

    fn unit(&self, x: &FiniteType) -> FiniteFunction {
        FiniteFunction::inr_into(self.errors.clone(), x.clone())
    }

    fn counit(&self, y: &DObject) -> DMorphism {
        let id = FiniteFunction::identity(y.carrier.clone());
        DMorphism {
            source: self.f_obj(&y.carrier),
            target: y.clone(),
            payload: FiniteFunction::vee(y.point(), &id),
        }
    }

    fn compose(&self, g: &DMorphism, f: &DMorphism) -> DMorphism {
        DMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            payload: FiniteFunction::compose(&g.payload, &f.payload),
        }
    }

    fn identity(&self, y: &DObject) -> DMorphism {
        DMorphism {
            source: y.clone(),
            target: y.clone(),
            payload: FiniteFunction::identity(y.carrier.clone()),
        }
    }

    fn d_universe(&self, universe: &[FiniteType]) -> Vec<DObject> {
        let mut objects: Vec<DObject> = universe.iter().map(|x| self.f_obj(x)).collect();
        // Every point E -> X at small scale, for extra non-free objects.
        for x in universe {
            let points = hom_set(
                &self.errors,
                x,
                &Budget {
                    fn_cap: 16,
                    ..Budget::default()
                },
            );
            for point in points.into_iter().take(4) {
                objects.push(DObject::with_point(x.clone(), point));
            }
        }
        objects
    }

    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism> {
        if let Some(x) = self.free_preimage(a) {
            // A morphism out of a free object is forced on the inl part and
            // arbitrary on the inr part.
            return hom_set(&x, &b.carrier, budget)
                .iter()
                .map(|g| DMorphism {
                    source: a.clone(),
                    target: b.clone(),
                    payload: FiniteFunction::vee(b.point(), g),
                })
                .collect();
        }
        if a.carrier.card().is_none_or(|c| c > 4_096) {
            return Vec::new();
        }
        hom_set(&a.carrier, &b.carrier, budget)
            .into_iter()
            .map(|payload| DMorphism {
                source: a.clone(),
                target: b.clone(),
                payload,
            })
            .filter(|f| self.side_condition(f, budget).is_empty())
            .collect()
    }

    fn side_condition(&self, f: &DMorphism, _budget: &Budget) -> Vec<String> {
        let mut failures = Vec::new();
        let phi = f.source.point();
        let psi = f.target.point();
        for e in self.errors.enumerate().expect("error carrier is enumerable") {
            let carried = f.payload.apply(&phi.apply(&e));
            let expected = psi.apply(&e);
            if carried != expected {
                failures.push(format!(
                    "f(point({e})) = {carried} but the target point gives {expected}"
                ));
            }
        }
        failures
    }

    fn free_preimage(&self, y: &DObject) -> Option<FiniteType> {
        let x = match (&y.structure, &y.carrier) {
            (DStructure::Point(_), FiniteType::Sum(e, x)) if **e == self.errors => {
                (**x).clone()
            }
            _ => return None,
        };
        let inl = self.free_point(&x);
        for e in self.errors.enumerate().expect("error carrier is enumerable") {
            if y.point().apply(&e) != inl.apply(&e) {
                return None;
            }
        }
        Some(x)
    }
}

/// Lift any monad to the coslice: the carrier becomes `T X`, pointed by
/// `T(point) . unit_E`.
///
/// Fails with a lift violation if the lifted unit, multiplication, or map
/// fail to preserve base points over the verification objects — the
/// signature of a broken base monad.
pub fn lift_monad_to_coslice(
    m: &MonadDescriptor,
    adj: &Rc<ErrorAdjunction>,
    budget: &Budget,
) -> Result<MonadOnD> {
    let report = check_coslice_lift(m, adj, budget);
    if let Some(check) = report.checks.iter().find(|c| !c.passed()) {
        return Err(Error::LiftViolation {
            condition: "base-point preservation",
            monad: m.name.clone(),
            counterexample: format!(
                "{}: {}",
                check.name,
                check.counterexamples.first().cloned().unwrap_or_default()
            ),
        });
    }

    Ok(coslice_lift_unchecked(m, adj))
}

fn lifted_point(m: &MonadDescriptor, errors: &FiniteType, w: &DObject) -> FiniteFunction {
    let point = w.point().clone();
    let monad = m.clone();
    let e_ty = errors.clone();
    FiniteFunction::new(
        errors.clone(),
        m.lift_type(&w.carrier),
        move |e| monad.map_value(&point, &monad.unit_value(&e_ty, e)),
    )
}

fn coslice_lift_unchecked(m: &MonadDescriptor, adj: &Rc<ErrorAdjunction>) -> MonadOnD {
    let errors = adj.error_type().clone();
    let lift = {
        let m = m.clone();
        let errors = errors.clone();
        move |w: &DObject| {
            DObject::with_point(m.lift_type(&w.carrier), lifted_point(&m, &errors, w))
        }
    };
    let map_lift = lift.clone();
    let unit_lift = lift.clone();
    let mult_lift = lift.clone();
    let map_m = m.clone();
    let unit_m = m.clone();
    let mult_m = m.clone();
    MonadOnD::new(
        format!("lifted({})", m.name),
        adj.name(),
        lift.clone(),
        move |f| DMorphism {
            source: map_lift(&f.source),
            target: map_lift(&f.target),
            payload: map_m.map_fn(&f.payload),
        },
        move |w| DMorphism {
            source: w.clone(),
            target: unit_lift(w),
            payload: unit_m.unit_fn(&w.carrier),
        },
        move |w| {
            let tw = mult_lift(w);
            DMorphism {
                source: mult_lift(&tw),
                target: tw,
                payload: mult_m.mult_fn(&w.carrier),
            }
        },
    )
}

/// Pointedness of the lifted unit, multiplication, and map over the
/// instance's verification objects.
pub fn check_coslice_lift(
    m: &MonadDescriptor,
    adj: &Rc<ErrorAdjunction>,
    budget: &Budget,
) -> LawReport {
    let errors = adj.error_type().clone();
    let mut report = LawReport::new(format!("coslice-lift({})", m.name));
    let objects = adj.d_universe(&[FiniteType::Unit, FiniteType::Bool]);
    let error_values = errors.enumerate().expect("error carrier is enumerable");

    let mut unit_pt = Check::new("unit-preserves-points", "error.pointed.unit");
    let mut mult_pt = Check::new("mult-preserves-points", "error.pointed.mult");
    let mut map_pt = Check::new("map-preserves-points", "error.pointed.map");

    for w in &objects {
        let pt = w.point().clone();
        let t_pt = lifted_point(m, &errors, w);
        let tw = DObject::with_point(m.lift_type(&w.carrier), t_pt.clone());
        let tt_pt = lifted_point(m, &errors, &tw);
        for e in &error_values {
            // unit_X . point = lifted point.
            unit_pt.case_eq(
                &m.unit_value(&w.carrier, &pt.apply(e)),
                &t_pt.apply(e),
                || format!("X={}, e={e}", w.carrier),
            );
            // mult_X . (doubly lifted point) = lifted point.
            mult_pt.case_eq(
                &m.mult_value(&w.carrier, &tt_pt.apply(e)),
                &t_pt.apply(e),
                || format!("X={}, e={e}", w.carrier),
            );
        }
    }

    for a in objects.iter().take(4) {
        for b in objects.iter().take(4) {
            for f in adj.hom_sample(a, b, budget).iter().take(8) {
                let tf = m.map_fn(&f.payload);
                let pt_a = lifted_point(m, &errors, a);
                let pt_b = lifted_point(m, &errors, b);
                for e in &error_values {
                    map_pt.case_eq(&tf.apply(&pt_a.apply(e)), &pt_b.apply(e), || {
                        format!("f : {} -> {}, e={e}", a.carrier, b.carrier)
                    });
                }
            }
        }
    }

    report.push(unit_pt.finish());
    report.push(mult_pt.finish());
    report.push(map_pt.finish());
    report
}

/// The error-transformer join obtained from the generic translation,
/// applied to one value `z : T (E + T (E + X))`.
pub fn derived_error_join(
    m: &MonadDescriptor,
    errors: &FiniteType,
    x: &FiniteType,
    z: &Value,
) -> Result<Value> {
    let adj = Rc::new(make_error_adjunction(errors.clone()));
    let lifted = lift_monad_to_coslice(m, &adj, &Budget::default())?;
    let translated = translate(adj, &lifted)?;
    let ppx = translated.lift_type(&translated.lift_type(x));
    if !ppx.admits(z) {
        return Err(Error::ShapeMismatch(format!(
            "value {z} does not inhabit {ppx}"
        )));
    }
    Ok(translated.mult_value(x, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::{check_triangle_identities, induced_monad, phi};
    use crate::monad::{identity_monad, list_monad, option_monad};

    fn z2() -> FiniteType {
        FiniteType::Mod(2)
    }

    #[test]
    fn triangles_hold_over_the_small_universe() {
        let adj = make_error_adjunction(z2());
        let universe = [FiniteType::Unit, FiniteType::Bool, FiniteType::Mod(3)];
        let report = check_triangle_identities(&adj, &universe, &Budget::default());
        assert!(report.passed(), "failing: {:?}", report.failing());
    }

    #[test]
    fn induced_monad_is_the_error_monad() {
        let adj = Rc::new(make_error_adjunction(z2()));
        let m = induced_monad(adj);
        assert_eq!(
            m.lift_type(&FiniteType::Bool),
            FiniteType::sum(z2(), FiniteType::Bool)
        );
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(true)),
            Value::inr(Value::Bool(true))
        );
    }

    #[test]
    fn counit_splits_on_the_point() {
        let adj = make_error_adjunction(z2());
        // point : z2 -> bool sending e to (e = 1).
        let point = FiniteFunction::new(z2(), FiniteType::Bool, |e| match e {
            Value::Nat(n) => Value::Bool(*n == 1),
            _ => unreachable!(),
        });
        let obj = coslice_object(FiniteType::Bool, point);
        let eps = adj.counit(&obj);
        assert_eq!(eps.payload.apply(&Value::inl(Value::Nat(0))), Value::Bool(false));
        assert_eq!(eps.payload.apply(&Value::inl(Value::Nat(1))), Value::Bool(true));
        assert_eq!(
            eps.payload.apply(&Value::inr(Value::Bool(true))),
            Value::Bool(true)
        );
    }

    #[test]
    fn with_a_single_error_the_induced_monad_is_option_shaped() {
        let adj = Rc::new(make_error_adjunction(FiniteType::Unit));
        let m = induced_monad(adj);
        assert_eq!(
            m.lift_type(&FiniteType::Bool),
            FiniteType::sum(FiniteType::Unit, FiniteType::Bool)
        );
        // Exactly one more element than the carrier, like opt(bool).
        assert_eq!(m.lift_type(&FiniteType::Bool).card(), Some(3));
    }

    #[test]
    fn phi_of_the_counit_is_the_identity() {
        let adj = make_error_adjunction(z2());
        let f_bool = adj.f_obj(&FiniteType::Bool);
        let eps = adj.counit(&f_bool);
        let g = phi(&adj, &eps).unwrap();
        for v in adj.u_obj(&f_bool).enumerate().unwrap() {
            assert_eq!(g.apply(&v), v);
        }
    }

    #[test]
    fn lifted_points_compose_the_unit() {
        let m = option_monad();
        let adj = Rc::new(make_error_adjunction(z2()));
        let lifted = lift_monad_to_coslice(&m, &adj, &Budget::default()).unwrap();
        let w = adj.f_obj(&FiniteType::Bool);
        let tw = lifted.lift_obj(&w);
        assert_eq!(
            tw.point().apply(&Value::Nat(1)),
            Value::just(Value::inl(Value::Nat(1)))
        );

        let lists = list_monad(3);
        let lifted = lift_monad_to_coslice(&lists, &adj, &Budget::default()).unwrap();
        let tw = lifted.lift_obj(&w);
        assert_eq!(
            tw.point().apply(&Value::Nat(0)),
            Value::List(vec![Value::inl(Value::Nat(0))])
        );
    }

    #[test]
    fn identity_monad_lifts_to_the_identity() {
        let m = identity_monad();
        let adj = Rc::new(make_error_adjunction(z2()));
        let lifted = lift_monad_to_coslice(&m, &adj, &Budget::default()).unwrap();
        let w = adj.f_obj(&FiniteType::Bool);
        let tw = lifted.lift_obj(&w);
        for e in z2().enumerate().unwrap() {
            assert_eq!(tw.point().apply(&e), w.point().apply(&e));
        }
    }

    #[test]
    fn derived_join_cases_on_the_outer_value() {
        let m = option_monad();
        // z = some(inr(some(inr(true)))) -> some(inr(true)).
        let z = Value::just(Value::inr(Value::just(Value::inr(Value::Bool(true)))));
        let joined = derived_error_join(&m, &z2(), &FiniteType::Bool, &z).unwrap();
        assert_eq!(joined, Value::just(Value::inr(Value::Bool(true))));

        // An outer error short-circuits: some(inl(0)) -> some(inl(0)).
        let z = Value::just(Value::inl(Value::Nat(0)));
        let joined = derived_error_join(&m, &z2(), &FiniteType::Bool, &z).unwrap();
        assert_eq!(joined, Value::just(Value::inl(Value::Nat(0))));
    }

    #[test]
    fn derived_join_over_lists_flattens_case_by_case() {
        let m = list_monad(3);
        // z = [inl(1), inr([inr(false)])] -> [inl(1), inr(false)].
        let z = Value::List(vec![
            Value::inl(Value::Nat(1)),
            Value::inr(Value::List(vec![Value::inr(Value::Bool(false))])),
        ]);
        let joined = derived_error_join(&m, &z2(), &FiniteType::Bool, &z).unwrap();
        assert_eq!(
            joined,
            Value::List(vec![Value::inl(Value::Nat(1)), Value::inr(Value::Bool(false))])
        );
    }
}
