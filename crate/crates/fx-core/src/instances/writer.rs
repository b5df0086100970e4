//! The writer instance: the category of sets with a right monoid action.
//!
//! Objects are pairs `(X, a)` where `a : X x M -> X` satisfies the identity
//! and associativity axioms, and morphisms are equivariant maps. The left
//! adjoint sends `X` to the free object `X x M` with action
//! `(x, m)^n = (x, m * n)`; the counit at `(X, a)` is the action itself.
//!
//! A strong monad on the base category lifts to this category by equipping
//! `T X` with the induced action `T(a) . t_{X,M}`; translating the lifted
//! monad back down yields `P X = T (X x M)`, the writer transformer. The
//! same strength, read as a transformation `(- x M) . T -> T . (- x M)`,
//! is a distributive law; [`check_distributive_law`] verifies its four
//! axioms so the two readings can be compared verdict for verdict.
//!
//! The free/forgetful description here is one of several ways to present
//! the writer monad; only this one is implemented.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DMorphism, DObject, DStructure, MonadOnD};
use crate::function::{hom_set, FiniteFunction};
use crate::harness::{Budget, Check, LawReport};
use crate::monad::{MonadDescriptor, Strength};
use crate::monoid::Monoid;
use crate::translate::translate;
use crate::universe::{values_of, FiniteType, Value};
use crate::{Error, Result};

#[derive(Clone)]
pub struct WriterAdjunction {
    monoid: Monoid,
}

/// The free/forgetful adjunction for a monoid. Fails if the monoid does
/// not satisfy its laws.
pub fn make_writer_adjunction(monoid: Monoid) -> Result<WriterAdjunction> {
    let report = monoid.check_laws(&Budget::default());
    if let Some(check) = report.checks.iter().find(|c| !c.passed()) {
        return Err(Error::MonoidLaw {
            name: monoid.name.clone(),
            counterexample: check
                .counterexamples
                .first()
                .cloned()
                .unwrap_or_default(),
        });
    }
    Ok(WriterAdjunction { monoid })
}

impl WriterAdjunction {
    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    /// The free action `(x, m)^n = (x, m * n)` on `X x M`.
    fn free_action(&self, x: &FiniteType) -> FiniteFunction {
        let monoid = self.monoid.clone();
        let xm = FiniteType::prod(x.clone(), monoid.carrier.clone());
        FiniteFunction::new(
            FiniteType::prod(xm.clone(), monoid.carrier.clone()),
            xm,
            move |v| {
                let (pair, n) = v.as_pair();
                let (x, m) = pair.as_pair();
                Value::pair(x.clone(), monoid.op(m, n))
            },
        )
    }

    /// Equivariant maps out of a free object correspond to plain functions
    /// `X -> U W`: the mate of `g` is `(x, m) -> g(x)^m`.
    fn mate_of(&self, x: &FiniteType, target: &DObject, g: &FiniteFunction) -> DMorphism {
        let action = target.action().clone();
        let g = g.clone();
        let payload = FiniteFunction::new(
            FiniteType::prod(x.clone(), self.monoid.carrier.clone()),
            target.carrier.clone(),
            move |v| {
                let (xv, m) = v.as_pair();
                action.apply(&Value::pair(g.apply(xv), m.clone()))
            },
        );
        DMorphism {
            source: self.f_obj(x),
            target: target.clone(),
            payload,
        }
    }
}

/// An object of the writer instance: a carrier with a validated action.
pub fn mset_object(
    carrier: FiniteType,
    action: FiniteFunction,
    monoid: &Monoid,
    budget: &Budget,
) -> Result<DObject> {
    let failures = action_axiom_failures(&carrier, &action, monoid, budget);
    if let Some(first) = failures.first() {
        return Err(Error::ShapeMismatch(format!(
            "action axiom violated on {carrier}: {first}"
        )));
    }
    Ok(DObject::with_action(carrier, action))
}

fn action_axiom_failures(
    carrier: &FiniteType,
    action: &FiniteFunction,
    monoid: &Monoid,
    budget: &Budget,
) -> Vec<String> {
    let mut failures = Vec::new();
    let elems = values_of(carrier, budget);
    let ms = values_of(&monoid.carrier, budget);
    for x in &elems {
        let acted = action.apply(&Value::pair(x.clone(), monoid.unit.clone()));
        if acted != *x {
            failures.push(format!("x^1 = {acted} but x = {x}"));
        }
        for m1 in &ms {
            let xm1 = action.apply(&Value::pair(x.clone(), m1.clone()));
            for m2 in &ms {
                let stepwise = action.apply(&Value::pair(xm1.clone(), m2.clone()));
                let combined =
                    action.apply(&Value::pair(x.clone(), monoid.op(m1, m2)));
                if stepwise != combined {
                    failures.push(format!(
                        "(({x})^{m1})^{m2} = {stepwise} but ({x})^({m1}*{m2}) = {combined}"
                    ));
                }
            }
        }
    }
    failures
}

impl Adjunction for WriterAdjunction {
    fn name(&self) -> String {
        format!("writer({})", self.monoid.name)
    }

    fn f_obj(&self, x: &FiniteType) -> DObject {
        DObject::with_action(
            FiniteType::prod(x.clone(), self.monoid.carrier.clone()),
            self.free_action(x),
        )
    }

    fn f_mor(&self, f: &FiniteFunction) -> DMorphism {
        let payload =
            FiniteFunction::product(f, &FiniteFunction::identity(self.monoid.carrier.clone()));
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
        let one = self.monoid.unit.clone();
        FiniteFunction::new(
            x.clone(),
            FiniteType::prod(x.clone(), self.monoid.carrier.clone()),
            move |v| Value::pair(v.clone(), one.clone()),
        )
    }

    fn counit(&self, y: &DObject) -> DMorphism {
        DMorphism {
            source: self.f_obj(&y.carrier),
            target: y.clone(),
            payload: y.action().clone(),
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
        // The monoid acting on itself by multiplication.
        let monoid = self.monoid.clone();
        objects.push(DObject::with_action(
            monoid.carrier.clone(),
            monoid.op_fn(),
        ));
        // Trivial actions.
        for x in universe {
            let carrier = x.clone();
            let xm = FiniteType::prod(carrier.clone(), self.monoid.carrier.clone());
            objects.push(DObject::with_action(
                carrier.clone(),
                FiniteFunction::new(xm, carrier, |v| v.as_pair().0.clone()),
            ));
        }
        objects
    }

    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism> {
        if let Some(x) = self.free_preimage(a) {
            return hom_set(&x, &b.carrier, budget)
                .iter()
                .map(|g| self.mate_of(&x, b, g))
                .collect();
        }
        // Non-free source: filter small function spaces by equivariance.
        // Unenumerable carriers contribute no sampled morphisms.
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

    fn side_condition(&self, f: &DMorphism, budget: &Budget) -> Vec<String> {
        let mut failures = Vec::new();
        let a = f.source.action().clone();
        let b = f.target.action().clone();
        for x in values_of(&f.source.carrier, budget) {
            for m in values_of(&self.monoid.carrier, budget) {
                let lhs = f.payload.apply(&a.apply(&Value::pair(x.clone(), m.clone())));
                let rhs = b.apply(&Value::pair(f.payload.apply(&x), m.clone()));
                if lhs != rhs {
                    failures.push(format!("f({x}^{m}) = {lhs} but f({x})^{m} = {rhs}"));
                }
            }
        }
        failures
    }

    fn free_preimage(&self, y: &DObject) -> Option<FiniteType> {
        let x = match (&y.structure, &y.carrier) {
            (DStructure::Action(_), FiniteType::Prod(x, m))
                if **m == self.monoid.carrier =>
            {
                (**x).clone()
            }
            _ => return None,
        };
        // The action must actually be the free one.
        let free = self.free_action(&x);
        let probe = Budget {
            value_cap: 256,
            ..Budget::default()
        };
        let dom = FiniteType::prod(y.carrier.clone(), self.monoid.carrier.clone());
        for v in values_of(&dom, &probe) {
            if y.action().apply(&v) != free.apply(&v) {
                return None;
            }
        }
        Some(x)
    }
}

/// The action `b = T(a) . t_{X,M}` that makes `T X` an object of the
/// instance category.
pub fn induced_action(obj: &DObject, t: &Strength, monoid: &Monoid) -> FiniteFunction {
    let action = obj.action().clone();
    let x_ty = obj.carrier.clone();
    let m_ty = monoid.carrier.clone();
    let strength = t.clone();
    let monad = t.owner.clone();
    let tx = monad.lift_type(&x_ty);
    FiniteFunction::new(
        FiniteType::prod(tx.clone(), m_ty.clone()),
        tx,
        move |v| {
            let (c, m) = v.as_pair();
            let paired = strength.apply(&x_ty, &m_ty, c, m);
            monad.map_value(&action, &paired)
        },
    )
}

/// Lift a strong monad to the writer instance category.
///
/// Fails with a lift violation if the induced actions or the equivariance
/// of the lifted unit and multiplication do not hold pointwise over the
/// instance's verification objects — the signature of a broken strength.
pub fn lift_monad_to_mset(
    m: &MonadDescriptor,
    t: &Strength,
    adj: &Rc<WriterAdjunction>,
    budget: &Budget,
) -> Result<MonadOnD> {
    assert_eq!(m.name, t.owner.name, "strength owner mismatch");
    let monoid = adj.monoid().clone();

    let lifted = {
        let m = m.clone();
        let t = t.clone();
        let monoid = monoid.clone();
        move |w: &DObject| {
            DObject::with_action(m.lift_type(&w.carrier), induced_action(w, &t, &monoid))
        }
    };

    let report = check_mset_lift(m, t, adj, budget);
    if let Some(check) = report.checks.iter().find(|c| !c.passed()) {
        return Err(Error::LiftViolation {
            condition: "equivariance",
            monad: m.name.clone(),
            counterexample: format!(
                "{}: {}",
                check.name,
                check.counterexamples.first().cloned().unwrap_or_default()
            ),
        });
    }

    let map_lift = lifted.clone();
    let unit_lift = lifted.clone();
    let mult_lift = lifted.clone();
    let map_m = m.clone();
    let unit_m = m.clone();
    let mult_m = m.clone();
    Ok(MonadOnD::new(
        format!("lifted({})", m.name),
        adj.name(),
        lifted.clone(),
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
    ))
}

/// The writer-structure suite: action axioms for the induced action, and
/// pointwise equivariance of the lifted unit, multiplication, and map.
pub fn check_mset_lift(
    m: &MonadDescriptor,
    t: &Strength,
    adj: &Rc<WriterAdjunction>,
    budget: &Budget,
) -> LawReport {
    let monoid = adj.monoid().clone();
    let mut report = LawReport::new(format!("mset-lift({}, {})", m.name, monoid.name));
    let objects = adj.d_universe(&[FiniteType::Unit, FiniteType::Bool]);

    let mut act_id = Check::new("induced-action-identity", "writer.action.identity");
    let mut act_assoc = Check::new(
        "induced-action-associativity",
        "writer.action.associativity",
    );
    let mut unit_eq = Check::new("unit-equivariance", "writer.equivariance.unit");
    let mut mult_eq = Check::new("mult-equivariance", "writer.equivariance.mult");
    let mut map_eq = Check::new("map-equivariance", "writer.equivariance.map");

    for w in &objects {
        let b = induced_action(w, t, &monoid);
        let tx = m.lift_type(&w.carrier);
        let cs = values_of(&tx, budget);
        let ms = values_of(&monoid.carrier, budget);

        for c in &cs {
            act_id.case_eq(
                &b.apply(&Value::pair(c.clone(), monoid.unit.clone())),
                c,
                || format!("X={}, c={c}", w.carrier),
            );
            for m1 in &ms {
                let stepped = b.apply(&Value::pair(c.clone(), m1.clone()));
                for m2 in &ms {
                    act_assoc.case_eq(
                        &b.apply(&Value::pair(stepped.clone(), m2.clone())),
                        &b.apply(&Value::pair(c.clone(), monoid.op(m1, m2))),
                        || format!("X={}, c={c}, m1={m1}, m2={m2}", w.carrier),
                    );
                }
            }
        }

        // unit_X is equivariant: unit(x^m) = unit(x)^m.
        let a = w.action().clone();
        for x in values_of(&w.carrier, budget) {
            for mv in &ms {
                unit_eq.case_eq(
                    &m.unit_value(&w.carrier, &a.apply(&Value::pair(x.clone(), mv.clone()))),
                    &b.apply(&Value::pair(m.unit_value(&w.carrier, &x), mv.clone())),
                    || format!("X={}, x={x}, m={mv}", w.carrier),
                );
            }
        }

        // mult_X is equivariant for the doubly lifted action.
        let lifted = DObject::with_action(tx.clone(), b.clone());
        let bb = induced_action(&lifted, t, &monoid);
        let ttx = m.lift_type(&tx);
        for z in values_of(&ttx, budget) {
            for mv in &ms {
                mult_eq.case_eq(
                    &m.mult_value(&w.carrier, &bb.apply(&Value::pair(z.clone(), mv.clone()))),
                    &b.apply(&Value::pair(m.mult_value(&w.carrier, &z), mv.clone())),
                    || format!("X={}, z={z}, m={mv}", w.carrier),
                );
            }
        }
    }

    // T sends equivariant maps to equivariant maps.
    for a_obj in objects.iter().take(3) {
        for b_obj in objects.iter().take(3) {
            for f in adj.hom_sample(a_obj, b_obj, budget).iter().take(8) {
                let b_src = induced_action(a_obj, t, &monoid);
                let b_tgt = induced_action(b_obj, t, &monoid);
                let tf = m.map_fn(&f.payload);
                for c in values_of(&m.lift_type(&a_obj.carrier), budget) {
                    for mv in values_of(&monoid.carrier, budget) {
                        map_eq.case_eq(
                            &tf.apply(&b_src.apply(&Value::pair(c.clone(), mv.clone()))),
                            &b_tgt.apply(&Value::pair(tf.apply(&c), mv.clone())),
                            || {
                                format!(
                                    "f : {} -> {}, c={c}, m={mv}",
                                    a_obj.carrier, b_obj.carrier
                                )
                            },
                        );
                    }
                }
            }
        }
    }

    report.push(act_id.finish());
    report.push(act_assoc.finish());
    report.push(unit_eq.finish());
    report.push(mult_eq.finish());
    report.push(map_eq.finish());
    report
}

/// The writer-transformer join obtained from the generic translation,
/// applied to one value `z : T (T (X x M) x M)`.
pub fn derived_writer_join(
    m: &MonadDescriptor,
    t: &Strength,
    monoid: &Monoid,
    x: &FiniteType,
    z: &Value,
) -> Result<Value> {
    let adj = Rc::new(make_writer_adjunction(monoid.clone())?);
    let lifted = lift_monad_to_mset(m, t, &adj, &Budget::default())?;
    let translated = translate(adj, &lifted)?;
    let ppx = translated.lift_type(&translated.lift_type(x));
    if !ppx.admits(z) {
        return Err(Error::ShapeMismatch(format!(
            "value {z} does not inhabit {ppx}"
        )));
    }
    Ok(translated.mult_value(x, z))
}

/// The four distributive-law axioms for `lambda = t_{X,M}`, read as a
/// transformation `(- x M) . T -> T . (- x M)`.
///
/// This report passes iff `check_strength_laws` passes for the same
/// strength: the axioms are the strength axioms in another arrangement.
pub fn check_distributive_law(
    m: &MonadDescriptor,
    t: &Strength,
    monoid: &Monoid,
    universe: &[FiniteType],
    budget: &Budget,
) -> LawReport {
    let mut report = LawReport::new(format!("distributive({}, {})", m.name, monoid.name));
    let m_ty = monoid.carrier.clone();

    let mut unit_w = Check::new("unit-of-monoid-functor", "writer.distributive.unit-w");
    for x in universe {
        let pair_unit = FiniteFunction::new(
            x.clone(),
            FiniteType::prod(x.clone(), m_ty.clone()),
            {
                let one = monoid.unit.clone();
                move |v| Value::pair(v.clone(), one.clone())
            },
        );
        for c in values_of(&m.lift_type(x), budget) {
            unit_w.case_eq(
                &t.apply(x, &m_ty, &c, &monoid.unit),
                &m.map_value(&pair_unit, &c),
                || format!("X={x}, c={c}"),
            );
        }
    }
    report.push(unit_w.finish());

    let mut unit_t = Check::new("unit-of-base-monad", "writer.distributive.unit-t");
    for x in universe {
        let xm = FiniteType::prod(x.clone(), m_ty.clone());
        for xv in values_of(x, budget) {
            for mv in values_of(&m_ty, budget) {
                unit_t.case_eq(
                    &t.apply(x, &m_ty, &m.unit_value(x, &xv), &mv),
                    &m.unit_value(&xm, &Value::pair(xv.clone(), mv.clone())),
                    || format!("X={x}, x={xv}, m={mv}"),
                );
            }
        }
    }
    report.push(unit_t.finish());

    let mut mult_w = Check::new("mult-of-monoid-functor", "writer.distributive.mult-w");
    for x in universe {
        let collapse = FiniteFunction::new(
            FiniteType::prod(
                FiniteType::prod(x.clone(), m_ty.clone()),
                m_ty.clone(),
            ),
            FiniteType::prod(x.clone(), m_ty.clone()),
            {
                let monoid = monoid.clone();
                move |v| {
                    let (xm, n) = v.as_pair();
                    let (x, mm) = xm.as_pair();
                    Value::pair(x.clone(), monoid.op(mm, n))
                }
            },
        );
        let xm = FiniteType::prod(x.clone(), m_ty.clone());
        for c in values_of(&m.lift_type(x), budget) {
            for m1 in values_of(&m_ty, budget) {
                for m2 in values_of(&m_ty, budget) {
                    let lhs = t.apply(x, &m_ty, &c, &monoid.op(&m1, &m2));
                    let staged = t.apply(&xm, &m_ty, &t.apply(x, &m_ty, &c, &m1), &m2);
                    mult_w.case_eq(&lhs, &m.map_value(&collapse, &staged), || {
                        format!("X={x}, c={c}, m1={m1}, m2={m2}")
                    });
                }
            }
        }
    }
    report.push(mult_w.finish());

    let mut mult_t = Check::new("mult-of-base-monad", "writer.distributive.mult-t");
    for x in universe {
        let tx = m.lift_type(x);
        let xm = FiniteType::prod(x.clone(), m_ty.clone());
        let t_inner = t.as_fn(x, &m_ty);
        for tt in values_of(&m.lift_type(&tx), budget) {
            for mv in values_of(&m_ty, budget) {
                let lhs = t.apply(x, &m_ty, &m.mult_value(x, &tt), &mv);
                let staged = t.apply(&tx, &m_ty, &tt, &mv);
                let rhs = m.mult_value(&xm, &m.map_value(&t_inner, &staged));
                mult_t.case_eq(&lhs, &rhs, || format!("X={x}, tt={tt}, m={mv}"));
            }
        }
    }
    report.push(mult_t.finish());
    report
}
