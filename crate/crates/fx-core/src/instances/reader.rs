//! The reader instance: families of functions parametrized by an
//! environment.
//!
//! The instance category has the same objects as the base category, but a
//! morphism `X -> Y` is a plain function `X x E -> Y`; composition threads
//! the environment through both factors, `(g * f)(x, e) = g(f(x, e), e)`,
//! and the identity is the first projection. The left adjoint sends a
//! function to the constant family; the right adjoint is `(-)^E`, and the
//! counit is evaluation. Translating a strong monad along this adjunction
//! yields `P X = (T X)^E`, the reader transformer.
//!
//! This category is isomorphic to the Kleisli category of the plain reader
//! monad (curry each morphism); the `kleisli_spot_check` test pins that
//! correspondence down at one composition.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DMorphism, DObject, MonadOnD};
use crate::function::{eval_morphism, hom_set, FiniteFunction};
use crate::harness::Budget;
use crate::monad::{MonadDescriptor, Strength};
use crate::translate::translate;
use crate::universe::{FiniteType, Value};
use crate::{Error, Result};

#[derive(Clone)]
pub struct ReaderAdjunction {
    env: FiniteType,
}

/// The adjunction determined by an environment carrier `E`.
pub fn make_reader_adjunction(env: FiniteType) -> ReaderAdjunction {
    ReaderAdjunction { env }
}

impl ReaderAdjunction {
    pub fn env_type(&self) -> &FiniteType {
        &self.env
    }
}

/// The `*`-composite of two reader morphisms; fails when the environment
/// or object types do not line up.
pub fn reader_compose(
    adj: &ReaderAdjunction,
    g: &DMorphism,
    f: &DMorphism,
) -> Result<DMorphism> {
    let expected_g_dom =
        FiniteType::prod(f.target.carrier.clone(), adj.env.clone());
    if *g.payload.dom() != expected_g_dom {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose: g is defined on {}, expected {}",
            g.payload.dom(),
            expected_g_dom
        )));
    }
    Ok(adj.compose(g, f))
}

impl Adjunction for ReaderAdjunction {
    fn name(&self) -> String {
        format!("reader({})", self.env)
    }

    fn f_obj(&self, x: &FiniteType) -> DObject {
        DObject::plain(x.clone())
    }

    fn f_mor(&self, f: &FiniteFunction) -> DMorphism {
        // The constant family: f . pr1.
        let payload = FiniteFunction::compose(
            f,
            &FiniteFunction::pr1(f.dom().clone(), self.env.clone()),
        );
        DMorphism {
            source: DObject::plain(f.dom().clone()),
            target: DObject::plain(f.cod().clone()),
            payload,
        }
    }

    fn u_obj(&self, y: &DObject) -> FiniteType {
        FiniteType::exp(self.env.clone(), y.carrier.clone())
    }

    fn u_mor(&self, f: &DMorphism) -> FiniteFunction {
        // g -> (e -> f(g(e), e)).
        let env = self.env.clone();
        let envs = env.enumerate().expect("environment carrier is enumerable");
        let payload = f.payload.clone();
        FiniteFunction::new(
            self.u_obj(&f.source),
            self.u_obj(&f.target),
            move |g| {
                Value::table(
                    env.clone(),
                    envs.iter()
                        .map(|e| payload.apply(&Value::pair(g.apply_table(e), e.clone())))
                        .collect(),
                )
            },
        )
    }

    fn unit(&self, x: &FiniteType) -> FiniteFunction {
        let env = self.env.clone();
        let count = env.card().expect("environment carrier is finite") as usize;
        let cod = FiniteType::exp(env.clone(), x.clone());
        FiniteFunction::new(x.clone(), cod, move |v| {
            Value::table(env.clone(), vec![v.clone(); count])
        })
    }

    fn counit(&self, y: &DObject) -> DMorphism {
        DMorphism {
            source: DObject::plain(self.u_obj(y)),
            target: y.clone(),
            payload: eval_morphism(self.env.clone(), y.carrier.clone()),
        }
    }

    fn compose(&self, g: &DMorphism, f: &DMorphism) -> DMorphism {
        let gp = g.payload.clone();
        let fp = f.payload.clone();
        let payload = FiniteFunction::new(
            fp.dom().clone(),
            gp.cod().clone(),
            move |v| {
                let (_, e) = v.as_pair();
                gp.apply(&Value::pair(fp.apply(v), e.clone()))
            },
        );
        DMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            payload,
        }
    }

    fn identity(&self, y: &DObject) -> DMorphism {
        DMorphism {
            source: y.clone(),
            target: y.clone(),
            payload: FiniteFunction::pr1(y.carrier.clone(), self.env.clone()),
        }
    }

    fn d_universe(&self, universe: &[FiniteType]) -> Vec<DObject> {
        universe.iter().cloned().map(DObject::plain).collect()
    }

    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism> {
        let dom = FiniteType::prod(a.carrier.clone(), self.env.clone());
        hom_set(&dom, &b.carrier, budget)
            .into_iter()
            .map(|payload| DMorphism {
                source: a.clone(),
                target: b.clone(),
                payload,
            })
            .collect()
    }

    fn side_condition(&self, _f: &DMorphism, _budget: &Budget) -> Vec<String> {
        Vec::new()
    }

    fn free_preimage(&self, y: &DObject) -> Option<FiniteType> {
        // The left adjoint is the identity on objects.
        Some(y.carrier.clone())
    }

    fn payload_domain(&self, source: &DObject) -> FiniteType {
        FiniteType::prod(source.carrier.clone(), self.env.clone())
    }
}

/// Lift a strong monad to the reader instance category:
/// `T-bar X = T X`, `T-bar(f) = T(f) . t_{X,E}`, with unit and
/// multiplication the constant families on the base components.
pub fn lift_monad_to_reader(
    m: &MonadDescriptor,
    t: &Strength,
    adj: &ReaderAdjunction,
) -> MonadOnD {
    let env = adj.env_type().clone();

    let map_m = m.clone();
    let map_t = t.clone();
    let map_env = env.clone();
    let unit_m = m.clone();
    let unit_env = env.clone();
    let mult_m = m.clone();
    let mult_env = env;
    let lift_m = m.clone();

    MonadOnD::new(
        format!("lifted({})", m.name),
        adj.name(),
        move |w| DObject::plain(lift_m.lift_type(&w.carrier)),
        move |f| {
            let x = f.source.carrier.clone();
            let y = f.target.carrier.clone();
            let tx = map_m.lift_type(&x);
            let payload_dom = FiniteType::prod(tx.clone(), map_env.clone());
            let inner = f.payload.clone();
            let m = map_m.clone();
            let t = map_t.clone();
            let env = map_env.clone();
            let x_inner = x.clone();
            DMorphism {
                source: DObject::plain(tx),
                target: DObject::plain(map_m.lift_type(&y)),
                payload: FiniteFunction::new(
                    payload_dom,
                    map_m.lift_type(&y),
                    move |v| {
                        let (c, e) = v.as_pair();
                        let paired = t.apply(&x_inner, &env, c, e);
                        m.map_value(&inner, &paired)
                    },
                ),
            }
        },
        move |w| {
            let x = w.carrier.clone();
            let tx = unit_m.lift_type(&x);
            let m = unit_m.clone();
            let x_inner = x.clone();
            DMorphism {
                source: w.clone(),
                target: DObject::plain(tx.clone()),
                payload: FiniteFunction::new(
                    FiniteType::prod(x, unit_env.clone()),
                    tx,
                    move |v| m.unit_value(&x_inner, v.as_pair().0),
                ),
            }
        },
        move |w| {
            let x = w.carrier.clone();
            let tx = mult_m.lift_type(&x);
            let ttx = mult_m.lift_type(&tx);
            let m = mult_m.clone();
            let x_inner = x.clone();
            DMorphism {
                source: DObject::plain(ttx.clone()),
                target: DObject::plain(tx.clone()),
                payload: FiniteFunction::new(
                    FiniteType::prod(ttx, mult_env.clone()),
                    tx,
                    move |v| m.mult_value(&x_inner, v.as_pair().0),
                ),
            }
        },
    )
}

/// The reader-transformer join obtained from the generic translation,
/// applied to one value `h : (T ((T X)^E))^E`.
pub fn derived_reader_join(
    m: &MonadDescriptor,
    t: &Strength,
    env: &FiniteType,
    x: &FiniteType,
    h: &Value,
) -> Result<Value> {
    let adj = make_reader_adjunction(env.clone());
    let lifted = lift_monad_to_reader(m, t, &adj);
    let translated = translate(Rc::new(adj), &lifted)?;
    let ppx = translated.lift_type(&translated.lift_type(x));
    if !ppx.admits(h) {
        return Err(Error::ShapeMismatch(format!(
            "value {h} does not inhabit {ppx}"
        )));
    }
    Ok(translated.mult_value(x, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::{check_triangle_identities, induced_monad};
    use crate::monad::{canonical_strength, identity_monad, option_monad};
    use crate::universe::values_of;

    fn z2() -> FiniteType {
        FiniteType::Mod(2)
    }

    fn mor(
        adj: &ReaderAdjunction,
        a: FiniteType,
        b: FiniteType,
        f: impl Fn(&Value, &Value) -> Value + 'static,
    ) -> DMorphism {
        DMorphism {
            source: DObject::plain(a.clone()),
            target: DObject::plain(b.clone()),
            payload: FiniteFunction::new(
                FiniteType::prod(a, adj.env_type().clone()),
                b,
                move |v| {
                    let (x, e) = v.as_pair();
                    f(x, e)
                },
            ),
        }
    }

    #[test]
    fn pr1_is_a_two_sided_identity() {
        let adj = make_reader_adjunction(z2());
        let g = mor(&adj, FiniteType::Bool, z2(), |x, e| match (x, e) {
            (Value::Bool(b), Value::Nat(n)) => Value::Nat((u8::from(*b) + n) % 2),
            _ => unreachable!(),
        });
        let id = adj.identity(&DObject::plain(FiniteType::Bool));
        let composed = reader_compose(&adj, &g, &id).unwrap();
        let dom = FiniteType::prod(FiniteType::Bool, z2());
        for v in dom.enumerate().unwrap() {
            assert_eq!(composed.payload.apply(&v), g.payload.apply(&v));
        }
        let id_after = reader_compose(
            &adj,
            &adj.identity(&DObject::plain(z2())),
            &g,
        )
        .unwrap();
        for v in dom.enumerate().unwrap() {
            assert_eq!(id_after.payload.apply(&v), g.payload.apply(&v));
        }
    }

    #[test]
    fn star_composition_threads_the_environment() {
        // f(x, e) = e and g(y, e) = y and (e = 1): (g * f)(x, e) = (e = 1).
        let adj = make_reader_adjunction(z2());
        let f = mor(&adj, FiniteType::Bool, z2(), |_, e| e.clone());
        let g = mor(&adj, z2(), FiniteType::Bool, |y, e| match (y, e) {
            (Value::Nat(y), Value::Nat(e)) => Value::Bool(*y == 1 && *e == 1),
            _ => unreachable!(),
        });
        let gf = reader_compose(&adj, &g, &f).unwrap();
        for b in [false, true] {
            assert_eq!(
                gf.payload.apply(&Value::pair(Value::Bool(b), Value::Nat(0))),
                Value::Bool(false)
            );
            assert_eq!(
                gf.payload.apply(&Value::pair(Value::Bool(b), Value::Nat(1))),
                Value::Bool(true)
            );
        }
    }

    #[test]
    fn star_composition_is_associative_at_small_scale() {
        let adj = make_reader_adjunction(z2());
        let budget = Budget::default();
        let a = DObject::plain(FiniteType::Bool);
        let b = DObject::plain(z2());
        let c = DObject::plain(FiniteType::Bool);
        let d = DObject::plain(z2());
        let dom = FiniteType::prod(FiniteType::Bool, z2());
        for f in adj.hom_sample(&a, &b, &budget).iter().take(6) {
            for g in adj.hom_sample(&b, &c, &budget).iter().take(6) {
                for h in adj.hom_sample(&c, &d, &budget).iter().take(6) {
                    let left =
                        reader_compose(&adj, h, &reader_compose(&adj, g, f).unwrap()).unwrap();
                    let right =
                        reader_compose(&adj, &reader_compose(&adj, h, g).unwrap(), f).unwrap();
                    for v in dom.enumerate().unwrap() {
                        assert_eq!(left.payload.apply(&v), right.payload.apply(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn composing_mismatched_shapes_fails() {
        let adj = make_reader_adjunction(z2());
        let f = mor(&adj, FiniteType::Bool, z2(), |_, e| e.clone());
        let err = reader_compose(&adj, &f, &f);
        assert!(matches!(err, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn triangles_hold_and_the_induced_monad_is_the_reader_monad() {
        let adj = make_reader_adjunction(z2());
        let universe = [FiniteType::Unit, FiniteType::Bool, FiniteType::Mod(3)];
        let report = check_triangle_identities(&adj, &universe, &Budget::default());
        assert!(report.passed(), "failing: {:?}", report.failing());

        let m = induced_monad(Rc::new(adj));
        // unit x is the constant table.
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(true)),
            Value::table(z2(), vec![Value::Bool(true), Value::Bool(true)])
        );
        // mult is the diagonal: h -> (e -> h(e)(e)).
        let ty = FiniteType::exp(z2(), FiniteType::Bool);
        let budget = Budget::default();
        for h in values_of(&FiniteType::exp(z2(), ty.clone()), &budget) {
            let joined = m.mult_value(&FiniteType::Bool, &h);
            for e in z2().enumerate().unwrap() {
                assert_eq!(
                    joined.apply_table(&e),
                    h.apply_table(&e).apply_table(&e)
                );
            }
        }
    }

    #[test]
    fn trivial_environment_gives_an_identity_like_monad() {
        let adj = make_reader_adjunction(FiniteType::Unit);
        let m = induced_monad(Rc::new(adj));
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(false)),
            Value::table(FiniteType::Unit, vec![Value::Bool(false)])
        );
    }

    #[test]
    fn lifted_functor_composes_strength_with_map() {
        // T = option, E = z2, f(x, e) = x and e: T-bar(f)(some(true), 1) = some(true).
        let m = option_monad();
        let t = canonical_strength(&m);
        let adj = make_reader_adjunction(z2());
        let lifted = lift_monad_to_reader(&m, &t, &adj);
        let f = mor(&adj, FiniteType::Bool, FiniteType::Bool, |x, e| {
            match (x, e) {
                (Value::Bool(b), Value::Nat(n)) => Value::Bool(*b && *n == 1),
                _ => unreachable!(),
            }
        });
        let tf = lifted.map_mor(&f);
        assert_eq!(
            tf.payload
                .apply(&Value::pair(Value::just(Value::Bool(true)), Value::Nat(1))),
            Value::just(Value::Bool(true))
        );
        assert_eq!(
            tf.payload
                .apply(&Value::pair(Value::just(Value::Bool(true)), Value::Nat(0))),
            Value::just(Value::Bool(false))
        );
    }

    #[test]
    fn derived_join_binds_through_the_environment() {
        // T = option, E = z2, h = table e -> some(table e' -> some(max(e, e'))):
        // join(h)(1) = some(1).
        let m = option_monad();
        let t = canonical_strength(&m);
        let inner = |e: u8| {
            // Entries are max(e, e') for e' = 0, 1.
            Value::just(Value::table(
                z2(),
                vec![Value::just(Value::Nat(e)), Value::just(Value::Nat(e.max(1)))],
            ))
        };
        let h = Value::table(z2(), vec![inner(0), inner(1)]);
        let joined = derived_reader_join(&m, &t, &z2(), &z2(), &h).unwrap();
        assert_eq!(
            joined,
            Value::table(
                z2(),
                vec![Value::just(Value::Nat(0)), Value::just(Value::Nat(1))]
            )
        );
    }

    #[test]
    fn derived_join_propagates_failure_and_diagonalizes_identity() {
        let m = option_monad();
        let t = canonical_strength(&m);
        let h = Value::table(z2(), vec![Value::Nothing, Value::Nothing]);
        let joined = derived_reader_join(&m, &t, &z2(), &FiniteType::Bool, &h).unwrap();
        assert_eq!(joined, Value::table(z2(), vec![Value::Nothing, Value::Nothing]));

        let id = identity_monad();
        let t_id = canonical_strength(&id);
        let budget = Budget::default();
        let px = FiniteType::exp(z2(), FiniteType::Bool);
        for h in values_of(&FiniteType::exp(z2(), px), &budget) {
            let joined = derived_reader_join(&id, &t_id, &z2(), &FiniteType::Bool, &h).unwrap();
            for e in z2().enumerate().unwrap() {
                assert_eq!(joined.apply_table(&e), h.apply_table(&e).apply_table(&e));
            }
        }
    }

    #[test]
    fn kleisli_spot_check() {
        // Hom-set cardinalities agree under currying, and one composition
        // matches the Kleisli composite of the curried morphisms.
        let adj = make_reader_adjunction(z2());
        let x = FiniteType::Bool;
        let y = z2();
        let zt = FiniteType::Bool;

        let d_hom = FiniteType::prod(x.clone(), z2());
        assert_eq!(
            FiniteType::exp(d_hom, y.clone()).card(),
            FiniteType::exp(x.clone(), FiniteType::exp(z2(), y.clone())).card()
        );

        let f = mor(&adj, x.clone(), y.clone(), |xv, e| match (xv, e) {
            (Value::Bool(b), Value::Nat(n)) => Value::Nat((u8::from(*b) + n) % 2),
            _ => unreachable!(),
        });
        let g = mor(&adj, y.clone(), zt.clone(), |yv, e| match (yv, e) {
            (Value::Nat(k), Value::Nat(n)) => Value::Bool(k == n),
            _ => unreachable!(),
        });
        let star = reader_compose(&adj, &g, &f).unwrap();

        // Kleisli composite of the curried forms: x -> (e -> g(f(x, e), e)).
        let curry = |m: &DMorphism, dom: &FiniteType| {
            let payload = m.payload.clone();
            let envs = z2().enumerate().unwrap();
            let cod = FiniteType::exp(z2(), m.target.carrier.clone());
            FiniteFunction::new(dom.clone(), cod, move |xv| {
                Value::table(
                    z2(),
                    envs.iter()
                        .map(|e| payload.apply(&Value::pair(xv.clone(), e.clone())))
                        .collect(),
                )
            })
        };
        let fk = curry(&f, &x);
        let gk = curry(&g, &y);
        let reader = induced_monad(Rc::new(adj));
        for xv in x.enumerate().unwrap() {
            let kleisli =
                reader.bind(&zt, &fk.apply(&xv), &gk);
            for e in z2().enumerate().unwrap() {
                assert_eq!(
                    kleisli.apply_table(&e),
                    star.payload.apply(&Value::pair(xv.clone(), e.clone()))
                );
            }
        }
    }
}
