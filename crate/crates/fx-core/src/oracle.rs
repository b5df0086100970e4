//! Hand-written transformer implementations used as differential-testing
//! oracles.
//!
//! Each oracle is written straight from the textbook definition over an
//! abstract base monad — its join is a bind, not a composite of adjunction
//! data — and shares no code with the translation pipeline. The derived
//! transformers must agree with these pointwise.

use crate::function::FiniteFunction;
use crate::monad::MonadDescriptor;
use crate::monoid::Monoid;
use crate::universe::{FiniteType, Value};

/// `StateT`: carrier `(T (X x S))^S`,
/// join `g -> (s -> bind(g s, (f, s') -> f s'))`.
pub fn oracle_state(m: &MonadDescriptor, s: &FiniteType) -> MonadDescriptor {
    let name = format!("oracle-state({s})<{}>", m.name);
    let states = s.enumerate().expect("state carrier is enumerable");

    let lift = {
        let m = m.clone();
        let s = s.clone();
        move |x: &FiniteType| {
            FiniteType::exp(s.clone(), m.lift_type(&FiniteType::prod(x.clone(), s.clone())))
        }
    };
    let map = {
        let m = m.clone();
        let s = s.clone();
        move |f: &FiniteFunction, v: &Value| {
            let id_s = FiniteFunction::identity(s.clone());
            let f_x_id = FiniteFunction::product(f, &id_s);
            match v {
                Value::Table(t) => Value::table(
                    t.dom.clone(),
                    t.outs.iter().map(|o| m.map_value(&f_x_id, o)).collect(),
                ),
                other => panic!("state oracle map on non-table value {other}"),
            }
        }
    };
    let unit = {
        let m = m.clone();
        let s = s.clone();
        let states = states.clone();
        move |x: &FiniteType, v: &Value| {
            let xs = FiniteType::prod(x.clone(), s.clone());
            Value::table(
                s.clone(),
                states
                    .iter()
                    .map(|sv| m.unit_value(&xs, &Value::pair(v.clone(), sv.clone())))
                    .collect(),
            )
        }
    };
    let mult = {
        let m = m.clone();
        let s = s.clone();
        move |x: &FiniteType, g: &Value| {
            let xs = FiniteType::prod(x.clone(), s.clone());
            let px = FiniteType::exp(s.clone(), m.lift_type(&xs));
            // (f, s') -> f s'
            let run = FiniteFunction::new(
                FiniteType::prod(px, s.clone()),
                m.lift_type(&xs),
                |v| {
                    let (f, s_next) = v.as_pair();
                    f.apply_table(s_next)
                },
            );
            Value::table(
                s.clone(),
                states
                    .iter()
                    .map(|sv| m.bind(&xs, &g.apply_table(sv), &run))
                    .collect(),
            )
        }
    };
    MonadDescriptor::new(name, lift, map, unit, mult)
}

/// `WriterT`: carrier `T (X x M)`,
/// join `z -> bind(z, (c, m) -> bind(c, (x, n) -> unit (x, n * m)))`.
pub fn oracle_writer(m: &MonadDescriptor, monoid: &Monoid) -> MonadDescriptor {
    let name = format!("oracle-writer({})<{}>", monoid.name, m.name);
    let lift = {
        let m = m.clone();
        let w = monoid.carrier.clone();
        move |x: &FiniteType| m.lift_type(&FiniteType::prod(x.clone(), w.clone()))
    };
    let map = {
        let m = m.clone();
        let w = monoid.carrier.clone();
        move |f: &FiniteFunction, v: &Value| {
            let f_x_id = FiniteFunction::product(f, &FiniteFunction::identity(w.clone()));
            m.map_value(&f_x_id, v)
        }
    };
    let unit = {
        let m = m.clone();
        let monoid = monoid.clone();
        move |x: &FiniteType, v: &Value| {
            let xm = FiniteType::prod(x.clone(), monoid.carrier.clone());
            m.unit_value(&xm, &Value::pair(v.clone(), monoid.unit.clone()))
        }
    };
    let mult = {
        let m = m.clone();
        let monoid = monoid.clone();
        move |x: &FiniteType, z: &Value| {
            let xm = FiniteType::prod(x.clone(), monoid.carrier.clone());
            let txm = m.lift_type(&xm);
            let outer = FiniteFunction::new(
                FiniteType::prod(txm.clone(), monoid.carrier.clone()),
                txm,
                {
                    let m = m.clone();
                    let monoid = monoid.clone();
                    let xm = xm.clone();
                    move |v| {
                        let (c, mv) = v.as_pair();
                        let inner = FiniteFunction::new(
                            xm.clone(),
                            m.lift_type(&xm),
                            {
                                let m = m.clone();
                                let monoid = monoid.clone();
                                let xm = xm.clone();
                                let mv = mv.clone();
                                move |p| {
                                    let (xv, n) = p.as_pair();
                                    m.unit_value(
                                        &xm,
                                        &Value::pair(xv.clone(), monoid.op(n, &mv)),
                                    )
                                }
                            },
                        );
                        m.bind(&xm, c, &inner)
                    }
                },
            );
            m.bind(&xm, z, &outer)
        }
    };
    MonadDescriptor::new(name, lift, map, unit, mult)
}

/// `ReaderT`: carrier `(T X)^E`, join `h -> (e -> bind(h e, f -> f e))`.
pub fn oracle_reader(m: &MonadDescriptor, env: &FiniteType) -> MonadDescriptor {
    let name = format!("oracle-reader({env})<{}>", m.name);
    let envs = env.enumerate().expect("environment carrier is enumerable");

    let lift = {
        let m = m.clone();
        let env = env.clone();
        move |x: &FiniteType| FiniteType::exp(env.clone(), m.lift_type(x))
    };
    let map = {
        let m = m.clone();
        move |f: &FiniteFunction, v: &Value| match v {
            Value::Table(t) => Value::table(
                t.dom.clone(),
                t.outs.iter().map(|o| m.map_value(f, o)).collect(),
            ),
            other => panic!("reader oracle map on non-table value {other}"),
        }
    };
    let unit = {
        let m = m.clone();
        let env = env.clone();
        let count = envs.len();
        move |x: &FiniteType, v: &Value| {
            Value::table(env.clone(), vec![m.unit_value(x, v); count])
        }
    };
    let mult = {
        let m = m.clone();
        let env = env.clone();
        move |x: &FiniteType, h: &Value| {
            let tx = m.lift_type(x);
            let px = FiniteType::exp(env.clone(), tx.clone());
            Value::table(
                env.clone(),
                envs.iter()
                    .map(|e| {
                        let run = FiniteFunction::new(px.clone(), tx.clone(), {
                            let e = e.clone();
                            move |f| f.apply_table(&e)
                        });
                        m.bind(x, &h.apply_table(e), &run)
                    })
                    .collect(),
            )
        }
    };
    MonadDescriptor::new(name, lift, map, unit, mult)
}

/// `ErrorT`: carrier `T (E + X)`,
/// join `z -> bind(z, inl e -> unit (inl e); inr c -> c)`.
pub fn oracle_error(m: &MonadDescriptor, errors: &FiniteType) -> MonadDescriptor {
    let name = format!("oracle-error({errors})<{}>", m.name);
    let lift = {
        let m = m.clone();
        let e = errors.clone();
        move |x: &FiniteType| m.lift_type(&FiniteType::sum(e.clone(), x.clone()))
    };
    let map = {
        let m = m.clone();
        let e = errors.clone();
        move |f: &FiniteFunction, v: &Value| {
            let inl = FiniteFunction::inl_into(e.clone(), f.cod().clone());
            let inr = FiniteFunction::inr_into(e.clone(), f.cod().clone());
            let id_plus_f =
                FiniteFunction::vee(&inl, &FiniteFunction::compose(&inr, f));
            m.map_value(&id_plus_f, v)
        }
    };
    let unit = {
        let m = m.clone();
        let e = errors.clone();
        move |x: &FiniteType, v: &Value| {
            let ex = FiniteType::sum(e.clone(), x.clone());
            m.unit_value(&ex, &Value::inr(v.clone()))
        }
    };
    let mult = {
        let m = m.clone();
        let e = errors.clone();
        move |x: &FiniteType, z: &Value| {
            let ex = FiniteType::sum(e.clone(), x.clone());
            let tex = m.lift_type(&ex);
            let case = FiniteFunction::new(
                FiniteType::sum(e.clone(), tex.clone()),
                tex,
                {
                    let m = m.clone();
                    let ex = ex.clone();
                    move |v| match v {
                        Value::Inl(err) => {
                            m.unit_value(&ex, &Value::inl((**err).clone()))
                        }
                        Value::Inr(c) => (**c).clone(),
                        other => panic!("error oracle join on non-sum value {other}"),
                    }
                },
            );
            m.bind(&ex, z, &case)
        }
    };
    MonadDescriptor::new(name, lift, map, unit, mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Budget;
    use crate::laws::check_monad_laws;
    use crate::monad::{identity_monad, list_monad, option_monad};

    fn z2() -> FiniteType {
        FiniteType::Mod(2)
    }

    #[test]
    fn every_oracle_passes_the_monad_laws_independently() {
        let budget = Budget::default();
        let universe = [FiniteType::Bool];
        let writer = crate::monad::writer_monad(&Monoid::bool_and());
        for base in [identity_monad(), option_monad(), list_monad(3), writer] {
            let oracles = [
                oracle_state(&base, &z2()),
                oracle_writer(&base, &Monoid::z4_add()),
                oracle_reader(&base, &z2()),
                oracle_error(&base, &z2()),
            ];
            for oracle in oracles {
                let report = check_monad_laws(&oracle, &universe, &budget);
                assert!(report.passed(), "{}: {:?}", oracle.name, report.failing());
            }
        }
    }

    #[test]
    fn state_oracle_over_identity_is_the_plain_state_monad() {
        let m = oracle_state(&identity_monad(), &z2());
        let unit = m.unit_value(&FiniteType::Bool, &Value::Bool(true));
        assert_eq!(
            unit,
            Value::table(
                z2(),
                vec![
                    Value::pair(Value::Bool(true), Value::Nat(0)),
                    Value::pair(Value::Bool(true), Value::Nat(1)),
                ]
            )
        );
    }

    #[test]
    fn writer_oracle_unit_pairs_with_the_neutral_element() {
        let m = oracle_writer(&option_monad(), &Monoid::z4_add());
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(false)),
            Value::just(Value::pair(Value::Bool(false), Value::Nat(0)))
        );
    }

    #[test]
    fn reader_oracle_unit_is_the_constant_family() {
        let m = oracle_reader(&option_monad(), &z2());
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(true)),
            Value::table(
                z2(),
                vec![
                    Value::just(Value::Bool(true)),
                    Value::just(Value::Bool(true))
                ]
            )
        );
    }

    #[test]
    fn error_oracle_unit_injects_on_the_right() {
        let m = oracle_error(&list_monad(3), &z2());
        assert_eq!(
            m.unit_value(&FiniteType::Bool, &Value::Bool(false)),
            Value::List(vec![Value::inr(Value::Bool(false))])
        );
    }
}
