//! Injected-fault fixtures for negative controls.
//!
//! Each fixture breaks exactly one law while leaving the structure natural,
//! so the harness must name the violated law precisely: the broken list
//! multiplication fails the monad identity/associativity cells but not the
//! naturality cells, the swapped-pair strength fails naturality, and the
//! constant counit fails both triangle identities.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DMorphism, DObject, MonadOnD};
use crate::function::FiniteFunction;
use crate::harness::Budget;
use crate::instances::state::{lift_monad_trivially, make_state_adjunction, StateAdjunction};
use crate::monad::{list_monad, option_monad, MonadDescriptor, Strength};
use crate::universe::{FiniteType, Value};

/// A list monad whose multiplication drops the outer layer's first element.
/// Natural, but the identity and associativity laws fail.
pub fn broken_list_mult() -> MonadDescriptor {
    MonadDescriptor::new(
        "list3-dropping-mult",
        |x| FiniteType::list(x.clone(), 3),
        |f, v| match v {
            Value::List(vs) => Value::List(vs.iter().map(|x| f.apply(x)).collect()),
            other => panic!("list map on non-list value {other}"),
        },
        |_, v| Value::List(vec![v.clone()]),
        |_, v| match v {
            Value::List(vs) => Value::List(
                vs.iter()
                    .skip(1)
                    .flat_map(|inner| match inner {
                        Value::List(xs) => xs.clone(),
                        other => panic!("list mult on non-nested value {other}"),
                    })
                    .collect(),
            ),
            other => panic!("list mult on non-list value {other}"),
        },
    )
}

/// The option monad's strength with the pair swapped wherever the two
/// carriers coincide (a literal swap is only shape-correct there; at
/// unequal carriers it stays canonical). Breaks naturality.
pub fn corrupted_strength() -> (MonadDescriptor, Strength) {
    let m = option_monad();
    let strength = Strength::new(m.clone(), {
        let mapper = m.clone();
        move |x, y, c, yv| {
            let swap_here = x == y;
            let pair_up = FiniteFunction::new(
                x.clone(),
                FiniteType::prod(x.clone(), y.clone()),
                {
                    let yv = yv.clone();
                    move |v| {
                        if swap_here {
                            Value::pair(yv.clone(), v.clone())
                        } else {
                            Value::pair(v.clone(), yv.clone())
                        }
                    }
                },
            );
            mapper.map_value(&pair_up, c)
        }
    });
    (m, strength)
}

/// A state adjunction whose counit is the constant map at the first
/// element of the target carrier. Both triangle identities fail.
pub struct CorruptedCounitState {
    inner: StateAdjunction,
}

pub fn corrupted_counit_state(state: FiniteType) -> CorruptedCounitState {
    CorruptedCounitState {
        inner: make_state_adjunction(state),
    }
}

impl Adjunction for CorruptedCounitState {
    fn name(&self) -> String {
        format!("{}-corrupted-counit", self.inner.name())
    }

    fn f_obj(&self, x: &FiniteType) -> DObject {
        self.inner.f_obj(x)
    }

    fn f_mor(&self, f: &FiniteFunction) -> DMorphism {
        self.inner.f_mor(f)
    }

    fn u_obj(&self, y: &DObject) -> FiniteType {
        self.inner.u_obj(y)
    }

    fn u_mor(&self, f: &DMorphism) -> FiniteFunction {
        self.inner.u_mor(f)
    }

    fn unit(&self, x: &FiniteType) -> FiniteFunction {
        self.inner.unit(x)
    }

    fn counit(&self, y: &DObject) -> DMorphism {
        let honest = self.inner.counit(y);
        let first = y
            .carrier
            .enumerate()
            .expect("carrier is enumerable")
            .remove(0);
        DMorphism {
            source: honest.source,
            target: honest.target,
            payload: FiniteFunction::constant(
                honest.payload.dom().clone(),
                honest.payload.cod().clone(),
                first,
            ),
        }
    }

    fn compose(&self, g: &DMorphism, f: &DMorphism) -> DMorphism {
        self.inner.compose(g, f)
    }

    fn identity(&self, y: &DObject) -> DMorphism {
        self.inner.identity(y)
    }

    fn d_universe(&self, universe: &[FiniteType]) -> Vec<DObject> {
        self.inner.d_universe(universe)
    }

    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism> {
        self.inner.hom_sample(a, b, budget)
    }

    fn side_condition(&self, f: &DMorphism, budget: &Budget) -> Vec<String> {
        self.inner.side_condition(f, budget)
    }

    fn free_preimage(&self, y: &DObject) -> Option<FiniteType> {
        self.inner.free_preimage(y)
    }
}

/// A lifted list monad on the state instance whose multiplication
/// component drops the outer first element. Naturality cells keep passing;
/// the identity and associativity cells fail.
pub fn state_list_tbar_with_dropped_mult(state: FiniteType) -> (Rc<dyn Adjunction>, MonadOnD) {
    let adj = make_state_adjunction(state);
    let honest = lift_monad_trivially(&list_monad(3), &adj);
    let broken = broken_list_mult();
    let corrupted = honest.with_mult_at(move |w| {
        let tw = DObject::plain(broken.lift_type(&w.carrier));
        DMorphism {
            source: DObject::plain(broken.lift_type(&tw.carrier)),
            target: tw,
            payload: broken.mult_fn(&w.carrier),
        }
    });
    (Rc::new(adj), corrupted)
}
