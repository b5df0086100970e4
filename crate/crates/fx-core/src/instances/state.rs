//! The state instance: product/exponential adjunction on the base category.
//!
//! `F X = X x S` and `U Y = Y^S` (tabulated). The instance category is the
//! base category itself, so morphisms carry no side condition and any monad
//! lifts trivially. Translating a monad `T` along this adjunction yields
//! `P X = (T (X x S))^S` with the familiar state-transformer unit and join.

use std::rc::Rc;

use crate::adjunction::{Adjunction, DMorphism, DObject, MonadOnD};
use crate::function::{eval_morphism, hom_set, FiniteFunction};
use crate::harness::Budget;
use crate::monad::MonadDescriptor;
use crate::translate::translate;
use crate::universe::{FiniteType, Value};
use crate::{Error, Result};

#[derive(Clone)]
pub struct StateAdjunction {
    state: FiniteType,
}

/// The adjunction determined by a state carrier `S`.
pub fn make_state_adjunction(state: FiniteType) -> StateAdjunction {
    StateAdjunction { state }
}

impl StateAdjunction {
    pub fn state_type(&self) -> &FiniteType {
        &self.state
    }
}

impl Adjunction for StateAdjunction {
    fn name(&self) -> String {
        format!("state({})", self.state)
    }

    fn f_obj(&self, x: &FiniteType) -> DObject {
        DObject::plain(FiniteType::prod(x.clone(), self.state.clone()))
    }

    fn f_mor(&self, f: &FiniteFunction) -> DMorphism {
        let payload = FiniteFunction::product(f, &FiniteFunction::identity(self.state.clone()));
        DMorphism {
            source: self.f_obj(f.dom()),
            target: self.f_obj(f.cod()),
            payload,
        }
    }

    fn u_obj(&self, y: &DObject) -> FiniteType {
        FiniteType::exp(self.state.clone(), y.carrier.clone())
    }

    fn u_mor(&self, f: &DMorphism) -> FiniteFunction {
        f.payload.exp_post(&self.state)
    }

    fn unit(&self, x: &FiniteType) -> FiniteFunction {
        let s = self.state.clone();
        let states = s.enumerate().expect("state carrier is enumerable");
        let cod = FiniteType::exp(s.clone(), FiniteType::prod(x.clone(), s.clone()));
        FiniteFunction::new(x.clone(), cod, move |v| {
            Value::table(
                s.clone(),
                states
                    .iter()
                    .map(|sv| Value::pair(v.clone(), sv.clone()))
                    .collect(),
            )
        })
    }

    fn counit(&self, y: &DObject) -> DMorphism {
        DMorphism {
            source: self.f_obj(&self.u_obj(y)),
            target: y.clone(),
            payload: eval_morphism(self.state.clone(), y.carrier.clone()),
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
        let mut objects: Vec<DObject> =
            universe.iter().cloned().map(DObject::plain).collect();
        objects.extend(universe.iter().map(|x| self.f_obj(x)));
        objects
    }

    fn hom_sample(&self, a: &DObject, b: &DObject, budget: &Budget) -> Vec<DMorphism> {
        hom_set(&a.carrier, &b.carrier, budget)
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
        match (&y.structure, &y.carrier) {
            (crate::adjunction::DStructure::Plain, FiniteType::Prod(x, s))
                if **s == self.state =>
            {
                Some((**x).clone())
            }
            _ => None,
        }
    }
}

/// The instance category is the base category, so a monad lifts unchanged.
pub fn lift_monad_trivially(m: &MonadDescriptor, adj: &StateAdjunction) -> MonadOnD {
    let lift = m.clone();
    let map = m.clone();
    let unit = m.clone();
    let mult = m.clone();
    MonadOnD::new(
        m.name.clone(),
        adj.name(),
        move |w| DObject::plain(lift.lift_type(&w.carrier)),
        move |f| DMorphism {
            source: DObject::plain(map.lift_type(&f.source.carrier)),
            target: DObject::plain(map.lift_type(&f.target.carrier)),
            payload: map.map_fn(&f.payload),
        },
        move |w| DMorphism {
            source: w.clone(),
            target: DObject::plain(unit.lift_type(&w.carrier)),
            payload: unit.unit_fn(&w.carrier),
        },
        move |w| {
            let tw = mult.lift_type(&w.carrier);
            DMorphism {
                source: DObject::plain(mult.lift_type(&tw)),
                target: DObject::plain(tw),
                payload: mult.mult_fn(&w.carrier),
            }
        },
    )
}

/// The state-transformer join obtained from the generic translation,
/// applied to one value `g : (T ((T (X x S))^S x S))^S`.
pub fn derived_state_join(
    m: &MonadDescriptor,
    s: &FiniteType,
    x: &FiniteType,
    g: &Value,
) -> Result<Value> {
    let adj = make_state_adjunction(s.clone());
    let lifted = lift_monad_trivially(m, &adj);
    let translated = translate(Rc::new(adj), &lifted)?;
    let ppx = translated.lift_type(&translated.lift_type(x));
    if !ppx.admits(g) {
        return Err(Error::ShapeMismatch(format!(
            "value {g} does not inhabit {ppx}"
        )));
    }
    Ok(translated.mult_value(x, g))
}
