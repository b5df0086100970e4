//! Monad descriptors on the base category, and tensorial strengths.
//!
//! A [`MonadDescriptor`] packages a type constructor with its functorial map,
//! unit and multiplication, all acting on finite-domain [`Value`]s. The four
//! registered base monads are identity, option, list (with an enumeration
//! length cap), and writer over a monoid.
//!
//! Every base monad gets the canonical strength
//! `t(c, y) = map(x -> (x, y))(c)`, which is the one implicitly used when a
//! computation is paired with an ambient value.

use std::rc::Rc;

use crate::function::FiniteFunction;
use crate::monoid::Monoid;
use crate::universe::{FiniteType, Value};

type LiftFn = dyn Fn(&FiniteType) -> FiniteType;
type MapFn = dyn Fn(&FiniteFunction, &Value) -> Value;
type PointFn = dyn Fn(&FiniteType, &Value) -> Value;

/// A monad `(T, unit, mult)` as a bundle of closures over [`Value`]s.
///
/// `unit` and `mult` receive the underlying object `X` explicitly: derived
/// monads need it to rebuild the adjunction data at `X`, base monads ignore
/// it.
#[derive(Clone)]
pub struct MonadDescriptor {
    pub name: String,
    lift: Rc<LiftFn>,
    map: Rc<MapFn>,
    unit: Rc<PointFn>,
    mult: Rc<PointFn>,
}

impl MonadDescriptor {
    pub fn new(
        name: impl Into<String>,
        lift: impl Fn(&FiniteType) -> FiniteType + 'static,
        map: impl Fn(&FiniteFunction, &Value) -> Value + 'static,
        unit: impl Fn(&FiniteType, &Value) -> Value + 'static,
        mult: impl Fn(&FiniteType, &Value) -> Value + 'static,
    ) -> Self {
        MonadDescriptor {
            name: name.into(),
            lift: Rc::new(lift),
            map: Rc::new(map),
            unit: Rc::new(unit),
            mult: Rc::new(mult),
        }
    }

    /// Object action `X -> T X`.
    pub fn lift_type(&self, x: &FiniteType) -> FiniteType {
        (self.lift)(x)
    }

    /// `T(f)` applied to a `T`-value.
    pub fn map_value(&self, f: &FiniteFunction, tv: &Value) -> Value {
        (self.map)(f, tv)
    }

    /// `T(f)` as a morphism `T(dom f) -> T(cod f)`.
    pub fn map_fn(&self, f: &FiniteFunction) -> FiniteFunction {
        let this = self.clone();
        let f = f.clone();
        FiniteFunction::new(
            self.lift_type(f.dom()),
            self.lift_type(f.cod()),
            move |tv| this.map_value(&f, tv),
        )
    }

    /// `unit_X` applied to a value of `X`.
    pub fn unit_value(&self, x: &FiniteType, v: &Value) -> Value {
        (self.unit)(x, v)
    }

    /// `unit_X : X -> T X` as a morphism.
    pub fn unit_fn(&self, x: &FiniteType) -> FiniteFunction {
        let this = self.clone();
        let x_ty = x.clone();
        FiniteFunction::new(x.clone(), self.lift_type(x), move |v| {
            this.unit_value(&x_ty, v)
        })
    }

    /// `mult_X` applied to a value of `T T X`.
    pub fn mult_value(&self, x: &FiniteType, ttv: &Value) -> Value {
        (self.mult)(x, ttv)
    }

    /// `mult_X : T T X -> T X` as a morphism.
    pub fn mult_fn(&self, x: &FiniteType) -> FiniteFunction {
        let this = self.clone();
        let x_ty = x.clone();
        let tx = self.lift_type(x);
        FiniteFunction::new(self.lift_type(&tx), tx, move |ttv| {
            this.mult_value(&x_ty, ttv)
        })
    }

    /// Kleisli extension: `bind(v, k) = mult(map(k)(v))` for `k : X -> T Y`;
    /// `y` is the inner object of `k`'s codomain.
    pub fn bind(&self, y: &FiniteType, tv: &Value, k: &FiniteFunction) -> Value {
        self.mult_value(y, &self.map_value(k, tv))
    }
}

/// The identity monad: `T X = X`.
pub fn identity_monad() -> MonadDescriptor {
    MonadDescriptor::new(
        "identity",
        |x| x.clone(),
        |f, v| f.apply(v),
        |_, v| v.clone(),
        |_, v| v.clone(),
    )
}

/// The option monad: `T X = opt(X)`; `none` models failure.
pub fn option_monad() -> MonadDescriptor {
    MonadDescriptor::new(
        "option",
        |x| FiniteType::opt(x.clone()),
        |f, v| match v {
            Value::Nothing => Value::Nothing,
            Value::Just(x) => Value::just(f.apply(x)),
            other => panic!("option map on non-option value {other}"),
        },
        |_, v| Value::just(v.clone()),
        |_, v| match v {
            Value::Nothing => Value::Nothing,
            Value::Just(inner) => (**inner).clone(),
            other => panic!("option mult on non-option value {other}"),
        },
    )
}

/// The list monad. The cap bounds which lists are enumerated as test
/// inputs; multiplication concatenates without truncating, so outputs may
/// be longer than the cap.
pub fn list_monad(cap: u8) -> MonadDescriptor {
    MonadDescriptor::new(
        format!("list{cap}"),
        move |x| FiniteType::list(x.clone(), cap),
        |f, v| match v {
            Value::List(vs) => Value::List(vs.iter().map(|x| f.apply(x)).collect()),
            other => panic!("list map on non-list value {other}"),
        },
        |_, v| Value::List(vec![v.clone()]),
        |_, v| match v {
            Value::List(vs) => Value::List(
                vs.iter()
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

/// The writer monad over a monoid: `T X = X x M`. Multiplication combines
/// the inner log on the left: `((x, n), m) -> (x, n * m)`.
pub fn writer_monad(monoid: &Monoid) -> MonadDescriptor {
    let m1 = monoid.clone();
    let m2 = monoid.clone();
    MonadDescriptor::new(
        format!("writer({})", monoid.name),
        {
            let carrier = monoid.carrier.clone();
            move |x| FiniteType::prod(x.clone(), carrier.clone())
        },
        |f, v| {
            let (x, w) = v.as_pair();
            Value::pair(f.apply(x), w.clone())
        },
        move |_, v| Value::pair(v.clone(), m1.unit.clone()),
        move |_, v| {
            let (inner, m) = v.as_pair();
            let (x, n) = inner.as_pair();
            Value::pair(x.clone(), m2.op(n, m))
        },
    )
}

type StrengthFn = dyn Fn(&FiniteType, &FiniteType, &Value, &Value) -> Value;

/// A tensorial strength `t_{X,Y} : T X x Y -> T (X x Y)` for a monad.
#[derive(Clone)]
pub struct Strength {
    pub owner: MonadDescriptor,
    apply: Rc<StrengthFn>,
}

impl Strength {
    pub fn new(
        owner: MonadDescriptor,
        apply: impl Fn(&FiniteType, &FiniteType, &Value, &Value) -> Value + 'static,
    ) -> Self {
        Strength {
            owner,
            apply: Rc::new(apply),
        }
    }

    pub fn apply(&self, x: &FiniteType, y: &FiniteType, c: &Value, yv: &Value) -> Value {
        (self.apply)(x, y, c, yv)
    }

    /// `t_{X,Y}` as a morphism `T X x Y -> T (X x Y)`.
    pub fn as_fn(&self, x: &FiniteType, y: &FiniteType) -> FiniteFunction {
        let dom = FiniteType::prod(self.owner.lift_type(x), y.clone());
        let cod = self
            .owner
            .lift_type(&FiniteType::prod(x.clone(), y.clone()));
        let this = self.clone();
        let x = x.clone();
        let y = y.clone();
        FiniteFunction::new(dom, cod, move |v| {
            let (c, yv) = v.as_pair();
            this.apply(&x, &y, c, yv)
        })
    }
}

/// The canonical strength `t(c, y) = map(x -> (x, y))(c)`.
pub fn canonical_strength(m: &MonadDescriptor) -> Strength {
    let owner = m.clone();
    let mapper = m.clone();
    Strength::new(owner, move |x, y, c, yv| {
        let pair_with = FiniteFunction::new(
            x.clone(),
            FiniteType::prod(x.clone(), y.clone()),
            {
                let yv = yv.clone();
                move |v| Value::pair(v.clone(), yv.clone())
            },
        );
        mapper.map_value(&pair_with, c)
    })
}
