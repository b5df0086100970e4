//! Monoids on finite carriers.
//!
//! The neutral element is written `1` in multiplicative notation; the two
//! registered monoids here are `(z4, +, 0)` — written additively, so the
//! neutral element is `0` — and `(bool, and, true)`.

use std::rc::Rc;

use crate::function::FiniteFunction;
use crate::harness::{Budget, Check, LawReport};
use crate::universe::{values_of, FiniteType, Value};

type OpFn = dyn Fn(&Value, &Value) -> Value;

#[derive(Clone)]
pub struct Monoid {
    pub name: String,
    pub carrier: FiniteType,
    pub unit: Value,
    op: Rc<OpFn>,
}

impl Monoid {
    pub fn new(
        name: impl Into<String>,
        carrier: FiniteType,
        unit: Value,
        op: impl Fn(&Value, &Value) -> Value + 'static,
    ) -> Self {
        Monoid {
            name: name.into(),
            carrier,
            unit,
            op: Rc::new(op),
        }
    }

    pub fn op(&self, a: &Value, b: &Value) -> Value {
        (self.op)(a, b)
    }

    /// The operation as a morphism `M x M -> M`.
    pub fn op_fn(&self) -> FiniteFunction {
        let op = self.op.clone();
        FiniteFunction::new(
            FiniteType::prod(self.carrier.clone(), self.carrier.clone()),
            self.carrier.clone(),
            move |v| {
                let (a, b) = v.as_pair();
                op(a, b)
            },
        )
    }

    /// Associativity and the two-sided unit, pointwise over the carrier.
    pub fn check_laws(&self, budget: &Budget) -> LawReport {
        let mut report = LawReport::new(format!("monoid({})", self.name));
        let elems = values_of(&self.carrier, budget);

        let mut unit_law = Check::new("two-sided-unit", "monoid.unit");
        for a in &elems {
            unit_law.case_eq(&self.op(&self.unit, a), a, || format!("1 * {a}"));
            unit_law.case_eq(&self.op(a, &self.unit), a, || format!("{a} * 1"));
        }
        report.push(unit_law.finish());

        let mut assoc = Check::new("associativity", "monoid.associativity");
        if elems.len() <= 16 {
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        assoc.case_eq(
                            &self.op(&self.op(a, b), c),
                            &self.op(a, &self.op(b, c)),
                            || format!("a={a}, b={b}, c={c}"),
                        );
                    }
                }
            }
        } else {
            // Large carrier: rotate the sample against itself.
            let n = elems.len();
            for (i, a) in elems.iter().enumerate() {
                let b = &elems[(i + 1) % n];
                let c = &elems[(i + 2) % n];
                assoc.case_eq(
                    &self.op(&self.op(a, b), c),
                    &self.op(a, &self.op(b, c)),
                    || format!("a={a}, b={b}, c={c}"),
                );
            }
        }
        report.push(assoc.finish());
        report
    }

    /// Residues mod 4 under addition; neutral element 0.
    pub fn z4_add() -> Monoid {
        Monoid::new("z4-add", FiniteType::Mod(4), Value::Nat(0), |a, b| {
            match (a, b) {
                (Value::Nat(x), Value::Nat(y)) => Value::Nat((x + y) % 4),
                _ => panic!("z4-add applied to non-residues"),
            }
        })
    }

    /// Booleans under conjunction; neutral element true.
    pub fn bool_and() -> Monoid {
        Monoid::new("bool-and", FiniteType::Bool, Value::Bool(true), |a, b| {
            match (a, b) {
                (Value::Bool(x), Value::Bool(y)) => Value::Bool(*x && *y),
                _ => panic!("bool-and applied to non-booleans"),
            }
        })
    }
}
