//! The demo interpreter: a three-layer effect stack assembled from the
//! generic translation, evaluated over finite carriers.
//!
//! The stack is `error(writer(state(identity)))`, outermost first: a
//! computation takes a state and returns `(((inl err | inr value), log),
//! state)`, so the log and state up to a failure point survive the error.
//! Demo integers are residues modulo [`DEMO_MODULUS`] = 16; arithmetic
//! wraps. Division is integer division on representatives; dividing by
//! zero and reading an unbound identifier surface as `inl` errors in the
//! result, never as process failures.
//!
//! `log(e)` evaluates `e`, appends its value to the log, and returns it.
//! `put(e)` stores the value of `e` and returns it; `get` returns the
//! current state. The log monoid combines in execution order.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use fx_core::harness::Budget;
use fx_core::monad::identity_monad;
use fx_core::monoid::Monoid;
use fx_core::oracle::{oracle_error, oracle_state, oracle_writer};
use fx_core::translate::{stack, StackLayer};
use fx_core::universe::{FiniteType, Value};
use fx_core::{FiniteFunction, MonadDescriptor};

use crate::parser::{BinOp, Expr};

/// Demo integers live in `z16`.
pub const DEMO_MODULUS: u8 = 16;

/// Enumeration length cap for the log carrier (logs themselves are
/// unbounded; the cap only limits generated test values).
const LOG_CAP: u8 = 4;

const ERR_DIV_BY_ZERO: u8 = 0;
const ERR_UNBOUND: u8 = 1;

pub fn int_ty() -> FiniteType {
    FiniteType::Mod(DEMO_MODULUS)
}

fn error_ty() -> FiniteType {
    FiniteType::Mod(2)
}

fn log_ty() -> FiniteType {
    FiniteType::list(int_ty(), LOG_CAP)
}

/// Lists of demo integers under execution-order concatenation: the writer
/// join combines the inner (later) log on the left, so the operation
/// appends its first argument after its second.
pub fn log_monoid() -> Monoid {
    Monoid::new("log", log_ty(), Value::List(Vec::new()), |later, earlier| {
        match (later, earlier) {
            (Value::List(n), Value::List(m)) => {
                let mut combined = m.clone();
                combined.extend(n.iter().cloned());
                Value::List(combined)
            }
            _ => panic!("log monoid applied to non-lists"),
        }
    })
}

/// Which implementation of the demo stack evaluates a program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StackKind {
    /// All three layers obtained from the generic translation.
    Derived,
    /// The hand-written transformer oracles, nested the same way.
    Oracle,
}

/// Build the demo stack. Both kinds share the same carrier, so raw effect
/// values are interchangeable between them.
pub fn demo_stack(kind: StackKind) -> Result<MonadDescriptor, fx_core::Error> {
    match kind {
        StackKind::Derived => {
            // Lift-time verification samples lightly; the law suites cover
            // the full budget.
            let budget = Budget::default().with_samples(8);
            stack(
                &[
                    StackLayer::Error(error_ty()),
                    StackLayer::Writer(log_monoid()),
                    StackLayer::State(int_ty()),
                ],
                identity_monad(),
                &budget,
            )
        }
        StackKind::Oracle => {
            let state = oracle_state(&identity_monad(), &int_ty());
            let writer = oracle_writer(&state, &log_monoid());
            Ok(oracle_error(&writer, &error_ty()))
        }
    }
}

/// Result of evaluating one program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalOutcome {
    /// The computed value, absent when the program failed.
    pub value: Option<i64>,
    /// Human-readable error, present when the program failed.
    pub error: Option<String>,
    /// Logged values, in execution order.
    pub log: Vec<i64>,
    /// The state after the run (or up to the failure point).
    pub final_state: i64,
}

struct Interp {
    monad: MonadDescriptor,
    env: BTreeMap<String, u8>,
    stack_ty: FiniteType,
}

type Scope = Rc<BTreeMap<String, u8>>;

fn wrap(n: i64) -> u8 {
    n.rem_euclid(i64::from(DEMO_MODULUS)) as u8
}

impl Interp {
    /// A raw effect value: one table entry per state.
    fn effect(&self, per_state: impl Fn(u8) -> (Value, Vec<Value>, u8)) -> Value {
        let outs = (0..DEMO_MODULUS)
            .map(|s| {
                let (sum, log, next) = per_state(s);
                Value::pair(
                    Value::pair(sum, Value::List(log)),
                    Value::Nat(next),
                )
            })
            .collect();
        Value::table(int_ty(), outs)
    }

    fn pure(&self, n: u8) -> Value {
        self.monad.unit_value(&int_ty(), &Value::Nat(n))
    }

    fn throw(&self, code: u8) -> Value {
        self.effect(|s| (Value::inl(Value::Nat(code)), Vec::new(), s))
    }

    fn get(&self) -> Value {
        self.effect(|s| (Value::inr(Value::Nat(s)), Vec::new(), s))
    }

    fn put(&self, n: u8) -> Value {
        self.effect(|_| (Value::inr(Value::Nat(n)), Vec::new(), n))
    }

    fn log(&self, n: u8) -> Value {
        self.effect(|s| (Value::inr(Value::Nat(n)), vec![Value::Nat(n)], s))
    }

    /// Monadic bind with the continuation memoized per input residue: the
    /// functorial map applies the continuation under every state entry,
    /// and distinct entries usually hold the same intermediate value.
    fn bind(self: &Rc<Self>, value: Value, k: impl Fn(u8) -> Value + 'static) -> Value {
        let cache: RefCell<HashMap<u8, Value>> = RefCell::new(HashMap::new());
        let cont = FiniteFunction::new(int_ty(), self.stack_ty.clone(), move |v| {
            let n = match v {
                Value::Nat(n) => *n,
                other => panic!("demo values are residues, got {other}"),
            };
            cache.borrow_mut().entry(n).or_insert_with(|| k(n)).clone()
        });
        self.monad.bind(&int_ty(), &value, &cont)
    }

    fn eval(self: &Rc<Self>, expr: &Expr, scope: &Scope) -> Value {
        match expr {
            Expr::Int(n) => self.pure(wrap(*n)),
            Expr::Var(name) => match scope.get(name) {
                Some(n) => self.pure(*n),
                None => self.throw(ERR_UNBOUND),
            },
            Expr::Ask(name) => match self.env.get(name) {
                Some(n) => self.pure(*n),
                None => self.throw(ERR_UNBOUND),
            },
            Expr::Bin(op, lhs, rhs) => {
                let this = self.clone();
                let rhs = rhs.clone();
                let scope = scope.clone();
                let op = *op;
                let left = self.eval(lhs, &scope);
                self.bind(left, move |x| {
                    let inner = this.clone();
                    let right = this.eval(&rhs, &scope);
                    this.bind(right, move |y| match op {
                        BinOp::Add => inner.pure(wrap(i64::from(x) + i64::from(y))),
                        BinOp::Sub => inner.pure(wrap(i64::from(x) - i64::from(y))),
                        BinOp::Mul => inner.pure(wrap(i64::from(x) * i64::from(y))),
                        BinOp::Div => match x.checked_div(y) {
                            Some(q) => inner.pure(q),
                            None => inner.throw(ERR_DIV_BY_ZERO),
                        },
                    })
                })
            }
            Expr::Let(name, bound, body) => {
                let this = self.clone();
                let name = name.clone();
                let body = body.clone();
                let scope_outer = scope.clone();
                let bound = self.eval(bound, scope);
                self.bind(bound, move |v| {
                    let mut extended = (*scope_outer).clone();
                    extended.insert(name.clone(), v);
                    this.eval(&body, &Rc::new(extended))
                })
            }
            Expr::Log(inner) => {
                let this = self.clone();
                let value = self.eval(inner, scope);
                self.bind(value, move |v| this.log(v))
            }
            Expr::Get => self.get(),
            Expr::Put(inner) => {
                let this = self.clone();
                let value = self.eval(inner, scope);
                self.bind(value, move |v| this.put(v))
            }
        }
    }
}

/// Evaluate a parsed program under the chosen stack.
pub fn eval_program(
    expr: &Expr,
    env: &BTreeMap<String, i64>,
    init_state: i64,
    kind: StackKind,
) -> Result<EvalOutcome, fx_core::Error> {
    let monad = demo_stack(kind)?;
    eval_with(expr, env, init_state, &monad)
}

/// Evaluate against an already built stack (the differential corpus reuses
/// one descriptor across many programs).
pub fn eval_with(
    expr: &Expr,
    env: &BTreeMap<String, i64>,
    init_state: i64,
    monad: &MonadDescriptor,
) -> Result<EvalOutcome, fx_core::Error> {
    let interp = Rc::new(Interp {
        monad: monad.clone(),
        env: env.iter().map(|(k, v)| (k.clone(), wrap(*v))).collect(),
        stack_ty: monad.lift_type(&int_ty()),
    });
    let computation = interp.eval(expr, &Rc::new(BTreeMap::new()));
    let ran = computation.apply_table(&Value::Nat(wrap(init_state)));

    let (with_log, state) = ran.as_pair();
    let (sum, log) = with_log.as_pair();
    let log = match log {
        Value::List(entries) => entries
            .iter()
            .map(|v| match v {
                Value::Nat(n) => i64::from(*n),
                other => panic!("log entries are residues, got {other}"),
            })
            .collect(),
        other => panic!("expected a log list, got {other}"),
    };
    let final_state = match state {
        Value::Nat(n) => i64::from(*n),
        other => panic!("states are residues, got {other}"),
    };
    Ok(match sum {
        Value::Inr(v) => EvalOutcome {
            value: Some(match &**v {
                Value::Nat(n) => i64::from(*n),
                other => panic!("values are residues, got {other}"),
            }),
            error: None,
            log,
            final_state,
        },
        Value::Inl(code) => EvalOutcome {
            value: None,
            error: Some(
                match &**code {
                    Value::Nat(n) if *n == ERR_DIV_BY_ZERO => "division by zero",
                    Value::Nat(n) if *n == ERR_UNBOUND => "unbound identifier",
                    other => panic!("unknown error code {other}"),
                }
                .to_string(),
            ),
            log,
            final_state,
        },
        other => panic!("expected a sum value, got {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    fn run(src: &str, env: &[(&str, i64)], init: i64) -> EvalOutcome {
        let expr = parse_program(src).unwrap();
        let env = env
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        eval_program(&expr, &env, init, StackKind::Derived).unwrap()
    }

    #[test]
    fn pure_arithmetic_leaves_effects_alone() {
        let out = run("1 + 2", &[], 0);
        assert_eq!(out.value, Some(3));
        assert_eq!(out.error, None);
        assert_eq!(out.log, Vec::<i64>::new());
        assert_eq!(out.final_state, 0);
    }

    #[test]
    fn log_then_put_traces_the_old_state() {
        let out = run("let _ = log(get) in put(5)", &[], 7);
        assert_eq!(out.value, Some(5));
        assert_eq!(out.log, vec![7]);
        assert_eq!(out.final_state, 5);
    }

    #[test]
    fn division_by_zero_preserves_effects_so_far() {
        let out = run("1 / 0", &[], 0);
        assert_eq!(out.value, None);
        assert_eq!(out.error.as_deref(), Some("division by zero"));
        assert_eq!(out.log, Vec::<i64>::new());
        assert_eq!(out.final_state, 0);
    }

    #[test]
    fn logs_appear_in_execution_order() {
        let out = run("log(1) + log(2)", &[], 0);
        assert_eq!(out.value, Some(3));
        assert_eq!(out.log, vec![1, 2]);
    }

    #[test]
    fn unbound_identifiers_are_errors_not_panics() {
        let out = run("let x = 5 in y", &[], 3);
        assert_eq!(out.error.as_deref(), Some("unbound identifier"));
        assert_eq!(out.final_state, 3);
    }

    #[test]
    fn ask_reads_the_environment() {
        let out = run("ask a + ask b", &[("a", 5), ("b", 7)], 0);
        assert_eq!(out.value, Some(12));
    }

    #[test]
    fn arithmetic_wraps_at_the_modulus() {
        let out = run("put(get + 1)", &[], 15);
        assert_eq!(out.value, Some(0));
        assert_eq!(out.final_state, 0);
    }
}
