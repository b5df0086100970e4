//! Morphisms between finite carriers.
//!
//! A [`FiniteFunction`] is a total map between two [`FiniteType`]s. It is
//! evaluated on demand, so composites whose intermediate carriers are far
//! too large to tabulate still apply in constant space; anything built with
//! [`FiniteFunction::from_table`] is the tabulated form the hom-set
//! enumerator produces. Two functions are equal iff they agree pointwise on
//! their (enumerable) domain.

use std::fmt;
use std::rc::Rc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::harness::Budget;
use crate::universe::{FiniteType, Value};
use crate::Result;

#[derive(Clone)]
pub struct FiniteFunction {
    dom: FiniteType,
    cod: FiniteType,
    eval: Rc<dyn Fn(&Value) -> Value>,
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteFunction({} -> {})", self.dom, self.cod)
    }
}

impl FiniteFunction {
    pub fn new(
        dom: FiniteType,
        cod: FiniteType,
        eval: impl Fn(&Value) -> Value + 'static,
    ) -> Self {
        FiniteFunction {
            dom,
            cod,
            eval: Rc::new(eval),
        }
    }

    /// A function given by its output table in domain enumeration order.
    pub fn from_table(dom: FiniteType, cod: FiniteType, outs: Vec<Value>) -> Self {
        debug_assert_eq!(Some(outs.len() as u128), dom.card(), "table not total");
        let outs = Rc::new(outs);
        let lookup_dom = dom.clone();
        FiniteFunction {
            dom,
            cod,
            eval: Rc::new(move |v| {
                let idx = lookup_dom
                    .index_of(v)
                    .unwrap_or_else(|| panic!("argument {v} outside domain {lookup_dom}"));
                outs[idx as usize].clone()
            }),
        }
    }

    pub fn identity(ty: FiniteType) -> Self {
        FiniteFunction::new(ty.clone(), ty, |v| v.clone())
    }

    pub fn constant(dom: FiniteType, cod: FiniteType, out: Value) -> Self {
        FiniteFunction::new(dom, cod, move |_| out.clone())
    }

    pub fn dom(&self) -> &FiniteType {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteType {
        &self.cod
    }

    pub fn apply(&self, v: &Value) -> Value {
        (self.eval)(v)
    }

    /// `g` after `f`.
    pub fn compose(g: &FiniteFunction, f: &FiniteFunction) -> FiniteFunction {
        debug_assert_eq!(f.cod, g.dom, "composition shape mismatch");
        let g = g.clone();
        let f = f.clone();
        FiniteFunction::new(f.dom.clone(), g.cod.clone(), move |v| g.apply(&f.apply(v)))
    }

    /// `f x g : A x C -> B x D`.
    pub fn product(f: &FiniteFunction, g: &FiniteFunction) -> FiniteFunction {
        let dom = FiniteType::prod(f.dom.clone(), g.dom.clone());
        let cod = FiniteType::prod(f.cod.clone(), g.cod.clone());
        let f = f.clone();
        let g = g.clone();
        FiniteFunction::new(dom, cod, move |v| {
            let (a, c) = v.as_pair();
            Value::pair(f.apply(a), g.apply(c))
        })
    }

    /// First projection `A x B -> A`.
    pub fn pr1(a: FiniteType, b: FiniteType) -> FiniteFunction {
        FiniteFunction::new(FiniteType::prod(a.clone(), b), a, |v| v.as_pair().0.clone())
    }

    /// Second projection `A x B -> B`.
    pub fn pr2(a: FiniteType, b: FiniteType) -> FiniteFunction {
        FiniteFunction::new(FiniteType::prod(a, b.clone()), b, |v| v.as_pair().1.clone())
    }

    /// Case analysis `f v g : A + B -> C` with `f : A -> C`, `g : B -> C`.
    pub fn vee(f: &FiniteFunction, g: &FiniteFunction) -> FiniteFunction {
        debug_assert_eq!(f.cod, g.cod, "vee branches must share a codomain");
        let dom = FiniteType::sum(f.dom.clone(), g.dom.clone());
        let f = f.clone();
        let g = g.clone();
        FiniteFunction::new(dom, f.cod.clone(), move |v| match v {
            Value::Inl(x) => f.apply(x),
            Value::Inr(y) => g.apply(y),
            other => panic!("expected a sum value, got {other}"),
        })
    }

    /// Left injection `E -> E + X`.
    pub fn inl_into(e: FiniteType, x: FiniteType) -> FiniteFunction {
        FiniteFunction::new(e.clone(), FiniteType::sum(e, x), |v| Value::inl(v.clone()))
    }

    /// Right injection `X -> E + X`.
    pub fn inr_into(e: FiniteType, x: FiniteType) -> FiniteFunction {
        FiniteFunction::new(x.clone(), FiniteType::sum(e, x), |v| Value::inr(v.clone()))
    }

    /// Reassociation `(A x B) x C -> A x (B x C)`.
    pub fn assoc_right(a: FiniteType, b: FiniteType, c: FiniteType) -> FiniteFunction {
        let dom = FiniteType::prod(FiniteType::prod(a.clone(), b.clone()), c.clone());
        let cod = FiniteType::prod(a, FiniteType::prod(b, c));
        FiniteFunction::new(dom, cod, |v| {
            let (ab, c) = v.as_pair();
            let (a, b) = ab.as_pair();
            Value::pair(a.clone(), Value::pair(b.clone(), c.clone()))
        })
    }

    /// Postcomposition on tabulated exponentials: sends `g : S -> A` to
    /// `self . g : S -> B`, as a map `A^S -> B^S`.
    pub fn exp_post(&self, s: &FiniteType) -> FiniteFunction {
        let dom = FiniteType::exp(s.clone(), self.dom.clone());
        let cod = FiniteType::exp(s.clone(), self.cod.clone());
        let k = self.clone();
        FiniteFunction::new(dom, cod, move |v| match v {
            Value::Table(t) => Value::table(
                t.dom.clone(),
                t.outs.iter().map(|o| k.apply(o)).collect(),
            ),
            other => panic!("expected a table value, got {other}"),
        })
    }

    /// Materialize the full output table (domain must be enumerable).
    pub fn tabulate(&self) -> Result<Vec<Value>> {
        Ok(self
            .dom
            .enumerate()?
            .iter()
            .map(|v| self.apply(v))
            .collect())
    }

    /// The function as a tabulated exponential [`Value`].
    pub fn as_table_value(&self) -> Result<Value> {
        Ok(Value::table(self.dom.clone(), self.tabulate()?))
    }

    /// Pointwise equality over the full domain. Intended for tests and
    /// small carriers.
    pub fn ext_eq(&self, other: &FiniteFunction) -> Result<bool> {
        if self.dom != other.dom {
            return Ok(false);
        }
        Ok(self.tabulate()? == other.tabulate()?)
    }
}

/// Evaluation morphism `X^S x S -> X`.
pub fn eval_morphism(s: FiniteType, x: FiniteType) -> FiniteFunction {
    let dom = FiniteType::prod(FiniteType::exp(s.clone(), x.clone()), s);
    FiniteFunction::new(dom, x, |v| {
        let (table, point) = v.as_pair();
        table.apply_table(point)
    })
}

/// The hom-set `dom -> cod`, either in full or as a seeded sample.
///
/// If `|cod|^|dom| <= cap` the entire function space is returned in a
/// deterministic order; otherwise exactly `cap` pairwise-distinct functions
/// are drawn from a ChaCha stream seeded with `seed`.
pub fn enumerate_functions(
    dom: &FiniteType,
    cod: &FiniteType,
    cap: u64,
    seed: u64,
) -> Vec<FiniteFunction> {
    assert!(cap >= 1, "cap must be positive");
    let space = dom
        .card()
        .zip(cod.card())
        .and_then(|(d, c)| checked_pow_u128(c, d));
    if let Some(space) = space {
        if space <= u128::from(cap) {
            let dom_card = dom.card().expect("finite domain") as usize;
            let cod_vals = cod.enumerate().expect("codomain fits the cap");
            let mut out = Vec::with_capacity(space as usize);
            let mut digits = vec![0usize; dom_card];
            'all: loop {
                out.push(FiniteFunction::from_table(
                    dom.clone(),
                    cod.clone(),
                    digits.iter().map(|&i| cod_vals[i].clone()).collect(),
                ));
                let mut pos = dom_card;
                loop {
                    if pos == 0 {
                        break 'all;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < cod_vals.len() {
                        break;
                    }
                    digits[pos] = 0;
                }
            }
            return out;
        }
    }
    // Sampled fallback: distinct tables drawn deterministically.
    let dom_card = dom
        .card()
        .filter(|c| *c <= 4_096)
        .expect("sampled hom-sets need a small domain") as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tables: Vec<Vec<Value>> = Vec::with_capacity(cap as usize);
    while tables.len() < cap as usize {
        let candidate: Vec<Value> = (0..dom_card).map(|_| cod.random(&mut rng)).collect();
        if !tables.contains(&candidate) {
            tables.push(candidate);
        }
    }
    tables
        .into_iter()
        .map(|outs| FiniteFunction::from_table(dom.clone(), cod.clone(), outs))
        .collect()
}

/// Budget-policy wrapper: full space up to `budget.fn_cap`, otherwise
/// `budget.samples` sampled functions.
pub fn hom_set(dom: &FiniteType, cod: &FiniteType, budget: &Budget) -> Vec<FiniteFunction> {
    let space = dom
        .card()
        .zip(cod.card())
        .and_then(|(d, c)| checked_pow_u128(c, d));
    match space {
        Some(space) if space <= u128::from(budget.fn_cap) => {
            enumerate_functions(dom, cod, budget.fn_cap, budget.seed)
        }
        _ => enumerate_functions(dom, cod, budget.samples, budget.seed),
    }
}

fn checked_pow_u128(base: u128, exp: u128) -> Option<u128> {
    if exp == 0 {
        return Some(1);
    }
    if base <= 1 {
        return Some(base);
    }
    if exp > 127 {
        return None;
    }
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
