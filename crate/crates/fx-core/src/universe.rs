//! Finite test universes: enumerable carriers and their values.
//!
//! A [`FiniteType`] describes a carrier whose elements can be listed in a
//! fixed canonical order, indexed, and sampled deterministically. Values of
//! exponential type are always tabulated ([`Value::Table`]), never opaque
//! closures, so extensional equality of functions is ordinary structural
//! equality of tables.
//!
//! List carriers have an enumeration cap: the cap bounds which lists are
//! *generated* when the type is enumerated or sampled, but longer lists are
//! still legal values (list-monad multiplication concatenates without
//! truncating).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::harness::Budget;
use crate::{Error, Result};

/// Hard ceiling on how many values [`FiniteType::enumerate`] materializes.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// When a random value of exponential type is drawn, the exponent's domain
/// must stay below this many elements (the table is filled entrywise).
const RANDOM_EXP_DOM_LIMIT: u128 = 4_096;

/// A finitely enumerable carrier.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FiniteType {
    /// Terminal object; the single value `*`.
    Unit,
    Bool,
    /// Residues `0..n`.
    Mod(u8),
    Prod(Box<FiniteType>, Box<FiniteType>),
    /// Tagged sum; all `inl` values enumerate before any `inr` value.
    Sum(Box<FiniteType>, Box<FiniteType>),
    /// Tabulated functions from the first carrier to the second.
    Exp(Box<FiniteType>, Box<FiniteType>),
    /// `none`, then `some(x)` in element order.
    Opt(Box<FiniteType>),
    /// Lists over a carrier; enumeration stops at the length cap.
    List(Box<FiniteType>, u8),
}

impl FiniteType {
    pub fn prod(a: FiniteType, b: FiniteType) -> Self {
        FiniteType::Prod(Box::new(a), Box::new(b))
    }

    pub fn sum(a: FiniteType, b: FiniteType) -> Self {
        FiniteType::Sum(Box::new(a), Box::new(b))
    }

    /// Functions `dom -> cod` in tabulated form.
    pub fn exp(dom: FiniteType, cod: FiniteType) -> Self {
        FiniteType::Exp(Box::new(dom), Box::new(cod))
    }

    pub fn opt(x: FiniteType) -> Self {
        FiniteType::Opt(Box::new(x))
    }

    pub fn list(x: FiniteType, cap: u8) -> Self {
        FiniteType::List(Box::new(x), cap)
    }

    /// Number of canonical elements, or `None` on overflow.
    pub fn card(&self) -> Option<u128> {
        match self {
            FiniteType::Unit => Some(1),
            FiniteType::Bool => Some(2),
            FiniteType::Mod(n) => Some(u128::from(*n)),
            FiniteType::Prod(a, b) => a.card()?.checked_mul(b.card()?),
            FiniteType::Sum(a, b) => a.card()?.checked_add(b.card()?),
            FiniteType::Exp(d, c) => checked_pow(c.card()?, d.card()?),
            FiniteType::Opt(x) => x.card()?.checked_add(1),
            FiniteType::List(x, cap) => {
                let n = x.card()?;
                let mut total: u128 = 1;
                let mut pow: u128 = 1;
                for _ in 0..*cap {
                    pow = pow.checked_mul(n)?;
                    total = total.checked_add(pow)?;
                }
                Some(total)
            }
        }
    }

    /// All canonical elements in enumeration order.
    ///
    /// Fails with [`Error::TooLarge`] past [`ENUMERATION_LIMIT`]; use
    /// [`values_of`] when a sampled fallback is acceptable.
    pub fn enumerate(&self) -> Result<Vec<Value>> {
        let card = self
            .card()
            .filter(|c| *c <= ENUMERATION_LIMIT)
            .ok_or_else(|| Error::TooLarge(self.to_string()))?;
        let mut out = Vec::with_capacity(card as usize);
        match self {
            FiniteType::Unit => out.push(Value::Unit),
            FiniteType::Bool => {
                out.push(Value::Bool(false));
                out.push(Value::Bool(true));
            }
            FiniteType::Mod(n) => out.extend((0..*n).map(Value::Nat)),
            FiniteType::Prod(a, b) => {
                let bs = b.enumerate()?;
                for x in a.enumerate()? {
                    for y in &bs {
                        out.push(Value::pair(x.clone(), y.clone()));
                    }
                }
            }
            FiniteType::Sum(a, b) => {
                out.extend(a.enumerate()?.into_iter().map(Value::inl));
                out.extend(b.enumerate()?.into_iter().map(Value::inr));
            }
            FiniteType::Exp(d, c) => {
                let dom_card = d.card().expect("guarded by card") as usize;
                let cod_vals = c.enumerate()?;
                // Odometer over output assignments; last entry varies fastest
                // to match the positional index in `index_of`.
                let mut digits = vec![0usize; dom_card];
                loop {
                    let outs: Vec<Value> =
                        digits.iter().map(|&i| cod_vals[i].clone()).collect();
                    out.push(Value::table((**d).clone(), outs));
                    let mut pos = dom_card;
                    loop {
                        if pos == 0 {
                            return Ok(out);
                        }
                        pos -= 1;
                        digits[pos] += 1;
                        if digits[pos] < cod_vals.len() {
                            break;
                        }
                        digits[pos] = 0;
                    }
                }
            }
            FiniteType::Opt(x) => {
                out.push(Value::Nothing);
                out.extend(x.enumerate()?.into_iter().map(Value::just));
            }
            FiniteType::List(x, cap) => {
                let elems = x.enumerate()?;
                for len in 0..=(*cap as usize) {
                    if len == 0 {
                        out.push(Value::List(Vec::new()));
                        continue;
                    }
                    if elems.is_empty() {
                        break;
                    }
                    let mut digits = vec![0usize; len];
                    'lists: loop {
                        out.push(Value::List(
                            digits.iter().map(|&i| elems[i].clone()).collect(),
                        ));
                        let mut pos = len;
                        loop {
                            if pos == 0 {
                                break 'lists;
                            }
                            pos -= 1;
                            digits[pos] += 1;
                            if digits[pos] < elems.len() {
                                break;
                            }
                            digits[pos] = 0;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Position of `v` in enumeration order, or `None` if `v` is not a
    /// canonical element (wrong shape, residue out of range, list past cap).
    pub fn index_of(&self, v: &Value) -> Option<u128> {
        match (self, v) {
            (FiniteType::Unit, Value::Unit) => Some(0),
            (FiniteType::Bool, Value::Bool(b)) => Some(u128::from(*b)),
            (FiniteType::Mod(n), Value::Nat(k)) if k < n => Some(u128::from(*k)),
            (FiniteType::Prod(a, b), Value::Pair(x, y)) => Some(
                a.index_of(x)?
                    .checked_mul(b.card()?)?
                    .checked_add(b.index_of(y)?)?,
            ),
            (FiniteType::Sum(a, _), Value::Inl(x)) => a.index_of(x),
            (FiniteType::Sum(a, b), Value::Inr(y)) => a.card()?.checked_add(b.index_of(y)?),
            (FiniteType::Opt(_), Value::Nothing) => Some(0),
            (FiniteType::Opt(x), Value::Just(v)) => Some(1 + x.index_of(v)?),
            (FiniteType::List(x, cap), Value::List(vs)) if vs.len() <= *cap as usize => {
                let n = x.card()?;
                let mut offset: u128 = 0;
                let mut pow: u128 = 1;
                for _ in 0..vs.len() {
                    offset = offset.checked_add(pow)?;
                    pow = pow.checked_mul(n)?;
                }
                // `offset` counts all strictly shorter lists.
                let mut index = offset;
                let mut weight: u128 = 1;
                for v in vs.iter().rev() {
                    index = index.checked_add(x.index_of(v)?.checked_mul(weight)?)?;
                    weight = weight.checked_mul(n)?;
                }
                Some(index)
            }
            (FiniteType::Exp(d, c), Value::Table(t)) if t.dom == **d => {
                let n = c.card()?;
                let mut index: u128 = 0;
                for out in &t.outs {
                    index = index.checked_mul(n)?.checked_add(c.index_of(out)?)?;
                }
                Some(index)
            }
            _ => None,
        }
    }

    /// One random canonical element, weighted by sub-carrier size.
    pub fn random(&self, rng: &mut ChaCha8Rng) -> Value {
        match self {
            FiniteType::Unit => Value::Unit,
            FiniteType::Bool => Value::Bool(rng.gen()),
            FiniteType::Mod(n) => Value::Nat(rng.gen_range(0..*n)),
            FiniteType::Prod(a, b) => Value::pair(a.random(rng), b.random(rng)),
            FiniteType::Sum(a, b) => {
                let ca = clamp_card(a.card());
                let cb = clamp_card(b.card());
                if rng.gen_range(0..ca + cb) < ca {
                    Value::inl(a.random(rng))
                } else {
                    Value::inr(b.random(rng))
                }
            }
            FiniteType::Exp(d, c) => {
                let dom_card = d
                    .card()
                    .filter(|n| *n <= RANDOM_EXP_DOM_LIMIT)
                    .expect("cannot sample a table over a huge domain");
                let outs = (0..dom_card).map(|_| c.random(rng)).collect();
                Value::table((**d).clone(), outs)
            }
            FiniteType::Opt(x) => {
                let cx = clamp_card(x.card());
                if rng.gen_range(0..=cx) == 0 {
                    Value::Nothing
                } else {
                    Value::just(x.random(rng))
                }
            }
            FiniteType::List(x, cap) => {
                let n = clamp_card(x.card());
                let mut weights = Vec::with_capacity(*cap as usize + 1);
                let mut pow: u128 = 1;
                let mut total: u128 = 0;
                for _ in 0..=*cap {
                    total = total.saturating_add(pow);
                    weights.push(pow);
                    pow = pow.saturating_mul(n);
                }
                let mut pick = rng.gen_range(0..total);
                let mut len = 0usize;
                for (k, w) in weights.iter().enumerate() {
                    if pick < *w {
                        len = k;
                        break;
                    }
                    pick -= w;
                }
                Value::List((0..len).map(|_| x.random(rng)).collect())
            }
        }
    }

    /// Does `v` inhabit this carrier? Lists of any length are admitted; the
    /// cap only bounds enumeration.
    pub fn admits(&self, v: &Value) -> bool {
        match (self, v) {
            (FiniteType::Unit, Value::Unit) => true,
            (FiniteType::Bool, Value::Bool(_)) => true,
            (FiniteType::Mod(n), Value::Nat(k)) => k < n,
            (FiniteType::Prod(a, b), Value::Pair(x, y)) => a.admits(x) && b.admits(y),
            (FiniteType::Sum(a, _), Value::Inl(x)) => a.admits(x),
            (FiniteType::Sum(_, b), Value::Inr(y)) => b.admits(y),
            (FiniteType::Opt(_), Value::Nothing) => true,
            (FiniteType::Opt(x), Value::Just(v)) => x.admits(v),
            (FiniteType::List(x, _), Value::List(vs)) => vs.iter().all(|v| x.admits(v)),
            (FiniteType::Exp(d, c), Value::Table(t)) => {
                t.dom == **d
                    && Some(t.outs.len() as u128) == d.card()
                    && t.outs.iter().all(|o| c.admits(o))
            }
            _ => false,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::Unit => write!(f, "1"),
            FiniteType::Bool => write!(f, "bool"),
            FiniteType::Mod(n) => write!(f, "z{n}"),
            FiniteType::Prod(a, b) => write!(f, "({a} x {b})"),
            FiniteType::Sum(a, b) => write!(f, "({a} + {b})"),
            FiniteType::Exp(d, c) => write!(f, "({c}^{d})"),
            FiniteType::Opt(x) => write!(f, "opt({x})"),
            FiniteType::List(x, cap) => write!(f, "list{cap}({x})"),
        }
    }
}

fn checked_pow(base: u128, exp: u128) -> Option<u128> {
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

fn clamp_card(card: Option<u128>) -> u128 {
    card.unwrap_or(u128::MAX).min(1 << 32)
}

/// A runtime value inhabiting some [`FiniteType`].
///
/// Structural equality coincides with extensional equality because embedded
/// functions are tabulated in canonical domain order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Unit,
    Bool(bool),
    Nat(u8),
    Pair(Box<Value>, Box<Value>),
    Inl(Box<Value>),
    Inr(Box<Value>),
    Nothing,
    Just(Box<Value>),
    List(Vec<Value>),
    Table(Box<Table>),
}

/// A tabulated function value: outputs listed in the domain's enumeration
/// order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Table {
    pub dom: FiniteType,
    pub outs: Vec<Value>,
}

impl Table {
    pub fn apply(&self, arg: &Value) -> Value {
        let idx = self
            .dom
            .index_of(arg)
            .unwrap_or_else(|| panic!("table argument {arg} outside domain {}", self.dom));
        self.outs[idx as usize].clone()
    }
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }

    pub fn inl(v: Value) -> Self {
        Value::Inl(Box::new(v))
    }

    pub fn inr(v: Value) -> Self {
        Value::Inr(Box::new(v))
    }

    pub fn just(v: Value) -> Self {
        Value::Just(Box::new(v))
    }

    pub fn table(dom: FiniteType, outs: Vec<Value>) -> Self {
        Value::Table(Box::new(Table { dom, outs }))
    }

    /// Apply a table value to an argument. Panics on non-table values; the
    /// harness only calls this where the shape is known.
    pub fn apply_table(&self, arg: &Value) -> Value {
        match self {
            Value::Table(t) => t.apply(arg),
            other => panic!("expected a table value, got {other}"),
        }
    }

    pub fn as_pair(&self) -> (&Value, &Value) {
        match self {
            Value::Pair(a, b) => (a, b),
            other => panic!("expected a pair value, got {other}"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => write!(f, "*"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Nat(n) => write!(f, "{n}"),
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
            Value::Inl(v) => write!(f, "inl({v})"),
            Value::Inr(v) => write!(f, "inr({v})"),
            Value::Nothing => write!(f, "none"),
            Value::Just(v) => write!(f, "some({v})"),
            Value::List(vs) => {
                write!(f, "[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            Value::Table(t) => {
                write!(f, "{{")?;
                let inputs = t.dom.enumerate().unwrap_or_default();
                for (i, out) in t.outs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    match inputs.get(i) {
                        Some(input) => write!(f, "{input} -> {out}")?,
                        None => write!(f, "#{i} -> {out}")?,
                    }
                }
                write!(f, "}}")
            }
        }
    }
}

/// Structural comparison with embedded functions compared pointwise over
/// their tabulated domains, recursively.
///
/// Returns [`Error::TypeMismatch`] when the two values visibly inhabit
/// different semantic types (different constructors, or tables over
/// different domains). Same-type inequality is `Ok(false)`.
pub fn extensional_equal(a: &Value, b: &Value) -> Result<bool> {
    match (a, b) {
        (Value::Unit, Value::Unit) => Ok(true),
        (Value::Bool(x), Value::Bool(y)) => Ok(x == y),
        (Value::Nat(x), Value::Nat(y)) => Ok(x == y),
        (Value::Pair(a1, a2), Value::Pair(b1, b2)) => {
            Ok(extensional_equal(a1, b1)? && extensional_equal(a2, b2)?)
        }
        (Value::Inl(x), Value::Inl(y)) | (Value::Inr(x), Value::Inr(y)) => {
            extensional_equal(x, y)
        }
        (Value::Inl(_), Value::Inr(_)) | (Value::Inr(_), Value::Inl(_)) => Ok(false),
        (Value::Nothing, Value::Nothing) => Ok(true),
        (Value::Nothing, Value::Just(_)) | (Value::Just(_), Value::Nothing) => Ok(false),
        (Value::Just(x), Value::Just(y)) => extensional_equal(x, y),
        (Value::List(xs), Value::List(ys)) => {
            if xs.len() != ys.len() {
                return Ok(false);
            }
            for (x, y) in xs.iter().zip(ys) {
                if !extensional_equal(x, y)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (Value::Table(s), Value::Table(t)) => {
            if s.dom != t.dom || s.outs.len() != t.outs.len() {
                return Err(Error::TypeMismatch {
                    left: format!("table over {}", s.dom),
                    right: format!("table over {}", t.dom),
                });
            }
            for (x, y) in s.outs.iter().zip(&t.outs) {
                if !extensional_equal(x, y)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::TypeMismatch {
            left: a.to_string(),
            right: b.to_string(),
        }),
    }
}

/// Every value of `ty` when the carrier fits the budget's value cap,
/// otherwise `budget.samples` seeded random values.
pub fn values_of(ty: &FiniteType, budget: &Budget) -> Vec<Value> {
    if let Some(card) = ty.card() {
        if card <= u128::from(budget.value_cap) {
            return ty.enumerate().expect("within enumeration cap");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    (0..budget.samples).map(|_| ty.random(&mut rng)).collect()
}
